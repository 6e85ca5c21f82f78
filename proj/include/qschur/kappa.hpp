/*
 * Copyright 2026 the qschur authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// The correspondence between periodic matrices and double cosets
// W_lambda \ W~ / W_mu.  A pair of compositions of d splits [1..d] into row
// blocks and column blocks (extended d-periodically to all of Z); the matrix
// attached to (lambda, g, mu) counts how g carries each column block across
// the row blocks.  The inverse direction reconstructs the minimal-length
// double-coset representative from the matrix by an order-preserving chunk
// assignment.

#include <array>
#include <tuple>
#include <vector>

#include "qschur/theta.hpp"

namespace qschur {

struct CosetDatum {
  Composition lambda;
  AffinePerm g;
  Composition mu;
};

// entry (i, j) counts |R_i^lambda  intersect  g(R_j^mu)| where R_{i+kn} =
// R_i + kd are the periodically extended blocks
inline ThetaMatrix kappa(const Composition& lambda, const AffinePerm& g,
                         const Composition& mu) {
  const int d = g.d();
  validate_composition(lambda, d);
  validate_composition(mu, d);
  detail::require(lambda.size() == mu.size(),
                  "row and column compositions need equal lengths");
  const int n = static_cast<int>(lambda.size());
  std::vector<int> rowblock(d + 1, 0);
  {
    int acc = 0, b = 1;
    for (int p : lambda) {
      for (int q = acc + 1; q <= acc + p; ++q) rowblock[q] = b;
      acc += p;
      ++b;
    }
  }
  std::vector<std::array<long long, 3>> es;
  long long pos = 0;
  for (int j = 1; j <= n; ++j) {
    for (int t = 0; t < mu[j - 1]; ++t) {
      long long q = g.apply(++pos);
      long long k = detail::floordiv(q - 1, d);
      es.push_back({rowblock[q - k * d] + k * n, j, 1});
    }
  }
  return ThetaMatrix(n, es);
}

// Reconstruct (ro(A), g, co(A)) with g the minimal-length element of its
// double coset: partition each row block into chunks sized by the entries of
// that row (columns ascending), partition each column block likewise (rows
// ascending over the full periodic column), and map column chunks to row
// chunks order-preservingly.
inline CosetDatum kappa_inv(const ThetaMatrix& A) {
  const int n = A.n();
  const int d = static_cast<int>(A.d());
  detail::require(d >= 1, "empty matrix has no coset datum");
  Composition lambda = A.ro(), mu = A.co();

  // start position of each entry's chunk inside its row block
  std::map<std::pair<int, long long>, long long> chunk_start;
  {
    std::vector<long long> row_acc(n + 1, 0);
    long long acc = 0;
    for (int i = 1; i <= n; ++i) {
      row_acc[i] = acc + 1;
      acc += lambda[i - 1];
    }
    // map iteration order is row-major with columns ascending
    for (const auto& [key, a] : A.entries()) {
      chunk_start[key] = row_acc[key.first];
      row_acc[key.first] += a;
    }
  }

  std::vector<long long> window(d);
  long long pos = 0;
  for (int j = 1; j <= n; ++j) {
    // entries of the full periodic column j, top to bottom
    std::vector<std::tuple<long long, std::pair<int, long long>, long long>>
        col;  // (row of the translate, stored key, translate index k)
    for (const auto& [key, a] : A.entries()) {
      (void)a;
      long long diff = j - key.second;
      if (diff % n != 0) continue;
      long long k = diff / n;
      col.push_back({key.first + k * n, key, k});
    }
    std::sort(col.begin(), col.end());
    for (const auto& [row, key, k] : col) {
      (void)row;
      long long a = A.entries().at(key);
      for (long long t = 0; t < a; ++t)
        window[pos++] = chunk_start.at(key) + t + k * d;
    }
  }
  detail::ensure(pos == d, "column chunks must cover the window");

  AffinePerm g(d, std::move(window));
  detail::ensure(kappa(lambda, g, mu) == A, "chunk map does not invert kappa");
  detail::ensure(is_min_double_rep(g, lambda, mu),
                 "chunk map is not the distinguished representative");
  detail::ensure(g.length() == A.ell(),
                 "representative length differs from matrix length");
  return {std::move(lambda), std::move(g), std::move(mu)};
}

// The longest element of the double coset of A, with its length pinned by
// the lengths of the block stabilizers involved.
inline AffinePerm g_plus(const ThetaMatrix& A) {
  CosetDatum cd = kappa_inv(A);
  Composition delta = A.delta_seq();
  AffinePerm wl = young_longest(cd.lambda);
  AffinePerm wd = young_longest(delta);
  AffinePerm wm = young_longest(cd.mu);
  AffinePerm gp = wl * cd.g * wd * wm;
  detail::ensure(gp.length() == wl.length() + cd.g.length() - wd.length() +
                                    wm.length(),
                 "longest double-coset element has unexpected length");
  return gp;
}

}  // namespace qschur
