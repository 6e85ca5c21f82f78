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

// Elements of the affine q-Schur algebra S(n, d) written in the standard
// basis indexed by periodic matrices, together with the closed
// multiplication formula for a bidiagonal left factor and the highest-term
// extraction it induces.

#include <array>
#include <vector>

#include "qschur/kappa.hpp"

namespace qschur {

class SchurElement {
 public:
  SchurElement(int n, long long d) : n_(n), d_(d) {}

  static SchurElement standard(const ThetaMatrix& A) {
    SchurElement e(A.n(), A.d());
    e.terms_[A] = 1;
    return e;
  }

  int n() const { return n_; }
  long long d() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<ThetaMatrix, Laurent>& terms() const { return terms_; }

  Laurent coeff(const ThetaMatrix& A) const {
    auto it = terms_.find(A);
    return it == terms_.end() ? Laurent() : it->second;
  }

  void add_term(const ThetaMatrix& A, const Laurent& c) {
    if (c.is_zero()) return;
    detail::require(A.n() == n_ && A.d() == d_,
                    "term indexed outside this algebra");
    auto [it, inserted] = terms_.try_emplace(A, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SchurElement& operator+=(const SchurElement& o) {
    detail::require(n_ == o.n_ && d_ == o.d_, "mismatched algebras");
    for (const auto& [A, c] : o.terms_) add_term(A, c);
    return *this;
  }
  SchurElement& operator-=(const SchurElement& o) {
    detail::require(n_ == o.n_ && d_ == o.d_, "mismatched algebras");
    for (const auto& [A, c] : o.terms_) add_term(A, -c);
    return *this;
  }
  friend SchurElement operator+(SchurElement a, const SchurElement& b) {
    return a += b;
  }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) {
    return a -= b;
  }

  SchurElement scaled(const Laurent& c) const {
    SchurElement r(n_, d_);
    if (c.is_zero()) return r;
    for (const auto& [A, t] : terms_) r.terms_[A] = t * c;
    return r;
  }

  bool operator==(const SchurElement& o) const {
    return n_ == o.n_ && d_ == o.d_ && terms_ == o.terms_;
  }
  bool operator!=(const SchurElement& o) const { return !(*this == o); }

 private:
  int n_;
  long long d_;
  std::map<ThetaMatrix, Laurent> terms_;
};

namespace detail {

// the superdiagonal of an upper-bidiagonal B read by column, or the
// subdiagonal of a lower-bidiagonal B read by column
inline std::vector<long long> bidiag_weights(const ThetaMatrix& B,
                                             bool upper) {
  std::vector<long long> alpha(B.n() + 1, 0);
  for (int c = 1; c <= B.n(); ++c)
    alpha[c] = upper ? B.at(c - 1, c) : B.at(c + 1, c);
  return alpha;
}

// per-row support of A, columns ascending
inline std::vector<std::vector<std::pair<long long, long long>>> row_support(
    const ThetaMatrix& A) {
  std::vector<std::vector<std::pair<long long, long long>>> rows(A.n() + 1);
  for (const auto& [key, a] : A.entries())
    rows[key.first].push_back({key.second, a});
  return rows;
}

}  // namespace detail

// The product [B] * [A] for a bidiagonal B with co(B) = ro(A), expanded in
// the standard basis.  Each term moves a transfer matrix T (with row sums
// given by B's off-diagonal, supported on A's cells) one row up or down;
// its coefficient is a power of v times a bar-conjugated product of
// entrywise quantum binomials.
inline SchurElement mult_bidiag(const ThetaMatrix& B, const ThetaMatrix& A) {
  detail::require(B.is_upper_bidiagonal() || B.is_lower_bidiagonal(),
                  "left factor must be bidiagonal");
  detail::require(B.n() == A.n(), "mismatched periods");
  SchurElement out(A.n(), A.d());
  if (B.co() != A.ro()) return out;
  const bool upper = B.is_upper_bidiagonal();
  const int n = A.n();
  const auto alpha = detail::bidiag_weights(B, upper);
  const auto rows = detail::row_support(A);

  // enumerate all T with row sums alpha, 0 <= t_{ij} <= a_{ij}
  std::vector<std::vector<std::vector<long long>>> row_choices(n + 1);
  for (int i = 1; i <= n; ++i) {
    std::vector<std::vector<long long>> choices;
    std::vector<long long> cur(rows[i].size(), 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t idx,
                                                          long long left) {
      if (idx == cur.size()) {
        if (left == 0) choices.push_back(cur);
        return;
      }
      for (long long t = 0; t <= std::min(left, rows[i][idx].second); ++t) {
        cur[idx] = t;
        rec(idx + 1, left - t);
      }
      cur[idx] = 0;
    };
    rec(0, alpha[i]);
    row_choices[i] = std::move(choices);
    if (row_choices[i].empty()) return out;  // alpha[i] > row sum: no T
  }

  std::vector<std::size_t> pick(n + 1, 0);
  for (;;) {
    // assemble T from the current choice per row
    std::vector<std::array<long long, 3>> t_entries;
    for (int i = 1; i <= n; ++i)
      for (std::size_t idx = 0; idx < rows[i].size(); ++idx) {
        long long t = row_choices[i][pick[i]][idx];
        if (t > 0) t_entries.push_back({i, rows[i][idx].first, t});
      }
    ThetaMatrix T(n, t_entries);
    ThetaMatrix S = upper ? T.shift_up() : T.shift_down();

    std::vector<std::array<long long, 3>> key_entries;
    for (const auto& [key, a] : A.entries())
      key_entries.push_back({key.first, key.second, a});
    for (const auto& [key, a] : T.entries())
      key_entries.push_back({key.first, key.second, -a});
    for (const auto& [key, a] : S.entries())
      key_entries.push_back({key.first, key.second, a});
    ThetaMatrix M(n, key_entries);

    // remainder R = A - T, per row
    const auto s_rows = detail::row_support(S);
    const auto t_rows = detail::row_support(T);
    long long beta = 0;
    Laurent binoms = 1;
    for (int i = 1; i <= n; ++i) {
      std::vector<std::pair<long long, long long>> r_row;
      for (std::size_t idx = 0; idx < rows[i].size(); ++idx) {
        long long r = rows[i][idx].second - row_choices[i][pick[i]][idx];
        if (r > 0) r_row.push_back({rows[i][idx].first, r});
      }
      for (const auto& [j, s] : s_rows[i]) {
        for (const auto& [y, r] : r_row) {
          bool in_range = upper ? (j <= y) : (j >= y);
          if (in_range) beta += s * r;
        }
        long long r_at_j = 0;
        for (const auto& [y, r] : r_row)
          if (y == j) r_at_j = r;
        binoms *= qbinom_entry(static_cast<int>(r_at_j), static_cast<int>(s));
      }
      for (const auto& [j, t] : t_rows[i])
        for (const auto& [y, r] : r_row) {
          bool in_range = upper ? (j < y) : (j > y);
          if (in_range) beta -= t * r;
        }
    }

    out.add_term(M, binoms.bar().times_monomial(1, static_cast<int>(beta)));

    int i = 1;
    while (i <= n && ++pick[i] == row_choices[i].size()) pick[i++] = 0;
    if (i > n) break;
  }
  return out;
}

// extend the bidiagonal product linearly over an element
inline SchurElement mult_bidiag_elem(const ThetaMatrix& B,
                                     const SchurElement& x) {
  SchurElement out(x.n(), x.d());
  for (const auto& [A, c] : x.terms()) out += mult_bidiag(B, A).scaled(c);
  return out;
}

// The transfer matrix of the dominant term of [B] * [A]: per row, an upper B
// takes from the rightmost columns first, a lower B from the leftmost.
inline ThetaMatrix highest_term_move(const ThetaMatrix& B,
                                     const ThetaMatrix& A) {
  detail::require(B.is_upper_bidiagonal() || B.is_lower_bidiagonal(),
                  "left factor must be bidiagonal");
  detail::require(B.n() == A.n(), "mismatched periods");
  detail::require(B.co() == A.ro(), "incompatible shapes");
  const bool upper = B.is_upper_bidiagonal();
  const int n = A.n();
  const auto alpha = detail::bidiag_weights(B, upper);
  const auto rows = detail::row_support(A);
  std::vector<std::array<long long, 3>> t_entries;
  for (int i = 1; i <= n; ++i) {
    long long need = alpha[i];
    if (need == 0) continue;
    auto row = rows[i];  // columns ascending
    if (upper) std::reverse(row.begin(), row.end());
    for (const auto& [j, a] : row) {
      if (need == 0) break;
      long long take = std::min(need, a);
      t_entries.push_back({i, j, take});
      need -= take;
    }
    detail::ensure(need == 0, "row sum cannot absorb the transfer");
  }
  return ThetaMatrix(n, t_entries);
}

// The index of the dominant term of [B] * [A].
inline ThetaMatrix highest_term(const ThetaMatrix& B, const ThetaMatrix& A) {
  ThetaMatrix T = highest_term_move(B, A);
  ThetaMatrix S = B.is_upper_bidiagonal() ? T.shift_up() : T.shift_down();
  std::vector<std::array<long long, 3>> es;
  for (const auto& [key, a] : A.entries())
    es.push_back({key.first, key.second, a});
  for (const auto& [key, a] : T.entries())
    es.push_back({key.first, key.second, -a});
  for (const auto& [key, a] : S.entries())
    es.push_back({key.first, key.second, a});
  return ThetaMatrix(A.n(), es);
}

// For an admissible pair the product is the dominant term with unit
// coefficient plus strictly smaller terms; verified here on every call.
inline SchurElement admissible_product(const ThetaMatrix& B,
                                       const ThetaMatrix& A) {
  detail::require(admissible(B, A), "pair is not admissible");
  detail::require(B.co() == A.ro(), "incompatible shapes");
  SchurElement p = mult_bidiag(B, A);
  ThetaMatrix M = highest_term(B, A);
  detail::ensure(p.coeff(M) == Laurent(1),
                 "dominant coefficient of an admissible product is not 1");
  for (const auto& [key, c] : p.terms()) {
    (void)c;
    if (key == M) continue;
    detail::ensure(leq_a_compare(key, M) == Ordering::less,
                   "admissible product has a term not below the dominant one");
  }
  return p;
}

}  // namespace qschur
