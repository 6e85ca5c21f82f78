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

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "qschur/kappa.hpp"

using qschur::AffinePerm;
using qschur::Composition;
using qschur::CosetDatum;
using qschur::ThetaMatrix;
using qschur::enumerate_theta;
using qschur::enumerate_weyl;
using qschur::g_plus;
using qschur::in_young;
using qschur::is_min_double_rep;
using qschur::kappa;
using qschur::kappa_inv;
using qschur::min_double_rep;
using qschur::young_elements;
using qschur::young_longest;

TEST_CASE("matrices of the smallest coset data", "[kappa]") {
  const Composition ones = {1, 1};
  const AffinePerm rot = AffinePerm::pi_power(2, 1);
  CHECK(kappa(ones, rot, ones).entries() ==
        ThetaMatrix(2, {{1, 0, 1}, {2, 1, 1}}).entries());

  const AffinePerm s1 = AffinePerm::s(2, 1);
  CHECK(kappa(ones, s1, ones).entries() ==
        ThetaMatrix(2, {{1, 2, 1}, {2, 1, 1}}).entries());

  CHECK(kappa(ones, AffinePerm::identity(2), ones).entries() ==
        ThetaMatrix::diagonal(ones).entries());
}

TEST_CASE("identity cosets give diagonal matrices", "[kappa]") {
  for (const Composition& lambda :
       {Composition{3}, Composition{1, 2}, Composition{2, 1, 1}}) {
    int d = 0;
    for (int p : lambda) d += p;
    const AffinePerm e = AffinePerm::identity(d);
    CHECK(kappa(lambda, e, lambda).entries() ==
          ThetaMatrix::diagonal(lambda).entries());
  }
}

TEST_CASE("matrix and coset descriptions are mutually inverse", "[kappa]") {
  // kappa_inv checks internally that its output reproduces the input matrix,
  // is a minimal double-coset representative, and has the matrix's inversion
  // number as its length; this sweep also re-checks the round trip here.
  for (int n : {2, 3}) {
    for (const ThetaMatrix& a : enumerate_theta(n, 2, 2)) {
      if (a.empty()) continue;
      const CosetDatum cd = kappa_inv(a);
      CHECK(cd.lambda == a.ro());
      CHECK(cd.mu == a.co());
      CHECK(kappa(cd.lambda, cd.g, cd.mu).entries() == a.entries());
      CHECK(cd.g.length() == a.ell());
      CHECK(is_min_double_rep(cd.g, cd.lambda, cd.mu));
    }
  }
}

TEST_CASE("distinguished group elements survive the round trip", "[kappa]") {
  const int d = 3;
  // Row and column compositions must share the same number of parts.
  const std::vector<std::vector<Composition>> families = {
      {{3, 0}, {1, 2}, {2, 1}, {0, 3}},
      {{1, 1, 1}, {2, 1, 0}, {0, 1, 2}}};
  for (const std::vector<Composition>& comps : families) {
    for (const Composition& lambda : comps) {
      for (const Composition& mu : comps) {
        std::set<AffinePerm> seen;
        for (const AffinePerm& w : enumerate_weyl(d, 4)) {
          for (int z = -2; z <= 2; ++z) {
            const AffinePerm g =
                min_double_rep(AffinePerm::pi_power(d, z) * w, lambda, mu);
            if (!seen.insert(g).second) continue;
            CHECK(kappa_inv(kappa(lambda, g, mu)).g == g);
          }
        }
      }
    }
  }
}

TEST_CASE("the completed element carries the grading exponent", "[kappa]") {
  // For the wide reference matrix the full product of longest elements is
  // far too large to expand term by term, but its length alone pins down
  // the grading exponent.
  const ThetaMatrix a(2, {{1, 0, 3}, {1, 2, 4}, {2, 3, 1}, {2, 4, 2}});
  const AffinePerm gp = g_plus(a);
  CHECK(gp.length() == 59);
  CHECK(gp.length() - young_longest(a.co()).length() == a.d_exponent());

  // The same identity on a full small sweep.
  for (const ThetaMatrix& m : enumerate_theta(2, 3, 2)) {
    if (m.empty()) continue;
    CHECK(g_plus(m).length() - young_longest(m.co()).length() ==
          m.d_exponent());
  }
}

TEST_CASE("the column sequence cuts out the stabilizer intersection",
          "[kappa]") {
  // The subgroup of the right-hand parabolic that the coset representative
  // conjugates into the left-hand parabolic is exactly the parabolic of the
  // refined column sequence.
  for (const ThetaMatrix& a : enumerate_theta(2, 3, 2)) {
    if (a.empty()) continue;
    const CosetDatum cd = kappa_inv(a);
    const Composition delta = a.delta_seq();
    const std::set<AffinePerm> delta_group = [&] {
      std::set<AffinePerm> out;
      for (const AffinePerm& y : young_elements(delta)) out.insert(y);
      return out;
    }();
    for (const AffinePerm& y : young_elements(cd.mu)) {
      const bool conj_in_lambda =
          in_young(cd.g * y * cd.g.inverse(), cd.lambda);
      CHECK(conj_in_lambda == (delta_group.count(y) == 1));
    }
  }
}
