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

#include <vector>

#include "qschur/schur.hpp"

using qschur::Laurent;
using qschur::Ordering;
using qschur::SchurElement;
using qschur::ThetaMatrix;
using qschur::admissible;
using qschur::admissible_product;
using qschur::enumerate_theta;
using qschur::highest_term;
using qschur::highest_term_move;
using qschur::leq_a_compare;
using qschur::mult_bidiag;

TEST_CASE("multiplication at period one", "[schur]") {
  const ThetaMatrix super(1, {{1, 2, 1}});
  const ThetaMatrix sub(1, {{1, 0, 1}});
  CHECK(mult_bidiag(super, sub) ==
        SchurElement::standard(ThetaMatrix(1, {{1, 1, 1}})));
  CHECK(mult_bidiag(sub, super) ==
        SchurElement::standard(ThetaMatrix(1, {{1, 1, 1}})));
}

TEST_CASE("incompatible shapes multiply to zero", "[schur]") {
  const ThetaMatrix b(2, {{1, 1, 1}, {1, 2, 1}});
  const ThetaMatrix a(2, {{1, 1, 2}});
  CHECK(b.co() != a.ro());
  const SchurElement prod = mult_bidiag(b, a);
  CHECK(prod.terms().empty());
}

TEST_CASE("diagonal left factors act as the identity", "[schur]") {
  for (int n : {2, 3}) {
    for (const ThetaMatrix& a : enumerate_theta(n, 2, 2)) {
      if (a.empty()) continue;
      const ThetaMatrix d = ThetaMatrix::diagonal(a.ro());
      CHECK(mult_bidiag(d, a) == SchurElement::standard(a));
    }
  }
}

TEST_CASE("the transfer submatrix picks extreme columns first", "[schur]") {
  // Upper-bidiagonal left factor at period seven: the transfer must take
  // the rightmost available cells of each row.
  const ThetaMatrix b(2, {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}, {2, 3, 1}});
  const ThetaMatrix a(2, {{1, 2, 2}, {2, 1, 3}, {2, 2, 1}, {2, 3, 1}});
  const ThetaMatrix t = highest_term_move(b, a);
  CHECK(t.entries() ==
        ThetaMatrix(2, {{1, 2, 1}, {2, 2, 1}, {2, 3, 1}}).entries());
  const ThetaMatrix m = highest_term(b, a);
  CHECK(m.entries() ==
        ThetaMatrix(2, {{1, 2, 2}, {1, 3, 1}, {2, 1, 3}, {2, 4, 1}})
            .entries());
  // The dominant matrix really dominates every term of the product.
  const SchurElement prod = mult_bidiag(b, a);
  CHECK_FALSE(prod.coeff(m).is_zero());
  for (const auto& [key, c] : prod.terms()) {
    const Ordering ord = leq_a_compare(key, m);
    CHECK((ord == Ordering::less || ord == Ordering::equal));
  }
}

TEST_CASE("a lower-bidiagonal move picks leftmost columns first", "[schur]") {
  const ThetaMatrix bl(2, {{1, 1, 4}, {2, 1, 6}, {2, 2, 11}});
  const ThetaMatrix l1(2, {{1, 0, 6}, {1, 1, 4}, {2, 1, 5}, {2, 2, 6}});
  const ThetaMatrix target(2, {{1, 1, 4}, {2, 0, 6}, {2, 1, 5}, {2, 2, 6}});
  CHECK(highest_term(bl, l1).entries() == target.entries());
}

TEST_CASE("admissible products expose a unit dominant coefficient",
          "[schur]") {
  const ThetaMatrix chain_a(
      2, {{1, 2, 4}, {2, 0, 6}, {2, 1, 5}, {2, 3, 1}, {2, 4, 2}, {2, 5, 3}});
  const ThetaMatrix b1(2, {{1, 1, 4}, {2, 2, 14}, {2, 3, 3}});
  const ThetaMatrix u1(
      2, {{1, 2, 4}, {1, 3, 3}, {2, 0, 6}, {2, 1, 5}, {2, 3, 1}, {2, 4, 2}});
  REQUIRE(admissible(b1, u1));
  CHECK(highest_term(b1, u1).entries() == chain_a.entries());
  const SchurElement prod = admissible_product(b1, u1);
  CHECK(prod.coeff(chain_a) == Laurent(1));
  for (const auto& [key, c] : prod.terms()) {
    if (key.entries() == chain_a.entries()) continue;
    CHECK(leq_a_compare(key, chain_a) == Ordering::less);
  }
}

TEST_CASE("products stay inside the dominance ideal of the dominant term",
          "[schur]") {
  // For every bidiagonal B and compatible A in a small sweep, each term of
  // [B][A] is bounded above by the dominant matrix.
  for (const ThetaMatrix& b : enumerate_theta(2, 2, 2)) {
    if (b.empty() || !(b.is_upper_bidiagonal() || b.is_lower_bidiagonal()))
      continue;
    for (const ThetaMatrix& a : enumerate_theta(2, 2, 2)) {
      if (a.empty() || b.co() != a.ro()) continue;
      const ThetaMatrix m = highest_term(b, a);
      const SchurElement prod = mult_bidiag(b, a);
      for (const auto& [key, c] : prod.terms()) {
        const Ordering ord = leq_a_compare(key, m);
        CHECK((ord == Ordering::less || ord == Ordering::equal));
      }
    }
  }
}
