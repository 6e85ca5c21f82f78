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

// Verification suites: sweep the enumerated basis matrices at a given scale
// and check the closed formulas against the Hecke-algebra oracle and against
// the structural identities.  Shared between the CLI `verify` command and
// the test binaries.

#include <random>
#include <string>
#include <vector>

#include "qschur/io.hpp"

namespace qschur {

struct SuiteReport {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_counterexample;
  std::string notes;
  bool ok() const { return failures == 0; }
};

inline std::string pair_dump(const ThetaMatrix& B, const ThetaMatrix& A) {
  nlohmann::json j{{"left", theta_to_json(B)}, {"right", theta_to_json(A)}};
  return j.dump();
}

// compositions of d into n nonnegative parts
inline std::vector<Composition> enumerate_compositions(int n, int d) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == n - 1) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

// The closed-form bidiagonal product against the oracle: every compatible
// (bidiagonal B, A) pair.
inline SuiteReport verify_oracle_product(int n, int d, int band) {
  SuiteReport rep{"oracle-product", 0, 0, "", ""};
  std::vector<ThetaMatrix> all = enumerate_theta(n, d, band);
  std::vector<ThetaMatrix> bidiag;
  for (const auto& B : all)
    if (B.is_upper_bidiagonal() || B.is_lower_bidiagonal())
      bidiag.push_back(B);
  for (const auto& A : all) {
    Composition rows = A.ro();
    for (const auto& B : bidiag) {
      if (B.co() != rows) continue;
      ++rep.cases;
      SchurElement fast = mult_bidiag(B, A);
      SchurElement slow = oracle_product(B, A);
      if (fast != slow) {
        ++rep.failures;
        if (rep.first_counterexample.empty())
          rep.first_counterexample = pair_dump(B, A);
      }
    }
  }
  return rep;
}

// m_A = [A] + strictly lower terms (asserted inside monomial()).
inline SuiteReport verify_unitriangular(int n, int d, int band) {
  SuiteReport rep{"unitriangular", 0, 0, "", ""};
  BasisContext ctx(n, d);
  for (const auto& A : enumerate_theta(n, d, band)) {
    ++rep.cases;
    try {
      ctx.monomial(A);
    } catch (const std::logic_error& e) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample = theta_to_json(A).dump() + " : " + e.what();
    }
  }
  return rep;
}

// The bar involution against the oracle, plus its structural properties.
inline SuiteReport verify_bar(int n, int d, int band) {
  SuiteReport rep{"bar", 0, 0, "", ""};
  BasisContext ctx(n, d);
  auto fail = [&](const ThetaMatrix& A, const std::string& what) {
    ++rep.failures;
    if (rep.first_counterexample.empty())
      rep.first_counterexample = theta_to_json(A).dump() + " : " + what;
  };
  for (const auto& A : enumerate_theta(n, d, band)) {
    ++rep.cases;
    try {
      const SchurElement& bar_a = ctx.bar_standard(A);
      if (bar_a != oracle_bar(A)) {
        fail(A, "bar_standard disagrees with the oracle");
        continue;
      }
      if ((A.is_upper_bidiagonal() || A.is_lower_bidiagonal()) &&
          bar_a != SchurElement::standard(A)) {
        fail(A, "bidiagonal standard element is not bar-fixed");
        continue;
      }
      if (ctx.bar_element(bar_a) != SchurElement::standard(A)) {
        fail(A, "bar is not an involution");
        continue;
      }
      if (ctx.bar_element(ctx.monomial(A)) != ctx.monomial(A)) {
        fail(A, "monomial basis element is not bar-fixed");
        continue;
      }
      // triangularity: the non-leading support lies strictly below g(A) in
      // Bruhat order
      AffinePerm g = kappa_inv(A).g;
      SchurElement rest = bar_a - SchurElement::standard(A);
      for (const auto& [B, c] : rest.terms()) {
        (void)c;
        AffinePerm x = kappa_inv(B).g;
        if (!(bruhat_leq(x, g) && x != g)) {
          fail(A, "bar support escapes the Bruhat interval");
          break;
        }
      }
    } catch (const std::logic_error& e) {
      fail(A, e.what());
    }
  }
  return rep;
}

// Canonical basis: bar-invariance and the v^-1 normalization are asserted by
// construction; positivity of the coefficients is reported.
inline SuiteReport verify_canonical(int n, int d, int band) {
  SuiteReport rep{"canonical", 0, 0, "", ""};
  BasisContext ctx(n, d);
  long long nonpositive = 0;
  for (const auto& A : enumerate_theta(n, d, band)) {
    ++rep.cases;
    try {
      const SchurElement& ca = ctx.canonical(A);
      bool pos = true;
      for (const auto& [B, c] : ca.terms()) {
        if (!(B == A)) {
          if (c.max_exp() >= 0) {
            ++rep.failures;
            if (rep.first_counterexample.empty())
              rep.first_counterexample =
                  theta_to_json(A).dump() + " : off-leading degree >= 0";
            break;
          }
        }
        for (const auto& [e, coef] : c.coeffs()) {
          (void)e;
          if (coef < 0) pos = false;
        }
      }
      if (!pos) ++nonpositive;
    } catch (const std::logic_error& e) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample = theta_to_json(A).dump() + " : " + e.what();
    }
  }
  rep.notes = nonpositive == 0
                  ? "all coefficients in v^-1*N[v^-1]"
                  : std::to_string(nonpositive) + " elements with negative coefficients";
  return rep;
}

// Identity element, associativity on random compatible triples, and
// agreement of general products with the oracle.
inline SuiteReport verify_algebra_sanity(int n, int d, int band,
                                         std::uint64_t seed, int trials) {
  SuiteReport rep{"algebra-sanity", 0, 0, "", ""};
  BasisContext ctx(n, d);
  std::mt19937_64 rng(seed);
  std::vector<ThetaMatrix> all = enumerate_theta(n, d, band);
  std::map<Composition, std::vector<const ThetaMatrix*>> by_ro;
  for (const auto& A : all) by_ro[A.ro()].push_back(&A);

  SchurElement id(n, d);
  for (const auto& lambda : enumerate_compositions(n, d))
    id.add_term(ThetaMatrix::diagonal(lambda), 1);

  auto fail = [&](const std::string& what) {
    ++rep.failures;
    if (rep.first_counterexample.empty()) rep.first_counterexample = what;
  };

  std::uniform_int_distribution<std::size_t> pick_any(0, all.size() - 1);
  for (int t = 0; t < trials; ++t) {
    ++rep.cases;
    const ThetaMatrix& A = all[pick_any(rng)];
    const auto& bs = by_ro[A.co()];
    const ThetaMatrix& B =
        *bs[std::uniform_int_distribution<std::size_t>(0, bs.size() - 1)(rng)];
    const auto& cs = by_ro[B.co()];
    const ThetaMatrix& C =
        *cs[std::uniform_int_distribution<std::size_t>(0, cs.size() - 1)(rng)];

    const SchurElement& ab = ctx.product_basis(A, B);
    SchurElement ab_c = ctx.mult_general(ab, SchurElement::standard(C));
    SchurElement a_bc = ctx.mult_general(SchurElement::standard(A),
                                         ctx.product_basis(B, C));
    if (ab_c != a_bc) {
      fail("associativity: " + pair_dump(A, B) + " then " +
           theta_to_json(C).dump());
      continue;
    }
    if (d <= 3 && ab != oracle_product(A, B)) {
      fail("general product disagrees with the oracle: " + pair_dump(A, B));
      continue;
    }
    SchurElement sa = SchurElement::standard(A);
    if (ctx.mult_general(id, sa) != sa || ctx.mult_general(sa, id) != sa) {
      fail("identity element fails on " + theta_to_json(A).dump());
      continue;
    }
  }
  return rep;
}

inline std::vector<SuiteReport> run_suites(const std::string& suite, int n,
                                           int d, int band, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  const bool all = suite == "all";
  if (all || suite == "oracle") {
    out.push_back(verify_oracle_product(n, d, band));
    out.push_back(verify_algebra_sanity(n, d, band, seed, 25));
  }
  if (all || suite == "unitriangular") out.push_back(verify_unitriangular(n, d, band));
  if (all || suite == "bar") out.push_back(verify_bar(n, d, band));
  if (all || suite == "canonical") out.push_back(verify_canonical(n, d, band));
  return out;
}

}  // namespace qschur
