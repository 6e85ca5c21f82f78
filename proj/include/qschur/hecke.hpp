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

// An independent model of the q-Schur algebra inside the extended affine
// Hecke algebra: standard basis elements become scaled double-coset sums of
// T-basis elements, products and the bar involution are computed there from
// the quadratic relation alone, and the results are expanded back.  Slow by
// design -- it shares no code path with the closed multiplication formulas
// and exists to check them.

#include <utility>
#include <vector>

#include "qschur/schur.hpp"

namespace qschur {

class HeckeElement {
 public:
  explicit HeckeElement(int d) : d_(d) {}

  static HeckeElement basis(const AffinePerm& g) {
    HeckeElement h(g.d());
    h.terms_[g] = 1;
    return h;
  }

  int d() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<AffinePerm, Laurent>& terms() const { return terms_; }

  void add_term(const AffinePerm& g, const Laurent& c) {
    if (c.is_zero()) return;
    detail::require(g.d() == d_, "term from a different group");
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    detail::require(d_ == o.d_, "mismatched groups");
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    detail::require(d_ == o.d_, "mismatched groups");
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }

  HeckeElement scaled(const Laurent& c) const {
    HeckeElement r(d_);
    if (c.is_zero()) return r;
    for (const auto& [g, t] : terms_) r.terms_[g] = t * c;
    return r;
  }

  bool operator==(const HeckeElement& o) const {
    return d_ == o.d_ && terms_ == o.terms_;
  }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

 private:
  int d_;
  std::map<AffinePerm, Laurent> terms_;
};

// right multiplication by T_s, via T_y T_s = T_{ys} when lengths add and
// the quadratic relation T_s^2 = (v^2 - 1) T_s + v^2 otherwise
inline HeckeElement hecke_mul_gen(const HeckeElement& h, int s) {
  HeckeElement r(h.d());
  const AffinePerm gen = AffinePerm::s(h.d(), s);
  const Laurent v2 = Laurent::monomial(1, 2);
  const Laurent v2m1 = v2 - Laurent(1);
  for (const auto& [g, c] : h.terms()) {
    if (!g.right_descent(s)) {
      r.add_term(g * gen, c);
    } else {
      r.add_term(g, c * v2m1);
      r.add_term(g * gen, c * v2);
    }
  }
  return r;
}

// right multiplication by T_s^{-1} = v^{-2} T_s + (v^{-2} - 1) T_e
inline HeckeElement hecke_mul_gen_inv(const HeckeElement& h, int s) {
  HeckeElement r(h.d());
  const AffinePerm gen = AffinePerm::s(h.d(), s);
  const Laurent vm2 = Laurent::monomial(1, -2);
  const Laurent vm2m1 = vm2 - Laurent(1);
  for (const auto& [g, c] : h.terms()) {
    if (g.right_descent(s)) {
      r.add_term(g * gen, c);
    } else {
      r.add_term(g * gen, c * vm2);
      r.add_term(g, c * vm2m1);
    }
  }
  return r;
}

inline HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
  detail::require(a.d() == b.d(), "mismatched groups");
  HeckeElement r(a.d());
  for (const auto& [gb, cb] : b.terms()) {
    ReducedWord rw = reduced_word(gb);
    AffinePerm rot = AffinePerm::pi_power(a.d(), rw.z);
    HeckeElement cur(a.d());
    for (const auto& [ga, ca] : a.terms()) cur.add_term(ga * rot, ca * cb);
    for (int s : rw.letters) cur = hecke_mul_gen(cur, s);
    r += cur;
  }
  return r;
}

// the bar involution: v -> v^-1 and T_g -> T_{g^-1}^{-1}
inline HeckeElement hecke_bar(const HeckeElement& h) {
  HeckeElement r(h.d());
  for (const auto& [g, c] : h.terms()) {
    ReducedWord rw = reduced_word(g);
    HeckeElement cur(h.d());
    cur.add_term(AffinePerm::pi_power(h.d(), rw.z), c.bar());
    for (int s : rw.letters) cur = hecke_mul_gen_inv(cur, s);
    r += cur;
  }
  return r;
}

// x_lambda: the sum of T_w over the Young subgroup W_lambda
inline HeckeElement x_of(const Composition& lambda) {
  HeckeElement h(comp_sum(lambda));
  for (const auto& w : young_elements(lambda)) h.add_term(w, 1);
  return h;
}

// The sum of T_w over the double coset W_lambda g W_mu, computed as
// x_lambda T_g (sum over W_mu-elements minimal in their W_delta coset);
// each element of the coset appears exactly once, and that is asserted.
inline HeckeElement coset_sum(const CosetDatum& cd) {
  ThetaMatrix A = kappa(cd.lambda, cd.g, cd.mu);
  Composition delta = A.delta_seq();
  std::vector<AffinePerm> reps = dist_reps_in_young(delta, cd.mu);
  std::size_t young_size = young_elements(cd.lambda).size();
  HeckeElement right(cd.g.d());
  for (const auto& y : reps) right.add_term(y, 1);
  HeckeElement h =
      hecke_mul(hecke_mul(x_of(cd.lambda), HeckeElement::basis(cd.g)), right);
  detail::ensure(h.terms().size() == young_size * reps.size(),
                 "double coset sum has the wrong support");
  for (const auto& [g, c] : h.terms()) {
    (void)g;
    detail::ensure(c == Laurent(1), "double coset sum is not multiplicity free");
  }
  return h;
}

// the Hecke-algebra avatar of the standard basis element [A]
inline HeckeElement standard_action(const ThetaMatrix& A) {
  CosetDatum cd = kappa_inv(A);
  return coset_sum(cd).scaled(
      Laurent::monomial(1, static_cast<int>(-A.d_exponent())));
}

// Rewrite an element lying in the span of the standard basis elements for
// (lambda, mu) back into that basis; anything outside the span is an error.
inline SchurElement expand_in_standard(const HeckeElement& h,
                                       const Composition& lambda,
                                       const Composition& mu) {
  const int d = comp_sum(lambda);
  detail::require(comp_sum(mu) == d, "compositions of different totals");
  const int n = static_cast<int>(lambda.size());
  SchurElement out(n, d);
  HeckeElement rem = h;
  std::vector<std::pair<AffinePerm, Laurent>> mins;
  for (const auto& [g, c] : h.terms())
    if (is_min_double_rep(g, lambda, mu)) mins.push_back({g, c});
  for (const auto& [g, c] : mins) {
    ThetaMatrix A = kappa(lambda, g, mu);
    Laurent ka = c.times_monomial(1, static_cast<int>(A.d_exponent()));
    out.add_term(A, ka);
    rem -= standard_action(A).scaled(ka);
  }
  detail::ensure(rem.is_zero(), "element is outside the standard span");
  return out;
}

// [A] * [B] computed entirely on the Hecke side
inline SchurElement oracle_product(const ThetaMatrix& A,
                                   const ThetaMatrix& B) {
  detail::require(A.n() == B.n() && A.d() == B.d(), "mismatched algebras");
  if (A.co() != B.ro()) return SchurElement(A.n(), A.d());
  const int d = static_cast<int>(A.d());
  CosetDatum cb = kappa_inv(B);
  Composition deltaB = B.delta_seq();
  HeckeElement right(d);
  for (const auto& y : dist_reps_in_young(deltaB, cb.mu)) right.add_term(y, 1);
  HeckeElement h = hecke_mul(
      hecke_mul(standard_action(A), HeckeElement::basis(cb.g)), right);
  h = h.scaled(Laurent::monomial(1, static_cast<int>(-B.d_exponent())));
  return expand_in_standard(h, A.ro(), B.co());
}

// bar([A]) computed entirely on the Hecke side
inline SchurElement oracle_bar(const ThetaMatrix& A) {
  HeckeElement h = hecke_bar(standard_action(A));
  h = h.scaled(Laurent::monomial(
      1, static_cast<int>(2 * young_longest(A.co()).length())));
  return expand_in_standard(h, A.ro(), A.co());
}

}  // namespace qschur
