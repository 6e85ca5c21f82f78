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

// Derived bases of the affine q-Schur algebra: the bidiagonal factorization
// of a matrix into a product of bidiagonal standard generators, the monomial
// basis it defines, the bar involution computed through it, the canonical
// basis, and general products reduced to the bidiagonal formula.

#include <set>
#include <utility>
#include <vector>

#include "qschur/schur.hpp"

namespace qschur {

// A = B^(1) * ... * B^(x) * B_(1) * ... * B_(s) as dominant terms: the upper
// passes peel the outermost upper diagonal (down to the diagonal), the lower
// passes peel the outermost lower diagonal (down to the first subdiagonal),
// and the lower-bidiagonal remainder closes the chain.
struct BidiagonalChain {
  std::vector<ThetaMatrix> factors;              // left to right
  std::vector<ThetaMatrix> upper_intermediates;  // after each upper pass
  std::vector<ThetaMatrix> lower_intermediates;  // after each lower pass
};

inline BidiagonalChain factor_bidiagonal(const ThetaMatrix& A) {
  detail::require(!A.empty(), "cannot factor an empty matrix");
  const int n = A.n();
  BidiagonalChain chain;

  auto strip = [&](const ThetaMatrix& M, long long offset) {
    // transfer matrix holding the entries of M on the given diagonal
    std::vector<std::array<long long, 3>> es;
    for (const auto& [key, a] : M.entries())
      if (key.second - key.first == offset)
        es.push_back({key.first, key.second, a});
    return ThetaMatrix(n, es);
  };
  auto emit_factor = [&](const ThetaMatrix& M, const ThetaMatrix& T,
                         bool upper) {
    // bidiagonal factor with the stripped amounts moved to offset +-1,
    // filled up to the row sums of M on the diagonal
    Composition rows = M.ro();
    std::vector<long long> taken(n + 1, 0);
    std::vector<std::array<long long, 3>> es;
    for (const auto& [key, a] : T.entries()) {
      es.push_back({key.first, key.first + (upper ? 1 : -1), a});
      taken[key.first] += a;
    }
    for (int i = 1; i <= n; ++i) {
      long long diag = rows[i - 1] - taken[i];
      detail::ensure(diag >= 0, "stripped more than the row sum");
      if (diag > 0) es.push_back({i, i, diag});
    }
    return ThetaMatrix(n, es);
  };
  auto apply_move = [&](const ThetaMatrix& M, const ThetaMatrix& T,
                        const ThetaMatrix& S) {
    std::vector<std::array<long long, 3>> es;
    for (const auto& [key, a] : M.entries())
      es.push_back({key.first, key.second, a});
    for (const auto& [key, a] : T.entries())
      es.push_back({key.first, key.second, -a});
    for (const auto& [key, a] : S.entries())
      es.push_back({key.first, key.second, a});
    return ThetaMatrix(n, es);
  };

  ThetaMatrix cur = A;
  while (cur.max_offset() >= 1) {
    ThetaMatrix T = strip(cur, cur.max_offset());
    ThetaMatrix factor = emit_factor(cur, T, /*upper=*/true);
    cur = apply_move(cur, T, T.shift_down());
    detail::ensure(factor.co() == cur.ro(), "chain does not compose");
    chain.factors.push_back(std::move(factor));
    chain.upper_intermediates.push_back(cur);
  }
  while (cur.min_offset() <= -2) {
    ThetaMatrix T = strip(cur, cur.min_offset());
    ThetaMatrix factor = emit_factor(cur, T, /*upper=*/false);
    cur = apply_move(cur, T, T.shift_up());
    detail::ensure(factor.co() == cur.ro(), "chain does not compose");
    chain.factors.push_back(std::move(factor));
    chain.lower_intermediates.push_back(cur);
  }
  chain.factors.push_back(cur);  // lower-bidiagonal remainder
  return chain;
}

// Caches the derived-basis computations for one algebra S(n, d).
class BasisContext {
 public:
  BasisContext(int n, long long d) : n_(n), d_(d) {}

  int n() const { return n_; }
  long long d() const { return d_; }

  // m_A: the chain of A multiplied out.  Unitriangular: coefficient 1 at A,
  // every other term strictly smaller.
  const SchurElement& monomial(const ThetaMatrix& A) {
    auto it = monomial_.find(A);
    if (it != monomial_.end()) return it->second;
    check_index(A);
    BidiagonalChain chain = factor_bidiagonal(A);
    SchurElement x = SchurElement::standard(chain.factors.back());
    for (auto f = chain.factors.rbegin() + 1; f != chain.factors.rend(); ++f)
      x = mult_bidiag_elem(*f, x);
    detail::ensure(x.coeff(A) == Laurent(1),
                   "monomial basis element is not unitriangular at its index");
    for (const auto& [B, c] : x.terms()) {
      (void)c;
      detail::ensure(B == A || leq_a_compare(B, A) == Ordering::less,
                     "monomial basis element has a term not below its index");
    }
    return monomial_.emplace(A, std::move(x)).first->second;
  }

  // bar([A]): bidiagonal standard elements are fixed; otherwise solve
  // bar(m_A) = m_A for bar([A]) through the strictly smaller terms.
  const SchurElement& bar_standard(const ThetaMatrix& A) {
    auto it = bar_.find(A);
    if (it != bar_.end()) return it->second;
    check_index(A);
    if (A.is_upper_bidiagonal() || A.is_lower_bidiagonal())
      return bar_.emplace(A, SchurElement::standard(A)).first->second;
    detail::ensure(bar_in_progress_.insert(A).second,
                   "bar involution recursion is not well founded");
    SchurElement x = monomial(A);  // bar-invariant product of generators
    for (const auto& [B, c] : monomial(A).terms()) {
      if (B == A) continue;
      x -= bar_standard(B).scaled(c.bar());
    }
    bar_in_progress_.erase(A);
    return bar_.emplace(A, std::move(x)).first->second;
  }

  SchurElement bar_element(const SchurElement& x) {
    SchurElement r(x.n(), x.d());
    for (const auto& [A, c] : x.terms())
      r += bar_standard(A).scaled(c.bar());
    return r;
  }

  // {A}: the bar-invariant element congruent to [A] modulo terms with
  // coefficients in v^-1 Z[v^-1].
  const SchurElement& canonical(const ThetaMatrix& A) {
    auto it = canonical_.find(A);
    if (it != canonical_.end()) return it->second;
    check_index(A);
    SchurElement x = monomial(A);
    for (long long guard = 0;; ++guard) {
      detail::ensure(guard < 1000000, "canonical reduction does not settle");
      // offenders: terms other than A whose coefficient reaches degree >= 0
      std::vector<const ThetaMatrix*> offenders;
      for (const auto& [B, c] : x.terms())
        if (!(B == A) && c.max_exp() >= 0) offenders.push_back(&B);
      if (offenders.empty()) break;
      const ThetaMatrix* pick = nullptr;
      for (const ThetaMatrix* cand : offenders) {
        bool maximal = true;
        for (const ThetaMatrix* other : offenders)
          if (leq_a_compare(*cand, *other) == Ordering::less) {
            maximal = false;
            break;
          }
        if (maximal) {
          pick = cand;
          break;
        }
      }
      detail::ensure(pick != nullptr, "no maximal offender");
      // bar-invariant completion of the offending coefficient
      const Laurent c = x.coeff(*pick);
      Laurent gamma = Laurent::monomial(c.coeff(0), 0);
      for (const auto& [e, a] : c.coeffs())
        if (e > 0) {
          gamma += Laurent::monomial(a, e);
          gamma += Laurent::monomial(a, -e);
        }
      x -= canonical(*pick).scaled(gamma);
    }
    detail::ensure(x.coeff(A) == Laurent(1),
                   "canonical element is not unitriangular at its index");
    detail::ensure(bar_element(x) == x, "canonical element is not bar fixed");
    return canonical_.emplace(A, std::move(x)).first->second;
  }

  // [A] * [B] for arbitrary indices, reduced through the chain of A.
  const SchurElement& product_basis(const ThetaMatrix& A,
                                    const ThetaMatrix& B) {
    auto key = std::make_pair(A, B);
    auto it = product_.find(key);
    if (it != product_.end()) return it->second;
    check_index(A);
    check_index(B);
    SchurElement r(n_, d_);
    if (A.co() == B.ro()) {
      BidiagonalChain chain = factor_bidiagonal(A);
      SchurElement folded = SchurElement::standard(B);
      for (auto f = chain.factors.rbegin(); f != chain.factors.rend(); ++f)
        folded = mult_bidiag_elem(*f, folded);
      r = std::move(folded);
      for (const auto& [C, c] : monomial(A).terms()) {
        if (C == A) continue;
        r -= product_basis(C, B).scaled(c);
      }
    }
    return product_.emplace(std::move(key), std::move(r)).first->second;
  }

  SchurElement mult_general(const SchurElement& x, const SchurElement& y) {
    detail::require(x.n() == n_ && y.n() == n_ && x.d() == d_ && y.d() == d_,
                    "elements from a different algebra");
    SchurElement r(n_, d_);
    for (const auto& [A, ca] : x.terms())
      for (const auto& [B, cb] : y.terms())
        r += product_basis(A, B).scaled(ca * cb);
    return r;
  }

 private:
  void check_index(const ThetaMatrix& A) const {
    detail::require(A.n() == n_ && A.d() == d_,
                    "matrix indexed outside this algebra");
  }

  int n_;
  long long d_;
  std::map<ThetaMatrix, SchurElement> monomial_;
  std::map<ThetaMatrix, SchurElement> bar_;
  std::map<ThetaMatrix, SchurElement> canonical_;
  std::set<ThetaMatrix> bar_in_progress_;
  std::map<std::pair<ThetaMatrix, ThetaMatrix>, SchurElement> product_;
};

}  // namespace qschur
