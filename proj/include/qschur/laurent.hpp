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

// Exact Laurent-polynomial arithmetic in one variable v over the integers:
// the coefficient ring for everything else in this library.  Also provides
// the quantum integer <a> = 1 + v^2 + ... + v^(2(a-1)), the configurable
// quantum bracket [m], and the entrywise quantum binomial used by the
// bidiagonal multiplication formulas.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qschur {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Precondition violations (caller errors).
inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Internal invariant violations (library bugs or convention mismatches).
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace detail

// The quantum bracket [m] used inside quantum binomials.  "unbalanced" means
// [m] = 1 + v^2 + ... + v^(2(m-1)); "balanced" means
// [m] = (v^m - v^-m)/(v - v^-1) = v^-(m-1) + ... + v^(m-1).
// A single process-wide configuration point; the default is the convention
// validated against the Hecke-algebra oracle.
enum class Bracket { unbalanced, balanced };

inline Bracket& bracket_convention() {
  static Bracket b = Bracket::unbalanced;
  return b;
}

class Laurent {
 public:
  Laurent() = default;
  Laurent(long long c) {  // NOLINT: implicit from integers is intended
    if (c != 0) c_[0] = c;
  }
  explicit Laurent(const BigInt& c) {
    if (c != 0) c_[0] = c;
  }

  static Laurent monomial(const BigInt& coeff, int exp) {
    Laurent p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
  }

  bool is_zero() const { return c_.empty(); }

  // exponent -> coefficient, canonical (no zero coefficients stored)
  const std::map<int, BigInt>& coeffs() const { return c_; }

  BigInt coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? BigInt(0) : it->second;
  }

  int min_exp() const {
    detail::require(!c_.empty(), "min_exp of the zero polynomial");
    return c_.begin()->first;
  }
  int max_exp() const {
    detail::require(!c_.empty(), "max_exp of the zero polynomial");
    return c_.rbegin()->first;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
  }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c_)
      for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // multiply by coeff * v^exp
  Laurent times_monomial(const BigInt& coeff, int exp) const {
    Laurent r;
    if (coeff == 0) return r;
    for (const auto& [e, c] : c_) r.c_[e + exp] = c * coeff;
    return r;
  }

  // the bar involution v -> v^-1
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
  }

  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Terms in ascending exponent order, "c*v^e" with v^0 elided, v^1 written
  // "v", and unit coefficients elided, e.g. "v^-2 + 1 - 3*v^4".
  std::string to_text() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
      BigInt a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (e == 0) {
        os << a;
      } else {
        if (a != 1) os << a << "*";
        os << "v";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = c_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }

  std::map<int, BigInt> c_;
};

// Quantum integer <a> = 1 + v^2 + ... + v^(2(a-1)); <0> = 0.
inline Laurent qint(int a) {
  detail::require(a >= 0, "qint requires a >= 0");
  Laurent r;
  for (int k = 0; k < a; ++k) r += Laurent::monomial(1, 2 * k);
  return r;
}

// The bracket [m] in the active convention (see Bracket).
inline Laurent bracket(int m) {
  detail::require(m >= 0, "bracket requires m >= 0");
  Laurent r = qint(m);
  if (bracket_convention() == Bracket::balanced && m > 0)
    r = r.times_monomial(1, -(m - 1));
  return r;
}

// Exact division: returns q with q * divisor == dividend; the division must
// leave no remainder (anything else indicates a convention violation).
inline Laurent exact_div(const Laurent& dividend, const Laurent& divisor) {
  detail::require(!divisor.is_zero(), "division by zero polynomial");
  Laurent rem = dividend;
  Laurent quot;
  const int de = divisor.min_exp();
  const BigInt& dc = divisor.coeffs().begin()->second;
  while (!rem.is_zero()) {
    const int re = rem.min_exp();
    // In an exact division the quotient's top exponent is fixed by the
    // ends of the inputs; passing it means the remainder can never clear.
    detail::ensure(re - de <= dividend.max_exp() - divisor.max_exp(),
                   "non-exact polynomial division (degree)");
    const BigInt rc = rem.coeff(re);
    detail::ensure(rc % dc == 0, "non-exact polynomial division (coefficient)");
    const BigInt q = rc / dc;
    quot += Laurent::monomial(q, re - de);
    rem -= divisor.times_monomial(q, re - de);
    detail::ensure(rem.is_zero() || rem.min_exp() > re,
                   "non-exact polynomial division (no progress)");
  }
  return quot;
}

// Entrywise quantum binomial ([a+b][a+b-1]...[b+1]) / ([a][a-1]...[1]), the
// Gaussian binomial "a+b choose a" in the active bracket convention.  Every
// intermediate quotient is itself a Gaussian binomial, so each division step
// is exact.
inline Laurent qbinom_entry(int a, int b) {
  detail::require(a >= 0 && b >= 0, "qbinom_entry requires a, b >= 0");
  Laurent r = 1;
  for (int t = 1; t <= a; ++t) r = exact_div(r * bracket(b + t), bracket(t));
  return r;
}

}  // namespace qschur
