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

// The extended affine symmetric group on d strands: periodic permutations g
// of the integers with g(i + d) = g(i) + d.  Elements factor uniquely as
// pi^z * w with w in the affine Weyl group generated by s_1, ..., s_d
// (s_d is the affine reflection) and pi the rotation i -> i + 1.  Also
// provides finite Young subgroups attached to compositions, coset and
// double-coset representatives, Bruhat order, and reduced words -- the
// combinatorial substrate for the Hecke-algebra oracle.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "qschur/laurent.hpp"

namespace qschur {

// A weak composition: nonnegative parts, in context summing to d.
using Composition = std::vector<int>;

inline int comp_sum(const Composition& c) {
  return std::accumulate(c.begin(), c.end(), 0);
}

inline void validate_composition(const Composition& c, int d) {
  detail::require(!c.empty(), "composition must have at least one part");
  for (int p : c) detail::require(p >= 0, "composition parts must be >= 0");
  detail::require(comp_sum(c) == d, "composition parts must sum to d");
}

class AffinePerm {
 public:
  // window[i-1] = g(i) for i = 1..d; this determines g on all of Z.
  AffinePerm(int d, std::vector<long long> window)
      : d_(d), w_(std::move(window)) {
    detail::require(d_ >= 1, "AffinePerm requires d >= 1");
    detail::require(static_cast<int>(w_.size()) == d_,
                    "window size must equal d");
    std::vector<bool> seen(d_, false);
    for (long long v : w_) {
      long long r = ((v - 1) % d_ + d_) % d_;  // residue class index in [0,d)
      detail::require(!seen[r], "window residues must be distinct mod d");
      seen[r] = true;
    }
  }

  static AffinePerm identity(int d) {
    std::vector<long long> w(d);
    std::iota(w.begin(), w.end(), 1);
    return AffinePerm(d, std::move(w));
  }

  // Coxeter generator s_i for i in [1..d]; s_d is the affine reflection
  // swapping the residue classes of d and d+1.
  static AffinePerm s(int d, int i) {
    detail::require(d >= 2, "Coxeter generators require d >= 2");
    detail::require(1 <= i && i <= d, "generator index out of range");
    AffinePerm g = identity(d);
    if (i < d) {
      std::swap(g.w_[i - 1], g.w_[i]);
    } else {
      // g(d) = d + 1 and g(d + 1) = d, i.e. g(1) = 0 and g(d) = d + 1.
      g.w_[0] = 0;
      g.w_[d - 1] = d + 1;
    }
    return g;
  }

  // pi^z, the rotation i -> i + z (length zero).
  static AffinePerm pi_power(int d, long long z) {
    std::vector<long long> w(d);
    std::iota(w.begin(), w.end(), 1 + z);
    return AffinePerm(d, std::move(w));
  }

  int d() const { return d_; }
  const std::vector<long long>& window() const { return w_; }

  long long apply(long long i) const {
    long long r = ((i - 1) % d_ + d_) % d_;  // 0-based position in window
    long long q = (i - 1 - r) / d_;
    return w_[r] + q * d_;
  }

  friend AffinePerm operator*(const AffinePerm& g, const AffinePerm& h) {
    detail::require(g.d_ == h.d_, "mismatched strand counts");
    std::vector<long long> w(g.d_);
    for (int i = 1; i <= g.d_; ++i) w[i - 1] = g.apply(h.apply(i));
    return AffinePerm(g.d_, std::move(w));
  }

  AffinePerm inverse() const {
    std::vector<long long> w(d_);
    for (int i = 1; i <= d_; ++i) {
      long long v = w_[i - 1];
      long long res = ((v - 1) % d_ + d_) % d_;  // v lands in class res + 1
      long long shift = (v - 1 - res) / d_;
      // g(i) = v means g^-1(v) = i, so g^-1(res + 1) = i - shift * d.
      w[res] = i - shift * d_;
    }
    return AffinePerm(d_, std::move(w));
  }

  // rotation part: g = pi^z * w with w in the (non-extended) affine group
  long long pi_part() const {
    long long sum = std::accumulate(w_.begin(), w_.end(), 0LL);
    long long base = static_cast<long long>(d_) * (d_ + 1) / 2;
    detail::ensure((sum - base) % d_ == 0, "window sum not congruent to base");
    return (sum - base) / d_;
  }

  AffinePerm weyl_part() const { return pi_power(d_, -pi_part()) * *this; }

  // Coxeter length: the number of inversions (i, j) with i in [1..d], i < j,
  // g(i) > g(j).  Any inversion has j <= d + spread, so the scan is finite.
  long long length() const {
    auto [mn, mx] = std::minmax_element(w_.begin(), w_.end());
    long long jmax = d_ + (*mx - *mn);
    long long len = 0;
    for (int i = 1; i <= d_; ++i) {
      long long gi = apply(i);
      for (long long j = i + 1; j <= jmax; ++j)
        if (gi > apply(j)) ++len;
    }
    return len;
  }

  // descent tests, i in [1..d]: length(g * s_i) < length(g), resp. s_i * g
  bool right_descent(int i) const {
    detail::require(1 <= i && i <= d_, "generator index out of range");
    return apply(i) > apply(i + 1);
  }
  bool left_descent(int i) const {
    detail::require(1 <= i && i <= d_, "generator index out of range");
    return inverse_apply(i) > inverse_apply(i + 1);
  }

  bool operator==(const AffinePerm& o) const {
    return d_ == o.d_ && w_ == o.w_;
  }
  bool operator!=(const AffinePerm& o) const { return !(*this == o); }
  bool operator<(const AffinePerm& o) const {
    if (d_ != o.d_) return d_ < o.d_;
    return w_ < o.w_;
  }

 private:
  long long inverse_apply(long long v) const {
    long long res = ((v - 1) % d_ + d_) % d_;
    long long shift = (v - 1 - res) / d_;
    for (int i = 1; i <= d_; ++i)
      if (((w_[i - 1] - 1) % d_ + d_) % d_ == res)
        return i + (shift - (w_[i - 1] - 1 - res) / d_) * d_;
    detail::ensure(false, "window misses a residue class");
    return 0;
  }

  int d_;
  std::vector<long long> w_;
};

// g = pi^z * s_{i_1} * ... * s_{i_k} with k = length(g): returned as the
// rotation exponent plus the generator indices in word order.
struct ReducedWord {
  long long z = 0;
  std::vector<int> letters;
};

inline ReducedWord reduced_word(const AffinePerm& g) {
  ReducedWord rw;
  rw.z = g.pi_part();
  AffinePerm w = g.weyl_part();
  std::vector<int> peeled;  // letters peeled off the right
  long long len = w.length();
  while (len > 0) {
    int i = 1;
    while (!w.right_descent(i)) {
      ++i;
      detail::ensure(i <= w.d(), "positive length but no right descent");
    }
    w = w * AffinePerm::s(w.d(), i);
    peeled.push_back(i);
    --len;
  }
  rw.letters.assign(peeled.rbegin(), peeled.rend());
  return rw;
}

// All elements of the affine Weyl group (no rotation part) of length at most
// max_len, by breadth-first search from the identity.
inline std::vector<AffinePerm> enumerate_weyl(int d, int max_len) {
  if (d < 2) return {AffinePerm::identity(d)};
  std::set<AffinePerm> seen;
  std::vector<AffinePerm> frontier{AffinePerm::identity(d)};
  seen.insert(frontier.front());
  for (int l = 0; l < max_len; ++l) {
    std::vector<AffinePerm> next;
    for (const auto& g : frontier)
      for (int i = 1; i <= d; ++i) {
        AffinePerm h = g * AffinePerm::s(d, i);
        if (h.length() == l + 1 && seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Young subgroups W_lambda (finite: generated by the s_j with j in [1..d-1]
// interior to a block of lambda; the affine generator s_d never occurs).
// ---------------------------------------------------------------------------

inline std::vector<int> young_generators(const Composition& lambda) {
  int d = comp_sum(lambda);
  std::set<int> cuts;  // partial sums, including d
  int acc = 0;
  for (int p : lambda) {
    acc += p;
    cuts.insert(acc);
  }
  std::vector<int> gens;
  for (int j = 1; j <= d - 1; ++j)
    if (!cuts.count(j)) gens.push_back(j);
  return gens;
}

// Does w fix each block of lambda setwise?  (Equivalent to membership in
// W_lambda; forces rotation part zero.)
inline bool in_young(const AffinePerm& w, const Composition& lambda) {
  int d = comp_sum(lambda);
  detail::require(w.d() == d, "mismatched strand counts");
  std::vector<int> block_of(d + 1, 0);
  int acc = 0, b = 0;
  for (int p : lambda) {
    for (int i = acc + 1; i <= acc + p; ++i) block_of[i] = b;
    acc += p;
    ++b;
  }
  for (int i = 1; i <= d; ++i) {
    long long v = w.apply(i);
    if (v < 1 || v > d || block_of[v] != block_of[i]) return false;
  }
  return true;
}

inline std::vector<AffinePerm> young_elements(const Composition& lambda) {
  int d = comp_sum(lambda);
  std::vector<int> gens = young_generators(lambda);
  std::set<AffinePerm> seen{AffinePerm::identity(d)};
  std::vector<AffinePerm> frontier{AffinePerm::identity(d)};
  while (!frontier.empty()) {
    std::vector<AffinePerm> next;
    for (const auto& g : frontier)
      for (int i : gens) {
        AffinePerm h = g * AffinePerm::s(d, i);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// The longest element of W_lambda reverses each block in place.
inline AffinePerm young_longest(const Composition& lambda) {
  int d = comp_sum(lambda);
  std::vector<long long> w(d);
  int acc = 0;
  for (int p : lambda) {
    for (int x = acc + 1; x <= acc + p; ++x) w[x - 1] = 2 * acc + p + 1 - x;
    acc += p;
  }
  return AffinePerm(d, std::move(w));
}

// Minimal representative of the coset W_nu * g (strip left descents in nu).
inline AffinePerm min_rep_left(AffinePerm g, const Composition& nu) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : young_generators(nu))
      if (g.left_descent(i)) {
        g = AffinePerm::s(g.d(), i) * g;
        changed = true;
      }
  }
  return g;
}

// Minimal representative of the coset g * W_nu (strip right descents in nu).
inline AffinePerm min_rep_right(AffinePerm g, const Composition& nu) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : young_generators(nu))
      if (g.right_descent(i)) {
        g = g * AffinePerm::s(g.d(), i);
        changed = true;
      }
  }
  return g;
}

// Minimal representative of the double coset W_lambda * g * W_mu.
inline AffinePerm min_double_rep(AffinePerm g, const Composition& lambda,
                                 const Composition& mu) {
  for (;;) {
    AffinePerm h = min_rep_right(min_rep_left(g, lambda), mu);
    if (h == g) return g;
    g = h;
  }
}

inline bool is_min_double_rep(const AffinePerm& g, const Composition& lambda,
                              const Composition& mu) {
  for (int i : young_generators(lambda))
    if (g.left_descent(i)) return false;
  for (int i : young_generators(mu))
    if (g.right_descent(i)) return false;
  return true;
}

// Elements of W_mu that are minimal in their coset W_delta * y, i.e. have no
// left descent among the generators of W_delta.
inline std::vector<AffinePerm> dist_reps_in_young(const Composition& delta,
                                                  const Composition& mu) {
  std::vector<AffinePerm> out;
  for (const auto& y : young_elements(mu)) {
    bool ok = true;
    for (int i : young_generators(delta))
      if (y.left_descent(i)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(y);
  }
  return out;
}

// Conjugation by pi^z shifts the blocks of lambda cyclically: the internal
// cut points move by z mod d and the composition is re-read anchored at 0.
inline Composition shift_composition(const Composition& lambda, long long z) {
  int d = comp_sum(lambda);
  int n = static_cast<int>(lambda.size());
  detail::require(d >= 1, "composition must have positive sum");
  std::vector<int> cuts;  // internal cut points, shifted into [0, d)
  int acc = 0;
  for (int i = 0; i + 1 < n; ++i) {
    acc += lambda[i];
    cuts.push_back(static_cast<int>(((acc + z) % d + d) % d));
  }
  std::sort(cuts.begin(), cuts.end());
  Composition nu(n);
  int prev = 0;
  for (int i = 0; i + 1 < n; ++i) {
    nu[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  nu[n - 1] = d - prev;
  return nu;
}

// ---------------------------------------------------------------------------
// Bruhat order (elements with different rotation parts are incomparable)
// ---------------------------------------------------------------------------

inline bool bruhat_leq(const AffinePerm& x, const AffinePerm& y) {
  detail::require(x.d() == y.d(), "mismatched strand counts");
  if (x.pi_part() != y.pi_part()) return false;
  AffinePerm u = x.weyl_part(), w = y.weyl_part();
  // lifting property: if s * w < w, then u <= w iff
  //   (s * u < u) ? s * u <= s * w : u <= s * w
  std::function<bool(const AffinePerm&, const AffinePerm&)> leq =
      [&](const AffinePerm& a, const AffinePerm& b) -> bool {
    long long lb = b.length();
    if (a.length() > lb) return false;
    if (lb == 0) return a.length() == 0;
    int s = 1;
    while (!b.left_descent(s)) ++s;
    AffinePerm sb = AffinePerm::s(b.d(), s) * b;
    if (a.left_descent(s)) return leq(AffinePerm::s(a.d(), s) * a, sb);
    return leq(a, sb);
  };
  return leq(u, w);
}

}  // namespace qschur
