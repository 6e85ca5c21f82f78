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

// n-periodic integer matrices with finitely many positive entries per period:
// the combinatorial index set of the standard basis.  A matrix satisfies
// a_{i+n, j+n} = a_{ij}; we store one representative entry per orbit, with
// the row normalized into [1..n] and the column unconstrained.  Provides row
// and column sums, the length and twist statistics, the entry sequence used
// for double-coset intersections, the corner-sum partial order, bidiagonal
// classification, and band-limited enumeration.

#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "qschur/weyl.hpp"

namespace qschur {

namespace detail {

inline long long floordiv(long long a, long long b) {
  // b > 0
  long long q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

inline long long ceildiv(long long a, long long b) {
  return floordiv(a + b - 1, b);
}

// number of integers k with lo <= k <= hi
inline long long count_range(long long lo, long long hi) {
  return hi >= lo ? hi - lo + 1 : 0;
}

}  // namespace detail

enum class Ordering { less, equal, greater, incomparable };

class ThetaMatrix {
 public:
  // key: (row in [1..n], column in Z); value: positive entry
  using EntryMap = std::map<std::pair<int, long long>, long long>;

  // Entries as (i, j, a) triples with arbitrary i (normalized here) and
  // possibly repeated cells (accumulated).  Every resulting cell must be
  // nonnegative; zeros are dropped.
  ThetaMatrix(int n, const std::vector<std::array<long long, 3>>& entries)
      : n_(n) {
    detail::require(n_ >= 1, "ThetaMatrix requires n >= 1");
    for (const auto& [i, j, a] : entries) {
      if (a == 0) continue;
      long long k = detail::floordiv(i - 1, n_);
      auto key = std::make_pair(static_cast<int>(i - k * n_), j - k * n_);
      e_[key] += a;
      if (e_[key] == 0) e_.erase(key);
    }
    for (const auto& [key, a] : e_) {
      detail::ensure(a > 0, "matrix entry became negative");
      d_ += a;
    }
  }

  static ThetaMatrix diagonal(const Composition& lambda) {
    std::vector<std::array<long long, 3>> es;
    for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
      if (lambda[i] != 0) es.push_back({i + 1, i + 1, lambda[i]});
    ThetaMatrix m(static_cast<int>(lambda.size()), es);
    return m;
  }

  int n() const { return n_; }
  long long d() const { return d_; }
  const EntryMap& entries() const { return e_; }
  bool empty() const { return e_.empty(); }

  long long at(long long i, long long j) const {
    long long k = detail::floordiv(i - 1, n_);
    auto it = e_.find({static_cast<int>(i - k * n_), j - k * n_});
    return it == e_.end() ? 0 : it->second;
  }

  Composition ro() const {
    Composition r(n_, 0);
    for (const auto& [key, a] : e_) r[key.first - 1] += static_cast<int>(a);
    return r;
  }

  // Column sums fold every periodic translate into columns [1..n].
  Composition co() const {
    Composition c(n_, 0);
    for (const auto& [key, a] : e_) {
      long long res = ((key.second - 1) % n_ + n_) % n_;  // column class - 1
      c[res] += static_cast<int>(a);
    }
    return c;
  }

  // extreme diagonal offsets j - i over the support (well defined periodically)
  long long max_offset() const {
    detail::require(!e_.empty(), "offset of an empty matrix");
    long long m = e_.begin()->first.second - e_.begin()->first.first;
    for (const auto& [key, a] : e_) {
      (void)a;
      m = std::max(m, key.second - key.first);
    }
    return m;
  }
  long long min_offset() const {
    detail::require(!e_.empty(), "offset of an empty matrix");
    long long m = e_.begin()->first.second - e_.begin()->first.first;
    for (const auto& [key, a] : e_) {
      (void)a;
      m = std::min(m, key.second - key.first);
    }
    return m;
  }

  long long bandwidth() const {
    if (e_.empty()) return 0;
    return std::max(std::abs(max_offset()), std::abs(min_offset()));
  }

  bool is_diagonal() const {
    return e_.empty() || (max_offset() == 0 && min_offset() == 0);
  }
  bool is_upper_bidiagonal() const {
    return e_.empty() || (min_offset() >= 0 && max_offset() <= 1);
  }
  bool is_lower_bidiagonal() const {
    return e_.empty() || (min_offset() >= -1 && max_offset() <= 0);
  }

  // row shifts: (shift_up A)_{ij} = A_{i+1,j}, (shift_down A)_{ij} = A_{i-1,j}
  ThetaMatrix shift_up() const {
    std::vector<std::array<long long, 3>> es;
    for (const auto& [key, a] : e_)
      es.push_back({key.first - 1, key.second, a});
    return ThetaMatrix(n_, es);
  }
  ThetaMatrix shift_down() const {
    std::vector<std::array<long long, 3>> es;
    for (const auto& [key, a] : e_)
      es.push_back({key.first + 1, key.second, a});
    return ThetaMatrix(n_, es);
  }

  // the symmetry (i, j) -> (-i, -j), exchanging upper and lower structure
  ThetaMatrix negate_indices() const {
    std::vector<std::array<long long, 3>> es;
    for (const auto& [key, a] : e_) es.push_back({-key.first, -key.second, a});
    return ThetaMatrix(n_, es);
  }

  // length: number of pairs of entries (counted with multiplicity) in which
  // one lies strictly northeast of the other, per periodic orbit
  long long ell() const {
    long long ne = pair_count(Rel::strict_ne);
    detail::ensure(ne == pair_count(Rel::strict_sw),
                   "length formula asymmetry");
    return ne;
  }

  // the exponent d_A: like ell but with the row comparison weak
  long long d_exponent() const { return pair_count(Rel::weak_ne); }

  // Per column j = 1..n, the entries of the full periodic matrix in that
  // column read top to bottom; the concatenation over j of their values.
  Composition delta_seq() const {
    Composition delta;
    for (int j = 1; j <= n_; ++j) {
      std::vector<std::pair<long long, long long>> col;  // (row, value)
      for (const auto& [key, a] : e_) {
        long long diff = j - key.second;
        if (diff % n_ != 0) continue;
        col.push_back({key.first + diff, a});
      }
      std::sort(col.begin(), col.end());
      for (const auto& [row, a] : col) {
        (void)row;
        delta.push_back(static_cast<int>(a));
      }
    }
    return delta;
  }

  // corner sums: for i < j the mass weakly northeast of (i, j); for i > j
  // the mass weakly southwest
  long long sigma(long long i, long long j) const {
    detail::require(i != j, "sigma is defined off the diagonal");
    long long s = 0;
    for (const auto& [key, a] : e_) {
      long long x0 = key.first, y0 = key.second, lo, hi;
      if (i < j) {  // x <= i, y >= j
        hi = detail::floordiv(i - x0, n_);
        lo = detail::ceildiv(j - y0, n_);
      } else {  // x >= i, y <= j
        lo = detail::ceildiv(i - x0, n_);
        hi = detail::floordiv(j - y0, n_);
      }
      s += a * detail::count_range(lo, hi);
    }
    return s;
  }

  bool operator==(const ThetaMatrix& o) const {
    return n_ == o.n_ && e_ == o.e_;
  }
  bool operator!=(const ThetaMatrix& o) const { return !(*this == o); }
  bool operator<(const ThetaMatrix& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return e_ < o.e_;
  }

 private:
  enum class Rel { strict_ne, strict_sw, weak_ne };

  long long pair_count(Rel rel) const {
    long long total = 0;
    for (const auto& [outer, a] : e_) {
      long long i = outer.first, j = outer.second;
      for (const auto& [inner, b] : e_) {
        long long x0 = inner.first, y0 = inner.second, lo, hi;
        switch (rel) {
          case Rel::strict_ne:  // x < i, y > j
            hi = detail::floordiv(i - 1 - x0, n_);
            lo = detail::ceildiv(j + 1 - y0, n_);
            break;
          case Rel::weak_ne:  // x <= i, y > j
            hi = detail::floordiv(i - x0, n_);
            lo = detail::ceildiv(j + 1 - y0, n_);
            break;
          case Rel::strict_sw:  // x > i, y < j
          default:
            lo = detail::ceildiv(i + 1 - x0, n_);
            hi = detail::floordiv(j - 1 - y0, n_);
            break;
        }
        total += a * b * detail::count_range(lo, hi);
      }
    }
    return total;
  }

  int n_;
  long long d_ = 0;
  EntryMap e_;
};

// The dominance-style partial order: comparable only with equal row and
// column sums; then compare every off-diagonal corner sum.
inline Ordering leq_a_compare(const ThetaMatrix& A, const ThetaMatrix& B) {
  detail::require(A.n() == B.n(), "mismatched periods");
  if (A.ro() != B.ro() || A.co() != B.co()) return Ordering::incomparable;
  long long band = std::max(A.bandwidth(), B.bandwidth());
  bool some_less = false, some_greater = false;
  for (int i = 1; i <= A.n(); ++i)
    for (long long j = i - band; j <= i + band; ++j) {
      if (j == i) continue;
      long long sa = A.sigma(i, j), sb = B.sigma(i, j);
      if (sa < sb) some_less = true;
      if (sa > sb) some_greater = true;
    }
  if (some_less && some_greater) return Ordering::incomparable;
  if (some_less) return Ordering::less;
  if (some_greater) return Ordering::greater;
  detail::ensure(A == B, "equal corner sums but distinct matrices");
  return Ordering::equal;
}

// All n-periodic matrices with entry sum d supported in the band
// |j - i| <= band.
inline std::vector<ThetaMatrix> enumerate_theta(int n, int d, int band) {
  detail::require(n >= 1 && d >= 0 && band >= 0, "bad enumeration bounds");
  std::vector<std::pair<int, long long>> cells;
  for (int i = 1; i <= n; ++i)
    for (long long j = i - band; j <= i + band; ++j) cells.push_back({i, j});
  std::vector<ThetaMatrix> out;
  std::vector<std::array<long long, 3>> acc;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx == cells.size()) {
      if (left == 0) out.push_back(ThetaMatrix(n, acc));
      return;
    }
    if (idx + 1 == cells.size()) {
      if (left > 0) acc.push_back({cells[idx].first, cells[idx].second, left});
      out.push_back(ThetaMatrix(n, acc));
      if (left > 0) acc.pop_back();
      return;
    }
    for (int v = 0; v <= left; ++v) {
      if (v > 0) acc.push_back({cells[idx].first, cells[idx].second, v});
      rec(idx + 1, left - v);
      if (v > 0) acc.pop_back();
    }
  };
  rec(0, d);
  return out;
}

// Everything weakly below A in the partial order (same row/column sums).
inline std::vector<ThetaMatrix> downset(const ThetaMatrix& A) {
  std::vector<ThetaMatrix> out;
  for (const auto& B :
       enumerate_theta(A.n(), static_cast<int>(A.d()),
                       static_cast<int>(A.bandwidth()))) {
    Ordering o = leq_a_compare(B, A);
    if (o == Ordering::less || o == Ordering::equal) out.push_back(B);
  }
  return out;
}

// Admissibility of the bidiagonal pair (B, A): each superdiagonal entry of B
// (indexed by its column c) must fit inside A's entry on its extreme
// diagonal in row c.  Upper B measures against the top diagonal of A, lower
// B against the bottom one; diagonal B is vacuously admissible.
inline bool admissible(const ThetaMatrix& B, const ThetaMatrix& A) {
  detail::require(B.is_upper_bidiagonal() || B.is_lower_bidiagonal(),
                  "admissibility is defined for bidiagonal left factors");
  if (B.is_diagonal() || A.empty()) return true;
  if (B.is_upper_bidiagonal()) {
    long long K = A.max_offset();
    for (int c = 1; c <= B.n(); ++c) {
      long long alpha = B.at(c - 1, c);
      if (alpha > 0 && A.at(c, c + K) < alpha) return false;
    }
    return true;
  }
  long long K = A.min_offset();
  for (int c = 1; c <= B.n(); ++c) {
    long long alpha = B.at(c + 1, c);
    if (alpha > 0 && A.at(c, c + K) < alpha) return false;
  }
  return true;
}

}  // namespace qschur
