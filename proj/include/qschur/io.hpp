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

// Serialization and rendering.  JSON formats:
//   Laurent      {"<exponent>": coefficient, ...}   (coefficient as integer,
//                 or as a decimal string when it exceeds 64 bits)
//   AffinePerm   {"d": d, "window": [g(1), ..., g(d)]}
//   ThetaMatrix  {"n": n, "d": d, "entries": [[i, j, a], ...]}
//   SchurElement {"n": n, "d": d, "terms": [{"matrix": ..., "coeff": ...}]}
// Parsing is lenient where the data is redundant (rows are normalized, "d"
// may be omitted) and strict where an invariant is at stake; violations
// raise std::invalid_argument naming the invariant.

#include <cctype>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qschur/bases.hpp"
#include "qschur/hecke.hpp"

namespace qschur {

inline nlohmann::json bigint_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

inline BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    detail::require(!s.empty(), "integer string must be nonempty");
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    detail::require(k < s.size(), "integer string must contain digits");
    for (; k < s.size(); ++k)
      detail::require(std::isdigit(static_cast<unsigned char>(s[k])) != 0,
                      "integer string must be decimal");
    return BigInt(s);
  }
  throw std::invalid_argument("coefficient must be an integer or a string");
}

inline nlohmann::json laurent_to_json(const Laurent& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = bigint_to_json(c);
  return j;
}

inline Laurent laurent_from_json(const nlohmann::json& j) {
  detail::require(j.is_object(), "polynomial must be an object");
  Laurent p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(it.key(), &used);
      detail::require(used == it.key().size(), "exponent key must be decimal");
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("exponent key must be decimal");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("exponent key out of range");
    }
    p += Laurent::monomial(bigint_from_json(it.value()), e);
  }
  return p;
}

inline nlohmann::json perm_to_json(const AffinePerm& g) {
  return nlohmann::json{{"d", g.d()}, {"window", g.window()}};
}

inline AffinePerm perm_from_json(const nlohmann::json& j) {
  detail::require(j.is_object() && j.contains("d") && j.contains("window"),
                  "permutation needs fields d and window");
  detail::require(j["d"].is_number_integer() && j["window"].is_array(),
                  "permutation fields have the wrong types");
  std::vector<long long> w;
  for (const auto& x : j["window"]) {
    detail::require(x.is_number_integer(), "window values must be integers");
    w.push_back(x.get<long long>());
  }
  return AffinePerm(j["d"].get<int>(), std::move(w));
}

inline nlohmann::json theta_to_json(const ThetaMatrix& A) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, a] : A.entries())
    entries.push_back({key.first, key.second, a});
  return nlohmann::json{{"n", A.n()}, {"d", A.d()}, {"entries", entries}};
}

inline ThetaMatrix theta_from_json(const nlohmann::json& j) {
  detail::require(j.is_object() && j.contains("n") && j.contains("entries"),
                  "matrix needs fields n and entries");
  detail::require(j["n"].is_number_integer(), "field n must be an integer");
  const int n = j["n"].get<int>();
  detail::require(n >= 1, "matrix period n must be positive");
  detail::require(j["entries"].is_array(), "entries must be an array");
  std::vector<std::array<long long, 3>> es;
  for (const auto& t : j["entries"]) {
    detail::require(t.is_array() && t.size() == 3, "entry must be [i, j, a]");
    for (const auto& x : t)
      detail::require(x.is_number_integer(), "entry fields must be integers");
    long long a = t[2].get<long long>();
    detail::require(a > 0, "matrix entries must be positive");
    es.push_back({t[0].get<long long>(), t[1].get<long long>(), a});
  }
  ThetaMatrix A(n, es);
  if (j.contains("d")) {
    detail::require(j["d"].is_number_integer() && j["d"].get<long long>() == A.d(),
                    "field d must match the entry sum");
  }
  return A;
}

inline nlohmann::json schur_to_json(const SchurElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [A, c] : x.terms())
    terms.push_back({{"matrix", theta_to_json(A)}, {"coeff", laurent_to_json(c)}});
  return nlohmann::json{{"n", x.n()}, {"d", x.d()}, {"terms", terms}};
}

inline SchurElement schur_from_json(const nlohmann::json& j) {
  detail::require(j.is_object() && j.contains("n") && j.contains("d") &&
                      j.contains("terms"),
                  "element needs fields n, d and terms");
  detail::require(j["n"].is_number_integer() && j["d"].is_number_integer(),
                  "fields n and d must be integers");
  SchurElement x(j["n"].get<int>(), j["d"].get<long long>());
  detail::require(j["terms"].is_array(), "terms must be an array");
  for (const auto& t : j["terms"]) {
    detail::require(t.is_object() && t.contains("matrix") && t.contains("coeff"),
                    "term needs fields matrix and coeff");
    ThetaMatrix A = theta_from_json(t["matrix"]);
    detail::require(A.n() == x.n() && A.d() == x.d(),
                    "term matrix indexed outside the element's algebra");
    x.add_term(A, laurent_from_json(t["coeff"]));
  }
  return x;
}

// The fundamental window of the periodic matrix: rows 1-n .. 2n, columns
// spanning the support in those rows, zeros as '.'.
inline std::string pretty_matrix(const ThetaMatrix& A) {
  const int n = A.n();
  if (A.empty()) return "(empty matrix)\n";
  long long cmin = 0, cmax = 0;
  bool seen = false;
  for (const auto& [key, a] : A.entries()) {
    (void)a;
    for (long long k = -2; k <= 1; ++k) {
      long long row = key.first + k * n;
      if (row < 1 - n || row > 2 * n) continue;
      long long col = key.second + k * n;
      if (!seen) {
        cmin = cmax = col;
        seen = true;
      }
      cmin = std::min(cmin, col);
      cmax = std::max(cmax, col);
    }
  }
  std::size_t width = 1;
  for (long long r = 1 - n; r <= 2 * n; ++r)
    for (long long c = cmin; c <= cmax; ++c)
      width = std::max(width, std::to_string(A.at(r, c)).size());
  std::size_t label = std::max(std::to_string(1 - n).size(),
                               std::to_string(2 * n).size());
  std::ostringstream os;
  for (long long r = 1 - n; r <= 2 * n; ++r) {
    os << std::setw(static_cast<int>(label)) << r << " |";
    for (long long c = cmin; c <= cmax; ++c) {
      long long a = A.at(r, c);
      os << ' ' << std::setw(static_cast<int>(width))
         << (a == 0 ? "." : std::to_string(a));
    }
    os << '\n';
  }
  return os.str();
}

inline std::string schur_to_text(const SchurElement& x) {
  if (x.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [A, c] : x.terms()) {
    os << "coefficient: " << c.to_text() << "\n" << pretty_matrix(A);
  }
  return os.str();
}

// diagnostic rendering of Hecke elements: one `c(v)*T[window;z]` term per line
inline std::string hecke_to_text(const HeckeElement& h) {
  if (h.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [g, c] : h.terms()) {
    os << "(" << c.to_text() << ")*T[";
    for (int i = 0; i < g.d(); ++i) {
      if (i) os << ",";
      os << g.window()[i];
    }
    os << ";" << g.pi_part() << "]\n";
  }
  return os.str();
}

inline std::string ordering_name(Ordering o) {
  switch (o) {
    case Ordering::less:
      return "LT";
    case Ordering::equal:
      return "EQ";
    case Ordering::greater:
      return "GT";
    default:
      return "INCOMPARABLE";
  }
}

}  // namespace qschur
