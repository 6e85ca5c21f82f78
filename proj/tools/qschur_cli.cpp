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

// qschur: products, factorizations, monomial/bar/canonical basis elements,
// order comparisons, transition tables, and verification suites for the
// affine q-Schur algebra S(n, d).
//
// Matrix arguments are file paths, or inline JSON when they start with '{'.
// Human-readable output comes first; the last line on stdout is always a
// machine-readable JSON record.  Exit codes: 0 success, 1 usage error,
// 2 invalid input (the violated invariant is named), 3 verification failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qschur/verify.hpp"

namespace {

using namespace qschur;

ThetaMatrix load_matrix(const std::string& arg) {
  nlohmann::json j;
  if (!arg.empty() && arg[0] == '{') {
    j = nlohmann::json::parse(arg);
  } else {
    std::ifstream f(arg);
    if (!f) throw std::invalid_argument("cannot open input file: " + arg);
    f >> j;
  }
  return theta_from_json(j);
}

void check_same_algebra(const ThetaMatrix& a, const ThetaMatrix& b) {
  detail::require(a.n() == b.n(), "all matrices in one invocation share n");
  detail::require(a.d() == b.d(), "all matrices in one invocation share d");
}

void print_element(const SchurElement& x) {
  if (x.is_zero()) {
    std::cout << "zero element\n";
  } else {
    std::cout << x.terms().size() << " term(s):\n" << schur_to_text(x);
  }
  std::cout << schur_to_json(x).dump() << "\n";
}

int cmd_mult(const std::string& left, const std::string& right) {
  ThetaMatrix a = load_matrix(left), b = load_matrix(right);
  check_same_algebra(a, b);
  BasisContext ctx(a.n(), a.d());
  print_element(ctx.product_basis(a, b));
  return 0;
}

int cmd_factor(const std::string& matrix, bool show_chain) {
  ThetaMatrix a = load_matrix(matrix);
  BidiagonalChain chain = factor_bidiagonal(a);
  std::cout << chain.factors.size() << " factor(s), left to right:\n";
  for (std::size_t i = 0; i < chain.factors.size(); ++i)
    std::cout << "factor " << i + 1 << ":\n"
              << pretty_matrix(chain.factors[i]);
  if (show_chain) {
    for (std::size_t i = 0; i < chain.upper_intermediates.size(); ++i)
      std::cout << "after upper pass " << i + 1 << ":\n"
                << pretty_matrix(chain.upper_intermediates[i]);
    for (std::size_t i = 0; i < chain.lower_intermediates.size(); ++i)
      std::cout << "after lower pass " << i + 1 << ":\n"
                << pretty_matrix(chain.lower_intermediates[i]);
  }
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : chain.factors) factors.push_back(theta_to_json(f));
  nlohmann::json upper = nlohmann::json::array();
  for (const auto& u : chain.upper_intermediates)
    upper.push_back(theta_to_json(u));
  nlohmann::json lower = nlohmann::json::array();
  for (const auto& l : chain.lower_intermediates)
    lower.push_back(theta_to_json(l));
  std::cout << nlohmann::json{{"factors", factors},
                              {"upper_intermediates", upper},
                              {"lower_intermediates", lower}}
                   .dump()
            << "\n";
  return 0;
}

int cmd_basis(const std::string& which, const std::string& matrix) {
  ThetaMatrix a = load_matrix(matrix);
  BasisContext ctx(a.n(), a.d());
  if (which == "monomial")
    print_element(ctx.monomial(a));
  else if (which == "bar")
    print_element(ctx.bar_standard(a));
  else
    print_element(ctx.canonical(a));
  return 0;
}

int cmd_order(const std::string& left, const std::string& right) {
  ThetaMatrix a = load_matrix(left), b = load_matrix(right);
  check_same_algebra(a, b);
  std::string name = ordering_name(leq_a_compare(a, b));
  std::cout << name << "\n";
  std::cout << nlohmann::json{{"order", name}}.dump() << "\n";
  return 0;
}

int cmd_tables(int n, int d, int band) {
  detail::require(n >= 1 && d >= 1 && band >= 0, "table bounds must be positive");
  BasisContext ctx(n, d);
  std::vector<ThetaMatrix> all = enumerate_theta(n, d, band);
  nlohmann::json jm = nlohmann::json::array(), jc = nlohmann::json::array();
  auto emit = [&](const char* title, nlohmann::json& sink, bool canonical) {
    std::cout << "# " << title << "\n";
    for (const auto& A : all) {
      const SchurElement& x = canonical ? ctx.canonical(A) : ctx.monomial(A);
      std::string lhs = theta_to_json(A)["entries"].dump();
      for (const auto& [B, c] : x.terms())
        std::cout << lhs << " ; " << theta_to_json(B)["entries"].dump()
                  << " ; " << c.to_text() << "\n";
      sink.push_back(nlohmann::json{{"index", theta_to_json(A)},
                                    {"expansion", schur_to_json(x)}});
    }
  };
  emit("monomial basis in the standard basis", jm, false);
  emit("canonical basis in the standard basis", jc, true);
  std::cout << nlohmann::json{{"n", n},
                              {"d", d},
                              {"band", band},
                              {"monomial", jm},
                              {"canonical", jc}}
                   .dump()
            << "\n";
  return 0;
}

int cmd_verify(int n, int d, int band, const std::string& suite,
               std::uint64_t seed) {
  detail::require(n >= 1 && d >= 1 && band >= 0,
                  "verification bounds must be positive");
  const bool needs_oracle =
      suite == "all" || suite == "oracle" || suite == "bar";
  if (needs_oracle && d > 4) {
    std::cerr << "verify: the Hecke oracle suites are capped at d <= 4 "
                 "(double cosets grow too fast beyond that); "
                 "requested d = " << d << ".\n";
    return 1;
  }
  std::vector<SuiteReport> reports = run_suites(suite, n, d, band, seed);
  detail::require(!reports.empty(),
                  "suite must be one of oracle|unitriangular|bar|canonical|all");
  bool bad = false;
  nlohmann::json js = nlohmann::json::array();
  for (const auto& r : reports) {
    std::cout << "suite " << r.name << ": " << r.cases << " cases, "
              << r.failures << " failures";
    if (!r.notes.empty()) std::cout << " (" << r.notes << ")";
    std::cout << "\n";
    if (!r.ok()) {
      bad = true;
      std::cout << "  first counterexample: " << r.first_counterexample
                << "\n";
    }
    js.push_back(nlohmann::json{{"name", r.name},
                                {"cases", r.cases},
                                {"failures", r.failures},
                                {"counterexample", r.first_counterexample},
                                {"notes", r.notes}});
  }
  std::cout << nlohmann::json{{"suites", js}}.dump() << "\n";
  return bad ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the affine q-Schur algebra S(n, d)"};
  app.require_subcommand(1);

  std::string left, right, matrix, suite = "all";
  bool show_chain = false;
  int n = 2, d = 2, band = 3;
  std::uint64_t seed = 0;

  CLI::App* mult = app.add_subcommand("mult", "product of two standard basis elements");
  mult->add_option("--left", left, "left factor (file or inline JSON)")->required();
  mult->add_option("--right", right, "right factor (file or inline JSON)")->required();

  CLI::App* factor = app.add_subcommand("factor", "bidiagonal factorization");
  factor->add_option("--matrix", matrix, "matrix (file or inline JSON)")->required();
  factor->add_flag("--show-chain", show_chain, "also print the intermediate matrices");

  CLI::App* monomial = app.add_subcommand("monomial", "monomial basis element m_A");
  monomial->add_option("--matrix", matrix, "matrix (file or inline JSON)")->required();

  CLI::App* bar = app.add_subcommand("bar", "bar involution of a standard basis element");
  bar->add_option("--matrix", matrix, "matrix (file or inline JSON)")->required();

  CLI::App* canonical = app.add_subcommand("canonical", "canonical basis element {A}");
  canonical->add_option("--matrix", matrix, "matrix (file or inline JSON)")->required();

  CLI::App* order = app.add_subcommand("order", "compare two matrices in the partial order");
  order->add_option("--left", left, "left matrix (file or inline JSON)")->required();
  order->add_option("--right", right, "right matrix (file or inline JSON)")->required();

  CLI::App* tables = app.add_subcommand("tables", "transition tables at a given scale");
  tables->add_option("--n", n, "period")->required();
  tables->add_option("--d", d, "entry sum")->required();
  tables->add_option("--band", band, "bandwidth cap")->required();

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--n", n, "period")->required();
  verify->add_option("--d", d, "entry sum")->required();
  verify->add_option("--band", band, "bandwidth cap (default 3)");
  verify->add_option("--suite", suite, "oracle|unitriangular|bar|canonical|all")
      ->check(CLI::IsMember({"oracle", "unitriangular", "bar", "canonical", "all"}));
  verify->add_option("--seed", seed, "random seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (mult->parsed()) return cmd_mult(left, right);
    if (factor->parsed()) return cmd_factor(matrix, show_chain);
    if (monomial->parsed()) return cmd_basis("monomial", matrix);
    if (bar->parsed()) return cmd_basis("bar", matrix);
    if (canonical->parsed()) return cmd_basis("canonical", matrix);
    if (order->parsed()) return cmd_order(left, right);
    if (tables->parsed()) return cmd_tables(n, d, band);
    if (verify->parsed()) return cmd_verify(n, d, band, suite, seed);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
