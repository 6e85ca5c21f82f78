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

// Black-box checks of the installed command line tool: exit codes, the
// machine-readable final line, and the documented error classes.  Driven
// through popen so the binary is exercised exactly as a user would run it.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    std::exit(2);
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, out};
}

std::string last_line(const std::string& out) {
  size_t end = out.size();
  while (end > 0 && out[end - 1] == '\n') --end;
  const size_t begin = out.rfind('\n', end == 0 ? 0 : end - 1);
  return out.substr(begin == std::string::npos ? 0 : begin + 1,
                    end - (begin == std::string::npos ? 0 : begin + 1));
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAILED: " << what << "\n";
    ++g_failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_smoke <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  {
    const RunResult r = run(
        "mult --left '{\"n\":1,\"entries\":[[1,2,1]]}' "
        "--right '{\"n\":1,\"entries\":[[1,0,1]]}'");
    expect(r.exit_code == 0, "mult exits 0 on a valid product");
    nlohmann::json j;
    bool parsed = true;
    try {
      j = nlohmann::json::parse(last_line(r.out));
    } catch (...) {
      parsed = false;
    }
    expect(parsed, "mult final line is machine-readable");
    expect(parsed && j["terms"].size() == 1 &&
               j["terms"][0]["matrix"]["entries"] ==
                   nlohmann::json::array({nlohmann::json::array({1, 1, 1})}),
           "mult result is the identity basis element");
  }

  {
    const RunResult r = run(
        "factor --matrix '{\"n\":2,\"entries\":[[1,2,4],[2,0,6],[2,1,5],"
        "[2,3,1],[2,4,2],[2,5,3]]}'");
    expect(r.exit_code == 0, "factor exits 0");
    nlohmann::json j;
    bool parsed = true;
    try {
      j = nlohmann::json::parse(last_line(r.out));
    } catch (...) {
      parsed = false;
    }
    expect(parsed && j["factors"].size() == 5,
           "factor emits the five-factor chain");
  }

  {
    const RunResult r = run(
        "order --left '{\"n\":2,\"entries\":[[1,1,1],[2,2,1]]}' "
        "--right '{\"n\":2,\"entries\":[[1,2,1],[2,1,1]]}'");
    expect(r.exit_code == 0, "order exits 0");
    nlohmann::json j;
    bool parsed = true;
    try {
      j = nlohmann::json::parse(last_line(r.out));
    } catch (...) {
      parsed = false;
    }
    expect(parsed && j["order"] == "LT",
           "diagonal sits below the antidiagonal");
  }

  {
    const RunResult r = run(
        "order --left '{\"n\":2,\"entries\":[[1,1,0]]}' "
        "--right '{\"n\":2,\"entries\":[[1,1,1]]}'");
    expect(r.exit_code == 2, "a zero entry is rejected as invalid input");
  }

  {
    const RunResult r = run("frobnicate");
    expect(r.exit_code == 1, "an unknown subcommand is a usage error");
  }

  {
    const RunResult r = run("verify --n 2 --d 2 --suite nonsense");
    expect(r.exit_code == 1, "an unknown suite name is a usage error");
  }

  {
    const RunResult r = run("verify --n 2 --d 2 --suite unitriangular");
    expect(r.exit_code == 0, "the unitriangular suite passes at (2,2)");
  }

  {
    const RunResult r = run("verify --n 2 --d 5 --suite oracle");
    expect(r.exit_code == 1,
           "the operator-model suites refuse oversized instances");
  }

  {
    // Round trip: the machine-readable output of canonical re-parses and
    // reproduces itself when fed back through the basis command.
    const RunResult first = run(
        "canonical --matrix '{\"n\":2,\"entries\":[[1,2,1],[2,1,1]]}'");
    expect(first.exit_code == 0, "canonical exits 0");
    nlohmann::json j;
    bool parsed = true;
    try {
      j = nlohmann::json::parse(last_line(first.out));
    } catch (...) {
      parsed = false;
    }
    expect(parsed && j.contains("terms") && j["terms"].size() == 2,
           "canonical expansion has the pinned two terms");
    if (parsed) {
      // Use the leading term's matrix back as input.
      std::string matrix;
      const nlohmann::json super = nlohmann::json::array({1, 2, 1});
      for (const auto& term : j["terms"]) {
        for (const auto& entry : term["matrix"]["entries"]) {
          if (entry == super) matrix = term["matrix"].dump();
        }
      }
      expect(!matrix.empty(), "canonical expansion names its leading term");
      const RunResult again = run("canonical --matrix '" + matrix + "'");
      expect(again.exit_code == 0 &&
                 last_line(again.out) == last_line(first.out),
             "canonical output re-parses to the same element");
    }
  }

  if (g_failures) {
    std::cout << g_failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}
