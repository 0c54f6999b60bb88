// Copyright 2026 The lscg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: lscg_acceptance [suite ...] (default: all)

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "lscg/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> suites(argv + 1, argv + argc);
  if (suites.empty()) suites.emplace_back("all");
  bool ok = true;
  try {
    for (const auto& suite : suites) {
      for (const auto& r : lscg::harness::run_suite(suite, lscg::harness::kDefaultSeed)) {
        std::printf("[%s] %d. %s: %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        ok = ok && r.passed;
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return ok ? 0 : 1;
}
