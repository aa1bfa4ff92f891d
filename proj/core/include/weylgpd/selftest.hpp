// Copyright 2026 The weylgpd authors
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

#ifndef WEYLGPD_SELFTEST_HPP
#define WEYLGPD_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wgd {

/// One acceptance criterion outcome. All checks are exact (tolerance zero);
/// `detail` summarizes the counts that went into the verdict.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the whole acceptance suite with a fixed seed (determinism contract).
std::vector<CriterionResult> run_acceptance_suite(uint64_t seed = 20260809);

/// Runs a single criterion (1-based id).
CriterionResult run_acceptance_criterion(int id, uint64_t seed = 20260809);

}  // namespace wgd

#endif  // WEYLGPD_SELFTEST_HPP
