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

#ifndef WEYLGPD_CLI_HPP
#define WEYLGPD_CLI_HPP

#include <string>
#include <vector>

#include "weylgpd/json_io.hpp"

namespace wgd::cli {

// Exit codes: 0 success, 1 malformed input, 2 domain error (including
// NotDefinedAt and unsupported type/space), 3 budget exceeded.
struct DispatchResult {
  int exit_code = 0;
  Json output;
};

/// Runs one subcommand ("describe", "check", ...) with its flags.
DispatchResult dispatch(const std::vector<std::string>& args);

}  // namespace wgd::cli

#endif  // WEYLGPD_CLI_HPP
