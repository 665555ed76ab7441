// Copyright 2026 The sublabel Authors.
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

#ifndef SUBLABEL_TOOLS_CLI_HPP_
#define SUBLABEL_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sublabel::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // exhaustive zero, or every verdict None
inline constexpr int kUsage = 2;     // usage, validation or refusal

struct Environment {
  /// Value of SUBLABEL_SEARCH_CAP, if set.
  std::optional<std::string> search_cap;

  static Environment from_process();
};

/// Runs `sublabel <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Environment& env = {});

}  // namespace sublabel::cli

#endif  // SUBLABEL_TOOLS_CLI_HPP_
