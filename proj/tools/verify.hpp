// Copyright 2026 The mss Authors
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
//
// The one-shot verification suite behind `mss verify`.

#ifndef MSS_TOOLS_VERIFY_HPP_
#define MSS_TOOLS_VERIFY_HPP_

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mss::cli {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool overall() const;
};

struct VerifyOptions {
  bool modular_magic = false;
  bool semi_magic = false;
  bool general = false;  // group-free checks: action axioms, G9 certificate
  unsigned threads = 1;
  std::size_t samples = 1000;          // label-invariance samples per variant
  std::size_t oracle_samples = 10000;  // constructive vs. orbit-scan boards
  std::uint64_t seed = 20260415;
  // Called after each check completes.
  std::function<void(const Check&)> on_check;
};

VerifyReport verify(const VerifyOptions& options);

// {checks: [{name, expected, actual, pass, seconds}], overall}
nlohmann::json to_json(const VerifyReport& report);

}  // namespace mss::cli

#endif  // MSS_TOOLS_VERIFY_HPP_
