// Copyright 2026 The Coreset Authors
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

#ifndef CORESET_VERIFY_H_
#define CORESET_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace coreset {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 1;
  // Directory holding manifest.txt and the graphs it names; empty skips the
  // fixture check.
  std::string fixtures_dir;
  // Multiplies the number of random instances per suite.
  int scale = 1;
};

// Runs every invariant suite. Each suite reports one result.
std::vector<CheckResult> RunVerify(const VerifyOptions& options);

// The fixture suite alone. Manifest lines are
//   <file> maxcut <value>
//   <file> cc <k> <value>
// with '#' comments; values are checked against the exact solvers.
absl::StatusOr<CheckResult> VerifyFixtures(const std::string& dir);

}  // namespace coreset

#endif  // CORESET_VERIFY_H_
