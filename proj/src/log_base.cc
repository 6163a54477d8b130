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

#include "coreset/log_base.h"

#include <atomic>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace coreset {
namespace {

std::atomic<LogBase> g_log_base{LogBase::kNatural};

}  // namespace

void SetLogBase(LogBase base) { g_log_base.store(base); }

LogBase GetLogBase() { return g_log_base.load(); }

double Log(double x) {
  return GetLogBase() == LogBase::kNatural ? std::log(x) : std::log2(x);
}

absl::StatusOr<LogBase> ParseLogBase(absl::string_view name) {
  if (name == "e" || name == "ln" || name == "natural") {
    return LogBase::kNatural;
  }
  if (name == "2" || name == "log2" || name == "binary") {
    return LogBase::kBinary;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown log base '", name, "' (expected ln or log2)"));
}

absl::string_view LogBaseName(LogBase base) {
  return base == LogBase::kNatural ? "ln" : "log2";
}

}  // namespace coreset
