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

#ifndef CORESET_LOG_BASE_H_
#define CORESET_LOG_BASE_H_

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace coreset {

// Base of every "log n" that appears in sampling rates, importance scores
// and condition checks. Natural log unless changed.
enum class LogBase { kNatural, kBinary };

void SetLogBase(LogBase base);
LogBase GetLogBase();

// Logarithm in the configured base.
double Log(double x);

absl::StatusOr<LogBase> ParseLogBase(absl::string_view name);
absl::string_view LogBaseName(LogBase base);

// Restores the previous base on destruction.
class ScopedLogBase {
 public:
  explicit ScopedLogBase(LogBase base) : previous_(GetLogBase()) {
    SetLogBase(base);
  }
  ~ScopedLogBase() { SetLogBase(previous_); }
  ScopedLogBase(const ScopedLogBase&) = delete;
  ScopedLogBase& operator=(const ScopedLogBase&) = delete;

 private:
  LogBase previous_;
};

}  // namespace coreset

#endif  // CORESET_LOG_BASE_H_
