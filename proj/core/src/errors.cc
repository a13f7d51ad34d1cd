// Copyright 2026 The gleeful Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gleeful/errors.h"

namespace gleeful {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDomain:
      return 2;
    case ErrorKind::kCoverage:
    case ErrorKind::kOverflow:
      return 3;
    case ErrorKind::kIo:
      return 4;
  }
  return 1;
}

char const* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDomain:
      return "domain error";
    case ErrorKind::kCoverage:
      return "coverage error";
    case ErrorKind::kOverflow:
      return "overflow error";
    case ErrorKind::kIo:
      return "I/O error";
  }
  return "error";
}

}  // namespace gleeful
