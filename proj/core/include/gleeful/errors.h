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

#ifndef GLEEFUL_ERRORS_H_
#define GLEEFUL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gleeful {

enum class ErrorKind { kDomain, kCoverage, kOverflow, kIo };

// Base of every error thrown by the library. The kind selects the CLI
// exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Invalid argument or violated precondition.
class DomainError : public Error {
 public:
  explicit DomainError(std::string const& what)
      : Error(ErrorKind::kDomain, what) {}
};

// A prime table or prefix array does not reach far enough.
class CoverageError : public Error {
 public:
  explicit CoverageError(std::string const& what)
      : Error(ErrorKind::kCoverage, what) {}
};

// A value does not fit in 128 bits.
class OverflowError : public Error {
 public:
  explicit OverflowError(std::string const& what)
      : Error(ErrorKind::kOverflow, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(std::string const& what) : Error(ErrorKind::kIo, what) {}
};

// 0 success, 2 domain, 3 coverage/overflow, 4 I/O.
int exit_code_for(ErrorKind kind) noexcept;

char const* to_string(ErrorKind kind) noexcept;

}  // namespace gleeful

#endif  // GLEEFUL_ERRORS_H_
