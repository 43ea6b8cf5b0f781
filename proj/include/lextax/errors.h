// Copyright 2026 The Lextax Authors.
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

#ifndef LEXTAX_ERRORS_H_
#define LEXTAX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lextax {

// Error categories. The numeric values double as process exit codes.
enum class ErrorKind {
  kUsage = 1,      // bad flags, bad config
  kData = 2,       // malformed or inconsistent input data
  kInvariant = 3,  // internal invariant violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string &message)
      : Error(ErrorKind::kUsage, message) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string &message)
      : Error(ErrorKind::kData, message) {}

  // Error tied to a line of an input stream.
  DataError(int line, const std::string &message)
      : Error(ErrorKind::kData,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  // Line number the error refers to, or 0.
  int line() const { return line_; }

 private:
  int line_ = 0;
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string &message)
      : Error(ErrorKind::kInvariant, message) {}
};

}  // namespace lextax

#endif  // LEXTAX_ERRORS_H_
