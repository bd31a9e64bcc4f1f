// Copyright 2026 The luxnorm Authors.
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

#ifndef LUXNORM_ERRORS_HPP_
#define LUXNORM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace luxnorm {

// Process exit codes. These are part of the CLI contract and must stay stable.
enum class ExitCode : int {
  kOk = 0,
  kUsage = 2,       // bad flags, missing or unknown config keys
  kInput = 3,       // malformed input file (parse or validation failure)
  kIo = 4,          // unreadable / unwritable file
  kExternal = 5,    // external normalizer failed or broke the line protocol
  kInternal = 6,    // anything else
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const { return ExitCode::kInternal; }
};

// Malformed input. `line` is 1-based; 0 means "not line specific".
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(format(source, line, what)), source_(source), line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  ExitCode exit_code() const override { return ExitCode::kInput; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& what) {
    if (line == 0) return source + ": " + what;
    return source + ":" + std::to_string(line) + ": " + what;
  }

  std::string source_;
  std::size_t line_;
};

// Well-formed input that violates a semantic rule (mismatched line counts,
// invalid test units, ...).
class InputError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInput; }
};

class LookupError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kInput; }
};

class IoError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kIo; }
};

// The external normalizer exited abnormally or returned the wrong number of
// lines.
class ProtocolError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kExternal; }
};

class ConfigError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const override { return ExitCode::kUsage; }
};

}  // namespace luxnorm

#endif  // LUXNORM_ERRORS_HPP_
