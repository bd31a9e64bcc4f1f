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

// Adapter for normalizers that live outside this process (fine-tuned seq2seq
// models, LLM prompting scripts, ...).
//
// Line protocol: the command is run through /bin/sh -c. It receives every
// sentence on stdin, UTF-8, one per line, LF-terminated, then EOF. It must
// write exactly one output line per input line to stdout, in order, and exit
// with status 0. Anything on stderr is captured for diagnostics.

#ifndef LUXNORM_EXTERNAL_NORMALIZER_HPP_
#define LUXNORM_EXTERNAL_NORMALIZER_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "luxnorm/normalizer.hpp"

namespace luxnorm {

// Throws ProtocolError if the child cannot be started, exits non-zero or
// returns a different number of lines; std::invalid_argument if a sentence
// contains a line break.
std::vector<std::string> run_external_normalizer(const std::string& command,
                                                 std::span<const std::string> sentences);

// Precomputed predictions, one line per input sentence. Throws ProtocolError
// when the line count differs from `expected_count`.
std::vector<std::string> read_predictions(const std::filesystem::path& path,
                                          std::size_t expected_count);

class ExternalNormalizer : public SentenceNormalizer {
 public:
  explicit ExternalNormalizer(std::string command) : command_(std::move(command)) {}
  std::string name() const override { return "cmd:" + command_; }
  std::string normalize(const std::string& sentence) const override;
  // One child process for the whole batch.
  std::vector<std::string> normalize_batch(std::span<const std::string> sentences,
                                           std::size_t workers = 1) const override;

 private:
  std::string command_;
};

}  // namespace luxnorm

#endif  // LUXNORM_EXTERNAL_NORMALIZER_HPP_
