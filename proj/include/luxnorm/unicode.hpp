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

// Thin UTF-8 helpers over ICU. All strings in luxnorm are UTF-8.

#ifndef LUXNORM_UNICODE_HPP_
#define LUXNORM_UNICODE_HPP_

#include <string>
#include <string_view>

namespace luxnorm::unicode {

std::u32string to_utf32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);

// Number of Unicode scalar values.
std::size_t length(std::string_view utf8);

std::string nfc(std::string_view utf8);
std::string to_lower(std::string_view utf8);
std::string to_upper(std::string_view utf8);

bool is_whitespace(char32_t c);
// True if any code point is alphabetic.
bool has_letter(std::string_view utf8);

enum class Casing {
  kLower,   // no uppercase letters
  kUpper,   // two or more cased letters, all uppercase
  kTitle,   // first cased letter uppercase, the rest lowercase
  kMixed,   // anything else, e.g. "McDonald"
};

Casing detect_casing(std::string_view utf8);

// Rewrites `text` to follow `pattern`. kMixed leaves it untouched.
std::string apply_casing(std::string_view text, Casing pattern);

}  // namespace luxnorm::unicode

#endif  // LUXNORM_UNICODE_HPP_
