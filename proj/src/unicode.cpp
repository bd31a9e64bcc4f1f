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

#include "luxnorm/unicode.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace luxnorm::unicode {
namespace {

icu::UnicodeString from_utf8(std::string_view utf8) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
}

std::string as_utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

}  // namespace

std::u32string to_utf32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto size = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < size) {
    UChar32 c;
    U8_NEXT(bytes, i, size, c);
    out.push_back(c < 0 ? U'�' : static_cast<char32_t>(c));
  }
  return out;
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) {
      n = 0;
      U8_APPEND_UNSAFE(buf, n, 0xFFFD);
    }
    out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
  }
  return out;
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0;
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto size = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < size) {
    U8_FWD_1(bytes, i, size);
    ++n;
  }
  return n;
}

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  icu::UnicodeString src = from_utf8(utf8);
  if (normalizer->isNormalized(src, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString out = normalizer->normalize(src, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("NFC normalization failed");
  }
  return as_utf8(out);
}

std::string to_lower(std::string_view utf8) {
  icu::UnicodeString s = from_utf8(utf8);
  s.toLower(icu::Locale::getRoot());
  return as_utf8(s);
}

std::string to_upper(std::string_view utf8) {
  icu::UnicodeString s = from_utf8(utf8);
  s.toUpper(icu::Locale::getRoot());
  return as_utf8(s);
}

bool is_whitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool has_letter(std::string_view utf8) {
  for (char32_t c : to_utf32(utf8)) {
    if (u_isalpha(static_cast<UChar32>(c))) return true;
  }
  return false;
}

Casing detect_casing(std::string_view utf8) {
  int upper = 0;
  int lower = 0;
  bool first_cased_seen = false;
  bool first_is_upper = false;
  for (char32_t c : to_utf32(utf8)) {
    const auto cp = static_cast<UChar32>(c);
    if (u_isUUppercase(cp)) {
      ++upper;
      if (!first_cased_seen) first_is_upper = true;
      first_cased_seen = true;
    } else if (u_isULowercase(cp)) {
      ++lower;
      first_cased_seen = true;
    }
  }
  if (upper == 0) return Casing::kLower;
  if (lower == 0 && upper >= 2) return Casing::kUpper;
  if (first_is_upper && upper == 1) return Casing::kTitle;
  return Casing::kMixed;
}

std::string apply_casing(std::string_view text, Casing pattern) {
  switch (pattern) {
    case Casing::kLower:
      return to_lower(text);
    case Casing::kUpper:
      return to_upper(text);
    case Casing::kTitle: {
      std::u32string cps = to_utf32(to_lower(text));
      for (char32_t& c : cps) {
        const auto cp = static_cast<UChar32>(c);
        if (u_isULowercase(cp) || u_isUUppercase(cp)) {
          c = static_cast<char32_t>(u_toupper(cp));
          break;
        }
      }
      return to_utf8(cps);
    }
    case Casing::kMixed:
      break;
  }
  return std::string(text);
}

}  // namespace luxnorm::unicode
