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

#ifndef LUXNORM_JSON_UTIL_HPP_
#define LUXNORM_JSON_UTIL_HPP_

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "luxnorm/variant_dictionary.hpp"

namespace luxnorm {

using Json = nlohmann::ordered_json;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Undefined values become null, never 0.
inline Json to_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return to_double(*r);
}

inline Json to_exact_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return to_string(*r);
}

}  // namespace luxnorm

#endif  // LUXNORM_JSON_UTIL_HPP_
