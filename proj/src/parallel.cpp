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

#include "luxnorm/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace luxnorm {

std::size_t worker_count(std::optional<std::size_t> requested) {
  std::size_t n = requested.value_or(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("LUXNORM_THREADS"); env != nullptr) {
    const std::string_view s(env);
    std::size_t cap = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec == std::errc() && end == s.data() + s.size() && cap > 0) n = std::min(n, cap);
  }
  return std::max<std::size_t>(1, n);
}

}  // namespace luxnorm
