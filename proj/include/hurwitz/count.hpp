// Copyright 2026 The Hurwitz Orbits Authors
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

#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace hurwitz {

// Exact cardinality of orbits and fibers. |Γ|^d overflows 64 bits long
// before the class tower stops being cheap, so counts are 128-bit and
// saturate at the maximum instead of wrapping.
using Count = unsigned __int128;

inline constexpr Count kCountMax = std::numeric_limits<Count>::max();

inline Count saturating_add(Count a, Count b) {
  return a > kCountMax - b ? kCountMax : a + b;
}

inline Count saturating_mul(Count a, Count b) {
  if (a == 0 || b == 0) return 0;
  return a > kCountMax / b ? kCountMax : a * b;
}

inline std::string to_string(Count c) {
  if (c == 0) return "0";
  std::string out;
  while (c > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(c % 10)));
    c /= 10;
  }
  return out;
}

inline bool fits_u64(Count c) {
  return c <= std::numeric_limits<std::uint64_t>::max();
}

}  // namespace hurwitz
