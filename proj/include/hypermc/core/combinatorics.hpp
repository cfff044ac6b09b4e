// Copyright 2026 The hypermc Authors.
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
#include <numeric>

#include "hypermc/error.hpp"

namespace hypermc {

// C(n, k) exactly; throws ValidationError on int64 overflow.
inline std::int64_t choose(std::int64_t n, int k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = static_cast<int>(n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t num = n - k + i;
    // r * num / i is exact at every step; divide first where possible.
    const std::int64_t g = std::gcd(r, static_cast<std::int64_t>(i));
    const std::int64_t rr = r / g;
    const std::int64_t ii = i / g;
    const std::int64_t nn = num / ii;  // ii | num since C(..) is integral
    if (nn != 0 && rr > std::numeric_limits<std::int64_t>::max() / nn) {
      fail_validation("binomial coefficient overflows 64 bits");
    }
    r = rr * nn;
  }
  return r;
}

// x (x-1) ... (x-k+1) / k! for real x. Equals C(x, k) at integer x.
inline double choose_real(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - i) / (i + 1);
  return r;
}

}  // namespace hypermc
