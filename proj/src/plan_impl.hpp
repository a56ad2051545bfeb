// Copyright 2026 The trotterz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROTTERZ_SRC_PLAN_IMPL_HPP
#define TROTTERZ_SRC_PLAN_IMPL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "trotterz/errors.hpp"

namespace trotterz::detail {


inline void require_order(int order) {
  if (order != 1 && (order < 2 || order % 2 != 0)) {
    throw InvalidArgument("product formula order must be 1 or an even number >= 2, got " + std::to_string(order));
  }
}

// u_of_l(l) returns (4 - 4^{1/(2l-1)})^{-1} in the scalar type R.
template <typename R, typename UFn>
void unroll_plan(std::size_t gamma, int order, R scale, std::vector<std::pair<std::size_t, R>>& out,
                 const UFn& u_of_l) {
  if (order == 1) {
    for (std::size_t g = 0; g < gamma; ++g) out.emplace_back(g, scale);
    return;
  }
  if (order == 2) {
    R half = scale / R(2);
    for (std::size_t g = 0; g < gamma; ++g) out.emplace_back(g, half);
    for (std::size_t g = gamma; g-- > 0;) out.emplace_back(g, half);
    return;
  }
  R u = u_of_l(order / 2);
  R outer = u * scale;
  R middle = (R(1) - R(4) * u) * scale;
  unroll_plan<R>(gamma, order - 2, outer, out, u_of_l);
  unroll_plan<R>(gamma, order - 2, outer, out, u_of_l);
  unroll_plan<R>(gamma, order - 2, middle, out, u_of_l);
  unroll_plan<R>(gamma, order - 2, outer, out, u_of_l);
  unroll_plan<R>(gamma, order - 2, outer, out, u_of_l);
}

}  // namespace trotterz::detail

#endif
