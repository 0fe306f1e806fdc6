// Copyright 2026 The Authors.
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

// Exact rational simplex for packing LPs with 0/1 constraint rows.

#ifndef ORDIM_SRC_CORE_EXACT_LP_HPP_
#define ORDIM_SRC_CORE_EXACT_LP_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ordim/poset.hpp"

namespace ordim::detail {

struct PackingSolution {
  mpq_class value;
  std::vector<mpq_class> y;  // one per variable
  std::vector<mpq_class> x;  // covering dual, one per constraint
};

// maximize sum(y) subject to sum(y_r : r in rows[j]) <= 1 for every j, y >= 0.
// The dual is the covering LP min sum(x) with sum(x_j : r in rows[j]) >= 1 for
// every variable r; x is read off the final reduced costs. Every variable must
// appear in some row.
PackingSolution solve_packing_lp(std::size_t variables,
                                 std::span<const Bitset> rows);

}  // namespace ordim::detail

#endif  // ORDIM_SRC_CORE_EXACT_LP_HPP_
