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

#include "exact_lp.hpp"

#include <optional>

#include "ordim/error.hpp"

namespace ordim::detail {

PackingSolution solve_packing_lp(std::size_t variables,
                                 std::span<const Bitset> rows) {
  const std::size_t m = rows.size();
  const std::size_t width = variables + m;  // structural then slack columns
  Bitset covered(variables);
  for (const Bitset& row : rows) covered |= row;
  if (covered.count() != variables) {
    throw Error(ErrorCode::kParamRange, "packing LP variable in no row");
  }

  // tableau[i] = coefficients then right-hand side; basis[i] = basic column.
  std::vector<std::vector<mpq_class>> tableau(
      m, std::vector<mpq_class>(width + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t r = 0; r < variables; ++r) {
      if (rows[i].test(r)) tableau[i][r] = 1;
    }
    tableau[i][variables + i] = 1;
    tableau[i][width] = 1;
    basis[i] = variables + i;
  }
  std::vector<mpq_class> objective(width + 1);
  for (std::size_t r = 0; r < variables; ++r) objective[r] = -1;

  // Bland's rule: lowest-index entering column, lowest basic index on ties.
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < width; ++c) {
      if (sgn(objective[c]) < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) break;
    const std::size_t e = *entering;
    std::optional<std::size_t> leaving;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tableau[i][e]) <= 0) continue;
      mpq_class ratio = tableau[i][width] / tableau[i][e];
      if (!leaving || ratio < best ||
          (ratio == best && basis[i] < basis[*leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (!leaving) {
      throw Error(ErrorCode::kParamRange, "packing LP is unbounded");
    }
    const std::size_t l = *leaving;
    const mpq_class pivot = tableau[l][e];
    for (mpq_class& v : tableau[l]) v /= pivot;
    auto eliminate = [&](std::vector<mpq_class>& target) {
      if (sgn(target[e]) == 0) return;
      const mpq_class factor = target[e];
      for (std::size_t c = 0; c <= width; ++c) {
        if (sgn(tableau[l][c]) != 0) target[c] -= factor * tableau[l][c];
      }
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (i != l) eliminate(tableau[i]);
    }
    eliminate(objective);
    basis[l] = e;
  }

  PackingSolution solution;
  solution.value = objective[width];
  solution.y.assign(variables, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < variables) solution.y[basis[i]] = tableau[i][width];
  }
  solution.x.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    solution.x.push_back(objective[variables + j]);
  }
  return solution;
}

}  // namespace ordim::detail
