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

// Executable checks of the structural theorems over populations of convex
// geometries and over the named families.

#ifndef ORDIM_THEOREMS_HPP_
#define ORDIM_THEOREMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ordim/dimensions.hpp"

namespace ordim {

enum class Check {
  kSeparation,       // dim(P_n) = 3 and cdim(P_n) = n + 1
  kDimTwo,           // dim <= 2 implies cdim = dim
  kVcSe,             // vcdim = se unless vcdim = 2 and se = 1
  kSeOne,            // se = 1 implies cdim <= 2
  kPkn,              // the P(k,n) statements at each grid point
  kSeMaxdd,          // se >= maxdd unless maxdd = 2 and se = 1
  kBooleanInterval,  // every interval [meet of lower covers of y, y] is Boolean
  kVcMaxdd,          // vcdim = maxdd
  kInequalityChain,  // cdim >= dim >= maxdd, dim >= se, fdim <= dim
  kPknCertificates,  // distinguishing sequences, realizers, weights
};

const char* check_name(Check check);
std::optional<Check> check_from_name(std::string_view name);
std::vector<Check> all_checks();

struct RandomPopulation {
  int n = 5;
  int t = 0;  // 0 cycles t through 1..n+1 across instances
  int count = 200;
  std::uint64_t seed = 1;
};

struct TheoremSuiteConfig {
  int enumerate_up_to = 0;  // every labeled geometry on [1..m], m <= this
  std::optional<RandomPopulation> random;
  bool named = false;  // P(k,n) grid, P_n range, Boolean algebras, chains
  int pkn_k_max = 2;
  int pkn_n_max = 8;
  int pn_min = 3;
  int pn_max = 6;
  std::vector<Check> checks;
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

// Throws Error(kParamRange) on an empty check list or bad population sizes.
void validate_config(const TheoremSuiteConfig& config);

struct CheckRow {
  std::string instance;
  Check check;
  bool passed = false;
  std::string detail;
};

// One line of the P(k,n) table; optional fields were not computed.
struct PknRow {
  int k = 0;
  int n = 0;
  std::size_t vcdim = 0;
  std::size_t se = 0;
  std::size_t maxdd = 0;
  std::size_t cdim = 0;
  std::size_t binomial = 0;
  std::optional<std::size_t> dim;        // exact
  std::size_t dim_upper = 0;             // from a verified realizer
  double dim_bound = 0;                  // (k+1) 2^(k+2) ln n
  mpq_class fdim_certificate;            // verified total weight
  std::size_t fdim_strict_bound = 0;     // 2^(k+1)
};

struct TheoremSuiteResult {
  std::vector<CheckRow> rows;
  std::vector<PknRow> pkn_table;
  std::size_t failures = 0;
  std::size_t instances = 0;
};

TheoremSuiteResult run_theorem_suite(const TheoremSuiteConfig& config);

// Aligned text: a per-check summary, failing rows, and the P(k,n) table.
std::string format_table(const TheoremSuiteResult& result);

}  // namespace ordim

#endif  // ORDIM_THEOREMS_HPP_
