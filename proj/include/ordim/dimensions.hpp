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

// Exact solvers and certificate builders for the dimension parameters, and
// the distinguishing-sequence machinery of the P(k,n) family.

#ifndef ORDIM_DIMENSIONS_HPP_
#define ORDIM_DIMENSIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ordim/constructions.hpp"
#include "ordim/geometry.hpp"
#include "ordim/poset.hpp"

namespace ordim {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultExtensionLimit = 200'000;

struct DmResult {
  std::size_t dimension = 0;
  Realizer realizer;
  // Lower bound from the largest set of pairwise conflicting critical pairs.
  std::size_t clique_bound = 0;
  std::uint64_t nodes = 0;
};

// Throws BudgetExceeded once more than `budget` search nodes are used.
DmResult dm_dimension(const Poset& poset,
                      std::uint64_t budget = kDefaultBudget);

// Compatible orders (1-based permutations of the ground set) of maximal
// chains whose join is the geometry.
struct ConvexRealizer {
  std::vector<std::vector<int>> orders;
};

struct CdimResult {
  std::size_t cdim = 0;
  std::optional<ConvexRealizer> realizer;
  std::string warning;  // set when no certificate of size cdim was found
};

CdimResult convex_dimension(const ConvexGeometry& g);

struct FdimResult {
  mpq_class value;
  FractionalRealizer realizer;
  // Constrained pairs and the matching optimal packing (dual) values.
  std::vector<IncPair> pairs;
  std::vector<mpq_class> dual;
  std::size_t columns = 0;
  bool resolved_with_all_pairs = false;
};

// Covering LP over the reversal patterns of all linear extensions,
// constrained on critical pairs. Throws Error(kTooManyExtensions) when the
// poset has more than ext_limit linear extensions.
FdimResult fractional_dimension(const Poset& poset,
                                std::uint64_t ext_limit = kDefaultExtensionLimit);

// Same LP with every incomparable pair constrained.
FdimResult fractional_dimension_all_pairs(
    const Poset& poset, std::uint64_t ext_limit = kDefaultExtensionLimit);

// Same LP with columns generated on demand as maximal reversible sets of
// critical pairs (heaviest set under the current duals by branch and bound),
// which avoids enumerating extensions. Throws BudgetExceeded.
FdimResult fractional_dimension_by_reversible_sets(
    const Poset& poset, std::uint64_t budget = kDefaultBudget);

// Weight 2^(k+1)/2^n on one extension per nonempty Z of [n]. Needs n <= 14.
FractionalRealizer pkn_fractional_certificate(PknParams params);

// Sets Y_1..Y_n over [t], stored 0-based (bit a-1 stands for a).
struct DistinguishingSequence {
  std::size_t t = 0;
  std::vector<Bitset> sets;
};

struct DistinguishingVerdict {
  bool accepted = false;
  std::optional<SubsetMask> failing;  // a member of J(k,n)
};

DistinguishingVerdict verify_distinguishing(PknParams params,
                                            const DistinguishingSequence& seq);

// Realizer of pkn(params) with one extension per element of [t]. Throws
// Error(kNotDistinguishing).
Realizer distinguishing_to_realizer(PknParams params,
                                    const DistinguishingSequence& seq);
Realizer distinguishing_to_realizer(const ConvexGeometry& pkn_geometry,
                                    PknParams params,
                                    const DistinguishingSequence& seq);

// Throws Error(kInvalidRealizer) unless the realizer is valid for pkn(params).
DistinguishingSequence realizer_to_distinguishing(PknParams params,
                                                  const Realizer& realizer);

// k = 1, t = 1 + floor(lg n).
DistinguishingSequence binary_distinguishing(int n);

struct RandomizedDistinguishing {
  DistinguishingSequence sequence;
  int tries = 0;
};

// t = floor((k+1) 2^(k+2) ln n); each element joins each set with
// probability 1/2. Throws Error(kMaxTriesExceeded).
std::size_t randomized_distinguishing_length(PknParams params);
RandomizedDistinguishing randomized_distinguishing(PknParams params,
                                                   std::uint64_t seed,
                                                   int max_tries);

struct BdimResult {
  std::optional<std::size_t> bdim;  // nullopt: larger than max_t
  BooleanRealizer realizer;
  std::uint64_t nodes = 0;
};

// Needs at most 6 elements and max_t <= 6. Throws BudgetExceeded.
BdimResult boolean_dimension_exact(const Poset& poset, std::size_t max_t,
                                   std::uint64_t budget = kDefaultBudget);

struct AnalyzeOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t ext_limit = kDefaultExtensionLimit;
  bool dim = true;
  bool cdim = true;
  bool maxdd = true;
  bool se = true;
  bool fdim = true;
  bool vcdim = false;  // direct shattering count
};

struct DimensionReport {
  std::optional<std::size_t> dim;
  std::optional<std::size_t> dim_lower;  // bounds when the budget ran out
  std::optional<std::size_t> dim_upper;
  std::optional<std::size_t> cdim;
  std::optional<std::size_t> maxdd;
  std::optional<std::size_t> vcdim;
  std::optional<std::size_t> se;
  std::optional<mpq_class> fdim;
  std::optional<Realizer> realizer;
  std::optional<ConvexRealizer> convex_realizer;
  std::optional<FractionalRealizer> fractional_realizer;
  std::optional<StandardExample> standard_example;
  // Wall-clock milliseconds per solver; not part of the default JSON output.
  std::vector<std::pair<std::string, double>> timings_ms;
  bool partial = false;  // some solver ran out of budget
  bool chain_holds = true;
  std::vector<std::string> notes;
};

DimensionReport analyze(const ConvexGeometry& g,
                        const AnalyzeOptions& options = {});
DimensionReport analyze(const Poset& poset, const AnalyzeOptions& options = {});

}  // namespace ordim

#endif  // ORDIM_DIMENSIONS_HPP_
