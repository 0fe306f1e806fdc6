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

// Builders for the named families of convex geometries and generators used
// for population-wide checks.

#ifndef ORDIM_CONSTRUCTIONS_HPP_
#define ORDIM_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ordim/geometry.hpp"
#include "ordim/poset.hpp"

namespace ordim {

// std::mt19937_64 with rejection-sampled bounded draws; the engine output is
// fixed by the standard, the library distributions are not, so none are used.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64/rejection-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }
  std::vector<int> permutation(int n);  // of 1..n, Fisher-Yates

 private:
  std::mt19937_64 engine_;
};

struct PknParams {
  int k = 1;
  int n = 3;
};

struct PnParams {
  int n = 3;
};

void check_params(PknParams params);
void check_params(PnParams params);

ConvexGeometry linear_geometry(std::span<const int> order);
ConvexGeometry boolean_algebra(int n);

bool pkn_member(PknParams params, SubsetMask set);
ConvexGeometry pkn(PknParams params);
SetFamily jkn(PknParams params);

// Ground set: element 1 is "a", 2..n+1 are b1..bn, n+2..2n+1 are c1..cn.
// Member (top, j, k) is {a if top} with b1..bj and c1..ck, 0 <= j, k <= n.
SubsetMask pn_set(int n, bool top, int j, int k);

struct PnFamilies {
  ConvexGeometry q;  // every (top, j, k)
  ConvexGeometry p;  // top layer whole, bottom layer only where j + k <= n
};

PnFamilies qn_pn(PnParams params);

// Three lexicographic orders, each with a different cyclic priority of the
// coordinates (top, j, k); realizes any member family of Q_n.
Realizer lexicographic_realizer(const ConvexGeometry& g, int n);

ConvexGeometry random_geometry(int n, int t, std::uint64_t seed);

// Every labeled convex geometry on [n], each exactly once. Sets are decided
// in canonical order; a set may join only if it extends a member by one
// element and keeps the family intersection-closed. A level is rejected once
// some member below it has no one-element extension.
class GeometryEnumerator {
 public:
  // n must lie in [1, 4], or be 5 with allow_five.
  explicit GeometryEnumerator(int n, bool allow_five = false);

  std::optional<ConvexGeometry> next();

 private:
  bool can_include(std::size_t pos) const;
  bool level_complete_ok(std::size_t pos) const;
  bool advance_from(std::size_t pos);
  bool backtrack();

  int n_;
  std::vector<SubsetMask> order_;
  std::vector<std::size_t> level_last_;  // last canonical index per size
  std::vector<char> member_;             // indexed by mask bits
  std::vector<signed char> choice_;      // 1 in, 0 out, -1 undecided
  std::size_t pos_ = 1;
  bool started_ = false;
  bool done_ = false;
};

std::vector<ConvexGeometry> enumerate_geometries(int n,
                                                 bool allow_five = false);

// Brute force: every family of subsets of [n] that passes the axioms.
// Feasible only for n <= 4.
std::vector<SetFamily> geometries_by_filtering(int n);

Poset standard_example(int t);
Poset chain_poset(int n);
Poset antichain_poset(int n);

}  // namespace ordim

#endif  // ORDIM_CONSTRUCTIONS_HPP_
