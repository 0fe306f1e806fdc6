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

// Glue between the brute-force oracles and library types.
#ifndef ORDIM_TESTS_SUPPORT_HPP_
#define ORDIM_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "oracles.hpp"
#include "ordim/poset.hpp"

namespace ordim::support {

struct Sample {
  Poset poset;
  oracle::Matrix leq;
};

inline Sample random_sample(int n, double p, std::mt19937_64& rng) {
  const auto pairs = oracle::random_relation(n, p, rng);
  std::vector<std::pair<Element, Element>> rel(pairs.begin(), pairs.end());
  return {poset_from_relation(n, rel), oracle::closure(n, pairs)};
}

inline oracle::Matrix matrix_of(const Poset& p) {
  oracle::Matrix m(p.size(), std::vector<bool>(p.size()));
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) m[x][y] = p.leq(x, y);
  }
  return m;
}

inline std::vector<IncPair> to_pairs(const std::vector<oracle::Pair>& pairs) {
  std::vector<IncPair> out;
  for (const auto& [a, b] : pairs) out.push_back({Element(a), Element(b)});
  return out;
}

}  // namespace ordim::support

#endif  // ORDIM_TESTS_SUPPORT_HPP_
