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

#include "clique.hpp"

namespace ordim::detail {
namespace {

struct CliqueSearch {
  const std::vector<Bitset>& adjacency;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  std::size_t target = 0;  // 0 means "maximize"
  bool found = false;

  // Candidates are all greater than the last chosen vertex, so the first
  // clique reached at any size is the lexicographically least one.
  void extend(const Bitset& candidates) {
    if (found) return;
    if (target != 0 && current.size() == target) {
      best = current;
      found = true;
      return;
    }
    if (target == 0 && current.size() > best.size()) best = current;
    std::size_t bound = current.size() + candidates.count();
    if (target != 0 ? bound < target : bound <= best.size()) return;
    for (std::size_t v = candidates.find_first(); v != Bitset::npos;
         v = candidates.find_next(v)) {
      Bitset later = candidates & adjacency[v];
      // Drop vertices not after v to keep tuples increasing.
      for (std::size_t u = later.find_first(); u != Bitset::npos && u <= v;
           u = later.find_next(u)) {
        later.reset(u);
      }
      current.push_back(v);
      extend(later);
      current.pop_back();
      if (found) return;
      std::size_t remaining = 0;
      for (std::size_t u = candidates.find_next(v); u != Bitset::npos;
           u = candidates.find_next(u)) {
        ++remaining;
      }
      std::size_t rest_bound = current.size() + remaining;
      if (target != 0 ? rest_bound < target : rest_bound <= best.size()) {
        return;
      }
    }
  }
};

}  // namespace

std::vector<std::size_t> maximum_clique(const std::vector<Bitset>& adjacency) {
  CliqueSearch search{adjacency, {}, {}, 0, false};
  Bitset all(adjacency.size());
  all.set();
  search.extend(all);
  return search.best;
}

std::optional<std::vector<std::size_t>> first_clique_of_size(
    const std::vector<Bitset>& adjacency, std::size_t size) {
  if (size == 0) return std::vector<std::size_t>{};
  CliqueSearch search{adjacency, {}, {}, size, false};
  Bitset all(adjacency.size());
  all.set();
  search.extend(all);
  if (!search.found) return std::nullopt;
  return search.best;
}

}  // namespace ordim::detail
