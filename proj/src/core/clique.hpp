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

#ifndef ORDIM_SRC_CORE_CLIQUE_HPP_
#define ORDIM_SRC_CORE_CLIQUE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ordim/poset.hpp"

namespace ordim::detail {

// Largest clique of an undirected graph given as symmetric adjacency bitsets.
// Among maximum cliques, the lexicographically least vertex tuple is returned.
std::vector<std::size_t> maximum_clique(const std::vector<Bitset>& adjacency);

// Lexicographically least clique with exactly `size` vertices.
std::optional<std::vector<std::size_t>> first_clique_of_size(
    const std::vector<Bitset>& adjacency, std::size_t size);

}  // namespace ordim::detail

#endif  // ORDIM_SRC_CORE_CLIQUE_HPP_
