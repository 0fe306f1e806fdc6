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

#include "ordim/constructions.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <numeric>

namespace ordim {
namespace {

// Calls fn for every size-`count` subset of `pool` (given as 1-based elements).
template <typename Fn>
void for_each_combination(const std::vector<int>& pool, int count, Fn&& fn) {
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == count) {
      fn(SubsetMask::of(std::span<const int>(chosen)));
      return;
    }
    const std::size_t need = count - chosen.size();
    for (std::size_t i = from; i + need <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<int> interval(int first, int last) {
  std::vector<int> out;
  for (int e = first; e <= last; ++e) out.push_back(e);
  return out;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> perm = interval(1, n);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[below(static_cast<std::uint64_t>(i) + 1)]);
  }
  return perm;
}

void check_params(PknParams params) {
  if (params.k < 1 || params.k > params.n - 2 || params.n > kMaxGround) {
    throw Error(ErrorCode::kParamRange,
                "P(k,n) needs 1 <= k <= n-2 and n <= 64, got k=" +
                    std::to_string(params.k) + " n=" +
                    std::to_string(params.n));
  }
}

void check_params(PnParams params) {
  // Ground set has 2n+1 elements.
  if (params.n < 3 || 2 * params.n + 1 > kMaxGround) {
    throw Error(ErrorCode::kParamRange,
                "P_n needs 3 <= n <= 31, got n=" + std::to_string(params.n));
  }
}

ConvexGeometry linear_geometry(std::span<const int> order) {
  if (order.empty()) {
    throw Error(ErrorCode::kParamRange, "linear geometry of an empty order");
  }
  return validate_convex_geometry(
      initial_segments(static_cast<int>(order.size()), order));
}

ConvexGeometry boolean_algebra(int n) {
  if (n < 1 || n > 16) {
    throw Error(ErrorCode::kParamRange,
                "Boolean algebra needs 1 <= n <= 16, got " + std::to_string(n));
  }
  std::vector<SubsetMask> sets;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    sets.emplace_back(bits);
  }
  return validate_convex_geometry(SetFamily(n, std::move(sets)));
}

bool pkn_member(PknParams params, SubsetMask set) {
  // |A| = k + i - 1 forces [i-1] into A.
  const int prefix = set.size() - params.k;
  return prefix < 1 || SubsetMask::range(1, prefix).is_subset_of(set);
}

ConvexGeometry pkn(PknParams params) {
  check_params(params);
  const int n = params.n;
  const int k = params.k;
  std::vector<SubsetMask> sets;
  const std::vector<int> all = interval(1, n);
  for (int size = 0; size <= k; ++size) {
    for_each_combination(all, size, [&](SubsetMask m) { sets.push_back(m); });
  }
  for (int size = k + 1; size <= n; ++size) {
    const int prefix = size - k;
    const SubsetMask head = SubsetMask::range(1, prefix);
    for_each_combination(interval(prefix + 1, n), k,
                         [&](SubsetMask m) { sets.push_back(head | m); });
  }
  return validate_convex_geometry(SetFamily(n, std::move(sets)));
}

SetFamily jkn(PknParams params) {
  check_params(params);
  const int n = params.n;
  const int k = params.k;
  std::vector<SubsetMask> sets;
  for (int i = 1; i <= n; ++i) {
    const SubsetMask head = SubsetMask::range(1, i - 1);
    if (n - i >= k) {
      for_each_combination(interval(i + 1, n), k,
                           [&](SubsetMask b) { sets.push_back(head | b); });
    } else {
      sets.push_back(head | SubsetMask::range(i + 1, n));
    }
  }
  return SetFamily(n, std::move(sets));
}

SubsetMask pn_set(int n, bool top, int j, int k) {
  SubsetMask m = top ? SubsetMask::of({1}) : SubsetMask();
  if (j > 0) m = m | SubsetMask::range(2, j + 1);
  if (k > 0) m = m | SubsetMask::range(n + 2, n + k + 1);
  return m;
}

PnFamilies qn_pn(PnParams params) {
  check_params(params);
  const int n = params.n;
  std::vector<std::string> labels{"a"};
  for (int j = 1; j <= n; ++j) labels.push_back("b" + std::to_string(j));
  for (int k = 1; k <= n; ++k) labels.push_back("c" + std::to_string(k));
  std::vector<SubsetMask> q_sets;
  std::vector<SubsetMask> p_sets;
  for (int top = 0; top <= 1; ++top) {
    for (int j = 0; j <= n; ++j) {
      for (int k = 0; k <= n; ++k) {
        const SubsetMask m = pn_set(n, top == 1, j, k);
        q_sets.push_back(m);
        if (top == 1 || j + k <= n) p_sets.push_back(m);
      }
    }
  }
  const int ground = 2 * n + 1;
  return {validate_convex_geometry(SetFamily(ground, std::move(q_sets)), labels),
          validate_convex_geometry(SetFamily(ground, std::move(p_sets)), labels)};
}

Realizer lexicographic_realizer(const ConvexGeometry& g, int n) {
  struct Coords {
    int top, j, k;
  };
  std::vector<Coords> coords;
  const SubsetMask b_part = SubsetMask::range(2, n + 1);
  const SubsetMask c_part = SubsetMask::range(n + 2, 2 * n + 1);
  for (SubsetMask m : g.family().sets()) {
    coords.push_back({m.contains(1) ? 1 : 0, (m & b_part).size(),
                      (m & c_part).size()});
  }
  Realizer realizer;
  for (int rotation = 0; rotation < 3; ++rotation) {
    std::vector<Element> order(g.size());
    std::iota(order.begin(), order.end(), Element{0});
    auto key = [&](Element x) {
      const int c[3] = {coords[x].top, coords[x].j, coords[x].k};
      return std::array<int, 3>{c[rotation], c[(rotation + 1) % 3],
                                c[(rotation + 2) % 3]};
    };
    std::sort(order.begin(), order.end(),
              [&](Element x, Element y) { return key(x) < key(y); });
    realizer.extensions.push_back({std::move(order)});
  }
  return realizer;
}

ConvexGeometry random_geometry(int n, int t, std::uint64_t seed) {
  if (n < 1 || n > kMaxGround || t < 1) {
    throw Error(ErrorCode::kParamRange, "random geometry needs n >= 1, t >= 1");
  }
  Rng rng(seed);
  std::vector<SetFamily> chains;
  for (int i = 0; i < t; ++i) {
    chains.push_back(initial_segments(n, rng.permutation(n)));
  }
  return validate_convex_geometry(join_families(n, chains));
}

GeometryEnumerator::GeometryEnumerator(int n, bool allow_five) : n_(n) {
  if (n < 1 || n > 5 || (n == 5 && !allow_five)) {
    throw Error(ErrorCode::kParamRange,
                "enumeration supports ground sets of size 1..4 (5 with the "
                "override), got " +
                    std::to_string(n));
  }
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    order_.emplace_back(bits);
  }
  std::sort(order_.begin(), order_.end(), canonical_less);
  level_last_.assign(n + 1, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    level_last_[order_[i].size()] = i;
  }
  member_.assign(order_.size(), 0);
  member_[0] = 1;
  member_[order_.back().bits()] = 1;
  choice_.assign(order_.size(), -1);
}

bool GeometryEnumerator::can_include(std::size_t pos) const {
  const SubsetMask s = order_[pos];
  bool accessible = false;
  for (int e : s.elements()) {
    if (member_[s.without(e).bits()]) {
      accessible = true;
      break;
    }
  }
  if (!accessible) return false;
  for (std::size_t i = 0; i < pos; ++i) {
    if (member_[order_[i].bits()] && !member_[(s & order_[i]).bits()]) {
      return false;
    }
  }
  return true;
}

// When pos closes the level of size s + 1, every member of size s needs an
// extension inside that level.
bool GeometryEnumerator::level_complete_ok(std::size_t pos) const {
  const int size = order_[pos].size();
  if (level_last_[size] != pos || size == 0) return true;
  const std::size_t first = size >= 2 ? level_last_[size - 2] + 1 : 0;
  for (std::size_t i = first; i <= level_last_[size - 1]; ++i) {
    const SubsetMask a = order_[i];
    if (!member_[a.bits()]) continue;
    bool extends = false;
    for (int e = 1; e <= n_ && !extends; ++e) {
      if (!a.contains(e) && member_[a.with(e).bits()]) extends = true;
    }
    if (!extends) return false;
  }
  return true;
}

// Decides positions pos.. greedily (include first). Returns false when a
// level check fails, leaving pos_ at the failing position.
bool GeometryEnumerator::advance_from(std::size_t pos) {
  const std::size_t last = order_.size() - 1;
  for (pos_ = pos; pos_ < last; ++pos_) {
    if (can_include(pos_)) {
      choice_[pos_] = 1;
      member_[order_[pos_].bits()] = 1;
    } else {
      choice_[pos_] = 0;
    }
    if (!level_complete_ok(pos_)) return false;
  }
  return level_complete_ok(last);
}

// Flips the deepest "include" decision to "exclude". Returns false when no
// decision is left to flip.
bool GeometryEnumerator::backtrack() {
  const std::size_t last = order_.size() - 1;
  std::size_t pos = std::min(pos_, last - 1);
  while (pos >= 1) {
    if (choice_[pos] == 1) {
      choice_[pos] = 0;
      member_[order_[pos].bits()] = 0;
      for (std::size_t i = pos + 1; i < last; ++i) {
        if (choice_[i] == 1) member_[order_[i].bits()] = 0;
        choice_[i] = -1;
      }
      pos_ = pos;
      if (level_complete_ok(pos) && advance_from(pos + 1)) {
        pos_ = last;
        return true;
      }
      pos = std::min(pos_, last - 1);
      continue;
    }
    --pos;
  }
  return false;
}

std::optional<ConvexGeometry> GeometryEnumerator::next() {
  if (done_) return std::nullopt;
  bool found;
  if (!started_) {
    started_ = true;
    if (order_.size() == 2) {
      found = true;
      pos_ = 1;
    } else {
      found = advance_from(1) || backtrack();
      if (found) pos_ = order_.size() - 1;
    }
  } else {
    found = order_.size() > 2 && backtrack();
  }
  if (!found) {
    done_ = true;
    return std::nullopt;
  }
  std::vector<SubsetMask> sets;
  for (SubsetMask m : order_) {
    if (member_[m.bits()]) sets.push_back(m);
  }
  return validate_convex_geometry(SetFamily(n_, std::move(sets)));
}

std::vector<ConvexGeometry> enumerate_geometries(int n, bool allow_five) {
  GeometryEnumerator it(n, allow_five);
  std::vector<ConvexGeometry> all;
  while (auto g = it.next()) all.push_back(std::move(*g));
  return all;
}

std::vector<SetFamily> geometries_by_filtering(int n) {
  if (n < 1 || n > 4) {
    throw Error(ErrorCode::kParamRange, "filter oracle supports n <= 4");
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<SetFamily> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << subsets);
       ++choice) {
    std::vector<SubsetMask> sets;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      if ((choice >> s) & 1) sets.emplace_back(s);
    }
    if (sets.empty()) continue;
    SetFamily family(n, std::move(sets));
    try {
      validate_convex_geometry(family);
      out.push_back(std::move(family));
    } catch (const AxiomViolation&) {
    }
  }
  return out;
}

Poset standard_example(int t) {
  if (t < 2) throw Error(ErrorCode::kParamRange, "S_t needs t >= 2");
  std::vector<std::pair<Element, Element>> relation;
  std::vector<std::string> labels;
  for (int i = 0; i < t; ++i) labels.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < t; ++i) labels.push_back("b" + std::to_string(i + 1));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (i != j) relation.emplace_back(i, t + j);
    }
  }
  return poset_from_relation(2 * t, relation, std::move(labels));
}

Poset chain_poset(int n) {
  std::vector<std::pair<Element, Element>> relation;
  for (int i = 0; i + 1 < n; ++i) relation.emplace_back(i, i + 1);
  return poset_from_relation(n, relation);
}

Poset antichain_poset(int n) { return poset_from_relation(n, {}); }

}  // namespace ordim
