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

#include "ordim/poset.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

#include "clique.hpp"
#include "ordim/error.hpp"

namespace ordim {
namespace {

std::string pair_text(const Poset& poset, Element a, Element b) {
  return "(" + poset.label(a) + ", " + poset.label(b) + ")";
}

void require_permutation(std::span<const Element> order, std::size_t n,
                         const std::string& what) {
  if (order.size() != n) {
    throw Error(ErrorCode::kMalformedCertificate,
                what + " has " + std::to_string(order.size()) +
                    " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (Element x : order) {
    if (x >= n || seen[x]) {
      throw Error(ErrorCode::kMalformedCertificate,
                  what + " is not a permutation of the elements");
    }
    seen[x] = true;
  }
}

std::vector<std::size_t> positions(std::span<const Element> order,
                                   std::size_t n) {
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

}  // namespace

Poset Poset::from_up_sets(std::vector<Bitset> up,
                          std::vector<std::string> labels) {
  const std::size_t n = up.size();
  for (Element x = 0; x < n; ++x) {
    if (up[x].size() != n) {
      throw Error(ErrorCode::kParamRange, "relation matrix is not square");
    }
    if (!up[x].test(x)) {
      throw Error(ErrorCode::kParamRange, "relation is not reflexive");
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = up[x].find_next(x); y != Bitset::npos;
         y = up[x].find_next(y)) {
      if (up[y].test(x)) {
        throw Error(ErrorCode::kCycle, "relation is not antisymmetric at " +
                                           std::to_string(x) + ", " +
                                           std::to_string(y));
      }
    }
    for (Element y = up[x].find_first(); y != Bitset::npos;
         y = up[x].find_next(y)) {
      if (!up[y].is_subset_of(up[x])) {
        throw Error(ErrorCode::kParamRange, "relation is not transitive");
      }
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::kParamRange, "label count does not match size");
  }
  Poset p;
  p.up_ = std::move(up);
  p.labels_ = std::move(labels);
  p.finish_down_sets();
  p.compute_covers();
  return p;
}

Poset Poset::from_up_sets_and_covers(
    std::vector<Bitset> up, std::vector<std::vector<Element>> upper_covers,
    std::vector<std::string> labels) {
  Poset p;
  p.up_ = std::move(up);
  p.labels_ = std::move(labels);
  p.finish_down_sets();
  p.upper_covers_ = std::move(upper_covers);
  p.lower_covers_.assign(p.size(), {});
  for (Element x = 0; x < p.size(); ++x) {
    std::sort(p.upper_covers_[x].begin(), p.upper_covers_[x].end());
    for (Element y : p.upper_covers_[x]) p.lower_covers_[y].push_back(x);
  }
  return p;
}

void Poset::finish_down_sets() {
  const std::size_t n = up_.size();
  down_.assign(n, Bitset(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = up_[x].find_first(); y != Bitset::npos;
         y = up_[x].find_next(y)) {
      down_[y].set(x);
    }
  }
}

void Poset::compute_covers() {
  const std::size_t n = up_.size();
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (Element x = 0; x < n; ++x) {
    Bitset strict = up_[x];
    strict.reset(x);
    Bitset above_strict(n);
    for (Element z = strict.find_first(); z != Bitset::npos;
         z = strict.find_next(z)) {
      Bitset tmp = up_[z];
      tmp.reset(z);
      above_strict |= tmp;
    }
    strict -= above_strict;
    for (Element y = strict.find_first(); y != Bitset::npos;
         y = strict.find_next(y)) {
      upper_covers_[x].push_back(y);
      lower_covers_[y].push_back(x);
    }
  }
}

std::string Poset::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

bool Poset::is_chain() const {
  for (Element x = 0; x < size(); ++x) {
    if ((up_[x] | down_[x]).count() != size()) return false;
  }
  return true;
}

Poset poset_from_relation(std::size_t n,
                          std::span<const std::pair<Element, Element>> pairs,
                          std::vector<std::string> labels) {
  std::vector<Bitset> up(n, Bitset(n));
  for (Element x = 0; x < n; ++x) up[x].set(x);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw Error(ErrorCode::kParamRange, "relation index out of range");
    }
    up[x].set(y);
  }
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (i != k && up[i].test(k)) up[i] |= up[k];
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = up[x].find_next(x); y != Bitset::npos;
         y = up[x].find_next(y)) {
      if (up[y].test(x)) {
        throw Error(ErrorCode::kCycle,
                    "relation has a directed cycle through " +
                        std::to_string(x) + " and " + std::to_string(y));
      }
    }
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

Poset induced_subposet(const Poset& poset, std::span<const Element> elements) {
  const std::size_t m = elements.size();
  std::vector<Bitset> up(m, Bitset(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (poset.leq(elements[i], elements[j])) up[i].set(j);
    }
    labels.push_back(poset.label(elements[i]));
  }
  return Poset::from_up_sets(std::move(up), std::move(labels));
}

std::vector<std::pair<Element, Element>> hasse_covers(const Poset& poset) {
  std::vector<std::pair<Element, Element>> covers;
  for (Element x = 0; x < poset.size(); ++x) {
    for (Element y : poset.upper_covers(x)) covers.emplace_back(x, y);
  }
  return covers;
}

std::size_t down_degree(const Poset& poset, Element y) {
  return poset.lower_covers(y).size();
}

std::size_t up_degree(const Poset& poset, Element x) {
  return poset.upper_covers(x).size();
}

std::size_t max_down_degree(const Poset& poset) {
  std::size_t best = 0;
  for (Element x = 0; x < poset.size(); ++x) {
    best = std::max(best, down_degree(poset, x));
  }
  return best;
}

std::size_t max_up_degree(const Poset& poset) {
  std::size_t best = 0;
  for (Element x = 0; x < poset.size(); ++x) {
    best = std::max(best, up_degree(poset, x));
  }
  return best;
}

std::vector<IncPair> incomparable_pairs(const Poset& poset) {
  std::vector<IncPair> pairs;
  for (Element a = 0; a < poset.size(); ++a) {
    for (Element b = 0; b < poset.size(); ++b) {
      if (a != b && !poset.comparable(a, b)) pairs.push_back({a, b});
    }
  }
  return pairs;
}

bool is_critical_pair(const Poset& poset, IncPair pair) {
  if (pair.a == pair.b || poset.comparable(pair.a, pair.b)) return false;
  Bitset below_a = poset.down_set(pair.a);
  below_a.reset(pair.a);
  if (!below_a.is_subset_of(poset.down_set(pair.b))) return false;
  Bitset above_b = poset.up_set(pair.b);
  above_b.reset(pair.b);
  return above_b.is_subset_of(poset.up_set(pair.a));
}

std::vector<CriticalPair> critical_pairs(const Poset& poset) {
  std::vector<CriticalPair> pairs;
  for (Element a = 0; a < poset.size(); ++a) {
    for (Element b = 0; b < poset.size(); ++b) {
      if (is_critical_pair(poset, {a, b})) pairs.push_back({a, b});
    }
  }
  return pairs;
}

std::optional<LinearExtension> reversing_extension(
    const Poset& poset, std::span<const IncPair> pairs) {
  const std::size_t n = poset.size();
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y : poset.upper_covers(x)) {
      succ[x].push_back(y);
      ++indegree[y];
    }
  }
  for (const IncPair& p : pairs) {
    succ[p.b].push_back(p.a);
    ++indegree[p.a];
  }
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(x);
  }
  LinearExtension ext;
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    ext.order.push_back(x);
    for (Element y : succ[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (ext.order.size() != n) return std::nullopt;
  return ext;
}

Reversibility is_reversible(const Poset& poset,
                            std::span<const IncPair> pairs) {
  Reversibility result;
  result.extension = reversing_extension(poset, pairs);
  result.reversible = result.extension.has_value();
  if (result.reversible) return result;

  // Shortest cycle in the graph p -> q iff a_p <= b_q. A chord would give a
  // shorter cycle, so the shortest one is strict.
  std::vector<IncPair> unique(pairs.begin(), pairs.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  const std::size_t m = unique.size();
  std::vector<std::vector<std::size_t>> next(m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      if (p != q && poset.leq(unique[p].a, unique[q].b)) next[p].push_back(q);
    }
  }
  std::vector<std::size_t> best;
  for (std::size_t start = 0; start < m; ++start) {
    std::vector<std::size_t> parent(m, m);
    std::vector<std::size_t> dist(m, m + 1);
    std::deque<std::size_t> queue{start};
    dist[start] = 0;
    std::size_t closing = m;
    while (!queue.empty() && closing == m) {
      std::size_t p = queue.front();
      queue.pop_front();
      for (std::size_t q : next[p]) {
        if (q == start) {
          closing = p;
          break;
        }
        if (dist[q] > m) {
          dist[q] = dist[p] + 1;
          parent[q] = p;
          queue.push_back(q);
        }
      }
    }
    if (closing == m) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t p = closing; p != start; p = parent[p]) cycle.push_back(p);
    cycle.push_back(start);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = cycle;
  }
  for (std::size_t p : best) result.cycle.push_back(unique[p]);
  return result;
}

std::vector<std::vector<IncPair>> strict_alternating_cycles(
    const Poset& poset, std::span<const IncPair> pairs, std::size_t max_size) {
  std::vector<IncPair> unique(pairs.begin(), pairs.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  const std::size_t m = unique.size();
  auto below = [&](std::size_t p, std::size_t q) {
    return poset.leq(unique[p].a, unique[q].b);
  };

  std::vector<std::vector<IncPair>> cycles;
  std::vector<std::size_t> path;
  std::vector<bool> used(m, false);

  auto record = [&]() {
    std::vector<IncPair> cycle;
    for (std::size_t p : path) cycle.push_back(unique[p]);
    cycles.push_back(std::move(cycle));
  };

  auto extend = [&](auto&& self) -> void {
    const std::size_t last = path.back();
    for (std::size_t q = path.front() + 1; q < m; ++q) {
      if (used[q] || !below(last, q)) continue;
      bool ok = true;
      // q becomes position k; only the previous position may lie below b_q,
      // and a_q may lie below b_1 only when q closes the cycle.
      for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
        if (below(path[i], q)) ok = false;
      }
      for (std::size_t j = 1; j < path.size() && ok; ++j) {
        if (below(q, path[j])) ok = false;
      }
      if (!ok) continue;
      path.push_back(q);
      if (below(q, path.front())) {
        record();
      } else if (path.size() < max_size) {
        used[q] = true;
        self(self);
        used[q] = false;
      }
      path.pop_back();
    }
  };

  if (max_size < 2) return cycles;
  for (std::size_t s = 0; s < m; ++s) {
    path = {s};
    used[s] = true;
    extend(extend);
    used[s] = false;
  }
  return cycles;
}

std::vector<Bitset> alternating_pair_graph(const Poset& poset,
                                           std::span<const IncPair> pairs,
                                           bool strict) {
  auto below = [&](Element x, Element y) {
    return strict ? poset.less(x, y) : poset.leq(x, y);
  };
  const std::size_t m = pairs.size();
  std::vector<Bitset> adjacency(m, Bitset(m));
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      if (below(pairs[p].a, pairs[q].b) && below(pairs[q].a, pairs[p].b)) {
        adjacency[p].set(q);
        adjacency[q].set(p);
      }
    }
  }
  return adjacency;
}

WidthResult width(const Poset& poset) {
  const std::size_t n = poset.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(n, kNone);  // right y -> left x
  std::vector<std::size_t> match_left(n, kNone);   // left x -> right y

  std::vector<char> visited;
  auto augment = [&](auto&& self, Element x) -> bool {
    const Bitset& up = poset.up_set(x);
    for (Element y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      if (y == x || visited[y]) continue;
      visited[y] = 1;
      if (match_right[y] == kNone || self(self, match_right[y])) {
        match_right[y] = x;
        match_left[x] = y;
        return true;
      }
    }
    return false;
  };
  for (Element x = 0; x < n; ++x) {
    visited.assign(n, 0);
    augment(augment, x);
  }

  WidthResult result;
  for (Element x = 0; x < n; ++x) {
    if (match_right[x] != kNone) continue;
    std::vector<Element> chain;
    for (Element y = x; y != kNone; y = match_left[y]) chain.push_back(y);
    result.chains.push_back(std::move(chain));
  }
  result.width = result.chains.size();

  // Koenig: alternating reachability from unmatched left vertices.
  std::vector<char> left_reached(n, 0);
  std::vector<char> right_reached(n, 0);
  std::deque<Element> queue;
  for (Element x = 0; x < n; ++x) {
    if (match_left[x] == kNone) {
      left_reached[x] = 1;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    const Bitset& up = poset.up_set(x);
    for (Element y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      if (y == x || right_reached[y]) continue;
      right_reached[y] = 1;
      Element back = match_right[y];
      if (back != kNone && !left_reached[back]) {
        left_reached[back] = 1;
        queue.push_back(back);
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (left_reached[x] && !right_reached[x]) result.antichain.push_back(x);
  }
  return result;
}

LinearExtensionEnumerator::LinearExtensionEnumerator(const Poset& poset,
                                                     std::uint64_t limit)
    : poset_(&poset), limit_(limit) {
  const std::size_t n = poset.size();
  missing_below_.resize(n);
  for (Element x = 0; x < n; ++x) {
    missing_below_[x] = poset.lower_covers(x).size();
  }
  placed_.assign(n, false);
}

bool LinearExtensionEnumerator::advance() {
  const std::size_t n = poset_->size();
  auto place = [&](Element x) {
    placed_[x] = true;
    prefix_.push_back(x);
    for (Element y : poset_->upper_covers(x)) --missing_below_[y];
  };
  auto unplace = [&]() {
    Element x = prefix_.back();
    prefix_.pop_back();
    placed_[x] = false;
    for (Element y : poset_->upper_covers(x)) ++missing_below_[y];
    return x;
  };
  auto first_available_after = [&](std::size_t start) -> std::size_t {
    for (Element x = start; x < n; ++x) {
      if (!placed_[x] && missing_below_[x] == 0) return x;
    }
    return n;
  };
  auto fill = [&]() {
    while (prefix_.size() < n) place(first_available_after(0));
  };

  if (!started_) {
    started_ = true;
    fill();
    return true;
  }
  while (!prefix_.empty()) {
    Element x = unplace();
    std::size_t y = first_available_after(x + 1);
    if (y < n) {
      place(y);
      fill();
      return true;
    }
  }
  return false;
}

std::optional<LinearExtension> LinearExtensionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  if (produced_ >= limit_) {
    done_ = true;
    throw Error(ErrorCode::kCountExceeded,
                "more than " + std::to_string(limit_) + " linear extensions");
  }
  ++produced_;
  return LinearExtension{prefix_};
}

std::vector<LinearExtension> linear_extensions(const Poset& poset,
                                               std::uint64_t limit) {
  LinearExtensionEnumerator it(poset, limit);
  std::vector<LinearExtension> all;
  while (auto ext = it.next()) all.push_back(std::move(*ext));
  return all;
}

bool is_linear_extension(const Poset& poset, std::span<const Element> order) {
  const std::size_t n = poset.size();
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Element x : order) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  auto pos = positions(order, n);
  for (Element x = 0; x < n; ++x) {
    for (Element y : poset.upper_covers(x)) {
      if (pos[x] > pos[y]) return false;
    }
  }
  return true;
}

Verdict verify_realizer(const Poset& poset, const Realizer& realizer) {
  const std::size_t n = poset.size();
  for (std::size_t i = 0; i < realizer.extensions.size(); ++i) {
    require_permutation(realizer.extensions[i].order, n,
                        "extension " + std::to_string(i));
  }
  if (realizer.extensions.empty()) {
    return {false, "a realizer needs at least one linear extension"};
  }
  std::vector<Bitset> reversed_below(n, Bitset(n));
  for (std::size_t i = 0; i < realizer.extensions.size(); ++i) {
    const auto& order = realizer.extensions[i].order;
    if (!is_linear_extension(poset, order)) {
      return {false, "extension " + std::to_string(i) +
                         " is not a linear extension"};
    }
    Bitset before(n);
    for (Element x : order) {
      reversed_below[x] |= before;
      before.set(x);
    }
  }
  for (Element a = 0; a < n; ++a) {
    Bitset incomparable = poset.up_set(a) | poset.down_set(a);
    incomparable.flip();
    incomparable -= reversed_below[a];
    if (incomparable.any()) {
      Element b = incomparable.find_first();
      return {false, "incomparable pair " + pair_text(poset, a, b) +
                         " is never reversed"};
    }
  }
  return {true, "realizer of size " +
                    std::to_string(realizer.extensions.size())};
}

LocalVerdict verify_local_realizer(const Poset& poset,
                                   const LocalRealizer& realizer) {
  const std::size_t n = poset.size();
  std::vector<Bitset> shown_below(n, Bitset(n));  // x before y in some ple
  std::vector<std::size_t> multiplicity(n, 0);
  for (std::size_t i = 0; i < realizer.ples.size(); ++i) {
    const auto& order = realizer.ples[i].order;
    std::vector<bool> seen(n, false);
    for (Element x : order) {
      if (x >= n || seen[x]) {
        throw Error(ErrorCode::kMalformedCertificate,
                    "ple " + std::to_string(i) + " repeats or misses range");
      }
      seen[x] = true;
    }
  }
  LocalVerdict verdict;
  for (std::size_t i = 0; i < realizer.ples.size(); ++i) {
    const auto& order = realizer.ples[i].order;
    Bitset before(n);
    for (Element y : order) {
      Bitset later_but_below = before & poset.up_set(y);
      later_but_below.reset(y);
      if (later_but_below.any()) {
        verdict.detail = "ple " + std::to_string(i) + " places " +
                         poset.label(y) + " before an element above it";
        return verdict;
      }
      for (Element x = before.find_first(); x != Bitset::npos;
           x = before.find_next(x)) {
        shown_below[x].set(y);
      }
      before.set(y);
      ++multiplicity[y];
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (multiplicity[x] == 0) {
      verdict.detail = "element " + poset.label(x) + " appears in no ple";
      return verdict;
    }
    for (Element y = 0; y < n; ++y) {
      if (x == y) continue;
      if (poset.less(x, y) && !shown_below[x].test(y)) {
        verdict.detail = "comparability " + pair_text(poset, x, y) +
                         " is never shown";
        return verdict;
      }
      if (!poset.comparable(x, y) && !shown_below[y].test(x)) {
        verdict.detail = "incomparable pair " + pair_text(poset, x, y) +
                         " is never reversed";
        return verdict;
      }
    }
  }
  verdict.accepted = true;
  verdict.max_multiplicity =
      *std::max_element(multiplicity.begin(), multiplicity.end());
  verdict.detail =
      "local realizer with multiplicity " +
      std::to_string(verdict.max_multiplicity);
  return verdict;
}

Verdict verify_boolean_realizer(const Poset& poset,
                                const BooleanRealizer& realizer) {
  const std::size_t n = poset.size();
  const std::size_t t = realizer.orders.size();
  std::vector<std::vector<std::size_t>> pos;
  for (std::size_t i = 0; i < t; ++i) {
    require_permutation(realizer.orders[i], n, "order " + std::to_string(i));
    pos.push_back(positions(realizer.orders[i], n));
  }
  for (const std::string& q : realizer.tau) {
    if (q.size() != t ||
        q.find_first_not_of("01") != std::string::npos) {
      throw Error(ErrorCode::kMalformedCertificate,
                  "query string '" + q + "' does not match " +
                      std::to_string(t) + " orders");
    }
  }
  if (t == 0) return {false, "a Boolean realizer needs at least one order"};
  std::string q(t, '0');
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x == y) continue;
      for (std::size_t i = 0; i < t; ++i) {
        q[i] = pos[i][x] < pos[i][y] ? '1' : '0';
      }
      bool in_tau = realizer.tau.count(q) > 0;
      if (in_tau != poset.less(x, y)) {
        return {false, "pair " + pair_text(poset, x, y) + " has query " + q +
                           (in_tau ? " in tau but is not comparable"
                                   : " outside tau but x < y")};
      }
    }
  }
  return {true, "Boolean realizer of size " + std::to_string(t)};
}

FractionalVerdict verify_fractional_realizer(
    const Poset& poset, const FractionalRealizer& realizer) {
  const std::size_t n = poset.size();
  FractionalVerdict verdict;
  verdict.total_weight = 0;
  for (std::size_t i = 0; i < realizer.weighted.size(); ++i) {
    require_permutation(realizer.weighted[i].extension.order, n,
                        "extension " + std::to_string(i));
    if (sgn(realizer.weighted[i].weight) < 0) {
      throw Error(ErrorCode::kMalformedCertificate,
                  "extension " + std::to_string(i) + " has negative weight");
    }
    verdict.total_weight += realizer.weighted[i].weight;
  }
  // reversed[a * n + b]: weight of extensions placing a above b.
  std::vector<mpq_class> reversed(n * n, mpq_class(0));
  for (std::size_t i = 0; i < realizer.weighted.size(); ++i) {
    const auto& w = realizer.weighted[i];
    if (!is_linear_extension(poset, w.extension.order)) {
      verdict.detail =
          "extension " + std::to_string(i) + " is not a linear extension";
      return verdict;
    }
    if (sgn(w.weight) == 0) continue;
    const auto& order = w.extension.order;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        if (!poset.comparable(order[j], order[k])) {
          reversed[order[j] * n + order[k]] += w.weight;
        }
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || poset.comparable(a, b)) continue;
      if (reversed[a * n + b] < 1) {
        verdict.detail = "incomparable pair " + pair_text(poset, a, b) +
                         " receives weight " + reversed[a * n + b].get_str();
        return verdict;
      }
    }
  }
  verdict.accepted = true;
  verdict.detail = "fractional realizer of total weight " +
                   verdict.total_weight.get_str();
  return verdict;
}

std::optional<StandardExample> find_standard_example(const Poset& poset,
                                                     std::size_t t) {
  if (t < 2) {
    throw Error(ErrorCode::kParamRange, "standard examples need t >= 2");
  }
  const auto crit = critical_pairs(poset);
  const auto graph = alternating_pair_graph(poset, crit, true);
  auto clique = detail::first_clique_of_size(graph, t);
  if (!clique) return std::nullopt;
  StandardExample example;
  for (std::size_t p : *clique) {
    example.a.push_back(crit[p].a);
    example.b.push_back(crit[p].b);
  }
  return example;
}

std::size_t standard_example_number(const Poset& poset) {
  const auto crit = critical_pairs(poset);
  const auto clique =
      detail::maximum_clique(alternating_pair_graph(poset, crit, true));
  return clique.size() >= 2 ? clique.size() : 1;
}

}  // namespace ordim
