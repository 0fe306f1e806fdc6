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

#include "ordim/dimensions.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "core/clique.hpp"
#include "core/exact_lp.hpp"
#include "ordim/error.hpp"

namespace ordim {
namespace {

// Transitive closure of a poset plus the reversal arcs b -> a of the pairs
// added so far. Rows are reflexive up-sets.
class Closure {
 public:
  struct Undo {
    std::vector<std::pair<Element, Bitset>> rows;
  };

  explicit Closure(const Poset& poset) {
    reach_.reserve(poset.size());
    for (Element x = 0; x < poset.size(); ++x) {
      reach_.push_back(poset.up_set(x));
    }
  }

  bool can_reverse(IncPair p) const { return !reach_[p.a].test(p.b); }

  Undo reverse(IncPair p) {
    Undo undo;
    const Bitset add = reach_[p.a];
    for (Element x = 0; x < reach_.size(); ++x) {
      if (reach_[x].test(p.b) && !add.is_subset_of(reach_[x])) {
        undo.rows.emplace_back(x, reach_[x]);
        reach_[x] |= add;
      }
    }
    return undo;
  }

  void restore(Undo& undo) {
    for (auto& [x, row] : undo.rows) reach_[x] = std::move(row);
  }

  // Predecessor counts strictly increase along the closure order.
  LinearExtension extension() const {
    const std::size_t n = reach_.size();
    std::vector<std::size_t> below(n, 0);
    for (Element y = 0; y < n; ++y) {
      for (auto x = reach_[y].find_first(); x != Bitset::npos;
           x = reach_[y].find_next(x)) {
        ++below[x];
      }
    }
    LinearExtension ext;
    ext.order.resize(n);
    std::iota(ext.order.begin(), ext.order.end(), Element{0});
    std::stable_sort(ext.order.begin(), ext.order.end(),
                     [&](Element x, Element y) { return below[x] < below[y]; });
    return ext;
  }

 private:
  std::vector<Bitset> reach_;
};

Realizer realizer_from_classes(const std::vector<Closure>& classes) {
  Realizer realizer;
  for (const Closure& c : classes) {
    realizer.extensions.push_back(c.extension());
  }
  return realizer;
}

// Exact t-coloring of the critical pairs into reversible classes.
class ColoringSearch {
 public:
  ColoringSearch(const Poset& poset, const std::vector<IncPair>& pairs,
                 const std::vector<std::size_t>& degree, std::size_t colors,
                 std::uint64_t budget, std::uint64_t& nodes)
      : poset_(poset),
        pairs_(pairs),
        degree_(degree),
        colors_(colors),
        budget_(budget),
        nodes_(nodes),
        assigned_(pairs.size(), false) {}

  std::optional<Realizer> run() {
    if (!dfs(pairs_.size())) return std::nullopt;
    while (classes_.size() < colors_) classes_.emplace_back(poset_);
    return realizer_from_classes(classes_);
  }

 private:
  bool dfs(std::size_t remaining) {
    if (remaining == 0) return true;
    const std::size_t used = classes_.size();
    const std::size_t fresh = used < colors_ ? 1 : 0;
    std::size_t best = pairs_.size();
    std::size_t best_options = std::numeric_limits<std::size_t>::max();
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      if (assigned_[p]) continue;
      std::size_t options = fresh;
      for (const Closure& c : classes_) options += c.can_reverse(pairs_[p]);
      if (options == 0) return false;
      if (options < best_options ||
          (options == best_options && degree_[p] > degree_[best])) {
        best = p;
        best_options = options;
      }
    }
    assigned_[best] = true;
    for (std::size_t c = 0; c < used + fresh; ++c) {
      if (c < used && !classes_[c].can_reverse(pairs_[best])) continue;
      if (++nodes_ > budget_) {
        throw BudgetExceeded("dimension search exceeded its node budget",
                             colors_, 0);
      }
      if (c == used) classes_.emplace_back(poset_);
      auto undo = classes_[c].reverse(pairs_[best]);
      if (dfs(remaining - 1)) return true;
      classes_[c].restore(undo);
      if (c == used) classes_.pop_back();
    }
    assigned_[best] = false;
    return false;
  }

  const Poset& poset_;
  const std::vector<IncPair>& pairs_;
  const std::vector<std::size_t>& degree_;
  std::size_t colors_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<bool> assigned_;
  std::vector<Closure> classes_;
};

// Pattern of reversed pairs (a above b) for one extension.
Bitset reversal_pattern(std::span<const IncPair> pairs,
                        const LinearExtension& ext) {
  std::vector<std::size_t> pos(ext.order.size());
  for (std::size_t i = 0; i < ext.order.size(); ++i) pos[ext.order[i]] = i;
  Bitset pattern(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    if (pos[pairs[r].a] > pos[pairs[r].b]) pattern.set(r);
  }
  return pattern;
}

// Solves the covering LP over the given columns, keeping only maximal
// distinct patterns.
FdimResult solve_fractional(const Poset& poset, std::vector<IncPair> pairs,
                            const std::map<Bitset, LinearExtension>& columns) {
  FdimResult result;
  result.pairs = std::move(pairs);
  if (result.pairs.empty()) {
    result.value = 1;
    result.realizer.weighted.push_back(
        {*reversing_extension(poset, {}), mpq_class(1)});
    result.columns = 1;
    return result;
  }
  std::vector<const std::pair<const Bitset, LinearExtension>*> kept;
  for (const auto& entry : columns) {
    bool dominated = false;
    for (const auto& other : columns) {
      if (entry.first != other.first &&
          entry.first.is_subset_of(other.first)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(&entry);
  }
  std::vector<Bitset> rows;
  for (const auto* entry : kept) rows.push_back(entry->first);
  const auto solution = detail::solve_packing_lp(result.pairs.size(), rows);
  result.value = solution.value;
  result.dual = solution.y;
  result.columns = kept.size();
  mpq_class total = 0;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    if (sgn(solution.x[j]) > 0) {
      result.realizer.weighted.push_back({kept[j]->second, solution.x[j]});
      total += solution.x[j];
    }
  }
  mpq_class dual_total = 0;
  for (const auto& y : solution.y) dual_total += y;
  if (total != result.value || dual_total != result.value) {
    throw Error(ErrorCode::kInvalidRealizer,
                "fractional LP primal and dual objectives differ");
  }
  return result;
}

std::map<Bitset, LinearExtension> extension_columns(
    const Poset& poset, std::span<const IncPair> pairs,
    std::uint64_t ext_limit) {
  std::map<Bitset, LinearExtension> columns;
  LinearExtensionEnumerator it(poset, ext_limit);
  try {
    while (auto ext = it.next()) {
      columns.try_emplace(reversal_pattern(pairs, *ext), std::move(*ext));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCountExceeded) throw;
    throw Error(ErrorCode::kTooManyExtensions,
                "more than " + std::to_string(ext_limit) +
                    " linear extensions; use certificate mode or the "
                    "reversible-set solver");
  }
  return columns;
}

struct PknMember {
  int i = 0;
  SubsetMask b;       // B, elements above i
  Element lower = 0;  // index of {i}
  Element upper = 0;  // index of [i-1] u B
};

std::vector<PknMember> pkn_members(const ConvexGeometry& g, PknParams params) {
  std::vector<PknMember> members;
  const SetFamily j = jkn(params);
  for (SubsetMask m : j.sets()) {
    int i = 1;
    while (m.contains(i)) ++i;
    members.push_back({i, m - SubsetMask::range(1, i - 1),
                       g.index_of(SubsetMask::of({i})), g.index_of(m)});
  }
  return members;
}

// Union of Y_j over j in B, per member.
std::vector<Bitset> member_unions(std::span<const PknMember> members,
                                  const DistinguishingSequence& seq) {
  std::vector<Bitset> unions;
  unions.reserve(members.size());
  for (const PknMember& m : members) {
    Bitset u(seq.t);
    for (int j : m.b.elements()) u |= seq.sets[j - 1];
    unions.push_back(std::move(u));
  }
  return unions;
}

void check_sequence_shape(PknParams params, const DistinguishingSequence& seq) {
  if (seq.sets.size() != static_cast<std::size_t>(params.n)) {
    throw Error(ErrorCode::kMalformedCertificate,
                "distinguishing sequence needs " + std::to_string(params.n) +
                    " sets, got " + std::to_string(seq.sets.size()));
  }
  for (const Bitset& y : seq.sets) {
    if (y.size() != seq.t) {
      throw Error(ErrorCode::kMalformedCertificate,
                  "distinguishing set over the wrong range");
    }
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

DmResult dm_dimension(const Poset& poset, std::uint64_t budget) {
  DmResult result;
  const auto crit = critical_pairs(poset);
  if (crit.empty()) {
    result.dimension = 1;
    result.clique_bound = 1;
    result.realizer.extensions.push_back(*reversing_extension(poset, {}));
    return result;
  }
  const auto conflicts = alternating_pair_graph(poset, crit);
  std::vector<std::size_t> degree(crit.size());
  for (std::size_t p = 0; p < crit.size(); ++p) {
    degree[p] = conflicts[p].count();
  }
  result.clique_bound = detail::maximum_clique(conflicts).size();
  const std::size_t lower = std::max<std::size_t>(2, result.clique_bound);

  // First fit, most conflicted pairs first.
  std::vector<std::size_t> order(crit.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return degree[p] > degree[q];
  });
  std::vector<Closure> greedy;
  for (std::size_t p : order) {
    auto fits = std::find_if(greedy.begin(), greedy.end(), [&](const Closure& c) {
      return c.can_reverse(crit[p]);
    });
    if (fits == greedy.end()) {
      greedy.emplace_back(poset);
      fits = std::prev(greedy.end());
    }
    fits->reverse(crit[p]);
  }
  while (greedy.size() < 2) greedy.emplace_back(poset);
  const std::size_t upper = greedy.size();

  for (std::size_t t = lower; t < upper; ++t) {
    try {
      ColoringSearch search(poset, crit, degree, t, budget, result.nodes);
      if (auto realizer = search.run()) {
        result.dimension = t;
        result.realizer = std::move(*realizer);
        break;
      }
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(e.what(), t, upper);
    }
  }
  if (result.dimension == 0) {
    result.dimension = upper;
    result.realizer = realizer_from_classes(greedy);
  }
  const Verdict verdict = verify_realizer(poset, result.realizer);
  if (!verdict.accepted) {
    throw Error(ErrorCode::kInvalidRealizer,
                "dimension search produced a bad realizer: " + verdict.detail);
  }
  return result;
}

CdimResult convex_dimension(const ConvexGeometry& g) {
  const auto irreducibles = g.meet_irreducibles();
  const WidthResult w = width(induced_subposet(g.poset(), irreducibles));
  CdimResult result;
  result.cdim = w.width;
  ConvexRealizer realizer;
  for (const auto& chain : w.chains) {
    std::vector<std::size_t> members;
    for (Element x : chain) members.push_back(irreducibles[x]);
    realizer.orders.push_back(extend_to_maximal_chain(g, std::move(members)));
  }
  if (verify_convex_realizer(g, realizer.orders)) {
    result.realizer = std::move(realizer);
  } else {
    result.warning =
        "chains through a minimum chain cover of the meet-irreducibles do not "
        "generate the geometry; certificate omitted";
  }
  return result;
}

FdimResult fractional_dimension(const Poset& poset, std::uint64_t ext_limit) {
  auto crit = critical_pairs(poset);
  auto columns = extension_columns(poset, crit, ext_limit);
  FdimResult result = solve_fractional(poset, std::move(crit), std::move(columns));
  if (!verify_fractional_realizer(poset, result.realizer).accepted) {
    result = fractional_dimension_all_pairs(poset, ext_limit);
    result.resolved_with_all_pairs = true;
  }
  return result;
}

FdimResult fractional_dimension_all_pairs(const Poset& poset,
                                          std::uint64_t ext_limit) {
  auto pairs = incomparable_pairs(poset);
  auto columns = extension_columns(poset, pairs, ext_limit);
  FdimResult result = solve_fractional(poset, std::move(pairs), std::move(columns));
  const auto verdict = verify_fractional_realizer(poset, result.realizer);
  if (!verdict.accepted) {
    throw Error(ErrorCode::kInvalidRealizer, verdict.detail);
  }
  return result;
}

FdimResult fractional_dimension_by_reversible_sets(const Poset& poset,
                                                   std::uint64_t budget) {
  const auto crit = critical_pairs(poset);
  std::uint64_t nodes = 0;
  std::map<Bitset, LinearExtension> columns;
  // Completes a reversible set to a maximal one, first fit by index.
  auto add_maximal = [&](Closure& closure, Bitset chosen) {
    for (std::size_t q = 0; q < crit.size(); ++q) {
      if (!chosen.test(q) && closure.can_reverse(crit[q])) {
        closure.reverse(crit[q]);
        chosen.set(q);
      }
    }
    columns.try_emplace(std::move(chosen), closure.extension());
  };
  for (std::size_t p = 0; p < crit.size(); ++p) {
    Closure closure(poset);
    closure.reverse(crit[p]);
    Bitset chosen(crit.size());
    chosen.set(p);
    add_maximal(closure, std::move(chosen));
  }

  // Column generation: price the heaviest reversible set under the current
  // packing values until none weighs more than 1.
  while (true) {
    FdimResult result = solve_fractional(poset, crit, columns);
    if (crit.empty()) return result;
    std::vector<std::size_t> order;
    for (std::size_t p = 0; p < crit.size(); ++p) {
      if (sgn(result.dual[p]) > 0) order.push_back(p);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t p, std::size_t q) {
                       return result.dual[p] > result.dual[q];
                     });
    std::vector<mpq_class> suffix(order.size() + 1, mpq_class(0));
    for (std::size_t i = order.size(); i-- > 0;) {
      suffix[i] = suffix[i + 1] + result.dual[order[i]];
    }
    Closure closure(poset);
    Bitset chosen(crit.size());
    std::optional<Bitset> best;
    mpq_class best_weight = 1;
    auto dfs = [&](auto&& self, std::size_t pos, const mpq_class& weight) -> void {
      if (++nodes > budget) {
        throw BudgetExceeded("fractional column generation exceeded its budget",
                             1, 0);
      }
      if (weight > best_weight) {
        best_weight = weight;
        best = chosen;
      }
      if (pos == order.size() || weight + suffix[pos] <= best_weight) return;
      const std::size_t p = order[pos];
      if (closure.can_reverse(crit[p])) {
        auto undo = closure.reverse(crit[p]);
        chosen.set(p);
        self(self, pos + 1, weight + result.dual[p]);
        chosen.reset(p);
        closure.restore(undo);
      }
      self(self, pos + 1, weight);
    };
    dfs(dfs, 0, mpq_class(0));
    if (!best) {
      if (!verify_fractional_realizer(poset, result.realizer).accepted) {
        throw Error(ErrorCode::kInvalidRealizer,
                    "critical-pair LP optimum does not cover every "
                    "incomparable pair");
      }
      return result;
    }
    Closure fresh(poset);
    for (auto q = best->find_first(); q != Bitset::npos; q = best->find_next(q)) {
      fresh.reverse(crit[q]);
    }
    add_maximal(fresh, std::move(*best));
  }
}

FractionalRealizer pkn_fractional_certificate(PknParams params) {
  check_params(params);
  if (params.n > 14) {
    throw Error(ErrorCode::kParamRange,
                "fractional certificate needs n <= 14, got " +
                    std::to_string(params.n));
  }
  const ConvexGeometry g = pkn(params);
  const auto members = pkn_members(g, params);
  mpq_class weight(mpz_class(1) << (params.k + 1), mpz_class(1) << params.n);
  weight.canonicalize();
  FractionalRealizer realizer;
  for (std::uint64_t z = 1; z < (std::uint64_t{1} << params.n); ++z) {
    const SubsetMask zset(z);
    std::vector<IncPair> pairs;
    for (const PknMember& m : members) {
      if (zset.contains(m.i) && (m.b & zset).empty()) {
        pairs.push_back({m.lower, m.upper});
      }
    }
    auto ext = reversing_extension(g.poset(), pairs);
    if (!ext) {
      throw Error(ErrorCode::kInvalidRealizer,
                  "pair set for Z = " + zset.compact(params.n) +
                      " is not reversible");
    }
    realizer.weighted.push_back({std::move(*ext), weight});
  }
  return realizer;
}

DistinguishingVerdict verify_distinguishing(PknParams params,
                                            const DistinguishingSequence& seq) {
  check_params(params);
  check_sequence_shape(params, seq);
  const SetFamily j = jkn(params);
  for (SubsetMask m : j.sets()) {
    int i = 1;
    while (m.contains(i)) ++i;
    Bitset rest = seq.sets[i - 1];
    for (int j : (m - SubsetMask::range(1, i - 1)).elements()) {
      rest -= seq.sets[j - 1];
    }
    if (rest.none()) return {false, m};
  }
  return {true, std::nullopt};
}

Realizer distinguishing_to_realizer(PknParams params,
                                    const DistinguishingSequence& seq) {
  return distinguishing_to_realizer(pkn(params), params, seq);
}

Realizer distinguishing_to_realizer(const ConvexGeometry& g, PknParams params,
                                    const DistinguishingSequence& seq) {
  const auto verdict = verify_distinguishing(params, seq);
  if (!verdict.accepted) {
    throw Error(ErrorCode::kNotDistinguishing,
                "no element separates J-member " +
                    verdict.failing->compact(params.n));
  }
  const auto members = pkn_members(g, params);
  const auto unions = member_unions(members, seq);
  Realizer realizer;
  for (std::size_t alpha = 0; alpha < seq.t; ++alpha) {
    std::vector<IncPair> pairs;
    for (std::size_t r = 0; r < members.size(); ++r) {
      if (seq.sets[members[r].i - 1].test(alpha) && !unions[r].test(alpha)) {
        pairs.push_back({members[r].lower, members[r].upper});
      }
    }
    auto ext = reversing_extension(g.poset(), pairs);
    if (!ext) {
      throw Error(ErrorCode::kNotDistinguishing,
                  "class " + std::to_string(alpha + 1) + " is not reversible");
    }
    realizer.extensions.push_back(std::move(*ext));
  }
  return realizer;
}

DistinguishingSequence realizer_to_distinguishing(PknParams params,
                                                  const Realizer& realizer) {
  const ConvexGeometry g = pkn(params);
  const Verdict verdict = verify_realizer(g.poset(), realizer);
  if (!verdict.accepted) {
    throw Error(ErrorCode::kInvalidRealizer, verdict.detail);
  }
  DistinguishingSequence seq;
  seq.t = realizer.extensions.size();
  seq.sets.assign(params.n, Bitset(seq.t));
  const auto members = pkn_members(g, params);
  for (std::size_t alpha = 0; alpha < seq.t; ++alpha) {
    const auto& order = realizer.extensions[alpha].order;
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const PknMember& m : members) {
      if (pos[m.lower] > pos[m.upper]) seq.sets[m.i - 1].set(alpha);
    }
  }
  return seq;
}

DistinguishingSequence binary_distinguishing(int n) {
  if (n < 3 || n > kMaxGround) {
    throw Error(ErrorCode::kParamRange,
                "binary construction needs 3 <= n <= 64, got " +
                    std::to_string(n));
  }
  DistinguishingSequence seq;
  seq.t = std::bit_width(static_cast<unsigned>(n));
  // Reverse of the canonical linear extension of 2^t, truncated to n sets.
  std::vector<SubsetMask> cube;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << seq.t); ++bits) {
    cube.emplace_back(bits);
  }
  std::sort(cube.begin(), cube.end(), canonical_less);
  std::reverse(cube.begin(), cube.end());
  for (int i = 0; i < n; ++i) {
    seq.sets.emplace_back(seq.t, cube[i].bits());
  }
  return seq;
}

std::size_t randomized_distinguishing_length(PknParams params) {
  check_params(params);
  return static_cast<std::size_t>(std::floor(
      (params.k + 1) * std::ldexp(1.0, params.k + 2) * std::log(params.n)));
}

RandomizedDistinguishing randomized_distinguishing(PknParams params,
                                                   std::uint64_t seed,
                                                   int max_tries) {
  const std::size_t t = randomized_distinguishing_length(params);
  Rng rng(seed);
  RandomizedDistinguishing out;
  out.sequence.t = t;
  for (out.tries = 1; out.tries <= max_tries; ++out.tries) {
    out.sequence.sets.assign(params.n, Bitset(t));
    for (Bitset& y : out.sequence.sets) {
      for (std::size_t alpha = 0; alpha < t; ++alpha) {
        if (rng.coin()) y.set(alpha);
      }
    }
    if (verify_distinguishing(params, out.sequence).accepted) return out;
  }
  throw Error(ErrorCode::kMaxTriesExceeded,
              "no distinguishing sequence after " +
                  std::to_string(max_tries) + " tries");
}

BdimResult boolean_dimension_exact(const Poset& poset, std::size_t max_t,
                                   std::uint64_t budget) {
  const std::size_t n = poset.size();
  if (n > 6 || max_t < 1 || max_t > 6) {
    throw Error(ErrorCode::kParamRange,
                "exact Boolean dimension needs at most 6 elements and "
                "1 <= max_t <= 6");
  }
  BdimResult result;
  if (n <= 1) {
    result.bdim = 1;
    result.realizer.orders.push_back(std::vector<Element>(n, 0));
    return result;
  }
  struct OrderedPair {
    Element x, y;
    bool less;
  };
  std::vector<OrderedPair> pairs;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != y) pairs.push_back({x, y, poset.less(x, y)});
    }
  }
  // Orders with element 0 before element 1; reversing an order only flips
  // one query coordinate, which tau absorbs.
  std::vector<std::vector<Element>> orders;
  std::vector<std::vector<std::uint8_t>> bits;
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  do {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
    if (pos[0] > pos[1]) continue;
    std::vector<std::uint8_t> row;
    for (const auto& p : pairs) row.push_back(pos[p.x] < pos[p.y] ? 1 : 0);
    orders.push_back(perm);
    bits.push_back(std::move(row));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::uint32_t> code(pairs.size(), 0);
  std::vector<std::size_t> chosen;
  auto feasible = [&] {
    std::uint64_t comparable = 0;
    std::uint64_t other = 0;
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      (pairs[q].less ? comparable : other) |= std::uint64_t{1} << code[q];
    }
    return (comparable & other) == 0;
  };
  // Strictly increasing tuples: a repeated order never separates anything.
  auto dfs = [&](auto&& self, std::size_t from, std::size_t t) -> bool {
    if (chosen.size() == t) {
      if (++result.nodes > budget) {
        throw BudgetExceeded("Boolean dimension search exceeded its budget",
                             t, 0);
      }
      return feasible();
    }
    const std::size_t level = chosen.size();
    for (std::size_t o = from; o + (t - level) <= orders.size(); ++o) {
      chosen.push_back(o);
      for (std::size_t q = 0; q < pairs.size(); ++q) {
        code[q] |= std::uint32_t{bits[o][q]} << level;
      }
      if (self(self, o + 1, t)) return true;
      for (std::size_t q = 0; q < pairs.size(); ++q) {
        code[q] &= ~(std::uint32_t{1} << level);
      }
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t t = 1; t <= max_t; ++t) {
    std::fill(code.begin(), code.end(), 0);
    chosen.clear();
    if (!dfs(dfs, 0, t)) continue;
    result.bdim = t;
    for (std::size_t o : chosen) result.realizer.orders.push_back(orders[o]);
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      if (!pairs[q].less) continue;
      std::string s;
      for (std::size_t l = 0; l < t; ++l) s += ((code[q] >> l) & 1) ? '1' : '0';
      result.realizer.tau.insert(std::move(s));
    }
    break;
  }
  return result;
}

DimensionReport analyze(const Poset& poset, const AnalyzeOptions& options) {
  DimensionReport report;
  if (options.dim) {
    const auto start = std::chrono::steady_clock::now();
    try {
      DmResult dm = dm_dimension(poset, options.budget);
      report.dim = dm.dimension;
      report.realizer = std::move(dm.realizer);
    } catch (const BudgetExceeded& e) {
      report.partial = true;
      report.dim_lower = e.lower_bound();
      report.dim_upper = e.upper_bound();
      report.notes.push_back(std::string("dim: ") + e.what());
    }
    report.timings_ms.emplace_back("dim", elapsed_ms(start));
  }
  if (options.se) {
    const auto start = std::chrono::steady_clock::now();
    report.se = standard_example_number(poset);
    if (*report.se >= 2) {
      report.standard_example = find_standard_example(poset, *report.se);
    }
    report.timings_ms.emplace_back("se", elapsed_ms(start));
  }
  if (options.maxdd) report.maxdd = max_down_degree(poset);
  if (options.fdim) {
    const auto start = std::chrono::steady_clock::now();
    try {
      FdimResult f;
      try {
        f = fractional_dimension(poset, options.ext_limit);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kTooManyExtensions) throw;
        report.notes.push_back(
            "fdim: too many linear extensions, columns taken from maximal "
            "reversible sets of critical pairs");
        f = fractional_dimension_by_reversible_sets(poset, options.budget);
      }
      report.fdim = f.value;
      report.fractional_realizer = std::move(f.realizer);
    } catch (const BudgetExceeded& e) {
      report.partial = true;
      report.notes.push_back(std::string("fdim: ") + e.what());
    }
    report.timings_ms.emplace_back("fdim", elapsed_ms(start));
  }
  if (report.dim && report.se && *report.dim < *report.se) {
    report.chain_holds = false;
  }
  if (report.dim && report.fdim && *report.fdim > *report.dim) {
    report.chain_holds = false;
  }
  return report;
}

DimensionReport analyze(const ConvexGeometry& g, const AnalyzeOptions& options) {
  DimensionReport report = analyze(g.poset(), options);
  if (options.cdim) {
    const auto start = std::chrono::steady_clock::now();
    CdimResult c = convex_dimension(g);
    report.cdim = c.cdim;
    report.convex_realizer = std::move(c.realizer);
    if (!c.warning.empty()) report.notes.push_back("cdim: " + c.warning);
    report.timings_ms.emplace_back("cdim", elapsed_ms(start));
  }
  if (options.vcdim) report.vcdim = vc_dimension_shattering(g.family());
  if (report.cdim && report.dim && *report.cdim < *report.dim) {
    report.chain_holds = false;
  }
  if (report.dim && report.maxdd && *report.dim < *report.maxdd) {
    report.chain_holds = false;
  }
  return report;
}

}  // namespace ordim
