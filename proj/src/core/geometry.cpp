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

#include "ordim/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace ordim {

SubsetMask SubsetMask::of(std::initializer_list<int> elements) {
  std::vector<int> v(elements);
  return of(std::span<const int>(v));
}

SubsetMask SubsetMask::of(std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGround) {
      throw Error(ErrorCode::kParamRange,
                  "element " + std::to_string(e) + " outside [1, 64]");
    }
    bits |= std::uint64_t{1} << (e - 1);
  }
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string SubsetMask::compact(int ground) const {
  if (bits_ == 0) return "∅";
  std::string out;
  for (int e : elements()) {
    if (ground > 9 && !out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

SetFamily::SetFamily(int ground, std::vector<SubsetMask> sets)
    : ground_(ground), sets_(std::move(sets)) {
  if (ground < 1 || ground > kMaxGround) {
    throw Error(ErrorCode::kParamRange,
                "ground set size must lie in [1, 64], got " +
                    std::to_string(ground));
  }
  const SubsetMask full = SubsetMask::full(ground);
  for (SubsetMask m : sets_) {
    if (!m.is_subset_of(full)) {
      throw Error(ErrorCode::kParamRange,
                  "set uses elements beyond the ground set");
    }
  }
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  index_.reserve(sets_.size());
  for (std::size_t i = 0; i < sets_.size(); ++i) index_.emplace(sets_[i], i);
}

std::optional<std::size_t> SetFamily::index_of(SubsetMask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kBase:
      return "Base";
    case Axiom::kIntersection:
      return "Intersection";
    case Axiom::kExtension:
      return "Extension";
  }
  return "?";
}

ConvexGeometry validate_convex_geometry(SetFamily family,
                                        std::vector<std::string> labels) {
  const int n = family.ground();
  const SubsetMask full = SubsetMask::full(n);
  if (!family.contains(SubsetMask())) {
    throw AxiomViolation(Axiom::kBase, SubsetMask(), SubsetMask(),
                         "Base axiom violated: the empty set is missing");
  }
  if (!family.contains(full)) {
    throw AxiomViolation(Axiom::kBase, full, SubsetMask(),
                         "Base axiom violated: the ground set is missing");
  }
  const auto& sets = family.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!family.contains(sets[i] & sets[j])) {
        throw AxiomViolation(
            Axiom::kIntersection, sets[i], sets[j],
            "Intersection axiom violated: " + sets[i].compact(n) + " and " +
                sets[j].compact(n) + " meet outside the family");
      }
    }
  }
  std::vector<std::vector<Element>> covers(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int e = 1; e <= n; ++e) {
      if (sets[i].contains(e)) continue;
      if (auto j = family.index_of(sets[i].with(e))) covers[i].push_back(*j);
    }
    if (covers[i].empty() && sets[i] != full) {
      throw AxiomViolation(Axiom::kExtension, sets[i], SubsetMask(),
                           "Extension axiom violated: " + sets[i].compact(n) +
                               " has no one-element extension");
    }
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kParamRange,
                "element label count does not match ground set");
  }

  const std::size_t size = sets.size();
  std::vector<Bitset> up(size, Bitset(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      if (sets[i].is_subset_of(sets[j])) up[i].set(j);
    }
  }
  ConvexGeometry g;
  g.family_ = std::move(family);
  g.element_labels_ = std::move(labels);
  std::vector<std::string> set_labels;
  for (std::size_t i = 0; i < size; ++i) set_labels.push_back(g.set_label(i));
  g.poset_ = Poset::from_up_sets_and_covers(std::move(up), std::move(covers),
                                            std::move(set_labels));
  for (std::size_t i = 0; i < size; ++i) {
    if (g.poset_.upper_covers(i).size() == 1) g.meet_irr_.push_back(i);
    if (g.poset_.lower_covers(i).size() == 1) g.join_irr_.push_back(i);
  }
  return g;
}

std::size_t ConvexGeometry::index_of(SubsetMask m) const {
  auto i = family_.index_of(m);
  if (!i) {
    throw Error(ErrorCode::kParamRange,
                "set " + m.compact(ground()) + " is not in the geometry");
  }
  return *i;
}

std::string ConvexGeometry::set_label(std::size_t i) const {
  const SubsetMask m = family_[i];
  if (element_labels_.empty() || m.empty()) return m.compact(ground());
  std::string out;
  for (int e : m.elements()) {
    if (!out.empty()) out += ' ';
    out += element_labels_[e - 1];
  }
  return out;
}

SubsetMask meet(const ConvexGeometry& g, SubsetMask a, SubsetMask b) {
  g.index_of(a);
  g.index_of(b);
  return a & b;
}

SubsetMask join(const ConvexGeometry& g, SubsetMask a, SubsetMask b) {
  g.index_of(a);
  g.index_of(b);
  const SubsetMask both = a | b;
  SubsetMask result = SubsetMask::full(g.ground());
  for (SubsetMask c : g.family().sets()) {
    if (both.is_subset_of(c)) result = result & c;
  }
  return result;
}

std::vector<std::size_t> meet_irreducibles(const ConvexGeometry& g) {
  return g.meet_irreducibles();
}

std::vector<std::size_t> join_irreducibles(const ConvexGeometry& g) {
  return g.join_irreducibles();
}

CriticalPair critical_pair_of_meet_irreducible(const ConvexGeometry& g,
                                               std::size_t b_index) {
  const auto& covers = g.poset().upper_covers(b_index);
  if (covers.size() != 1) {
    throw Error(ErrorCode::kNotMeetIrreducible,
                g.set_label(b_index) + " is not meet-irreducible");
  }
  const SubsetMask cover = g.set(covers.front());
  const int alpha = (cover - g.set(b_index)).elements().front();
  // Least member holding alpha inside the cover; alpha is its only extreme
  // point, so its one lower cover lies in B.
  SubsetMask a = cover;
  for (SubsetMask u : g.family().sets()) {
    if (u.contains(alpha) && u.is_subset_of(cover)) a = a & u;
  }
  return {g.index_of(a), b_index};
}

std::size_t vc_dimension_shattering(const SetFamily& family) {
  const int n = family.ground();
  auto shattered = [&](SubsetMask s) {
    std::unordered_set<std::uint64_t> traces;
    const std::size_t need = std::size_t{1} << s.size();
    for (SubsetMask a : family.sets()) {
      traces.insert((a & s).bits());
      if (traces.size() == need) return true;
    }
    return false;
  };
  std::vector<SubsetMask> level;
  for (int e = 1; e <= n; ++e) {
    if (shattered(SubsetMask::of({e}))) level.push_back(SubsetMask::of({e}));
  }
  std::size_t dim = 0;
  while (!level.empty()) {
    ++dim;
    std::unordered_set<SubsetMask, SubsetMaskHash> known(level.begin(),
                                                         level.end());
    std::vector<SubsetMask> next;
    for (SubsetMask s : level) {
      const int top = 64 - std::countl_zero(s.bits());
      for (int e = top + 1; e <= n; ++e) {
        const SubsetMask candidate = s.with(e);
        bool faces_ok = true;
        for (int x : candidate.elements()) {
          if (x != e && !known.count(candidate.without(x))) {
            faces_ok = false;
            break;
          }
        }
        if (faces_ok && shattered(candidate)) next.push_back(candidate);
      }
    }
    level = std::move(next);
  }
  return dim;
}

BooleanPropertyResult check_boolean_property(const Poset& lattice) {
  const std::size_t n = lattice.size();
  BooleanPropertyResult result;
  for (Element y = 0; y < n; ++y) {
    const auto& lower = lattice.lower_covers(y);
    if (lower.empty()) continue;
    Bitset common = lattice.down_set(lower.front());
    for (Element c : lower) common &= lattice.down_set(c);
    std::optional<Element> bottom;
    for (Element z = common.find_first(); z != Bitset::npos;
         z = common.find_next(z)) {
      if (common.is_subset_of(lattice.down_set(z))) bottom = z;
    }
    const std::size_t m = lower.size();
    bool ok = bottom.has_value() && m < 63;
    std::vector<Element> interval;
    std::vector<Element> atoms;
    if (ok) {
      Bitset between = lattice.up_set(*bottom) & lattice.down_set(y);
      for (Element z = between.find_first(); z != Bitset::npos;
           z = between.find_next(z)) {
        interval.push_back(z);
      }
      for (Element a : lattice.upper_covers(*bottom)) {
        if (between.test(a)) atoms.push_back(a);
      }
      ok = interval.size() == (std::size_t{1} << m) && atoms.size() == m;
    }
    if (ok) {
      std::vector<std::uint64_t> image(interval.size());
      std::vector<bool> hit(interval.size(), false);
      for (std::size_t i = 0; i < interval.size() && ok; ++i) {
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < m; ++k) {
          if (lattice.leq(atoms[k], interval[i])) bits |= std::uint64_t{1} << k;
        }
        image[i] = bits;
        if (hit[bits]) ok = false;
        else hit[bits] = true;
      }
      for (std::size_t i = 0; i < interval.size() && ok; ++i) {
        for (std::size_t j = 0; j < interval.size() && ok; ++j) {
          bool order = lattice.leq(interval[i], interval[j]);
          bool bits = (image[i] & ~image[j]) == 0;
          if (order != bits) ok = false;
        }
      }
    }
    if (!ok) {
      result.holds = false;
      result.failing = y;
      return result;
    }
  }
  return result;
}

BooleanPropertyResult check_boolean_property(const ConvexGeometry& g) {
  return check_boolean_property(g.poset());
}

SetFamily initial_segments(int ground, std::span<const int> order) {
  if (order.size() != static_cast<std::size_t>(ground)) {
    throw Error(ErrorCode::kMalformedCertificate,
                "order length does not match the ground set");
  }
  std::vector<SubsetMask> sets{SubsetMask()};
  SubsetMask current;
  for (int e : order) {
    if (e < 1 || e > ground || current.contains(e)) {
      throw Error(ErrorCode::kMalformedCertificate,
                  "order is not a permutation of the ground set");
    }
    current = current.with(e);
    sets.push_back(current);
  }
  return SetFamily(ground, std::move(sets));
}

SetFamily join_families(int ground, std::span<const SetFamily> parts) {
  std::vector<SubsetMask> members;
  std::unordered_set<SubsetMask, SubsetMaskHash> seen;
  for (const SetFamily& part : parts) {
    if (part.ground() != ground) {
      throw Error(ErrorCode::kGroundMismatch,
                  "joined geometries have different ground sets");
    }
    for (SubsetMask m : part.sets()) {
      if (seen.insert(m).second) members.push_back(m);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const SubsetMask both = members[i] & members[j];
      if (seen.insert(both).second) members.push_back(both);
    }
  }
  return SetFamily(ground, std::move(members));
}

ConvexGeometry join_geometries(std::span<const ConvexGeometry> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::kParamRange, "join of zero geometries");
  }
  std::vector<SetFamily> families;
  for (const auto& g : parts) families.push_back(g.family());
  return validate_convex_geometry(
      join_families(parts.front().ground(), families),
      parts.front().element_labels());
}

bool verify_convex_realizer(const ConvexGeometry& g,
                            std::span<const std::vector<int>> orders) {
  if (orders.empty()) return false;
  std::vector<SetFamily> chains;
  for (const auto& order : orders) {
    chains.push_back(initial_segments(g.ground(), order));
  }
  return join_families(g.ground(), chains) == g.family();
}

std::vector<std::vector<int>> maximal_chains(const ConvexGeometry& g) {
  const int n = g.ground();
  std::vector<std::vector<int>> chains;
  std::vector<int> order;
  auto walk = [&](auto&& self, SubsetMask current) -> void {
    if (current.size() == n) {
      chains.push_back(order);
      return;
    }
    for (int e = 1; e <= n; ++e) {
      if (current.contains(e) || !g.family().contains(current.with(e))) {
        continue;
      }
      order.push_back(e);
      self(self, current.with(e));
      order.pop_back();
    }
  };
  walk(walk, SubsetMask());
  return chains;
}

std::vector<int> extend_to_maximal_chain(const ConvexGeometry& g,
                                         std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
    return canonical_less(g.set(x), g.set(y));
  });
  std::vector<SubsetMask> targets;
  for (std::size_t i : members) targets.push_back(g.set(i));
  targets.push_back(SubsetMask::full(g.ground()));
  std::vector<int> order;
  SubsetMask current;
  for (SubsetMask target : targets) {
    if (!current.is_subset_of(target)) {
      throw Error(ErrorCode::kParamRange, "members do not form a chain");
    }
    while (current != target) {
      bool stepped = false;
      for (int e : (target - current).elements()) {
        if (g.family().contains(current.with(e))) {
          current = current.with(e);
          order.push_back(e);
          stepped = true;
          break;
        }
      }
      if (!stepped) {
        throw Error(ErrorCode::kParamRange,
                    "no one-element step inside an interval");
      }
    }
  }
  return order;
}

std::string hasse_dot(const ConvexGeometry& g) {
  std::ostringstream out;
  std::vector<bool> irreducible(g.size(), false);
  for (std::size_t i : g.meet_irreducibles()) irreducible[i] = true;
  out << "graph hasse {\n  rankdir=BT;\n  node [shape=box, style=filled];\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "  s" << i << " [label=\"" << g.set_label(i) << "\", fillcolor="
        << (irreducible[i] ? "white" : "gray") << "];\n";
  }
  for (const auto& [x, y] : hasse_covers(g.poset())) {
    out << "  s" << x << " -- s" << y << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ordim
