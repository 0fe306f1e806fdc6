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

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "ordim/constructions.hpp"
#include "ordim/geometry.hpp"

namespace ordim {
namespace {

SetFamily family(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<SubsetMask> masks;
  for (auto s : sets) masks.push_back(SubsetMask::of(s));
  return SetFamily(n, masks);
}

std::vector<std::uint64_t> raw(const SetFamily& f) {
  std::vector<std::uint64_t> out;
  for (SubsetMask m : f.sets()) out.push_back(m.bits());
  return out;
}

std::vector<ConvexGeometry> random_population(int count) {
  std::vector<ConvexGeometry> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(random_geometry(3 + i % 4, 1 + i % 5, 100 + i));
  }
  return out;
}

TEST(SubsetMask, Basics) {
  const SubsetMask m = SubsetMask::of({1, 3, 4});
  EXPECT_EQ(m.bits(), 0b1101u);
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.elements(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(m.compact(5), "134");
  EXPECT_TRUE(SubsetMask::of({1, 3}).is_subset_of(m));
  EXPECT_EQ(SubsetMask::full(4) - m, SubsetMask::of({2}));
  EXPECT_TRUE(canonical_less(SubsetMask::of({4}), SubsetMask::of({1, 2})));
}

TEST(SetFamily, SortsAndDeduplicates) {
  const SetFamily f = family(3, {{1, 2, 3}, {}, {2}, {2}, {1}});
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0], SubsetMask());
  EXPECT_EQ(f[1], SubsetMask::of({1}));
  EXPECT_EQ(f.index_of(SubsetMask::of({2})), 2u);
  EXPECT_FALSE(f.index_of(SubsetMask::of({3})).has_value());
  EXPECT_THROW(SetFamily(0, {}), Error);
  EXPECT_THROW(family(2, {{3}}), Error);
}

TEST(Axioms, WitnessesInCheckOrder) {
  auto violation = [](const SetFamily& f) -> AxiomViolation {
    try {
      validate_convex_geometry(f);
    } catch (const AxiomViolation& v) {
      return v;
    }
    ADD_FAILURE() << "family accepted";
    return AxiomViolation(Axiom::kBase, {}, {}, "");
  };
  EXPECT_EQ(violation(family(2, {{1}, {1, 2}})).axiom(), Axiom::kBase);
  EXPECT_EQ(violation(family(2, {{}, {1}})).axiom(), Axiom::kBase);

  const auto inter = violation(family(3, {{}, {1, 2}, {2, 3}, {1}, {3}, {1, 2, 3}}));
  EXPECT_EQ(inter.axiom(), Axiom::kIntersection);
  EXPECT_EQ(inter.witness() & inter.other(), SubsetMask::of({2}));

  const auto ext = violation(family(3, {{}, {1}, {1, 2, 3}}));
  EXPECT_EQ(ext.axiom(), Axiom::kExtension);
  EXPECT_EQ(ext.witness(), SubsetMask::of({1}));
  EXPECT_EQ(ext.code(), ErrorCode::kAxiomViolation);
}

TEST(Axioms, AgreeWithOracleOnAllFamiliesOfThree) {
  for (std::uint64_t choice = 0; choice < 256; ++choice) {
    std::vector<SubsetMask> sets;
    std::vector<std::uint64_t> bits;
    for (int s = 0; s < 8; ++s) {
      if (choice >> s & 1) {
        sets.push_back(SubsetMask(s));
        bits.push_back(s);
      }
    }
    bool accepted = true;
    try {
      validate_convex_geometry(SetFamily(3, sets));
    } catch (const AxiomViolation&) {
      accepted = false;
    }
    EXPECT_EQ(accepted, oracle::is_convex_geometry(3, bits)) << choice;
  }
}

TEST(Geometry, InclusionPosetAndLattice) {
  for (const auto& g : random_population(40)) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        const SubsetMask a = g.set(i), b = g.set(j);
        ASSERT_EQ(g.poset().leq(i, j), a.is_subset_of(b));
        EXPECT_EQ(meet(g, a, b), a & b);
        // Join is the least member containing both.
        const SubsetMask u = join(g, a, b);
        EXPECT_TRUE(g.family().contains(u));
        EXPECT_TRUE((a | b).is_subset_of(u));
        for (SubsetMask c : g.family().sets()) {
          if ((a | b).is_subset_of(c)) EXPECT_TRUE(u.is_subset_of(c));
        }
      }
    }
  }
}

TEST(Geometry, IrreduciblesByCoverCounts) {
  for (const auto& g : random_population(40)) {
    std::vector<std::size_t> mi, ji;
    for (std::size_t i = 0; i < g.size(); ++i) {
      int up = 0, down = 0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j) continue;
        bool upper = g.set(i).is_subset_of(g.set(j));
        bool lower = g.set(j).is_subset_of(g.set(i));
        for (std::size_t k = 0; k < g.size(); ++k) {
          if (k == i || k == j) continue;
          const SubsetMask s = g.set(k);
          if (upper && g.set(i).is_subset_of(s) && s.is_subset_of(g.set(j))) upper = false;
          if (lower && g.set(j).is_subset_of(s) && s.is_subset_of(g.set(i))) lower = false;
        }
        up += upper;
        down += lower;
      }
      if (up == 1) mi.push_back(i);
      if (down == 1) ji.push_back(i);
    }
    EXPECT_EQ(meet_irreducibles(g), mi);
    EXPECT_EQ(join_irreducibles(g), ji);
  }
}

TEST(Geometry, MeetIrreducibleCriticalPairs) {
  for (const auto& g : random_population(30)) {
    auto crit = critical_pairs(g.poset());
    std::vector<CriticalPair> mapped;
    for (std::size_t b : g.meet_irreducibles()) {
      const CriticalPair p = critical_pair_of_meet_irreducible(g, b);
      EXPECT_EQ(p.b, b);
      if (!g.poset().comparable(p.a, p.b)) mapped.push_back(p);
    }
    std::sort(mapped.begin(), mapped.end());
    std::sort(crit.begin(), crit.end());
    EXPECT_EQ(mapped, crit);
  }
  const ConvexGeometry b2 = boolean_algebra(2);
  try {
    critical_pair_of_meet_irreducible(b2, b2.index_of(SubsetMask()));
    FAIL() << "bottom of 2^[2] accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMeetIrreducible);
  }
}

TEST(Geometry, VcDimensionMatchesBruteForce) {
  for (const auto& g : random_population(60)) {
    EXPECT_EQ(static_cast<int>(vc_dimension_shattering(g.family())),
              oracle::vc_dimension(g.ground(), raw(g.family())));
  }
  EXPECT_EQ(vc_dimension_shattering(boolean_algebra(5).family()), 5u);
}

TEST(Geometry, BooleanPropertyHoldsForConvexGeometries) {
  for (const auto& g : random_population(40)) {
    EXPECT_TRUE(check_boolean_property(g).holds);
  }
  // The pentagon lattice has a non-Boolean interval above its bottom.
  const Poset pentagon = poset_from_relation(
      5, std::vector<std::pair<Element, Element>>{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  const auto r = check_boolean_property(pentagon);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.failing.has_value());
}

TEST(Geometry, InitialSegmentsAndJoin) {
  const std::vector<int> o1{2, 1, 3}, o2{3, 1, 2};
  const SetFamily c1 = initial_segments(3, o1);
  EXPECT_EQ(c1, family(3, {{}, {2}, {1, 2}, {1, 2, 3}}));
  EXPECT_THROW(initial_segments(3, std::vector<int>{1, 1, 2}), Error);

  const std::vector<ConvexGeometry> parts{linear_geometry(o1), linear_geometry(o2)};
  const ConvexGeometry j = join_geometries(parts);
  EXPECT_EQ(j.family(),
            family(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {1, 2, 3}}));
  const std::vector<std::vector<int>> orders{o1, o2};
  EXPECT_TRUE(verify_convex_realizer(j, orders));
  EXPECT_FALSE(verify_convex_realizer(j, std::span(orders).first(1)));

  const std::vector<ConvexGeometry> mismatch{linear_geometry(o1), boolean_algebra(2)};
  EXPECT_THROW(join_geometries(mismatch), Error);
}

TEST(Geometry, MaximalChainsRealizeTheGeometry) {
  for (const auto& g : random_population(30)) {
    const auto chains = maximal_chains(g);
    ASSERT_FALSE(chains.empty());
    EXPECT_TRUE(std::is_sorted(chains.begin(), chains.end()));
    EXPECT_TRUE(verify_convex_realizer(g, chains));
    for (std::size_t b : g.meet_irreducibles()) {
      const auto order = extend_to_maximal_chain(g, {b});
      const SetFamily segs = initial_segments(g.ground(), order);
      EXPECT_TRUE(segs.contains(g.set(b)));
      for (SubsetMask s : segs.sets()) EXPECT_TRUE(g.family().contains(s));
    }
  }
}

TEST(Geometry, HasseDotMarksMeetIrreducibles) {
  const ConvexGeometry b2 = boolean_algebra(2);
  const std::string dot = hasse_dot(b2);
  EXPECT_NE(dot.find("graph hasse"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 4 + 4 + 4);
  std::size_t white = 0;
  for (std::size_t p = dot.find("white"); p != std::string::npos;
       p = dot.find("white", p + 1)) {
    ++white;
  }
  EXPECT_EQ(white, b2.meet_irreducibles().size());
  EXPECT_EQ(white, 2u);
}

}  // namespace
}  // namespace ordim
