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
#include <random>
#include <set>

#include "support.hpp"
#include "ordim/dimensions.hpp"
#include "ordim/serialize.hpp"
#include "ordim/theorems.hpp"

namespace ordim {
namespace {

using support::matrix_of;
using support::random_sample;

std::vector<ConvexGeometry> small_population() {
  std::vector<ConvexGeometry> out;
  for (int n = 1; n <= 4; ++n) {
    for (auto& g : enumerate_geometries(n)) out.push_back(std::move(g));
  }
  return out;
}

const std::vector<ConvexGeometry>& population() {
  static const auto all = small_population();
  return all;
}

TEST(Properties, ClosureSatisfiesPosetAxioms) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_sample(1 + trial % 10, 0.3, rng);
    const Poset& p = s.poset;
    for (Element x = 0; x < p.size(); ++x) {
      ASSERT_TRUE(p.leq(x, x));
      for (Element y = 0; y < p.size(); ++y) {
        if (x != y) ASSERT_FALSE(p.leq(x, y) && p.leq(y, x));
        for (Element z = 0; z < p.size(); ++z) {
          if (p.leq(x, y) && p.leq(y, z)) ASSERT_TRUE(p.leq(x, z));
        }
      }
    }
  }
}

TEST(Properties, CriticalPairsSufficeForRealizers) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_sample(2 + trial % 7, 0.3, rng);
    const auto exts = oracle::linear_extensions(s.leq);
    Realizer r;
    std::vector<oracle::Order> chosen;
    const int t = 1 + trial % 3;
    for (int i = 0; i < t; ++i) {
      chosen.push_back(exts[rng() % exts.size()]);
      r.extensions.push_back(
          LinearExtension{{chosen.back().begin(), chosen.back().end()}});
    }
    auto covered = [&](const std::vector<oracle::Pair>& pairs) {
      return std::all_of(pairs.begin(), pairs.end(), [&](const oracle::Pair& p) {
        return oracle::reversible(chosen, {p});
      });
    };
    const bool all = covered(oracle::incomparable(s.leq));
    EXPECT_EQ(all, covered(oracle::critical(s.leq)));
    EXPECT_EQ(verify_realizer(s.poset, r).accepted, all);
  }
}

TEST(Properties, TwoCyclesAreStandardExamples) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_sample(4 + trial % 5, 0.3, rng);
    const auto crit = critical_pairs(s.poset);
    std::set<std::pair<IncPair, IncPair>> cycles;
    for (const auto& c : strict_alternating_cycles(s.poset, crit, 2)) {
      if (c.size() == 2) cycles.insert(std::minmax(c[0], c[1]));
    }
    bool any_s2 = false;
    for (std::size_t i = 0; i < crit.size(); ++i) {
      for (std::size_t j = i + 1; j < crit.size(); ++j) {
        const auto [p, q] = std::minmax(crit[i], crit[j]);
        const bool cycle = s.poset.leq(p.a, q.b) && s.poset.leq(q.a, p.b);
        EXPECT_EQ(cycles.count({p, q}) > 0, cycle);
        const std::set<Element> four{p.a, p.b, q.a, q.b};
        if (!cycle || four.size() < 4) continue;
        // Four distinct elements on a 2-cycle induce S_2.
        any_s2 = true;
        EXPECT_TRUE(s.poset.less(p.a, q.b) && s.poset.less(q.a, p.b));
        EXPECT_FALSE(s.poset.comparable(p.a, q.a));
        EXPECT_FALSE(s.poset.comparable(p.b, q.b));
      }
    }
    EXPECT_EQ(find_standard_example(s.poset, 2).has_value(), any_s2);
  }
}

TEST(Properties, BooleanRealizerIffQueriesSeparate) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_sample(2 + trial % 5, 0.3, rng);
    const int n = static_cast<int>(s.poset.size());
    const int t = 1 + trial % 3;
    BooleanRealizer r;
    for (int i = 0; i < t; ++i) {
      std::vector<Element> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      r.orders.push_back(order);
    }
    std::set<std::string> comparable, rest;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        std::string q;
        for (const auto& o : r.orders) {
          const auto px = std::find(o.begin(), o.end(), Element(x));
          const auto py = std::find(o.begin(), o.end(), Element(y));
          q += px < py ? '1' : '0';
        }
        (s.leq[x][y] ? comparable : rest).insert(q);
      }
    }
    bool disjoint = true;
    for (const auto& q : comparable) disjoint = disjoint && !rest.count(q);
    r.tau = comparable;
    EXPECT_EQ(verify_boolean_realizer(s.poset, r).accepted, disjoint);
  }
}

TEST(Properties, GeometriesAreGradedAndMeetClosed) {
  for (const auto& g : population()) {
    for (const auto& chain : maximal_chains(g)) {
      EXPECT_EQ(static_cast<int>(chain.size()), g.ground());
    }
    // Every cover adds exactly one element.
    for (const auto& [x, y] : hasse_covers(g.poset())) {
      EXPECT_EQ(g.set(y).size(), g.set(x).size() + 1);
    }
  }
}

TEST(Properties, CriticalPairBijectionOnAllSmallGeometries) {
  for (const auto& g : population()) {
    auto crit = critical_pairs(g.poset());
    std::vector<CriticalPair> mapped;
    for (std::size_t b : g.meet_irreducibles()) {
      const auto p = critical_pair_of_meet_irreducible(g, b);
      if (!g.poset().comparable(p.a, p.b)) mapped.push_back(p);
    }
    std::sort(crit.begin(), crit.end());
    std::sort(mapped.begin(), mapped.end());
    ASSERT_EQ(mapped, crit);
  }
}

TEST(Properties, VcDimensionEqualsMaxDownDegree) {
  for (const auto& g : population()) {
    ASSERT_EQ(vc_dimension_shattering(g.family()), max_down_degree(g.poset()));
  }
  for (int i = 0; i < 60; ++i) {
    const auto g = random_geometry(5 + i % 2, 1 + i % 7, 900 + i);
    ASSERT_EQ(vc_dimension_shattering(g.family()), max_down_degree(g.poset()));
  }
}

TEST(Properties, JoinsAndBooleanIntervals) {
  const auto& pop = population();
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& a = pop[rng() % pop.size()];
    const auto& b = pop[rng() % pop.size()];
    if (a.ground() != b.ground()) continue;
    const std::vector<ConvexGeometry> parts{a, b};
    const ConvexGeometry j = join_geometries(parts);  // validates
    EXPECT_TRUE(check_boolean_property(j).holds);
  }
  for (const auto& g : pop) EXPECT_TRUE(check_boolean_property(g).holds);
}

TEST(Properties, PknMonotoneInK) {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 1; k + 1 <= n - 2; ++k) {
      const ConvexGeometry g = pkn(PknParams{k, n});
      for (SubsetMask m : g.family().sets()) {
        EXPECT_TRUE(pkn_member(PknParams{k + 1, n}, m));
      }
    }
  }
}

TEST(Properties, PknDownDegrees) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      const ConvexGeometry g = pkn(PknParams{k, n});
      for (std::size_t i = 0; i < g.size(); ++i) {
        const int s = g.set(i).size();
        const std::size_t dd = down_degree(g.poset(), i);
        if (s == 0) continue;
        EXPECT_EQ(dd == 1, s == 1);
        if (s >= 2) EXPECT_EQ(dd, static_cast<std::size_t>(std::min(s, k + 1)));
      }
    }
  }
}

TEST(Properties, InequalityChainAndCertificates) {
  std::vector<ConvexGeometry> sample;
  for (std::size_t i = 0; i < population().size(); i += 7) {
    sample.push_back(population()[i]);
  }
  for (int i = 0; i < 20; ++i) sample.push_back(random_geometry(5, 1 + i % 6, 40 + i));
  for (const auto& g : sample) {
    const DimensionReport r = analyze(g);
    ASSERT_FALSE(r.partial);
    EXPECT_TRUE(r.chain_holds);
    EXPECT_GE(*r.cdim, *r.dim);
    EXPECT_GE(*r.dim, *r.maxdd);
    EXPECT_GE(*r.dim, *r.se);
    EXPECT_LE(*r.fdim, mpq_class(*r.dim));
    EXPECT_TRUE(verify_realizer(g.poset(), *r.realizer).accepted);
    ASSERT_TRUE(r.convex_realizer.has_value());
    EXPECT_EQ(r.convex_realizer->orders.size(), *r.cdim);
    EXPECT_TRUE(verify_convex_realizer(g, r.convex_realizer->orders));
    const auto fv = verify_fractional_realizer(g.poset(), *r.fractional_realizer);
    EXPECT_TRUE(fv.accepted);
    EXPECT_EQ(fv.total_weight, *r.fdim);
    // Minimality: no realizer one smaller exists by exhaustive search.
    if (g.size() <= 7 && *r.dim > 1) {
      EXPECT_EQ(oracle::dimension(matrix_of(g.poset())), static_cast<int>(*r.dim));
    }
  }
}

TEST(Properties, JsonRoundTrips) {
  const ConvexGeometry g = pkn(PknParams{1, 5});
  const io::Json gj = io::parse(io::dump(io::to_json(g)));
  EXPECT_EQ(io::geometry_from_json(gj).family(), g.family());

  const Poset s3 = standard_example(3);
  const Poset back = io::poset_from_json(io::parse(io::dump(io::to_json(s3))));
  EXPECT_EQ(matrix_of(back), matrix_of(s3));

  const io::ElementCodec codec(g);
  const DmResult dm = dm_dimension(g.poset());
  const Realizer r = io::realizer_from_json(io::to_json(dm.realizer, codec), codec);
  EXPECT_EQ(r.extensions, dm.realizer.extensions);

  const FdimResult f = fractional_dimension_by_reversible_sets(g.poset());
  const FractionalRealizer fr = io::fractional_realizer_from_json(
      io::parse(io::dump(io::to_json(f.realizer, codec))), codec);
  EXPECT_EQ(verify_fractional_realizer(g.poset(), fr).total_weight, f.value);

  const CdimResult c = convex_dimension(g);
  EXPECT_EQ(io::convex_realizer_from_json(io::to_json(*c.realizer)).orders,
            c.realizer->orders);

  const auto seq = binary_distinguishing(6);
  PknParams p;
  const auto seq_back = io::distinguishing_from_json(
      io::to_json(seq, PknParams{1, 6}), &p);
  EXPECT_EQ(p.n, 6);
  EXPECT_EQ(seq_back.sets, seq.sets);

  for (const char* q : {"0", "7", "-3/4", "22/7"}) {
    EXPECT_EQ(io::rational_text(io::rational_from_text(q)), q);
  }
  EXPECT_THROW(io::rational_from_text("1/0"), Error);
  EXPECT_THROW(io::parse("{\"kind\":"), Error);
}

TEST(Properties, ReportsAreDeterministic) {
  const ConvexGeometry g = random_geometry(5, 3, 77);
  const io::ElementCodec codec(g);
  const std::string a = io::dump(io::to_json(analyze(g), codec, false));
  const std::string b = io::dump(io::to_json(analyze(g), codec, false));
  EXPECT_EQ(a, b);
}

TEST(Properties, TheoremSuiteOnSmallPopulation) {
  TheoremSuiteConfig config;
  config.enumerate_up_to = 3;
  config.random = RandomPopulation{4, 0, 20, 5};
  config.named = true;
  config.pkn_n_max = 6;
  config.pn_max = 4;
  config.checks = all_checks();
  const auto result = run_theorem_suite(config);
  EXPECT_EQ(result.failures, 0u) << format_table(result);
  EXPECT_GT(result.instances, 26u + 20u);
  config.jobs = 3;
  const auto parallel = run_theorem_suite(config);
  EXPECT_EQ(io::dump(io::to_json(parallel)), io::dump(io::to_json(result)));
  config.checks.clear();
  EXPECT_THROW(validate_config(config), Error);
}

}  // namespace
}  // namespace ordim
