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

// Acceptance run: one PASS/FAIL/UNATTAINED line per criterion. Exits nonzero
// if any attainable check fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "ordim/dimensions.hpp"
#include "ordim/theorems.hpp"

namespace {

using namespace ordim;

struct Outcome {
  enum Status { kPass, kFail, kUnattained } status = kPass;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) failed_ += (failed_.empty() ? "" : "; ") + what;
  }
  int failures() const { return failures_; }
  Outcome outcome(const std::string& passed_detail) const {
    if (failures_ == 0) return {Outcome::kPass, passed_detail};
    return {Outcome::kFail, std::to_string(failures_) + " failed: " + failed_};
  }

 private:
  int failures_ = 0;
  std::string failed_;
};

std::size_t binomial(int n, int k) {
  std::size_t b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

std::size_t floor_lg(int n) { return std::bit_width(unsigned(n)) - 1; }

Outcome criterion1() {
  Checker c;
  std::string got;
  for (int n = 3; n <= 9; ++n) {
    const ConvexGeometry g = pkn(PknParams{1, n});
    const DmResult r = dm_dimension(g.poset(), kDefaultBudget);
    c.expect(r.dimension == 1 + floor_lg(n), "dim(P(1," + std::to_string(n) + "))");
    c.expect(verify_realizer(g.poset(), r.realizer).accepted, "realizer n=" + std::to_string(n));
    got += (got.empty() ? "" : " ") + std::to_string(r.dimension);
  }
  return c.outcome("dim(P(1,3..9)) = " + got);
}

Outcome criterion2() {
  Checker c;
  int count = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int n = k + 2; n <= 9; ++n) {
      const ConvexGeometry g = pkn(PknParams{k, n});
      const CdimResult r = convex_dimension(g);
      const std::string at = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
      c.expect(r.cdim == binomial(n - 1, k), "cdim" + at);
      c.expect(r.realizer && r.realizer->orders.size() == r.cdim &&
                   verify_convex_realizer(g, r.realizer->orders),
               "certificate" + at);
      ++count;
    }
  }
  return c.outcome(std::to_string(count) + " grid points, cdim = C(n-1,k) with verified convex realizers");
}

Outcome criterion3() {
  Checker c;
  std::string nodes;
  for (int n = 3; n <= 6; ++n) {
    const ConvexGeometry g = qn_pn(PnParams{n}).p;
    const DmResult d = dm_dimension(g.poset(), 10'000'000);
    c.expect(d.dimension == 3, "dim(P_" + std::to_string(n) + ")");
    c.expect(verify_realizer(g.poset(), d.realizer).accepted, "realizer");
    const CdimResult cd = convex_dimension(g);
    c.expect(cd.cdim == static_cast<std::size_t>(n + 1), "cdim(P_" + std::to_string(n) + ")");
    nodes += (nodes.empty() ? "" : ",") + std::to_string(d.nodes);
  }
  return c.outcome("dim(P_n) = 3, cdim(P_n) = n+1 for n = 3..6; search nodes " + nodes);
}

Outcome criterion4() {
  Checker c;
  std::size_t count = 0;
  auto check = [&](const ConvexGeometry& g) {
    c.expect(vc_dimension_shattering(g.family()) == max_down_degree(g.poset()),
             "vcdim != maxdd");
    ++count;
  };
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_geometries(n)) check(g);
  }
  for (int k = 1; k <= 3; ++k) {
    for (int n = k + 2; n <= 9; ++n) check(pkn(PknParams{k, n}));
  }
  for (int n = 3; n <= 6; ++n) {
    const auto f = qn_pn(PnParams{n});
    check(f.p);
    check(f.q);
  }
  for (int n = 1; n <= 6; ++n) {
    check(boolean_algebra(n));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::reverse(order.begin(), order.end());
    check(linear_geometry(order));
  }
  return c.outcome(std::to_string(count) + " geometries");
}

Outcome criterion5() {
  TheoremSuiteConfig config;
  config.enumerate_up_to = 4;
  config.random = RandomPopulation{5, 0, 200, 1};
  config.checks = {Check::kDimTwo,  Check::kVcSe,           Check::kSeOne,
                   Check::kSeMaxdd, Check::kInequalityChain, Check::kBooleanInterval};
  config.jobs = 4;
  const auto result = run_theorem_suite(config);
  Checker c;
  c.expect(result.instances == 1 + 3 + 22 + 485 + 200, "population size");
  for (const auto& row : result.rows) {
    c.expect(row.passed, row.instance + " " + check_name(row.check) + ": " + row.detail);
  }
  return c.outcome(std::to_string(result.instances) + " geometries, " +
                   std::to_string(result.rows.size()) + " checks, 0 violations");
}

// Standalone acyclicity test: the order plus the reversed pairs b -> a.
bool reversible_by_sort(const Poset& p, const std::vector<IncPair>& pairs) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<int> indeg(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && p.leq(x, y)) {
        succ[x].push_back(y);
        ++indeg[y];
      }
    }
  }
  for (const auto& q : pairs) {
    succ[q.b].push_back(q.a);
    ++indeg[q.a];
  }
  std::vector<std::size_t> ready;
  for (std::size_t x = 0; x < n; ++x) {
    if (indeg[x] == 0) ready.push_back(x);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t x = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t y : succ[x]) {
      if (--indeg[y] == 0) ready.push_back(y);
    }
  }
  return seen == n;
}

// Largest dual weight on a reversible subset of the supported pairs.
mpq_class max_reversible_weight(const Poset& p, const std::vector<IncPair>& pairs,
                                const std::vector<mpq_class>& y) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] > 0) support.push_back(i);
  }
  mpq_class best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << support.size()); ++s) {
    std::vector<IncPair> chosen;
    mpq_class w = 0;
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (s >> j & 1) {
        chosen.push_back(pairs[support[j]]);
        w += y[support[j]];
      }
    }
    if (w > best && reversible_by_sort(p, chosen)) best = w;
  }
  return best;
}

Outcome criterion6() {
  Checker c;
  for (int t = 2; t <= 3; ++t) {
    const Poset s = standard_example(t);
    const FdimResult r = fractional_dimension(s);
    c.expect(r.value == t, "fdim(S_" + std::to_string(t) + ")");
    c.expect(verify_fractional_realizer(s, r.realizer).accepted, "S_t certificate");
    c.expect(max_reversible_weight(s, r.pairs, r.dual) <= 1, "S_t dual");
  }
  for (auto [k, n] : {std::pair{1, 4}, {1, 5}, {2, 5}, {2, 6}}) {
    const ConvexGeometry g = pkn(PknParams{k, n});
    const auto v = verify_fractional_realizer(g.poset(), pkn_fractional_certificate(PknParams{k, n}));
    mpq_class expected((1 << (k + 1)) * ((1 << n) - 1), 1 << n);
    expected.canonicalize();
    c.expect(v.accepted && v.total_weight == expected,
             "weight certificate (" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  // P(1,5): the optimum is certified from both sides.
  const ConvexGeometry g = pkn(PknParams{1, 5});
  const FdimResult r = fractional_dimension_by_reversible_sets(g.poset());
  const auto primal = verify_fractional_realizer(g.poset(), r.realizer);
  mpq_class dual_total = 0;
  for (const auto& y : r.dual) dual_total += y;
  const bool dual_ok = max_reversible_weight(g.poset(), r.pairs, r.dual) <= 1;
  c.expect(primal.accepted && primal.total_weight == r.value, "P(1,5) primal");
  c.expect(dual_ok && dual_total == r.value, "P(1,5) dual");
  const std::string value = r.value.get_str();
  const std::string rest = c.failures() == 0 ? "PASS" : "FAIL";
  if (r.value == 3 && c.failures() == 0) {
    return {Outcome::kPass, "fdim(P(1,5)) = 3; fdim(S_2,S_3) = 2,3; 4 weight certificates verified"};
  }
  Outcome o = c.outcome("");
  if (o.status == Outcome::kPass) o.status = Outcome::kUnattained;
  o.detail = "fdim(P(1,5)) = " + value + " (stated 3): primal certificate of weight " +
             primal.total_weight.get_str() + " verified, dual of total " +
             dual_total.get_str() + " has load <= 1 on every reversible set; "
             "fdim(S_2) = 2, fdim(S_3) = 3 and 4 weight certificates " + rest;
  return o;
}

Outcome criterion7() {
  Checker c;
  const auto s2 = boolean_dimension_exact(standard_example(2), 3, 4'000'000'000);
  const auto s3 = boolean_dimension_exact(standard_example(3), 3, 4'000'000'000);
  c.expect(s2.bdim == 2u, "bdim(S_2)");
  c.expect(s3.bdim == 3u, "bdim(S_3)");
  c.expect(verify_boolean_realizer(standard_example(2), s2.realizer).accepted, "S_2 certificate");
  c.expect(verify_boolean_realizer(standard_example(3), s3.realizer).accepted, "S_3 certificate");
  // Nothing of size 2 exists for S_3: the search exhausted that level.
  c.expect(!boolean_dimension_exact(standard_example(3), 2, 4'000'000'000).bdim,
           "S_3 size-2 search");
  return c.outcome("bdim(S_2) = 2, bdim(S_3) = 3 (" + std::to_string(s3.nodes) + " nodes)");
}

Outcome criterion8() {
  Checker c;
  std::vector<std::pair<int, int>> grid;
  for (int n = 3; n <= 8; ++n) grid.push_back({1, n});
  grid.push_back({2, 6});
  for (auto [k, n] : grid) {
    const PknParams p{k, n};
    const ConvexGeometry g = pkn(p);
    const std::string at = "(" + std::to_string(k) + "," + std::to_string(n) + ")";
    // Realizer -> sequence -> realizer, from an optimal realizer.
    const DmResult dm = dm_dimension(g.poset());
    const auto seq = realizer_to_distinguishing(p, dm.realizer);
    c.expect(seq.t == dm.dimension && verify_distinguishing(p, seq).accepted, "to sequence" + at);
    const Realizer back = distinguishing_to_realizer(g, p, seq);
    c.expect(back.extensions.size() == seq.t && verify_realizer(g.poset(), back).accepted,
             "to realizer" + at);
    if (k == 1) {
      const auto bin = binary_distinguishing(n);
      c.expect(bin.t == 1 + floor_lg(n) && verify_distinguishing(p, bin).accepted, "binary" + at);
      const Realizer br = distinguishing_to_realizer(g, p, bin);
      c.expect(verify_realizer(g.poset(), br).accepted, "binary realizer" + at);
      c.expect(realizer_to_distinguishing(p, br).t == bin.t, "binary round trip" + at);
    }
  }
  return c.outcome(std::to_string(grid.size()) + " grid points, sizes preserved, all certificates verify");
}

Outcome criterion9() {
  Checker c;
  int runs = 0, max_tries = 0;
  for (int k = 1; k <= 2; ++k) {
    for (int n = k + 2; n <= 32; ++n) {
      const PknParams p{k, n};
      const ConvexGeometry g = pkn(p);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::string at = "(" + std::to_string(k) + "," + std::to_string(n) +
                               ") seed " + std::to_string(seed);
        try {
          const auto r = randomized_distinguishing(p, seed, 100);
          max_tries = std::max(max_tries, r.tries);
          const Realizer real = distinguishing_to_realizer(g, p, r.sequence);
          c.expect(real.extensions.size() == randomized_distinguishing_length(p) &&
                       verify_realizer(g.poset(), real).accepted,
                   "realizer " + at);
        } catch (const Error& e) {
          c.expect(false, at + ": " + e.what());
        }
        ++runs;
      }
    }
  }
  return c.outcome(std::to_string(runs) + " runs over k <= 2, n <= 32, 20 seeds; at most " +
                   std::to_string(max_tries) + " tries; every realizer verified");
}

Outcome criterion10() {
  Checker c;
  for (int n = 1; n <= 3; ++n) {
    std::set<std::vector<std::uint64_t>> got, expected;
    for (const auto& g : enumerate_geometries(n)) {
      std::vector<std::uint64_t> sets;
      for (SubsetMask m : g.family().sets()) sets.push_back(m.bits());
      std::sort(sets.begin(), sets.end());
      got.insert(sets);
    }
    for (auto sets : oracle::all_geometries(n)) {
      std::sort(sets.begin(), sets.end());
      expected.insert(sets);
    }
    c.expect(got == expected, "enumeration n=" + std::to_string(n));
  }
  std::mt19937_64 rng(2026);
  int instances = 0;
  while (instances < 500) {
    const int n = 2 + instances % 7;
    const auto s = support::random_sample(n, 0.25, rng);
    const auto inc = oracle::incomparable(s.leq);
    if (inc.empty()) continue;
    std::vector<oracle::Pair> chosen;
    for (const auto& q : inc) {
      if (rng() % 4 == 0) chosen.push_back(q);
    }
    const bool expected = oracle::reversible(oracle::linear_extensions(s.leq), chosen);
    c.expect(is_reversible(s.poset, support::to_pairs(chosen)).reversible == expected,
             "reversibility instance " + std::to_string(instances));
    ++instances;
  }
  return c.outcome("enumeration = axiom filter for n <= 3; 500 reversibility instances agree");
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {Outcome::kFail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* label = o.status == Outcome::kPass   ? "PASS"
                        : o.status == Outcome::kFail ? "FAIL"
                                                     : "UNATTAINED";
    std::printf("criterion %2zu: %-10s %s [%.2fs]\n", i + 1, label, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (o.status == Outcome::kFail) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
