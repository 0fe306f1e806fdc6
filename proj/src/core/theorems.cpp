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

#include "ordim/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "ordim/error.hpp"

namespace ordim {
namespace {

constexpr std::pair<Check, const char*> kNames[] = {
    {Check::kSeparation, "separation"},
    {Check::kDimTwo, "dim-le-2"},
    {Check::kVcSe, "vcdim-se"},
    {Check::kSeOne, "se-1"},
    {Check::kPkn, "pkn"},
    {Check::kSeMaxdd, "se-maxdd"},
    {Check::kBooleanInterval, "boolean-interval"},
    {Check::kVcMaxdd, "vcdim-maxdd"},
    {Check::kInequalityChain, "chain"},
    {Check::kPknCertificates, "pkn-certificates"},
};

bool wants(const TheoremSuiteConfig& config, Check check) {
  return std::find(config.checks.begin(), config.checks.end(), check) !=
         config.checks.end();
}

std::size_t binomial(int n, int k) {
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

struct Instance {
  std::string name;
  ConvexGeometry geometry;
};

struct TaskOutput {
  std::vector<CheckRow> rows;
  std::optional<PknRow> pkn;
};

// Parameters of one geometry, computed on first use.
class Measures {
 public:
  Measures(const ConvexGeometry& g, std::uint64_t budget)
      : g_(g), budget_(budget) {}

  std::size_t dim() {
    if (!dim_) dim_ = dm_dimension(g_.poset(), budget_).dimension;
    return *dim_;
  }
  std::size_t cdim() {
    if (!cdim_) cdim_ = convex_dimension(g_).cdim;
    return *cdim_;
  }
  std::size_t se() {
    if (!se_) se_ = standard_example_number(g_.poset());
    return *se_;
  }
  std::size_t maxdd() { return max_down_degree(g_.poset()); }
  std::size_t vcdim() {
    if (!vcdim_) vcdim_ = vc_dimension_shattering(g_.family());
    return *vcdim_;
  }
  const mpq_class& fdim() {
    if (!fdim_) {
      fdim_ = fractional_dimension_by_reversible_sets(g_.poset(), budget_).value;
    }
    return *fdim_;
  }

 private:
  const ConvexGeometry& g_;
  std::uint64_t budget_;
  std::optional<std::size_t> dim_, cdim_, se_, vcdim_;
  std::optional<mpq_class> fdim_;
};

std::string num(std::size_t v) { return std::to_string(v); }

CheckRow universal_row(const Instance& inst, Check check, Measures& m) {
  CheckRow row{inst.name, check, false, {}};
  switch (check) {
    case Check::kDimTwo: {
      const auto d = m.dim();
      if (d > 2) {
        row.passed = true;
        row.detail = "dim " + num(d) + " (vacuous)";
      } else {
        row.passed = m.cdim() == d;
        row.detail = "dim " + num(d) + ", cdim " + num(m.cdim());
      }
      break;
    }
    case Check::kVcSe: {
      const auto v = m.vcdim();
      const auto s = m.se();
      row.passed = v == s || (v == 2 && s == 1);
      row.detail = "vcdim " + num(v) + ", se " + num(s);
      break;
    }
    case Check::kSeOne: {
      const auto s = m.se();
      if (s != 1) {
        row.passed = true;
        row.detail = "se " + num(s) + " (vacuous)";
      } else {
        row.passed = m.cdim() <= 2;
        row.detail = "se 1, cdim " + num(m.cdim());
      }
      break;
    }
    case Check::kSeMaxdd: {
      const auto s = m.se();
      const auto d = m.maxdd();
      row.passed = s >= d || (d == 2 && s == 1);
      row.detail = "se " + num(s) + ", maxdd " + num(d);
      break;
    }
    case Check::kBooleanInterval: {
      const auto result = check_boolean_property(inst.geometry);
      row.passed = result.holds;
      row.detail = result.holds
                       ? "all intervals Boolean"
                       : "interval below " +
                             inst.geometry.set_label(*result.failing) +
                             " is not Boolean";
      break;
    }
    case Check::kVcMaxdd: {
      row.passed = m.vcdim() == m.maxdd();
      row.detail = "vcdim " + num(m.vcdim()) + ", maxdd " + num(m.maxdd());
      break;
    }
    case Check::kInequalityChain: {
      const auto c = m.cdim();
      const auto d = m.dim();
      const mpq_class& f = m.fdim();
      row.passed = c >= d && d >= m.maxdd() && d >= m.se() && f <= d;
      row.detail = "cdim " + num(c) + ", dim " + num(d) + ", maxdd " +
                   num(m.maxdd()) + ", se " + num(m.se()) + ", fdim " +
                   f.get_str();
      break;
    }
    default:
      row.passed = true;
      row.detail = "not a universal check";
  }
  return row;
}

TaskOutput universal_task(const Instance& inst,
                          const std::vector<Check>& checks,
                          std::uint64_t budget) {
  TaskOutput out;
  Measures m(inst.geometry, budget);
  for (Check check : checks) {
    try {
      out.rows.push_back(universal_row(inst, check, m));
    } catch (const BudgetExceeded& e) {
      out.rows.push_back({inst.name, check, false,
                          std::string("budget exhausted: ") + e.what()});
    }
  }
  return out;
}

TaskOutput separation_task(int n, std::uint64_t budget) {
  TaskOutput out;
  CheckRow row{"pn(n=" + std::to_string(n) + ")", Check::kSeparation, false,
               {}};
  try {
    const PnFamilies families = qn_pn({n});
    const auto dm = dm_dimension(families.p.poset(), budget);
    const auto c = convex_dimension(families.p);
    const bool lex_ok =
        verify_realizer(families.p.poset(),
                        lexicographic_realizer(families.p, n))
            .accepted;
    row.passed = dm.dimension == 3 && c.cdim == static_cast<std::size_t>(n + 1) &&
                 c.realizer.has_value() && lex_ok;
    row.detail = "dim " + num(dm.dimension) + ", cdim " + num(c.cdim) +
                 (lex_ok ? ", lexicographic realizer verified"
                         : ", lexicographic realizer rejected");
  } catch (const BudgetExceeded& e) {
    row.detail = std::string("budget exhausted: ") + e.what();
  }
  out.rows.push_back(std::move(row));
  return out;
}

TaskOutput pkn_task(int k, int n, std::uint64_t budget, std::uint64_t seed) {
  TaskOutput out;
  const std::string name =
      "pkn(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
  const ConvexGeometry g = pkn({k, n});
  PknRow row;
  row.k = k;
  row.n = n;
  row.vcdim = vc_dimension_shattering(g.family());
  row.se = standard_example_number(g.poset());
  row.maxdd = max_down_degree(g.poset());
  const CdimResult c = convex_dimension(g);
  row.cdim = c.cdim;
  row.binomial = binomial(n - 1, k);
  row.dim_bound = (k + 1) * std::ldexp(1.0, k + 2) * std::log(n);
  row.fdim_strict_bound = std::size_t{1} << (k + 1);

  std::vector<std::string> failed;
  const auto kk = static_cast<std::size_t>(k + 1);
  if (row.vcdim != kk || row.se != kk) failed.push_back("vcdim = se = k+1");
  if (row.maxdd != kk) failed.push_back("maxdd = k+1");
  if (row.cdim != row.binomial || !c.realizer) {
    failed.push_back("cdim = C(n-1,k)");
  }
  if (n <= 14) {
    const auto cert = pkn_fractional_certificate({k, n});
    const auto verdict = verify_fractional_realizer(g.poset(), cert);
    row.fdim_certificate = verdict.total_weight;
    mpq_class expected(mpz_class(1) << (k + 1), 1);
    expected *= mpq_class((mpz_class(1) << n) - 1, mpz_class(1) << n);
    if (!verdict.accepted || verdict.total_weight != expected ||
        verdict.total_weight >= row.fdim_strict_bound) {
      failed.push_back("fdim < 2^(k+1)");
    }
  }
  try {
    row.dim = dm_dimension(g.poset(), budget).dimension;
  } catch (const BudgetExceeded&) {
  }
  if (k == 1) {
    const auto seq = binary_distinguishing(n);
    const auto realizer = distinguishing_to_realizer(g, {k, n}, seq);
    row.dim_upper = realizer.extensions.size();
    const auto expected = static_cast<std::size_t>(std::bit_width(
        static_cast<unsigned>(n)));
    if (!row.dim || *row.dim != expected ||
        !verify_realizer(g.poset(), realizer).accepted ||
        row.dim_upper != expected) {
      failed.push_back("dim(P(1,n)) = 1 + lg n");
    }
  } else {
    const auto random = randomized_distinguishing({k, n}, seed, 100);
    const auto realizer = distinguishing_to_realizer(g, {k, n}, random.sequence);
    row.dim_upper = realizer.extensions.size();
    if (!verify_realizer(g.poset(), realizer).accepted ||
        static_cast<double>(row.dim_upper) > row.dim_bound ||
        (row.dim && static_cast<double>(*row.dim) > row.dim_bound)) {
      failed.push_back("dim <= (k+1) 2^(k+2) ln n");
    }
  }
  CheckRow check{name, Check::kPkn, failed.empty(), {}};
  if (failed.empty()) {
    check.detail = "vcdim, se, maxdd, cdim, fdim and dim statements hold";
  } else {
    for (const auto& f : failed) {
      check.detail += (check.detail.empty() ? "failed: " : "; ") + f;
    }
  }
  out.rows.push_back(std::move(check));
  out.pkn = std::move(row);
  return out;
}

TaskOutput pkn_certificate_task(int k, int n, std::uint64_t seed) {
  TaskOutput out;
  const std::string name =
      "pkn(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
  const PknParams params{k, n};
  const ConvexGeometry g = pkn(params);
  std::vector<std::string> failed;

  // Meet-irreducibles are J(k,n); critical pairs are ({i}, [i-1] u B).
  const SetFamily j = jkn(params);
  std::vector<SubsetMask> irreducible;
  for (std::size_t x : g.meet_irreducibles()) irreducible.push_back(g.set(x));
  std::sort(irreducible.begin(), irreducible.end(), canonical_less);
  if (irreducible != j.sets()) failed.push_back("meet-irreducibles = J");
  std::vector<IncPair> expected_crit;
  for (SubsetMask m : j.sets()) {
    int i = 1;
    while (m.contains(i)) ++i;
    expected_crit.push_back({g.index_of(SubsetMask::of({i})), g.index_of(m)});
  }
  std::sort(expected_crit.begin(), expected_crit.end());
  if (critical_pairs(g.poset()) != expected_crit) {
    failed.push_back("critical pairs = ({i}, J-member)");
  }

  const DistinguishingSequence seq =
      k == 1 ? binary_distinguishing(n)
             : randomized_distinguishing(params, seed, 100).sequence;
  if (!verify_distinguishing(params, seq).accepted) {
    failed.push_back("sequence distinguishes");
  }
  const Realizer realizer = distinguishing_to_realizer(g, params, seq);
  const auto back = realizer_to_distinguishing(params, realizer);
  if (!verify_realizer(g.poset(), realizer).accepted ||
      realizer.extensions.size() != seq.t || back.t != seq.t ||
      !verify_distinguishing(params, back).accepted) {
    failed.push_back("distinguishing <-> realizer round trip");
  }
  if (k == 1 && seq.t != static_cast<std::size_t>(
                             std::bit_width(static_cast<unsigned>(n)))) {
    failed.push_back("binary length 1 + lg n");
  }
  CheckRow row{name, Check::kPknCertificates, failed.empty(), {}};
  if (failed.empty()) {
    row.detail = "J, critical pairs and a length-" + num(seq.t) +
                 " round trip verified";
  } else {
    for (const auto& f : failed) {
      row.detail += (row.detail.empty() ? "failed: " : "; ") + f;
    }
  }
  out.rows.push_back(std::move(row));
  return out;
}

std::vector<TaskOutput> run_tasks(
    const std::vector<std::function<TaskOutput()>>& tasks, unsigned jobs) {
  std::vector<TaskOutput> results(tasks.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (const std::exception& e) {
      results[i].rows.push_back(
          {"task " + std::to_string(i), Check::kInequalityChain, false,
           std::string("error: ") + e.what()});
    }
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) run_one(i);
    });
  }
  pool.clear();
  return results;
}

}  // namespace

const char* check_name(Check check) {
  for (const auto& [c, name] : kNames) {
    if (c == check) return name;
  }
  return "unknown";
}

std::optional<Check> check_from_name(std::string_view name) {
  for (const auto& [c, n] : kNames) {
    if (name == n) return c;
  }
  return std::nullopt;
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

void validate_config(const TheoremSuiteConfig& config) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kParamRange, "theorem suite: " + what);
  };
  if (config.checks.empty()) fail("no checks selected");
  if (config.enumerate_up_to < 0 || config.enumerate_up_to > 4) {
    fail("enumeration covers ground sets of size at most 4");
  }
  if (config.random) {
    const auto& r = *config.random;
    if (r.n < 1 || r.n > 8 || r.t < 0 || r.count < 0) {
      fail("random population needs 1 <= n <= 8, t >= 0, count >= 0");
    }
  }
  if (config.pkn_k_max < 1 || config.pkn_n_max < 3 || config.pkn_n_max > 14) {
    fail("P(k,n) grid needs k_max >= 1 and 3 <= n_max <= 14");
  }
  if (config.pn_min < 3 || config.pn_max > 31 ||
      config.pn_min > config.pn_max) {
    fail("P_n range needs 3 <= min <= max <= 31");
  }
  if (config.jobs < 1) fail("jobs must be positive");
}

TheoremSuiteResult run_theorem_suite(const TheoremSuiteConfig& config) {
  validate_config(config);
  std::vector<Check> universal;
  for (Check c : config.checks) {
    if (c != Check::kSeparation && c != Check::kPkn &&
        c != Check::kPknCertificates) {
      universal.push_back(c);
    }
  }

  std::vector<Instance> population;
  if (!universal.empty()) {
    for (int n = 1; n <= config.enumerate_up_to; ++n) {
      std::size_t i = 0;
      GeometryEnumerator it(n);
      while (auto g = it.next()) {
        population.push_back({"enum(n=" + std::to_string(n) + ")#" +
                                  std::to_string(i++),
                              std::move(*g)});
      }
    }
    if (config.random) {
      const auto& r = *config.random;
      for (int i = 0; i < r.count; ++i) {
        const int t = r.t > 0 ? r.t : 1 + i % (r.n + 1);
        const std::uint64_t seed = r.seed + static_cast<std::uint64_t>(i);
        population.push_back({"random(n=" + std::to_string(r.n) +
                                  ",t=" + std::to_string(t) +
                                  ",seed=" + std::to_string(seed) + ")",
                              random_geometry(r.n, t, seed)});
      }
    }
    if (config.named) {
      for (int k = 1; k <= config.pkn_k_max; ++k) {
        for (int n = k + 2; n <= config.pkn_n_max; ++n) {
          population.push_back({"pkn(k=" + std::to_string(k) + ",n=" +
                                    std::to_string(n) + ")",
                                pkn({k, n})});
        }
      }
      for (int n = config.pn_min; n <= config.pn_max; ++n) {
        population.push_back(
            {"pn(n=" + std::to_string(n) + ")", qn_pn({n}).p});
      }
      for (int n = 1; n <= 4; ++n) {
        population.push_back(
            {"boolean(n=" + std::to_string(n) + ")", boolean_algebra(n)});
      }
      for (int n = 1; n <= 5; ++n) {
        std::vector<int> order(n);
        for (int e = 0; e < n; ++e) order[e] = e + 1;
        population.push_back(
            {"linear(n=" + std::to_string(n) + ")", linear_geometry(order)});
      }
    }
  }

  std::vector<std::function<TaskOutput()>> tasks;
  for (const Instance& inst : population) {
    tasks.push_back([&inst, &universal, &config] {
      return universal_task(inst, universal, config.budget);
    });
  }
  if (wants(config, Check::kSeparation)) {
    for (int n = config.pn_min; n <= config.pn_max; ++n) {
      tasks.push_back([n, &config] { return separation_task(n, config.budget); });
    }
  }
  const std::uint64_t seed = config.random ? config.random->seed : 1;
  for (int k = 1; k <= config.pkn_k_max; ++k) {
    for (int n = k + 2; n <= config.pkn_n_max; ++n) {
      if (wants(config, Check::kPkn)) {
        tasks.push_back(
            [k, n, seed, &config] { return pkn_task(k, n, config.budget, seed); });
      }
      if (wants(config, Check::kPknCertificates)) {
        tasks.push_back([k, n, seed] { return pkn_certificate_task(k, n, seed); });
      }
    }
  }

  TheoremSuiteResult result;
  result.instances = population.size();
  for (auto& out : run_tasks(tasks, config.jobs)) {
    for (auto& row : out.rows) {
      if (!row.passed) ++result.failures;
      result.rows.push_back(std::move(row));
    }
    if (out.pkn) result.pkn_table.push_back(std::move(*out.pkn));
  }
  return result;
}

std::string format_table(const TheoremSuiteResult& result) {
  std::ostringstream os;
  std::map<std::string, std::pair<std::size_t, std::size_t>> summary;
  std::vector<std::string> order;
  for (const CheckRow& row : result.rows) {
    const std::string name = check_name(row.check);
    if (!summary.count(name)) order.push_back(name);
    auto& [passed, failed] = summary[name];
    (row.passed ? passed : failed) += 1;
  }
  os << std::left << std::setw(18) << "check" << std::right << std::setw(8)
     << "rows" << std::setw(8) << "pass" << std::setw(8) << "fail" << "\n";
  for (const auto& name : order) {
    const auto& [passed, failed] = summary[name];
    os << std::left << std::setw(18) << name << std::right << std::setw(8)
       << passed + failed << std::setw(8) << passed << std::setw(8) << failed
       << "\n";
  }
  for (const CheckRow& row : result.rows) {
    if (!row.passed) {
      os << "FAIL " << check_name(row.check) << " " << row.instance << ": "
         << row.detail << "\n";
    }
  }
  if (!result.pkn_table.empty()) {
    os << "\nP(k,n): vcdim = se = k+1, fdim < 2^(k+1), dim(P(1,n)) = 1 + lg n,"
          " dim <= (k+1) 2^(k+2) ln n, cdim = C(n-1,k);\n"
          "bdim and ldim growth are asymptotic and not tabulated.\n";
    os << std::setw(3) << "k" << std::setw(4) << "n" << std::setw(7)
       << "vcdim" << std::setw(4) << "se" << std::setw(7) << "maxdd"
       << std::setw(6) << "dim" << std::setw(7) << "upper" << std::setw(9)
       << "bound" << std::setw(11) << "fdim cert" << std::setw(9) << "2^(k+1)"
       << std::setw(6) << "cdim" << std::setw(9) << "C(n-1,k)" << "\n";
    for (const PknRow& r : result.pkn_table) {
      std::ostringstream bound;
      bound << std::fixed << std::setprecision(1) << r.dim_bound;
      os << std::setw(3) << r.k << std::setw(4) << r.n << std::setw(7)
         << r.vcdim << std::setw(4) << r.se << std::setw(7) << r.maxdd
         << std::setw(6) << (r.dim ? std::to_string(*r.dim) : "-")
         << std::setw(7) << r.dim_upper << std::setw(9) << bound.str()
         << std::setw(11) << r.fdim_certificate.get_str() << std::setw(9)
         << r.fdim_strict_bound << std::setw(6) << r.cdim << std::setw(9)
         << r.binomial << "\n";
    }
  }
  os << result.rows.size() << " rows over " << result.instances
     << " population instances, " << result.failures << " failing\n";
  return os.str();
}

}  // namespace ordim
