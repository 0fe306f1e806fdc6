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

// Brute-force reference implementations used as test oracles. They work on
// plain boolean matrices and subset lists and share no code with the library.

#ifndef ORDIM_TESTS_ORACLES_HPP_
#define ORDIM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;  // m[x][y]: x <= y
using Order = std::vector<int>;
using Pair = std::pair<int, int>;

inline Matrix closure(int n, const std::vector<Pair>& pairs) {
  Matrix m(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) m[x][x] = true;
  for (const auto& [x, y] : pairs) m[x][y] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (m[i][k] && m[k][j]) m[i][j] = true;
      }
    }
  }
  return m;
}

// Random order on n elements: x < y possible only when x < y as integers.
inline std::vector<Pair> random_relation(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Pair> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (coin(rng)) pairs.emplace_back(x, y);
    }
  }
  // Relabel so that index order is not a linear extension.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [x, y] : pairs) {
    x = perm[x];
    y = perm[y];
  }
  return pairs;
}

inline bool comparable(const Matrix& m, int x, int y) {
  return m[x][y] || m[y][x];
}

inline std::vector<Order> linear_extensions(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  Order perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Order> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        if (m[perm[j]][perm[i]]) ok = false;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<int> positions(const Order& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

// Some extension puts b below a for every (a, b).
inline bool reversible(const std::vector<Order>& extensions,
                       const std::vector<Pair>& pairs) {
  for (const Order& ext : extensions) {
    const auto pos = positions(ext);
    if (std::all_of(pairs.begin(), pairs.end(), [&](const Pair& p) {
          return pos[p.second] < pos[p.first];
        })) {
      return true;
    }
  }
  return false;
}

inline std::vector<Pair> incomparable(const Matrix& m) {
  std::vector<Pair> out;
  const int n = static_cast<int>(m.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && !comparable(m, a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

inline std::vector<Pair> critical(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Pair> out;
  for (const auto& [a, b] : incomparable(m)) {
    bool ok = true;
    for (int z = 0; z < n && ok; ++z) {
      if (z != a && m[z][a] && !m[z][b]) ok = false;
      if (z != b && m[b][z] && !m[a][z]) ok = false;
    }
    if (ok) out.emplace_back(a, b);
  }
  return out;
}

// Least t such that t extensions reverse every incomparable pair (both
// orientations appear). Exhaustive over subsets of extensions.
inline int dimension(const Matrix& m) {
  const auto exts = linear_extensions(m);
  const auto inc = incomparable(m);
  if (inc.empty()) return 1;
  std::vector<std::vector<int>> pos;
  for (const auto& e : exts) pos.push_back(positions(e));
  for (int t = 2;; ++t) {
    std::vector<int> pick(t);
    auto covers = [&] {
      for (const auto& [a, b] : inc) {
        bool hit = false;
        for (int i : pick) hit = hit || pos[i][b] < pos[i][a];
        if (!hit) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int level, int from) -> bool {
      if (level == t) return covers();
      for (int i = from; i < static_cast<int>(exts.size()); ++i) {
        pick[level] = i;
        if (self(self, level + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0)) return t;
  }
}

inline int width(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool anti = true;
    for (int x = 0; x < n && anti; ++x) {
      for (int y = x + 1; y < n && anti; ++y) {
        if ((s >> x & 1) && (s >> y & 1) && comparable(m, x, y)) anti = false;
      }
    }
    if (anti) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

// Families are lists of bitmasks over [n] (bit e-1 for element e).
inline bool is_convex_geometry(int n, const std::vector<std::uint64_t>& sets) {
  auto has = [&](std::uint64_t s) {
    return std::find(sets.begin(), sets.end(), s) != sets.end();
  };
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  if (!has(0) || !has(full)) return false;
  for (auto a : sets) {
    for (auto b : sets) {
      if (!has(a & b)) return false;
    }
  }
  for (auto a : sets) {
    if (a == full) continue;
    bool extends = false;
    for (int e = 0; e < n; ++e) {
      if (!(a >> e & 1) && has(a | (std::uint64_t{1} << e))) extends = true;
    }
    if (!extends) return false;
  }
  return true;
}

inline int vc_dimension(int n, const std::vector<std::uint64_t>& sets) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<std::uint64_t> traces;
    for (auto a : sets) traces.push_back(a & s);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    if (traces.size() == (std::size_t{1} << __builtin_popcountll(s))) {
      best = std::max(best, __builtin_popcountll(s));
    }
  }
  return best;
}

inline std::vector<std::vector<std::uint64_t>> all_geometries(int n) {
  const int subsets = 1 << n;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << subsets);
       ++choice) {
    std::vector<std::uint64_t> sets;
    for (int s = 0; s < subsets; ++s) {
      if (choice >> s & 1) sets.push_back(s);
    }
    if (is_convex_geometry(n, sets)) out.push_back(sets);
  }
  return out;
}

}  // namespace oracle

#endif  // ORDIM_TESTS_ORACLES_HPP_
