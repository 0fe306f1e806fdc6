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

// Finite posets and the realizer machinery built on top of them: incomparable
// and critical pairs, reversibility, alternating cycles, Dilworth width,
// linear extensions, standard examples and certificate verifiers.

#ifndef ORDIM_POSET_HPP_
#define ORDIM_POSET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <gmpxx.h>

namespace ordim {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Element = std::size_t;

// Ordered pair of distinct incomparable elements. Critical pairs share the
// representation; critical_pairs() is the only producer of those.
struct IncPair {
  Element a = 0;
  Element b = 0;
  auto operator<=>(const IncPair&) const = default;
};
using CriticalPair = IncPair;

struct LinearExtension {
  std::vector<Element> order;
  bool operator==(const LinearExtension&) const = default;
};

struct Realizer {
  std::vector<LinearExtension> extensions;
};

// A partial linear extension: a linear extension of the subposet induced by
// its members.
struct Ple {
  std::vector<Element> order;
};

struct LocalRealizer {
  std::vector<Ple> ples;
};

// Orders need not be linear extensions. tau holds query strings over {0,1};
// character i is 1 when x < y in orders[i].
struct BooleanRealizer {
  std::vector<std::vector<Element>> orders;
  std::set<std::string> tau;
};

struct WeightedExtension {
  LinearExtension extension;
  mpq_class weight;
};

struct FractionalRealizer {
  std::vector<WeightedExtension> weighted;
};

class Poset {
 public:
  Poset() = default;

  // up[x] is the reflexive up-set of x. Throws Error(kCycle) when the relation
  // is not antisymmetric and Error(kParamRange) when it is not a reflexive
  // transitive relation.
  static Poset from_up_sets(std::vector<Bitset> up,
                            std::vector<std::string> labels = {});

  // Same as from_up_sets but with the cover relation supplied by the caller,
  // which must be correct. Used for set families where covers are cheap.
  static Poset from_up_sets_and_covers(
      std::vector<Bitset> up, std::vector<std::vector<Element>> upper_covers,
      std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  bool leq(Element x, Element y) const { return up_[x].test(y); }
  bool less(Element x, Element y) const { return x != y && up_[x].test(y); }
  bool comparable(Element x, Element y) const {
    return up_[x].test(y) || up_[y].test(x);
  }

  const Bitset& up_set(Element x) const { return up_[x]; }
  const Bitset& down_set(Element x) const { return down_[x]; }
  const std::vector<Element>& upper_covers(Element x) const {
    return upper_covers_[x];
  }
  const std::vector<Element>& lower_covers(Element x) const {
    return lower_covers_[x];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element x) const;

  bool is_chain() const;

 private:
  void finish_down_sets();
  void compute_covers();

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::vector<Element>> upper_covers_;
  std::vector<std::vector<Element>> lower_covers_;
  std::vector<std::string> labels_;
};

// Reflexive-transitive closure of the given pairs (x <= y).
Poset poset_from_relation(std::size_t n,
                          std::span<const std::pair<Element, Element>> pairs,
                          std::vector<std::string> labels = {});

Poset induced_subposet(const Poset& poset, std::span<const Element> elements);

std::vector<std::pair<Element, Element>> hasse_covers(const Poset& poset);

std::size_t down_degree(const Poset& poset, Element y);
std::size_t up_degree(const Poset& poset, Element x);
std::size_t max_down_degree(const Poset& poset);
std::size_t max_up_degree(const Poset& poset);

// Both orientations of every incomparable pair, sorted.
std::vector<IncPair> incomparable_pairs(const Poset& poset);
std::vector<CriticalPair> critical_pairs(const Poset& poset);
bool is_critical_pair(const Poset& poset, IncPair pair);

struct Reversibility {
  bool reversible = false;
  // A linear extension placing b before a for every (a,b) in S.
  std::optional<LinearExtension> extension;
  // Strict alternating cycle inside S when not reversible.
  std::vector<IncPair> cycle;
};

Reversibility is_reversible(const Poset& poset, std::span<const IncPair> pairs);

// Linear extension with b before a for every pair, or nullopt.
std::optional<LinearExtension> reversing_extension(
    const Poset& poset, std::span<const IncPair> pairs);

// Every strict alternating cycle of length <= max_size made of pairs from S,
// each reported once starting from its smallest pair.
std::vector<std::vector<IncPair>> strict_alternating_cycles(
    const Poset& poset, std::span<const IncPair> pairs, std::size_t max_size);

// Adjacency of 2-cycles: p ~ q iff a_p <= b_q and a_q <= b_p. With strict
// set, a_p < b_q and a_q < b_p, which is exactly "the four elements induce
// S_2"; the non-strict graph also links pairs such as (x, y) and (y, x).
std::vector<Bitset> alternating_pair_graph(const Poset& poset,
                                           std::span<const IncPair> pairs,
                                           bool strict = false);

struct WidthResult {
  std::size_t width = 0;
  std::vector<std::vector<Element>> chains;
  std::vector<Element> antichain;
};

WidthResult width(const Poset& poset);

// Lazy enumeration of all linear extensions. Minimal elements are chosen in
// increasing index order, so extensions come out lexicographically sorted.
class LinearExtensionEnumerator {
 public:
  LinearExtensionEnumerator(const Poset& poset, std::uint64_t limit);

  // Throws Error(kCountExceeded) when asked for more than `limit` extensions.
  std::optional<LinearExtension> next();
  std::uint64_t produced() const { return produced_; }

 private:
  bool advance();

  const Poset* poset_;
  std::uint64_t limit_;
  std::uint64_t produced_ = 0;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::size_t> missing_below_;
  std::vector<Element> prefix_;
  std::vector<bool> placed_;
};

std::vector<LinearExtension> linear_extensions(const Poset& poset,
                                               std::uint64_t limit);

bool is_linear_extension(const Poset& poset, std::span<const Element> order);

struct Verdict {
  bool accepted = false;
  std::string detail;
};

struct LocalVerdict {
  bool accepted = false;
  std::string detail;
  std::size_t max_multiplicity = 0;
};

struct FractionalVerdict {
  bool accepted = false;
  std::string detail;
  mpq_class total_weight;
};

// Verifiers throw Error(kMalformedCertificate) when the certificate does not
// fit the poset (bad indices, not permutations, wrong string lengths).
Verdict verify_realizer(const Poset& poset, const Realizer& realizer);
LocalVerdict verify_local_realizer(const Poset& poset,
                                   const LocalRealizer& realizer);
Verdict verify_boolean_realizer(const Poset& poset,
                                const BooleanRealizer& realizer);
FractionalVerdict verify_fractional_realizer(const Poset& poset,
                                             const FractionalRealizer& realizer);

struct StandardExample {
  std::vector<Element> a;
  std::vector<Element> b;
};

// Copy of S_t with (a_i, b_i) critical, lexicographically least over the
// sorted list of critical pairs.
std::optional<StandardExample> find_standard_example(const Poset& poset,
                                                     std::size_t t);
std::size_t standard_example_number(const Poset& poset);

}  // namespace ordim

#endif  // ORDIM_POSET_HPP_
