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

// Set families over a finite ground set [n], convex geometry validation,
// lattice operations on validated geometries, and VC-dimension.

#ifndef ORDIM_GEOMETRY_HPP_
#define ORDIM_GEOMETRY_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordim/error.hpp"
#include "ordim/poset.hpp"

namespace ordim {

inline constexpr int kMaxGround = 64;

// Subset of [n]; element i (1-based) is bit i-1.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> elements);
  static SubsetMask of(std::span<const int> elements);
  static constexpr SubsetMask range(int first, int last) {
    std::uint64_t bits = 0;
    for (int e = first; e <= last; ++e) bits |= std::uint64_t{1} << (e - 1);
    return SubsetMask(bits);
  }
  static constexpr SubsetMask full(int n) { return range(1, n); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int element) const {
    return (bits_ >> (element - 1)) & 1;
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr SubsetMask with(int element) const {
    return SubsetMask(bits_ | (std::uint64_t{1} << (element - 1)));
  }
  constexpr SubsetMask without(int element) const {
    return SubsetMask(bits_ & ~(std::uint64_t{1} << (element - 1)));
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits_ & o.bits_);
  }
  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits_ | o.bits_);
  }
  constexpr SubsetMask operator-(SubsetMask o) const {
    return SubsetMask(bits_ & ~o.bits_);
  }
  constexpr bool operator==(const SubsetMask&) const = default;

  std::vector<int> elements() const;
  // Digits without braces or commas ("134"); elements are comma separated
  // when the ground set exceeds 9 so labels stay unambiguous.
  std::string compact(int ground) const;

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order: cardinality first, then numeric value of the mask.
inline bool canonical_less(SubsetMask x, SubsetMask y) {
  return x.size() != y.size() ? x.size() < y.size() : x.bits() < y.bits();
}

struct SubsetMaskHash {
  std::size_t operator()(SubsetMask m) const {
    return std::hash<std::uint64_t>{}(m.bits());
  }
};

class SetFamily {
 public:
  SetFamily() = default;

  // Deduplicates and sorts. Throws Error(kParamRange) for a ground size
  // outside [1, 64] or sets with bits beyond the ground set.
  SetFamily(int ground, std::vector<SubsetMask> sets);

  int ground() const { return ground_; }
  const std::vector<SubsetMask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  SubsetMask operator[](std::size_t i) const { return sets_[i]; }
  std::optional<std::size_t> index_of(SubsetMask m) const;
  bool contains(SubsetMask m) const { return index_.count(m) > 0; }

  bool operator==(const SetFamily& o) const {
    return ground_ == o.ground_ && sets_ == o.sets_;
  }

 private:
  int ground_ = 0;
  std::vector<SubsetMask> sets_;
  std::unordered_map<SubsetMask, std::size_t, SubsetMaskHash> index_;
};

enum class Axiom { kBase, kIntersection, kExtension };

const char* axiom_name(Axiom axiom);

class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, SubsetMask witness, SubsetMask other,
                 const std::string& message)
      : Error(ErrorCode::kAxiomViolation, message),
        axiom_(axiom),
        witness_(witness),
        other_(other) {}

  Axiom axiom() const { return axiom_; }
  SubsetMask witness() const { return witness_; }
  // Second member of a failing intersection; empty otherwise.
  SubsetMask other() const { return other_; }

 private:
  Axiom axiom_;
  SubsetMask witness_;
  SubsetMask other_;
};

class ConvexGeometry;

// Checks the Base, Intersection and Extension axioms in that order and builds
// the inclusion poset (element i of the poset is family set i).
ConvexGeometry validate_convex_geometry(
    SetFamily family, std::vector<std::string> element_labels = {});

class ConvexGeometry {
 public:
  const SetFamily& family() const { return family_; }
  const Poset& poset() const { return poset_; }
  int ground() const { return family_.ground(); }
  std::size_t size() const { return family_.size(); }
  SubsetMask set(std::size_t i) const { return family_[i]; }
  std::size_t index_of(SubsetMask m) const;
  const std::vector<std::size_t>& meet_irreducibles() const { return meet_irr_; }
  const std::vector<std::size_t>& join_irreducibles() const { return join_irr_; }
  // Optional display names for ground elements, 1-based order.
  const std::vector<std::string>& element_labels() const {
    return element_labels_;
  }
  std::string set_label(std::size_t i) const;

 private:
  friend ConvexGeometry validate_convex_geometry(SetFamily,
                                                 std::vector<std::string>);
  SetFamily family_;
  Poset poset_;
  std::vector<std::size_t> meet_irr_;
  std::vector<std::size_t> join_irr_;
  std::vector<std::string> element_labels_;
};

SubsetMask meet(const ConvexGeometry& g, SubsetMask a, SubsetMask b);
SubsetMask join(const ConvexGeometry& g, SubsetMask a, SubsetMask b);

std::vector<std::size_t> meet_irreducibles(const ConvexGeometry& g);
std::vector<std::size_t> join_irreducibles(const ConvexGeometry& g);

// (A, B) with A the intersection of the members of the upper cover of B that
// contain the element the cover adds. When A is not the cover itself this is
// the unique critical pair with B; otherwise A > B and B has no critical
// partner (chains). Throws Error(kNotMeetIrreducible).
CriticalPair critical_pair_of_meet_irreducible(const ConvexGeometry& g,
                                               std::size_t b_index);

std::size_t vc_dimension_shattering(const SetFamily& family);

struct BooleanPropertyResult {
  bool holds = true;
  std::optional<Element> failing;  // element y whose interval is not Boolean
};

// For every y above the minimum: with x the meet of the lower covers of y,
// [x, y] must be isomorphic to 2^dd(y). The poset must be a lattice.
BooleanPropertyResult check_boolean_property(const Poset& lattice);
BooleanPropertyResult check_boolean_property(const ConvexGeometry& g);

// Family of initial segments of a permutation of [n] (1-based entries).
SetFamily initial_segments(int ground, std::span<const int> order);

// Intersection closure of the union of the parts. Throws
// Error(kGroundMismatch) on differing ground sets.
ConvexGeometry join_geometries(std::span<const ConvexGeometry> parts);
SetFamily join_families(int ground, std::span<const SetFamily> parts);

bool verify_convex_realizer(const ConvexGeometry& g,
                            std::span<const std::vector<int>> orders);

// Compatible orders of all maximal chains, in lexicographic order.
std::vector<std::vector<int>> maximal_chains(const ConvexGeometry& g);

// Compatible order of a maximal chain through the given members, which must
// form a chain.
std::vector<int> extend_to_maximal_chain(const ConvexGeometry& g,
                                         std::vector<std::size_t> members);

std::string hasse_dot(const ConvexGeometry& g);

}  // namespace ordim

#endif  // ORDIM_GEOMETRY_HPP_
