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

// JSON encodings of set families, posets, certificates and reports. Every
// top-level document carries "schema_version" and "kind".

#ifndef ORDIM_SERIALIZE_HPP_
#define ORDIM_SERIALIZE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordim/dimensions.hpp"
#include "ordim/geometry.hpp"
#include "ordim/poset.hpp"
#include "ordim/theorems.hpp"

namespace ordim::io {

using Json = nlohmann::ordered_json;
inline constexpr int kSchemaVersion = 1;

// Throws Error(kParse) on malformed text.
Json parse(const std::string& text);

Json to_json(const SetFamily& family,
             const std::vector<std::string>& element_labels = {});
Json to_json(const ConvexGeometry& g);
bool is_set_family(const Json& j);
SetFamily set_family_from_json(const Json& j,
                               std::vector<std::string>* element_labels);
// Validates; throws AxiomViolation.
ConvexGeometry geometry_from_json(const Json& j);

// Cover pairs [x, y] with x < y, 0-based.
Json to_json(const Poset& poset);
Poset poset_from_json(const Json& j);

// Certificate elements are sets (arrays of 1-based ground elements) when a
// geometry is known and 0-based indices otherwise; both forms are accepted
// on input when a geometry is known.
class ElementCodec {
 public:
  explicit ElementCodec(const Poset& poset) : size_(poset.size()) {}
  explicit ElementCodec(const ConvexGeometry& g)
      : size_(g.size()), geometry_(&g) {}

  Json encode(Element x) const;
  Element decode(const Json& j) const;  // throws kMalformedCertificate

 private:
  std::size_t size_;
  const ConvexGeometry* geometry_ = nullptr;
};

Json to_json(const Realizer& r, const ElementCodec& codec);
Json to_json(const ConvexRealizer& r);
Json to_json(const BooleanRealizer& r, const ElementCodec& codec);
Json to_json(const LocalRealizer& r, const ElementCodec& codec);
Json to_json(const FractionalRealizer& r, const ElementCodec& codec);
Json to_json(const DistinguishingSequence& seq, PknParams params);
Json to_json(const StandardExample& se, const ElementCodec& codec);

// Readers throw Error(kMalformedCertificate).
Realizer realizer_from_json(const Json& j, const ElementCodec& codec);
ConvexRealizer convex_realizer_from_json(const Json& j);
BooleanRealizer boolean_realizer_from_json(const Json& j,
                                           const ElementCodec& codec);
LocalRealizer local_realizer_from_json(const Json& j,
                                       const ElementCodec& codec);
FractionalRealizer fractional_realizer_from_json(const Json& j,
                                                 const ElementCodec& codec);
DistinguishingSequence distinguishing_from_json(const Json& j,
                                                PknParams* params);

Json to_json(const DimensionReport& report, const ElementCodec& codec,
             bool timings);
Json to_json(const TheoremSuiteResult& result);

// "p/q" (or "p" for integers) and back.
std::string rational_text(const mpq_class& q);
mpq_class rational_from_text(const std::string& text);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace ordim::io

#endif  // ORDIM_SERIALIZE_HPP_
