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

#include "ordim/serialize.hpp"

#include <algorithm>

#include "ordim/error.hpp"

namespace ordim::io {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedCertificate, what);
}

Json document(const char* kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  return f;
}

long long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) {
    malformed(std::string(what) + " must be an integer");
  }
  return j.get<long long>();
}

void check_kind(const Json& j, const char* kind) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != kind) {
    malformed(std::string("expected a document of kind ") + kind);
  }
}

SubsetMask mask_from_json(const Json& j, int ground) {
  if (!j.is_array()) malformed("a set must be an array of elements");
  std::vector<int> elements;
  for (const Json& e : j) {
    const long long v = integer(e, "set element");
    if (v < 1 || v > ground) {
      malformed("set element " + std::to_string(v) + " outside [1, " +
                std::to_string(ground) + "]");
    }
    elements.push_back(static_cast<int>(v));
  }
  return SubsetMask::of(std::span<const int>(elements));
}

Json mask_to_json(SubsetMask m) {
  Json out = Json::array();
  for (int e : m.elements()) out.push_back(e);
  return out;
}

std::vector<Element> sequence(const Json& j, const ElementCodec& codec) {
  if (!j.is_array()) malformed("an order must be an array of elements");
  std::vector<Element> out;
  for (const Json& e : j) out.push_back(codec.decode(e));
  return out;
}

Json sequence_to_json(std::span<const Element> order,
                      const ElementCodec& codec) {
  Json out = Json::array();
  for (Element x : order) out.push_back(codec.encode(x));
  return out;
}

template <typename T>
void put(Json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const SetFamily& family,
             const std::vector<std::string>& element_labels) {
  Json j = document("set_family");
  j["ground"] = family.ground();
  Json sets = Json::array();
  for (SubsetMask m : family.sets()) sets.push_back(mask_to_json(m));
  j["sets"] = std::move(sets);
  if (!element_labels.empty()) j["labels"] = element_labels;
  return j;
}

Json to_json(const ConvexGeometry& g) {
  return to_json(g.family(), g.element_labels());
}

bool is_set_family(const Json& j) {
  return j.is_object() && j.contains("sets");
}

SetFamily set_family_from_json(const Json& j,
                               std::vector<std::string>* element_labels) {
  check_kind(j, "set_family");
  const long long ground = integer(field(j, "ground"), "\"ground\"");
  if (ground < 1 || ground > kMaxGround) {
    throw Error(ErrorCode::kParamRange,
                "ground set size must lie in [1, 64], got " +
                    std::to_string(ground));
  }
  std::vector<SubsetMask> sets;
  for (const Json& s : array_field(j, "sets")) {
    sets.push_back(mask_from_json(s, static_cast<int>(ground)));
  }
  if (element_labels && j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != static_cast<std::size_t>(ground)) {
      malformed("\"labels\" must hold one string per ground element");
    }
    for (const Json& l : labels) {
      if (!l.is_string()) malformed("labels must be strings");
      element_labels->push_back(l.get<std::string>());
    }
  }
  return SetFamily(static_cast<int>(ground), std::move(sets));
}

ConvexGeometry geometry_from_json(const Json& j) {
  std::vector<std::string> labels;
  SetFamily family = set_family_from_json(j, &labels);
  return validate_convex_geometry(std::move(family), std::move(labels));
}

Json to_json(const Poset& poset) {
  Json j = document("poset");
  j["n"] = poset.size();
  Json relation = Json::array();
  for (const auto& [x, y] : hasse_covers(poset)) {
    relation.push_back(Json::array({x, y}));
  }
  j["relation"] = std::move(relation);
  if (!poset.labels().empty()) j["labels"] = poset.labels();
  return j;
}

Poset poset_from_json(const Json& j) {
  check_kind(j, "poset");
  const long long n = integer(field(j, "n"), "\"n\"");
  if (n < 1 || n > 100000) malformed("\"n\" must lie in [1, 100000]");
  std::vector<std::pair<Element, Element>> pairs;
  for (const Json& p : array_field(j, "relation")) {
    if (!p.is_array() || p.size() != 2) {
      malformed("relation entries must be [x, y] pairs");
    }
    const long long x = integer(p[0], "relation element");
    const long long y = integer(p[1], "relation element");
    if (x < 0 || y < 0 || x >= n || y >= n) {
      malformed("relation element outside [0, n)");
    }
    pairs.emplace_back(x, y);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const Json& l : j.at("labels")) labels.push_back(l.get<std::string>());
    if (labels.size() != static_cast<std::size_t>(n)) {
      malformed("\"labels\" must hold one string per element");
    }
  }
  return poset_from_relation(static_cast<std::size_t>(n), pairs,
                             std::move(labels));
}

Json ElementCodec::encode(Element x) const {
  if (geometry_) return mask_to_json(geometry_->set(x));
  return x;
}

Element ElementCodec::decode(const Json& j) const {
  if (j.is_number_integer()) {
    const long long v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= size_) {
      malformed("element index " + std::to_string(v) + " out of range");
    }
    return static_cast<Element>(v);
  }
  if (geometry_ && j.is_array()) {
    const SubsetMask m = mask_from_json(j, geometry_->ground());
    if (auto i = geometry_->family().index_of(m)) return *i;
    malformed("set " + m.compact(geometry_->ground()) +
              " is not a member of the geometry");
  }
  malformed("element must be an index" +
            std::string(geometry_ ? " or a member set" : ""));
}

Json to_json(const Realizer& r, const ElementCodec& codec) {
  Json j = document("realizer");
  Json exts = Json::array();
  for (const auto& e : r.extensions) {
    exts.push_back(sequence_to_json(e.order, codec));
  }
  j["extensions"] = std::move(exts);
  return j;
}

Json to_json(const ConvexRealizer& r) {
  Json j = document("convex_realizer");
  j["orders"] = r.orders;
  return j;
}

Json to_json(const BooleanRealizer& r, const ElementCodec& codec) {
  Json j = document("boolean_realizer");
  Json orders = Json::array();
  for (const auto& o : r.orders) orders.push_back(sequence_to_json(o, codec));
  j["orders"] = std::move(orders);
  j["tau"] = r.tau;
  return j;
}

Json to_json(const LocalRealizer& r, const ElementCodec& codec) {
  Json j = document("local_realizer");
  Json ples = Json::array();
  for (const auto& p : r.ples) ples.push_back(sequence_to_json(p.order, codec));
  j["ples"] = std::move(ples);
  return j;
}

Json to_json(const FractionalRealizer& r, const ElementCodec& codec) {
  Json j = document("fractional_realizer");
  Json exts = Json::array();
  mpq_class total = 0;
  for (const auto& w : r.weighted) {
    Json e;
    e["weight"] = rational_text(w.weight);
    e["order"] = sequence_to_json(w.extension.order, codec);
    exts.push_back(std::move(e));
    total += w.weight;
  }
  j["total_weight"] = rational_text(total);
  j["extensions"] = std::move(exts);
  return j;
}

Json to_json(const DistinguishingSequence& seq, PknParams params) {
  Json j = document("distinguishing");
  j["k"] = params.k;
  j["n"] = params.n;
  j["t"] = seq.t;
  Json sets = Json::array();
  for (const Bitset& y : seq.sets) {
    Json s = Json::array();
    for (auto a = y.find_first(); a != Bitset::npos; a = y.find_next(a)) {
      s.push_back(a + 1);
    }
    sets.push_back(std::move(s));
  }
  j["sets"] = std::move(sets);
  return j;
}

Json to_json(const StandardExample& se, const ElementCodec& codec) {
  Json j;
  j["t"] = se.a.size();
  j["a"] = sequence_to_json(se.a, codec);
  j["b"] = sequence_to_json(se.b, codec);
  return j;
}

Realizer realizer_from_json(const Json& j, const ElementCodec& codec) {
  check_kind(j, "realizer");
  Realizer r;
  for (const Json& e : array_field(j, "extensions")) {
    r.extensions.push_back({sequence(e, codec)});
  }
  return r;
}

ConvexRealizer convex_realizer_from_json(const Json& j) {
  check_kind(j, "convex_realizer");
  ConvexRealizer r;
  for (const Json& o : array_field(j, "orders")) {
    if (!o.is_array()) malformed("orders must be arrays of ground elements");
    std::vector<int> order;
    for (const Json& e : o) {
      order.push_back(static_cast<int>(integer(e, "ground element")));
    }
    r.orders.push_back(std::move(order));
  }
  return r;
}

BooleanRealizer boolean_realizer_from_json(const Json& j,
                                           const ElementCodec& codec) {
  check_kind(j, "boolean_realizer");
  BooleanRealizer r;
  for (const Json& o : array_field(j, "orders")) {
    r.orders.push_back(sequence(o, codec));
  }
  for (const Json& s : array_field(j, "tau")) {
    if (!s.is_string()) malformed("tau entries must be strings");
    r.tau.insert(s.get<std::string>());
  }
  return r;
}

LocalRealizer local_realizer_from_json(const Json& j,
                                       const ElementCodec& codec) {
  check_kind(j, "local_realizer");
  LocalRealizer r;
  for (const Json& p : array_field(j, "ples")) {
    r.ples.push_back({sequence(p, codec)});
  }
  return r;
}

FractionalRealizer fractional_realizer_from_json(const Json& j,
                                                 const ElementCodec& codec) {
  check_kind(j, "fractional_realizer");
  FractionalRealizer r;
  for (const Json& e : array_field(j, "extensions")) {
    const Json& w = field(e, "weight");
    if (!w.is_string() && !w.is_number_integer()) {
      malformed("weights must be \"p/q\" strings or integers");
    }
    const mpq_class weight = w.is_string()
                                 ? rational_from_text(w.get<std::string>())
                                 : mpq_class(w.get<long>());
    r.weighted.push_back({{sequence(field(e, "order"), codec)}, weight});
  }
  return r;
}

DistinguishingSequence distinguishing_from_json(const Json& j,
                                                PknParams* params) {
  check_kind(j, "distinguishing");
  const long long t = integer(field(j, "t"), "\"t\"");
  if (t < 0 || t > 100000) malformed("\"t\" out of range");
  if (params) {
    params->k = static_cast<int>(integer(field(j, "k"), "\"k\""));
    params->n = static_cast<int>(integer(field(j, "n"), "\"n\""));
  }
  DistinguishingSequence seq;
  seq.t = static_cast<std::size_t>(t);
  for (const Json& s : array_field(j, "sets")) {
    if (!s.is_array()) malformed("sets must be arrays");
    Bitset y(seq.t);
    for (const Json& a : s) {
      const long long v = integer(a, "sequence element");
      if (v < 1 || v > t) malformed("sequence element outside [1, t]");
      y.set(static_cast<std::size_t>(v - 1));
    }
    seq.sets.push_back(std::move(y));
  }
  return seq;
}

Json to_json(const DimensionReport& report, const ElementCodec& codec,
             bool timings) {
  Json j = document("dimension_report");
  put(j, "dim", report.dim);
  put(j, "dim_lower", report.dim_lower);
  put(j, "dim_upper", report.dim_upper);
  put(j, "cdim", report.cdim);
  put(j, "maxdd", report.maxdd);
  put(j, "vcdim", report.vcdim);
  put(j, "se", report.se);
  if (report.fdim) j["fdim"] = rational_text(*report.fdim);
  j["partial"] = report.partial;
  j["inequality_chain_holds"] = report.chain_holds;
  j["notes"] = report.notes;
  Json certs = Json::object();
  if (report.realizer) certs["realizer"] = to_json(*report.realizer, codec);
  if (report.convex_realizer) {
    certs["convex_realizer"] = to_json(*report.convex_realizer);
  }
  if (report.fractional_realizer) {
    certs["fractional_realizer"] = to_json(*report.fractional_realizer, codec);
  }
  if (report.standard_example) {
    certs["standard_example"] = to_json(*report.standard_example, codec);
  }
  j["certificates"] = std::move(certs);
  if (timings) {
    Json t = Json::object();
    for (const auto& [name, ms] : report.timings_ms) t[name] = ms;
    j["timings_ms"] = std::move(t);
  }
  return j;
}

Json to_json(const TheoremSuiteResult& result) {
  Json j = document("theorem_suite");
  j["instances"] = result.instances;
  j["failures"] = result.failures;
  Json rows = Json::array();
  for (const CheckRow& r : result.rows) {
    Json row;
    row["instance"] = r.instance;
    row["check"] = check_name(r.check);
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json table = Json::array();
  for (const PknRow& r : result.pkn_table) {
    Json row;
    row["k"] = r.k;
    row["n"] = r.n;
    row["vcdim"] = r.vcdim;
    row["se"] = r.se;
    row["maxdd"] = r.maxdd;
    row["cdim"] = r.cdim;
    row["binomial"] = r.binomial;
    put(row, "dim", r.dim);
    row["dim_upper"] = r.dim_upper;
    row["dim_bound"] = r.dim_bound;
    row["fdim_certificate"] = rational_text(r.fdim_certificate);
    row["fdim_strict_bound"] = r.fdim_strict_bound;
    table.push_back(std::move(row));
  }
  j["pkn_table"] = std::move(table);
  return j;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_text(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    malformed("\"" + text + "\" is not a rational p/q");
  }
  q.canonicalize();
  return q;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  return std::all_of(j.begin(), j.end(), [](const Json& e) {
    return e.is_primitive() ||
           (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) {
              return x.is_primitive();
            }));
  });
}

// Objects one key per line; arrays of scalars or of scalar arrays inline.
void write(const Json& j, int indent, std::string& out) {
  if (is_flat(j) || (j.is_object() && j.empty())) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    write(*it, indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (object ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

}  // namespace ordim::io
