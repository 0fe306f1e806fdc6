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

#include "ordim/ordim.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ordim/constructions.hpp"
#include "ordim/dimensions.hpp"
#include "ordim/error.hpp"
#include "ordim/geometry.hpp"
#include "ordim/serialize.hpp"
#include "ordim/theorems.hpp"

struct ordim_geometry {
  ordim::ConvexGeometry g;
};

struct ordim_poset {
  ordim::Poset p;
};

namespace {

using ordim::Error;
using ordim::ErrorCode;
using ordim::io::Json;

thread_local std::string last_error;

ordim_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAxiomViolation: return ORDIM_ERR_AXIOM;
    case ErrorCode::kBudgetExceeded: return ORDIM_ERR_BUDGET;
    default: return ORDIM_ERR_USAGE;
  }
}

template <typename F>
ordim_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const ordim::Error& e) {
    last_error = std::string(ordim::error_code_name(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return ORDIM_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kParamRange, what);
}

Json options_of(const char* json) {
  if (!json || !*json) return Json::object();
  Json j = ordim::io::parse(json);
  require(j.is_object(), "options must be a JSON object");
  return j;
}

int int_param(const Json& params, const char* key, int fallback) {
  if (!params.contains(key)) return fallback;
  const Json& v = params.at(key);
  require(v.is_number_integer(), "integer parameter expected");
  return v.get<int>();
}

std::uint64_t u64_param(const Json& params, const char* key,
                        std::uint64_t fallback) {
  if (!params.contains(key)) return fallback;
  const Json& v = params.at(key);
  require(v.is_number_unsigned() ||
              (v.is_number_integer() && v.get<long long>() >= 0),
          "non-negative integer parameter expected");
  return v.get<std::uint64_t>();
}

ordim::AnalyzeOptions analyze_options(const Json& o, bool geometry) {
  ordim::AnalyzeOptions options;
  options.budget = u64_param(o, "budget", options.budget);
  options.ext_limit = u64_param(o, "ext_limit", options.ext_limit);
  options.vcdim = geometry;
  options.cdim = geometry;
  if (o.contains("only")) {
    options.dim = options.cdim = options.maxdd = options.se = options.fdim =
        options.vcdim = false;
    require(o.at("only").is_array(), "\"only\" must be a list of names");
    for (const Json& name : o.at("only")) {
      require(name.is_string(), "\"only\" entries must be strings");
      const auto n = name.get<std::string>();
      if (n == "dim") options.dim = true;
      else if (n == "cdim" && geometry) options.cdim = true;
      else if (n == "vcdim" && geometry) options.vcdim = true;
      else if (n == "maxdd") options.maxdd = true;
      else if (n == "se") options.se = true;
      else if (n == "fdim") options.fdim = true;
      else throw Error(ErrorCode::kParamRange,
                       "unknown or inapplicable parameter \"" + n + "\"");
    }
  }
  return options;
}

Json make_verdict(const std::string& kind, bool accepted,
                  const std::string& detail) {
  Json j;
  j["schema_version"] = ordim::io::kSchemaVersion;
  j["kind"] = "verdict";
  j["certificate"] = kind;
  j["accepted"] = accepted;
  j["detail"] = detail;
  return j;
}

// Verifies certificates that only need the order; nullopt for other kinds.
std::optional<Json> verify_order_certificate(const ordim::Poset& poset,
                                             const ordim::io::ElementCodec& codec,
                                             const std::string& kind,
                                             const Json& cert) {
  namespace io = ordim::io;
  if (kind == "realizer") {
    const auto v = ordim::verify_realizer(poset, io::realizer_from_json(cert, codec));
    return make_verdict(kind, v.accepted, v.detail);
  }
  if (kind == "boolean") {
    const auto v = ordim::verify_boolean_realizer(
        poset, io::boolean_realizer_from_json(cert, codec));
    return make_verdict(kind, v.accepted, v.detail);
  }
  if (kind == "local") {
    const auto v = ordim::verify_local_realizer(
        poset, io::local_realizer_from_json(cert, codec));
    Json j = make_verdict(kind, v.accepted, v.detail);
    j["max_multiplicity"] = v.max_multiplicity;
    return j;
  }
  if (kind == "fractional") {
    const auto v = ordim::verify_fractional_realizer(
        poset, io::fractional_realizer_from_json(cert, codec));
    Json j = make_verdict(kind, v.accepted, v.detail);
    j["total_weight"] = io::rational_text(v.total_weight);
    return j;
  }
  return std::nullopt;
}

ordim_status finish_verdict(const Json& verdict, char** out) {
  *out = copy_out(ordim::io::dump(verdict));
  return verdict.at("accepted").get<bool>() ? ORDIM_OK : ORDIM_ERR_REJECT;
}

ordim_status finish_report(const ordim::DimensionReport& report,
                           const ordim::io::ElementCodec& codec, bool timings,
                           char** out) {
  *out = copy_out(ordim::io::dump(ordim::io::to_json(report, codec, timings)));
  return report.partial ? ORDIM_ERR_BUDGET : ORDIM_OK;
}

}  // namespace

extern "C" {

const char* ordim_version(void) { return "1.0.0"; }

const char* ordim_last_error(void) { return last_error.c_str(); }

void ordim_string_free(char* s) { std::free(s); }

ordim_status ordim_geometry_generate(const char* kind, const char* params_json,
                                     ordim_geometry** out) {
  return guarded([&] {
    require(kind && out, "null argument");
    const Json p = options_of(params_json);
    const std::string k = kind;
    const int n = int_param(p, "n", 0);
    auto emit = [&](ordim::ConvexGeometry g) {
      *out = new ordim_geometry{std::move(g)};
      return ORDIM_OK;
    };
    if (k == "linear") {
      std::vector<int> order;
      if (p.contains("order")) {
        order = p.at("order").get<std::vector<int>>();
      } else {
        require(n >= 1 && n <= ordim::kMaxGround, "linear needs 1 <= n <= 64");
        for (int e = 1; e <= n; ++e) order.push_back(e);
      }
      return emit(ordim::linear_geometry(order));
    }
    if (k == "boolean") return emit(ordim::boolean_algebra(n));
    if (k == "pkn") return emit(ordim::pkn({int_param(p, "k", 1), n}));
    if (k == "pn") return emit(ordim::qn_pn({n}).p);
    if (k == "qn") return emit(ordim::qn_pn({n}).q);
    if (k == "random") {
      return emit(ordim::random_geometry(n, int_param(p, "t", 3),
                                         u64_param(p, "seed", 1)));
    }
    throw Error(ErrorCode::kParamRange, "unknown generator \"" + k + "\"");
  });
}

ordim_status ordim_geometry_from_json(const char* json, ordim_geometry** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new ordim_geometry{ordim::io::geometry_from_json(ordim::io::parse(json))};
    return ORDIM_OK;
  });
}

ordim_status ordim_geometry_to_json(const ordim_geometry* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_out(ordim::io::dump(ordim::io::to_json(g->g)));
    return ORDIM_OK;
  });
}

ordim_status ordim_geometry_to_dot(const ordim_geometry* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_out(ordim::hasse_dot(g->g));
    return ORDIM_OK;
  });
}

int ordim_geometry_size(const ordim_geometry* g) {
  return g ? static_cast<int>(g->g.size()) : -1;
}

void ordim_geometry_free(ordim_geometry* g) { delete g; }

ordim_status ordim_enumerate(int n, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    Json j;
    j["schema_version"] = ordim::io::kSchemaVersion;
    j["kind"] = "set_family_list";
    j["ground"] = n;
    Json families = Json::array();
    ordim::GeometryEnumerator it(n);
    while (auto g = it.next()) families.push_back(ordim::io::to_json(*g));
    j["count"] = families.size();
    j["families"] = std::move(families);
    *out_json = copy_out(ordim::io::dump(j));
    return ORDIM_OK;
  });
}

ordim_status ordim_poset_from_json(const char* json, ordim_poset** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new ordim_poset{ordim::io::poset_from_json(ordim::io::parse(json))};
    return ORDIM_OK;
  });
}

ordim_status ordim_geometry_poset(const ordim_geometry* g, ordim_poset** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = new ordim_poset{g->g.poset()};
    return ORDIM_OK;
  });
}

void ordim_poset_free(ordim_poset* p) { delete p; }

ordim_status ordim_analyze(const ordim_geometry* g, const char* options_json,
                           char** report_json) {
  return guarded([&] {
    require(g && report_json, "null argument");
    const Json o = options_of(options_json);
    const auto report = ordim::analyze(g->g, analyze_options(o, true));
    return finish_report(report, ordim::io::ElementCodec(g->g),
                         o.value("timings", false), report_json);
  });
}

ordim_status ordim_analyze_poset(const ordim_poset* p, const char* options_json,
                                 char** report_json) {
  return guarded([&] {
    require(p && report_json, "null argument");
    const Json o = options_of(options_json);
    const auto report = ordim::analyze(p->p, analyze_options(o, false));
    return finish_report(report, ordim::io::ElementCodec(p->p),
                         o.value("timings", false), report_json);
  });
}

ordim_status ordim_verify(const ordim_geometry* g, const char* kind,
                          const char* certificate_json, char** verdict_json) {
  return guarded([&] {
    require(g && kind && certificate_json && verdict_json, "null argument");
    const std::string k = kind;
    const Json cert = ordim::io::parse(certificate_json);
    const ordim::io::ElementCodec codec(g->g);
    if (auto v = verify_order_certificate(g->g.poset(), codec, k, cert)) {
      return finish_verdict(*v, verdict_json);
    }
    if (k == "convex") {
      const auto r = ordim::io::convex_realizer_from_json(cert);
      const bool ok = ordim::verify_convex_realizer(g->g, r.orders);
      return finish_verdict(
          make_verdict(k, ok,
                       ok ? "the chains' join is the geometry"
                          : "the chains' join differs from the geometry"),
          verdict_json);
    }
    if (k == "distinguishing") {
      ordim::PknParams params;
      const auto seq = ordim::io::distinguishing_from_json(cert, &params);
      ordim::check_params(params);
      if (!(ordim::pkn(params).family() == g->g.family())) {
        throw Error(ErrorCode::kGroundMismatch,
                    "the geometry is not P(" + std::to_string(params.k) + "," +
                        std::to_string(params.n) + ")");
      }
      const auto v = ordim::verify_distinguishing(params, seq);
      return finish_verdict(
          make_verdict(k, v.accepted,
                       v.accepted ? "distinguishing of length " +
                                        std::to_string(seq.t)
                                  : "no element separates J-member " +
                                        v.failing->compact(params.n)),
          verdict_json);
    }
    throw Error(ErrorCode::kParamRange,
                "unknown certificate kind \"" + k + "\"");
  });
}

ordim_status ordim_verify_poset(const ordim_poset* p, const char* kind,
                                const char* certificate_json,
                                char** verdict_json) {
  return guarded([&] {
    require(p && kind && certificate_json && verdict_json, "null argument");
    const Json cert = ordim::io::parse(certificate_json);
    if (auto v = verify_order_certificate(p->p, ordim::io::ElementCodec(p->p),
                                          kind, cert)) {
      return finish_verdict(*v, verdict_json);
    }
    throw Error(ErrorCode::kParamRange,
                std::string("certificate kind \"") + kind +
                    "\" needs a convex geometry");
  });
}

ordim_status ordim_certificate(const char* kind, const char* params_json,
                               char** certificate_json) {
  return guarded([&] {
    require(kind && certificate_json, "null argument");
    const Json p = options_of(params_json);
    const std::string k = kind;
    const ordim::PknParams params{int_param(p, "k", 1), int_param(p, "n", 0)};
    const std::uint64_t seed = u64_param(p, "seed", 1);
    const int max_tries = int_param(p, "max_tries", 100);
    auto sequence = [&](Json* extra) {
      if (k == "binary" || (k == "pkn-realizer" && params.k == 1)) {
        ordim::check_params(params);
        require(params.k == 1, "the binary construction needs k = 1");
        return ordim::binary_distinguishing(params.n);
      }
      auto r = ordim::randomized_distinguishing(params, seed, max_tries);
      if (extra) {
        (*extra)["seed"] = seed;
        (*extra)["tries"] = r.tries;
      }
      return r.sequence;
    };
    if (k == "pkn-fractional") {
      const auto g = ordim::pkn(params);
      *certificate_json = copy_out(ordim::io::dump(ordim::io::to_json(
          ordim::pkn_fractional_certificate(params), ordim::io::ElementCodec(g))));
      return ORDIM_OK;
    }
    if (k == "binary" || k == "randomized") {
      Json extra = Json::object();
      const auto seq = sequence(&extra);
      Json j = ordim::io::to_json(seq, params);
      for (auto& [key, value] : extra.items()) j[key] = value;
      *certificate_json = copy_out(ordim::io::dump(j));
      return ORDIM_OK;
    }
    if (k == "pkn-realizer") {
      Json extra = Json::object();
      const auto seq = sequence(&extra);
      const auto g = ordim::pkn(params);
      Json j = ordim::io::to_json(
          ordim::distinguishing_to_realizer(g, params, seq),
          ordim::io::ElementCodec(g));
      for (auto& [key, value] : extra.items()) j[key] = value;
      *certificate_json = copy_out(ordim::io::dump(j));
      return ORDIM_OK;
    }
    throw Error(ErrorCode::kParamRange,
                "unknown certificate kind \"" + k + "\"");
  });
}

ordim_status ordim_theorems(const char* config_json, char** result_json,
                            char** table_text) {
  return guarded([&] {
    require(result_json != nullptr, "null argument");
    const Json o = options_of(config_json);
    ordim::TheoremSuiteConfig config;
    config.enumerate_up_to = int_param(o, "enumerate", 0);
    if (o.contains("random")) {
      const Json& r = o.at("random");
      require(r.is_object(), "\"random\" must be an object");
      config.random = ordim::RandomPopulation{
          int_param(r, "n", 5), int_param(r, "t", 0), int_param(r, "count", 200),
          u64_param(r, "seed", 1)};
    }
    config.named = o.value("named", false);
    config.pkn_k_max = int_param(o, "pkn_k_max", config.pkn_k_max);
    config.pkn_n_max = int_param(o, "pkn_n_max", config.pkn_n_max);
    config.pn_min = int_param(o, "pn_min", config.pn_min);
    config.pn_max = int_param(o, "pn_max", config.pn_max);
    config.budget = u64_param(o, "budget", config.budget);
    config.jobs = static_cast<unsigned>(int_param(o, "jobs", 1));
    if (o.contains("checks")) {
      for (const Json& c : o.at("checks")) {
        require(c.is_string(), "check names must be strings");
        auto check = ordim::check_from_name(c.get<std::string>());
        if (!check) {
          throw Error(ErrorCode::kParamRange,
                      "unknown check \"" + c.get<std::string>() + "\"");
        }
        config.checks.push_back(*check);
      }
    } else {
      config.checks = ordim::all_checks();
    }
    const auto result = ordim::run_theorem_suite(config);
    *result_json = copy_out(ordim::io::dump(ordim::io::to_json(result)));
    if (table_text) *table_text = copy_out(ordim::format_table(result));
    return result.failures == 0 ? ORDIM_OK : ORDIM_ERR_REJECT;
  });
}

}  // extern "C"
