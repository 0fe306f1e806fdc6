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

// Command-line front end over the C interface.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordim/ordim.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;

// Owning wrappers for C handles and strings.
struct StringFree {
  void operator()(char* s) const { ordim_string_free(s); }
};
struct GeometryFree {
  void operator()(ordim_geometry* g) const { ordim_geometry_free(g); }
};
struct PosetFree {
  void operator()(ordim_poset* p) const { ordim_poset_free(p); }
};
using CString = std::unique_ptr<char, StringFree>;
using Geometry = std::unique_ptr<ordim_geometry, GeometryFree>;
using PosetHandle = std::unique_ptr<ordim_poset, PosetFree>;

class CliError : public std::runtime_error {
 public:
  CliError(int code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void check(ordim_status status) {
  if (status != ORDIM_OK) throw CliError(status, ordim_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitUsage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError(kExitUsage, "cannot write " + out_path);
  out << text;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ORDIM_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CliError(kExitUsage, "ORDIM_BUDGET must be a positive integer");
    }
  }
  return 10'000'000;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CliError(kExitUsage, what + " is not valid JSON: " + e.what());
  }
}

bool is_family(const std::string& text) {
  const Json j = parse_json(text, "input");
  return j.is_object() && j.contains("sets");
}

Geometry load_geometry(const std::string& text) {
  ordim_geometry* g = nullptr;
  check(ordim_geometry_from_json(text.c_str(), &g));
  return Geometry(g);
}

PosetHandle load_poset(const std::string& text) {
  ordim_poset* p = nullptr;
  check(ordim_poset_from_json(text.c_str(), &p));
  return PosetHandle(p);
}

std::string value_text(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string report_table(const Json& report) {
  std::ostringstream os;
  for (const char* key : {"dim", "dim_lower", "dim_upper", "cdim", "maxdd",
                          "vcdim", "se", "fdim"}) {
    if (report.contains(key)) {
      os << std::left << std::setw(12) << key << value_text(report.at(key))
         << "\n";
    }
  }
  os << std::left << std::setw(12) << "chain"
     << (report.at("inequality_chain_holds").get<bool>() ? "holds" : "VIOLATED")
     << "\n";
  for (const auto& note : report.at("notes")) {
    os << "note: " << note.get<std::string>() << "\n";
  }
  return os.str();
}

std::string family_table(const Json& family, const Json& report) {
  std::ostringstream os;
  os << "ground " << family.at("ground") << ", " << family.at("sets").size()
     << " sets\n";
  for (const auto& s : family.at("sets")) {
    std::string label;
    for (const auto& e : s) label += (label.empty() ? "" : ",") + e.dump();
    os << "{" << label << "}\n";
  }
  if (!report.is_null()) os << report_table(report);
  return os.str();
}

struct GenOptions {
  std::string kind;
  int n = 0;
  int k = 1;
  int t = 3;
  std::uint64_t seed = 1;
  std::vector<int> order;
  std::string format = "json";
  std::string out;
};

int run_gen(const GenOptions& o) {
  if (o.kind == "enumerate") {
    char* raw = nullptr;
    check(ordim_enumerate(o.n, &raw));
    CString text(raw);
    write_output(text.get(), o.out);
    return kExitOk;
  }
  Json params;
  params["n"] = o.n;
  params["k"] = o.k;
  params["t"] = o.t;
  params["seed"] = o.seed;
  if (!o.order.empty()) params["order"] = o.order;
  if (o.kind == "random") std::cerr << "seed " << o.seed << "\n";
  ordim_geometry* raw_g = nullptr;
  check(ordim_geometry_generate(o.kind.c_str(), params.dump().c_str(), &raw_g));
  Geometry g(raw_g);
  char* raw = nullptr;
  if (o.format == "dot") {
    check(ordim_geometry_to_dot(g.get(), &raw));
  } else {
    check(ordim_geometry_to_json(g.get(), &raw));
  }
  CString text(raw);
  write_output(text.get(), o.out);
  return kExitOk;
}

struct ComputeOptions {
  std::string input;
  std::vector<std::string> only;
  std::optional<std::uint64_t> budget;
  std::uint64_t ext_limit = 200'000;
  unsigned jobs = 1;
  bool timings = false;
  std::string format = "json";
  std::string out;
};

int run_compute(const ComputeOptions& o) {
  const std::string text = read_file(o.input);
  Json options;
  options["budget"] = o.budget ? *o.budget : default_budget();
  options["ext_limit"] = o.ext_limit;
  options["timings"] = o.timings;
  if (!o.only.empty()) options["only"] = o.only;
  char* raw = nullptr;
  ordim_status status;
  if (is_family(text)) {
    Geometry g = load_geometry(text);
    status = ordim_analyze(g.get(), options.dump().c_str(), &raw);
  } else {
    PosetHandle p = load_poset(text);
    status = ordim_analyze_poset(p.get(), options.dump().c_str(), &raw);
  }
  if (status != ORDIM_OK && status != ORDIM_ERR_BUDGET) check(status);
  CString report(raw);
  if (o.format == "table") {
    write_output(report_table(parse_json(report.get(), "report")), o.out);
  } else {
    write_output(report.get(), o.out);
  }
  if (status == ORDIM_ERR_BUDGET) {
    std::cerr << "budget exhausted; partial report written\n";
  }
  return status;
}

struct VerifyOptions {
  std::string input;
  std::string certificate;
  std::string kind;
  std::string out;
};

int run_verify(const VerifyOptions& o) {
  const std::string text = read_file(o.input);
  const std::string cert = read_file(o.certificate);
  char* raw = nullptr;
  ordim_status status;
  if (is_family(text)) {
    Geometry g = load_geometry(text);
    status = ordim_verify(g.get(), o.kind.c_str(), cert.c_str(), &raw);
  } else {
    PosetHandle p = load_poset(text);
    status = ordim_verify_poset(p.get(), o.kind.c_str(), cert.c_str(), &raw);
  }
  if (status != ORDIM_OK && status != ORDIM_ERR_REJECT) check(status);
  CString verdict(raw);
  write_output(verdict.get(), o.out);
  if (status == ORDIM_ERR_REJECT) {
    std::cerr << "rejected: "
              << parse_json(verdict.get(), "verdict").at("detail").get<std::string>()
              << "\n";
  }
  return status;
}

struct TheoremOptions {
  int enumerate = 0;
  int random_n = 5;
  int random_t = 0;
  int random_count = 0;
  std::uint64_t seed = 1;
  bool named = false;
  int pkn_k_max = 2;
  int pkn_n_max = 8;
  int pn_min = 3;
  int pn_max = 6;
  std::vector<std::string> only;
  std::optional<std::uint64_t> budget;
  unsigned jobs = 1;
  std::string format = "table";
  std::string out;
};

int run_theorems(const TheoremOptions& o) {
  Json config;
  config["enumerate"] = o.enumerate;
  if (o.random_count > 0) {
    config["random"] = {{"n", o.random_n},
                        {"t", o.random_t},
                        {"count", o.random_count},
                        {"seed", o.seed}};
    std::cerr << "seed " << o.seed << "\n";
  }
  config["named"] = o.named;
  config["pkn_k_max"] = o.pkn_k_max;
  config["pkn_n_max"] = o.pkn_n_max;
  config["pn_min"] = o.pn_min;
  config["pn_max"] = o.pn_max;
  if (!o.only.empty()) config["checks"] = o.only;
  config["budget"] = o.budget ? *o.budget : default_budget();
  config["jobs"] = o.jobs;
  char* raw_json = nullptr;
  char* raw_table = nullptr;
  const ordim_status status =
      ordim_theorems(config.dump().c_str(), &raw_json, &raw_table);
  if (status != ORDIM_OK && status != ORDIM_ERR_REJECT) check(status);
  CString json(raw_json);
  CString table(raw_table);
  write_output(o.format == "json" ? json.get() : table.get(), o.out);
  return status == ORDIM_OK ? kExitOk : 1;
}

struct ExportOptions {
  std::string input;
  std::string format = "dot";
  std::string out;
};

int run_export(const ExportOptions& o) {
  const std::string text = read_file(o.input);
  Geometry g = load_geometry(text);
  char* raw = nullptr;
  if (o.format == "dot") {
    check(ordim_geometry_to_dot(g.get(), &raw));
    CString dot(raw);
    write_output(dot.get(), o.out);
  } else if (o.format == "json") {
    check(ordim_geometry_to_json(g.get(), &raw));
    CString json(raw);
    write_output(json.get(), o.out);
  } else {
    check(ordim_geometry_to_json(g.get(), &raw));
    CString json(raw);
    write_output(family_table(parse_json(json.get(), "family"), Json()), o.out);
  }
  return kExitOk;
}

struct CertOptions {
  std::string kind;
  int k = 1;
  int n = 0;
  std::uint64_t seed = 1;
  int max_tries = 100;
  std::string out;
};

int run_cert(const CertOptions& o) {
  Json params{{"k", o.k}, {"n", o.n}, {"seed", o.seed},
              {"max_tries", o.max_tries}};
  if (o.kind == "randomized" || (o.kind == "pkn-realizer" && o.k > 1)) {
    std::cerr << "seed " << o.seed << "\n";
  }
  char* raw = nullptr;
  check(ordim_certificate(o.kind.c_str(), params.dump().c_str(), &raw));
  CString cert(raw);
  write_output(cert.get(), o.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact dimension parameters of convex geometries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ordim_version());

  const std::vector<std::string> formats{"json", "dot", "table"};

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build a convex geometry");
  gen_cmd->add_option("kind", gen.kind, "Family to build")
      ->required()
      ->check(CLI::IsMember(
          {"linear", "boolean", "pkn", "pn", "qn", "random", "enumerate"}));
  gen_cmd->add_option("--n", gen.n, "Size parameter")->required();
  gen_cmd->add_option("--k", gen.k, "P(k,n) parameter");
  gen_cmd->add_option("--t", gen.t, "Number of random chains joined");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--order", gen.order, "Order for a linear geometry, e.g. 3,1,2")
      ->delimiter(',');
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"json", "dot"}));
  gen_cmd->add_option("--out", gen.out, "Output file");

  ComputeOptions compute;
  auto* compute_cmd =
      app.add_subcommand("compute", "Compute dimension parameters");
  compute_cmd->add_option("input", compute.input, "Set family or poset JSON")
      ->required();
  compute_cmd->add_option("--only", compute.only,
                          "Subset of dim, cdim, maxdd, vcdim, se, fdim")
      ->delimiter(',');
  compute_cmd->add_option("--budget", compute.budget, "Search node budget");
  compute_cmd->add_option("--ext-limit", compute.ext_limit,
                          "Linear extension limit for the fractional LP");
  compute_cmd->add_option("--jobs", compute.jobs, "Worker cap");
  compute_cmd->add_flag("--timings", compute.timings,
                        "Include wall-clock timings");
  compute_cmd->add_option("--format", compute.format)
      ->check(CLI::IsMember({"json", "table"}));
  compute_cmd->add_option("--out", compute.out, "Output file");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->add_option("input", verify.input, "Set family or poset JSON")
      ->required();
  verify_cmd->add_option("certificate", verify.certificate, "Certificate JSON")
      ->required();
  verify_cmd->add_option("--kind", verify.kind, "Certificate kind")
      ->required()
      ->check(CLI::IsMember({"realizer", "convex", "boolean", "local",
                             "fractional", "distinguishing"}));
  verify_cmd->add_option("--out", verify.out, "Output file");

  TheoremOptions thm;
  auto* thm_cmd = app.add_subcommand("theorems", "Run the theorem suite");
  thm_cmd->add_option("--enumerate", thm.enumerate,
                      "Every labeled geometry on up to this many elements");
  thm_cmd->add_option("--random-n", thm.random_n, "Ground size of random geometries");
  thm_cmd->add_option("--random-t", thm.random_t,
                      "Chains per random geometry (0 varies them)");
  thm_cmd->add_option("--random-count", thm.random_count,
                      "Number of random geometries");
  thm_cmd->add_option("--seed", thm.seed, "Random seed");
  thm_cmd->add_flag("--named", thm.named, "Include the named families");
  thm_cmd->add_option("--pkn-k-max", thm.pkn_k_max);
  thm_cmd->add_option("--pkn-n-max", thm.pkn_n_max);
  thm_cmd->add_option("--pn-min", thm.pn_min);
  thm_cmd->add_option("--pn-max", thm.pn_max);
  thm_cmd->add_option("--only", thm.only, "Checks to run")->delimiter(',');
  thm_cmd->add_option("--budget", thm.budget, "Search node budget");
  thm_cmd->add_option("--jobs", thm.jobs, "Worker threads");
  thm_cmd->add_option("--format", thm.format)
      ->check(CLI::IsMember({"json", "table"}));
  thm_cmd->add_option("--out", thm.out, "Output file");

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "Export a geometry");
  export_cmd->add_option("input", exp.input, "Set family JSON")->required();
  export_cmd->add_option("--format", exp.format)->check(CLI::IsMember(formats));
  export_cmd->add_option("--out", exp.out, "Output file");

  CertOptions cert;
  auto* cert_cmd =
      app.add_subcommand("cert", "Build a certificate for P(k,n)");
  cert_cmd->add_option("kind", cert.kind, "Certificate to build")
      ->required()
      ->check(CLI::IsMember(
          {"pkn-fractional", "binary", "randomized", "pkn-realizer"}));
  cert_cmd->add_option("--k", cert.k);
  cert_cmd->add_option("--n", cert.n)->required();
  cert_cmd->add_option("--seed", cert.seed, "Random seed");
  cert_cmd->add_option("--max-tries", cert.max_tries);
  cert_cmd->add_option("--out", cert.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*compute_cmd) return run_compute(compute);
    if (*verify_cmd) return run_verify(verify);
    if (*thm_cmd) return run_theorems(thm);
    if (*export_cmd) return run_export(exp);
    if (*cert_cmd) return run_cert(cert);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  }
  return kExitUsage;
}
