// ordspec: spectra, prime graphs, nonsolvability audits, and brute-force
// verification for the simple groups with abelian Sylow 2-subgroups.
//
// Exit codes:
//   0  success (for audit: witness found; for verify: all checks pass)
//   1  audit completed with no witness (a result, not an error)
//   2  invalid parameters, unsupported ranges, 64-bit overflow
//   3  I/O failure writing DOT or cache files
//   4  verify found a mismatch between formula and enumeration
//   5  J1 generator data file missing or corrupt

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ordspec/ordspec.hpp"
#include "ordspec/report.hpp"

#ifndef ORDSPEC_DEFAULT_J1_DATA
#define ORDSPEC_DEFAULT_J1_DATA "data/j1_generators.txt"
#endif

namespace {

using boost::multiprecision::cpp_int;
using ordspec::ordered_json;

struct Options {
  bool json = false;
  std::string dot_path;
  std::string cache_dir;
  bool no_cache = false;
  std::string j1_data = ORDSPEC_DEFAULT_J1_DATA;
};

struct Request {
  std::string command;  // spectrum | graph | audit | verify
  std::string family;   // L2 | R | J1 (spectrum/graph/audit)
  std::string target;   // psl2 | j1 | witness | all (verify)
  std::optional<std::uint64_t> q;
  bool squared = false;
};

ordspec::GroupFamilySpec spec_for(const Request& req) {
  if (req.family == "L2") {
    if (!req.q) throw std::invalid_argument("family L2 requires q");
    return ordspec::linear2_spec(*req.q);
  }
  if (req.family == "R") {
    if (!req.q) throw std::invalid_argument("family R requires q");
    return ordspec::small_ree_spec(*req.q);
  }
  if (req.family == "J1") {
    if (req.q) throw std::invalid_argument("family J1 takes no q");
    return ordspec::janko1_spec();
  }
  throw std::invalid_argument("unknown family '" + req.family + "' (expected L2, R, or J1)");
}

cpp_int exact_order(const ordspec::GroupFamilySpec& s) {
  switch (s.family) {
    case ordspec::Family::linear2: {
      const cpp_int q = s.q;
      return q * (q * q - 1) / s.d;
    }
    case ordspec::Family::small_ree: {
      const cpp_int q = s.q;
      const cpp_int cube = q * q * q;
      return cube * (cube + 1) * (q - 1);
    }
    case ordspec::Family::janko1:
      return ordspec::kJanko1Order;
  }
  throw std::logic_error("exact_order: unknown family");
}

ordered_json json_big(const cpp_int& v) {
  if (v < cpp_int(ordspec::kJsonExactLimit)) return static_cast<std::uint64_t>(v);
  return v.str();
}

ordered_json json_list(const std::vector<std::uint64_t>& values) {
  ordered_json out = ordered_json::array();
  for (std::uint64_t v : values) out.push_back(ordspec::json_number(v));
  return out;
}

std::string group_label(const Request& req) {
  std::string name = req.family == "J1" ? "J1" : req.family + "(" + std::to_string(*req.q) + ")";
  return name;
}

ordered_json result_spectrum(const Request& req) {
  const ordspec::GroupFamilySpec s = spec_for(req);
  ordspec::SpectrumSet mu = ordspec::mu_of(s);
  if (req.squared) mu = mu.direct_square();
  cpp_int order = exact_order(s);
  if (req.squared) order *= order;
  ordered_json result;
  result["group"] = group_label(req) + (req.squared ? " x " + group_label(req) : "");
  result["order"] = json_big(order);
  result["pi"] = json_list(ordspec::prime_divisors_of_order(s));
  result["mu"] = json_list(mu.mu());
  return result;
}

ordered_json result_graph(const Request& req) {
  const ordspec::GroupFamilySpec s = spec_for(req);
  ordspec::SpectrumSet mu = ordspec::mu_of(s);
  if (req.squared) mu = mu.direct_square();
  const ordspec::PrimeGraph g = ordspec::prime_graph(mu);
  const ordspec::IndependenceResult ind = ordspec::independence_number(g);
  ordered_json result;
  result["group"] = group_label(req) + (req.squared ? " x " + group_label(req) : "");
  result["vertices"] = json_list(g.vertices);
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : g.edges()) {
    ordered_json e = ordered_json::array();
    e.push_back(ordspec::json_number(a));
    e.push_back(ordspec::json_number(b));
    edges.push_back(std::move(e));
  }
  result["edges"] = std::move(edges);
  result["complete"] = g.complete();
  result["t"] = ind.t;
  result["witness"] = json_list(ind.witness);
  return result;
}

ordered_json result_audit(const Request& req) {
  const ordspec::GroupFamilySpec s = spec_for(req);
  const ordspec::SpectrumSet square = ordspec::mu_of(s).direct_square();
  const std::string label = group_label(req);
  const ordspec::AuditReport report =
      ordspec::audit_nonsolvability(square, "mu(" + label + " x " + label + ")");
  ordered_json result;
  result["source"] = report.source;
  result["search_space"] = report.search_space;
  if (report.witness) {
    const ordspec::NonsolvabilityWitness& w = *report.witness;
    ordered_json witness;
    witness["kind"] = w.kind == ordspec::WitnessKind::triple ? "triple" : "quadruple";
    witness["primes"] = json_list(w.primes);
    ordered_json products = ordered_json::array();
    for (const ordspec::ProductQuery& pq : w.verified_products) {
      ordered_json entry;
      entry["primes"] = json_list(pq.primes);
      entry["product"] = ordspec::json_number(pq.product);
      entry["in_spectrum"] = pq.in_spectrum;
      products.push_back(std::move(entry));
    }
    witness["verified_products"] = std::move(products);
    result["witness"] = std::move(witness);
  } else {
    result["witness"] = nullptr;
    result["note"] = "no witness found; the criterion is sufficient, not necessary";
  }
  return result;
}

void push_check(ordered_json& checks, const std::string& name, ordered_json expected,
                ordered_json actual) {
  ordered_json c;
  c["name"] = name;
  c["expected"] = expected;
  c["actual"] = actual;
  c["pass"] = expected == actual;
  checks.push_back(std::move(c));
}

void verify_psl2_into(ordered_json& checks, std::uint64_t q) {
  const ordspec::GroupFamilySpec s = ordspec::linear2_spec(q);
  const ordspec::EnumerationResult e = ordspec::enumerate_psl2(q);
  const std::string tag = "psl2(" + std::to_string(q) + ") ";
  push_check(checks, tag + "order", ordspec::json_number(ordspec::order_of(s)),
             ordspec::json_number(e.order));
  push_check(checks, tag + "mu", json_list(ordspec::mu_of(s).mu()), json_list(e.spectrum.mu()));
}

void verify_j1_into(ordered_json& checks, const std::string& data_path) {
  const ordspec::J1Generators gens = ordspec::load_j1_generators(data_path);
  const ordspec::EnumerationResult e = ordspec::enumerate_j1(gens);
  push_check(checks, "j1 order", ordspec::json_number(ordspec::kJanko1Order),
             ordspec::json_number(e.order));
  push_check(checks, "j1 mu", json_list(ordspec::mu_of(ordspec::janko1_spec()).mu()),
             json_list(e.spectrum.mu()));
}

void verify_witness_into(ordered_json& checks, std::uint64_t q) {
  const ordspec::UnrecognizabilityReport rep = ordspec::verify_unrecognizability(q);
  const std::string tag = "witness(" + std::to_string(q) + ") ";
  push_check(checks, tag + "mu(F1 x F2) = mu(L2 x L2)", json_list(rep.mu_square.mu()),
             json_list(rep.mu_witness.mu()));
  const ordspec::GroupFamilySpec s = ordspec::linear2_spec(q);
  push_check(checks, tag + "|F1|", ordspec::json_number(s.q * (s.q - 1) / s.d),
             ordspec::json_number(rep.f1_order));
  push_check(checks, tag + "|F2|", ordspec::json_number(s.q * s.q * (s.q + 1) / s.d),
             ordspec::json_number(rep.f2_order));
}

ordered_json result_verify(const Request& req, const Options& opt) {
  ordered_json checks = ordered_json::array();
  if (req.target == "psl2") {
    if (!req.q) throw std::invalid_argument("verify psl2 requires q");
    verify_psl2_into(checks, *req.q);
  } else if (req.target == "j1") {
    if (req.q) throw std::invalid_argument("verify j1 takes no q");
    verify_j1_into(checks, opt.j1_data);
  } else if (req.target == "witness") {
    if (!req.q) throw std::invalid_argument("verify witness requires q");
    verify_witness_into(checks, *req.q);
  } else if (req.target == "all") {
    if (req.q) throw std::invalid_argument("verify all takes no q");
    for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32})
      verify_psl2_into(checks, q);
    verify_j1_into(checks, opt.j1_data);
    for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) verify_witness_into(checks, q);
  } else {
    throw std::invalid_argument("unknown verify target '" + req.target +
                                "' (expected psl2, j1, witness, or all)");
  }
  bool all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c["pass"].get<bool>();
  ordered_json result;
  result["checks"] = std::move(checks);
  result["all_pass"] = all_pass;
  return result;
}

ordered_json parameters_for(const Request& req) {
  ordered_json params;
  if (req.command == "verify") {
    params["target"] = req.target;
    if (req.q) params["q"] = *req.q;
    return params;
  }
  params["family"] = req.family;
  if (req.q) params["q"] = *req.q;
  if (req.command != "audit") params["squared"] = req.squared;
  return params;
}

ordered_json compute_result(const Request& req, const Options& opt) {
  if (req.command == "spectrum") return result_spectrum(req);
  if (req.command == "graph") return result_graph(req);
  if (req.command == "audit") return result_audit(req);
  return result_verify(req, opt);
}

std::uint64_t u64_from_json(const ordered_json& v) {
  if (v.is_string()) return std::stoull(v.get<std::string>());
  return v.get<std::uint64_t>();
}

std::string value_to_text(const ordered_json& v) {
  if (v.is_null()) return "none";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += " ";
      if (item.is_array()) {  // pair lists, e.g. prime-graph edges
        std::string joined;
        for (const auto& entry : item) {
          if (!joined.empty()) joined += "-";
          joined += value_to_text(entry);
        }
        out += joined;
      } else {
        out += value_to_text(item);
      }
    }
    return out.empty() ? "(empty)" : out;
  }
  if (v.is_object()) {
    std::string out;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!out.empty()) out += " ";
      out += it.key() + "=" + value_to_text(it.value());
    }
    return out;
  }
  return v.dump();
}

void print_human(const ordered_json& envelope, std::ostream& out) {
  out << "command: " << envelope["command"].get<std::string>() << "\n";
  for (auto it = envelope["parameters"].begin(); it != envelope["parameters"].end(); ++it)
    out << it.key() << ": " << value_to_text(it.value()) << "\n";
  for (auto it = envelope["result"].begin(); it != envelope["result"].end(); ++it) {
    const ordered_json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << it.key() << ":\n";
      for (const auto& item : v) out << "  - " << value_to_text(item) << "\n";
    } else if (v.is_object()) {
      out << it.key() << ":\n";
      for (auto field = v.begin(); field != v.end(); ++field) {
        const ordered_json& fv = field.value();
        if (fv.is_array() && !fv.empty() && fv.front().is_object()) {
          out << "  " << field.key() << ":\n";
          for (const auto& item : fv) out << "    - " << value_to_text(item) << "\n";
        } else {
          out << "  " << field.key() << ": " << value_to_text(fv) << "\n";
        }
      }
    } else {
      out << it.key() << ": " << value_to_text(v) << "\n";
    }
  }
}

int exit_code_for(const ordered_json& envelope) {
  const std::string& command = envelope["command"].get_ref<const std::string&>();
  if (command == "audit") return envelope["result"]["witness"].is_null() ? 1 : 0;
  if (command == "verify") return envelope["result"]["all_pass"].get<bool>() ? 0 : 4;
  return 0;
}

void write_dot_file(const ordered_json& envelope, const std::string& path) {
  const ordered_json& result = envelope["result"];
  if (!result.contains("vertices")) return;  // only graph payloads carry a graph
  std::vector<std::uint64_t> vertices;
  for (const auto& v : result["vertices"]) vertices.push_back(u64_from_json(v));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (const auto& e : result["edges"])
    edges.emplace_back(u64_from_json(e[0]), u64_from_json(e[1]));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << ordspec::dot_from_lists(vertices, edges)) || !out.flush())
    throw std::runtime_error("dot: cannot write " + path);
}

int run(const Request& req, const Options& opt) {
  const ordered_json params = parameters_for(req);

  ordspec::ReportCache cache;
  if (!opt.no_cache) {
    std::string dir = opt.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("ORDSPEC_CACHE_DIR")) dir = env;
    if (!dir.empty()) cache = ordspec::ReportCache(dir);
  }

  const std::string key = ordspec::ReportCache::key(req.command, params);
  std::string payload;
  if (auto cached = cache.load(key)) {
    payload = std::move(*cached);
  } else {
    const ordered_json envelope = ordspec::make_envelope(req.command, params,
                                                         compute_result(req, opt));
    payload = ordspec::render_report(envelope);
    try {
      cache.store(key, payload);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }

  const ordered_json envelope = ordered_json::parse(payload);
  if (!opt.dot_path.empty()) {
    try {
      write_dot_file(envelope, opt.dot_path);
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }
  if (opt.json)
    std::cout << payload;
  else
    print_human(envelope, std::cout);
  return exit_code_for(envelope);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"element-order spectra of the simple groups with abelian Sylow 2-subgroups"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit the JSON report envelope instead of tables");
  app.add_option("--dot", opt.dot_path, "write the prime graph as DOT to this path (graph)");
  app.add_option("--cache-dir", opt.cache_dir,
                 "report cache directory (default: $ORDSPEC_CACHE_DIR, else disabled)");
  app.add_flag("--no-cache", opt.no_cache, "bypass the report cache");
  app.add_option("--j1-data", opt.j1_data, "J1 generator data file")
      ->capture_default_str();

  Request req;
  std::uint64_t q_value = 0;

  auto add_family_command = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->fallthrough();  // let the global flags appear after the subcommand too
    cmd->add_option("family", req.family, "group family: L2, R, or J1")->required();
    cmd->add_option("q", q_value, "field size (prime power; required for L2 and R)");
    return cmd;
  };
  CLI::App* spectrum = add_family_command(
      "spectrum", "maximal element orders and group order, optionally of the direct square");
  spectrum->add_flag("--squared", req.squared, "use the direct square G x G");
  CLI::App* graph = add_family_command(
      "graph", "prime graph, independence number, and lexicographically least witness");
  graph->add_flag("--squared", req.squared, "use the direct square G x G");
  add_family_command("audit",
                     "search mu(G x G) for a triple or quadruple nonsolvability witness");
  CLI::App* verify = app.add_subcommand(
      "verify", "brute-force enumeration checks: psl2 <q> | j1 | witness <q> | all");
  verify->fallthrough();
  verify->add_option("target", req.target, "psl2, j1, witness, or all")->required();
  verify->add_option("q", q_value, "parameter for psl2/witness targets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  req.command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("q") > 0) req.q = q_value;

  try {
    return run(req, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << " (value exceeds the supported 64-bit range)\n";
    return 2;
  } catch (const ordspec::J1DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
