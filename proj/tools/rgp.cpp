// rgp: command-line front end for the ribbon graph polynomial library.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rgp/graph_ops.hpp"
#include "rgp/hyperbolic.hpp"
#include "rgp/io.hpp"
#include "rgp/map.hpp"
#include "rgp/multipoly.hpp"
#include "rgp/qpoly.hpp"

namespace {

using namespace rgp;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string verb;
  std::string input;
  std::string edges;
  std::string method = "reduction";
  std::string format = "text";
  std::string emit;
  std::string rule = "symbolic";
  std::string kind;
  std::size_t max_edges = 0;
  bool check_all = false;
  bool commutative = false;
  bool heat_kernel = false;
  bool symanzik = false;
};

const char* prefix(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "E-PARSE";
    case ErrorCode::UnknownEdge:
    case ErrorCode::UnknownFlag: return "E-EDGE";
    case ErrorCode::TooLarge: return "E-SIZE";
    case ErrorCode::AssertionFailure: return "E-ASSERT";
    default: return "E-MAP";
  }
}

EdgeSubset split_edges(const std::string& s) {
  EdgeSubset out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

json poly_json(const MultiPoly& p) { return json::parse(to_json_text(p)); }

void print_poly(const Options& o, const MultiPoly& p) {
  if (o.format == "json")
    std::cout << poly_json(p).dump() << "\n";
  else
    std::cout << to_string_canonical(p) << "\n";
}

void print_graph(const Options& o, const RibbonGraph& g) {
  if (o.emit == "dot")
    std::cout << format_dot(g);
  else
    std::cout << format_rotation_system(g);
}

RSequenceSpec parse_rule(const std::string& r) {
  if (r == "symbolic") return RSequenceSpec::symbolic();
  if (r == "even-two-odd-zero") return RSequenceSpec::even_two_odd_zero();
  if (r == "odd-two-even-zero") return RSequenceSpec::odd_two_even_zero();
  if (r == "delta-one") return RSequenceSpec::delta_one();
  if (r.rfind("constant", 0) == 0) {
    auto eq = r.find('=');
    return RSequenceSpec::constant_value(eq == std::string::npos ? MultiPoly::var(VarId::r_uniform())
                                                                 : parse_poly(r.substr(eq + 1)));
  }
  throw UsageError("unknown rule '" + r + "'");
}

const std::string& single_edge(const EdgeSubset& s) {
  if (s.size() != 1) throw UsageError("this verb needs exactly one edge (-e)");
  return s.front();
}

int run_graph_verb(const Options& o, const RibbonGraph& g, const EdgeSubset& s) {
  if (o.emit == "poly") throw UsageError("--emit poly is not valid for " + o.verb);
  RibbonGraph out;
  if (o.verb == "dual") out = natural_dual(g);
  else if (o.verb == "pdual") out = partial_dual(g, s);
  else if (o.verb == "delete") out = delete_edge(g, single_edge(s));
  else if (o.verb == "cut") out = cut_edge(g, single_edge(s));
  else out = contract_edge(g, single_edge(s));
  print_graph(o, out);
  return 0;
}

int run_info(const Options& o, const RibbonGraph& g) {
  auto r = structure_report(g);
  if (o.format == "json") {
    json j = {{"vertices", r.v},  {"edges", r.e},          {"flags", r.f},
              {"components", r.k}, {"faces", r.faces},      {"euler_genus", r.euler_genus},
              {"orientable", r.orientable}, {"bare_vertices", g.bare_vertices()},
              {"canonical", canonical_form(g)}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "vertices: " << r.v << "\nedges: " << r.e << "\nflags: " << r.f
            << "\ncomponents: " << r.k << "\nfaces: " << r.faces << "\neuler_genus: " << r.euler_genus
            << "\norientable: " << (r.orientable ? "yes" : "no") << "\n";
  return 0;
}

int run_counts(const Options& o, const RibbonGraph& g) {
  auto c = class_counts(g, o.max_edges ? o.max_edges : kClassCountGuard);
  std::vector<std::pair<const char*, std::uint64_t>> rows = {
      {"odd", c.odd},   {"even", c.even}, {"codd", c.codd}, {"cev", c.cev},
      {"oddf", c.oddf}, {"evf", c.evf},   {"coddf", c.coddf}, {"cevf", c.cevf}};
  if (o.format == "json") {
    json j = json::object();
    for (auto& [k, v] : rows) j[k] = v;
    std::cout << j.dump() << "\n";
  } else {
    for (auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
  }
  return 0;
}

int check_failed(const std::string& what) {
  std::cerr << "E-CHECK: " << what << " disagree\n";
  return 1;
}

int run_q(const Options& o, const RibbonGraph& g) {
  auto r = parse_rule(o.rule);
  const std::size_t guard = o.max_edges ? o.max_edges : kExpansionGuard;
  if (o.method == "critical") throw UsageError("--method critical applies to hu only");
  MultiPoly p = o.method == "expansion" ? q_by_expansion(g, r, guard).poly : q_by_reduction(g, r).poly;
  if (o.check_all) {
    MultiPoly other = o.method == "expansion" ? q_by_reduction(g, r).poly : q_by_expansion(g, r, guard).poly;
    if (!(other == p)) return check_failed("expansion and reduction");
  }
  print_poly(o, p);
  return 0;
}

HUMethod hu_method(const std::string& m) {
  if (m == "reduction") return HUMethod::REDUCTION;
  if (m == "expansion") return HUMethod::EXPANSION;
  if (m == "critical") return HUMethod::CRITICAL;
  throw UsageError("unknown method '" + m + "'");
}

int run_hu(const Options& o, const RibbonGraph& g) {
  const auto method = hu_method(o.method);
  if (method == HUMethod::EXPANSION && g.num_edges() > (o.max_edges ? o.max_edges : kExpansionGuard))
    throw Error(ErrorCode::TooLarge, "expansion limited to " + std::to_string(kExpansionGuard) + " edges");
  MultiPoly p = hu(g, method);
  if (o.check_all) {
    for (auto m : {HUMethod::REDUCTION, HUMethod::EXPANSION, HUMethod::CRITICAL}) {
      if (m == method) continue;
      if (m == HUMethod::CRITICAL && !is_orientable(g)) {
        std::cerr << "note: critical method skipped on a non-orientable graph\n";
        continue;
      }
      if (!(hu(g, m) == p)) return check_failed("HU methods");
    }
  }
  print_poly(o, p);
  return 0;
}

int run_hv(const Options& o, const RibbonGraph& g) {
  auto q = hv(g);
  if (o.format == "json") {
    json j = {{"diag", json::object()}, {"sym", json::array()}, {"antisym", json::array()}};
    for (auto& [k, p] : q.diag) j["diag"][k] = poly_json(p);
    for (auto& [k, p] : q.sym) j["sym"].push_back({{"i", k.first}, {"j", k.second}, {"poly", poly_json(p)}});
    for (auto& [k, p] : q.antisym) j["antisym"].push_back({{"i", k.first}, {"j", k.second}, {"poly", poly_json(p)}});
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (auto& [k, p] : q.diag) std::cout << "x_" << k << "^2: " << to_string_canonical(p) << "\n";
  for (auto& [k, p] : q.sym)
    std::cout << "x_" << k.first << ".x_" << k.second << ": " << to_string_canonical(p) << "\n";
  for (auto& [k, p] : q.antisym) {
    if (k.first > k.second) continue;
    std::cout << "x_" << k.first << ".Jx_" << k.second << ": " << to_string_canonical(p) << "\n";
  }
  return 0;
}

int run_symanzik(const Options& o, const RibbonGraph& g) {
  MultiPoly u = symanzik_u(g);
  if (o.check_all && !(symanzik_u_via_q(g) == u)) return check_failed("quasi-tree and Q forms of U");
  print_poly(o, u);
  return 0;
}

int run_limit(const Options& o, const RibbonGraph& g) {
  if (o.commutative == o.heat_kernel) throw UsageError("limit needs exactly one of --commutative, --heat-kernel");
  if (o.heat_kernel) return run_symanzik(o, g);
  if (o.symanzik) {
    MultiPoly l = symanzik_commutative_limit(symanzik_u(g));
    if (o.check_all && !(l == spanning_tree_polynomial(g))) return check_failed("U limit and spanning trees");
    print_poly(o, l);
    return 0;
  }
  auto lim = hu_commutative_limit(g);
  if (o.check_all && !(hu_commutative_limit_oracle(g).scaled == lim.scaled))
    return check_failed("commutative limit and its oracle");
  if (o.format == "json") {
    json j = {{"scaled", poly_json(lim.scaled)}, {"divisor_log2", lim.vertices}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "(" << to_string_canonical(lim.scaled) << ")/2^" << lim.vertices << "\n";
  }
  return 0;
}

int run_specialize(const Options& o, const RibbonGraph& g) {
  if (o.kind == "br") print_poly(o, specialize_br(g));
  else if (o.kind == "dimer") print_poly(o, specialize_dimer(g));
  else if (o.kind == "ising") print_poly(o, specialize_ising(g));
  else throw UsageError("specialize needs --kind br|dimer|ising");
  return 0;
}

int dispatch(const Options& o) {
  if (!o.format.empty() && o.format != "text" && o.format != "json")
    throw UsageError("--format must be text or json");
  if (!o.emit.empty() && o.emit != "poly" && o.emit != "graph" && o.emit != "dot")
    throw UsageError("--emit must be poly, graph or dot");
  const RibbonGraph g = load_graph_file(o.input);
  const EdgeSubset s = split_edges(o.edges);
  for (const auto& e : s) g.edge_index(e);

  const std::string& v = o.verb;
  if (v == "validate") {
    std::cout << "ok\n";
    return 0;
  }
  if (v == "dual" || v == "pdual" || v == "delete" || v == "cut" || v == "contract")
    return run_graph_verb(o, g, s);
  if (o.emit == "graph" || o.emit == "dot") {
    if (v != "info") throw UsageError("--emit " + o.emit + " is only valid for graph operations and info");
    print_graph(o, g);
    return 0;
  }
  if (v == "info") return run_info(o, g);
  if (v == "counts") return run_counts(o, g);
  if (v == "q") return run_q(o, g);
  if (v == "hu") return run_hu(o, g);
  if (v == "hv") return run_hv(o, g);
  if (v == "hu-critical") {
    print_poly(o, hu_critical(g));
    return 0;
  }
  if (v == "symanzik-u") return run_symanzik(o, g);
  if (v == "limit") return run_limit(o, g);
  if (v == "specialize") return run_specialize(o, g);
  throw UsageError("unknown verb '" + v + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ribbon graph polynomials: Q, HU, HV and their limits"};
  Options o;
  const std::vector<std::string> verbs = {"validate", "info",       "dual",  "pdual", "delete",
                                          "cut",      "contract",   "q",     "hu",    "hv",
                                          "hu-critical", "symanzik-u", "limit", "specialize", "counts"};
  app.add_option("verb", o.verb, "Command")->required()->check(CLI::IsMember(verbs));
  app.add_option("input", o.input, "Graph file (rotation system or raw permutations)")->required();
  app.add_option("-e,--edges", o.edges, "Comma separated edge labels");
  app.add_option("--method", o.method, "expansion|reduction|critical")
      ->check(CLI::IsMember({"expansion", "reduction", "critical"}));
  app.add_flag("--check-all", o.check_all, "Run every method and compare");
  app.add_option("--format", o.format, "text|json");
  app.add_option("--emit", o.emit, "poly|graph|dot");
  app.add_option("--max-edges", o.max_edges, "Override enumeration guards");
  app.add_option("--rule", o.rule,
                 "r sequence for q: symbolic|even-two-odd-zero|odd-two-even-zero|delta-one|constant[=poly]");
  app.add_option("--kind", o.kind, "specialization: br|dimer|ising");
  app.add_flag("--commutative", o.commutative, "limit: commutative limit");
  app.add_flag("--heat-kernel", o.heat_kernel, "limit: heat-kernel limit (Symanzik U)");
  app.add_flag("--symanzik", o.symanzik, "limit --commutative: limit of U instead of HU");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return dispatch(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << prefix(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
}
