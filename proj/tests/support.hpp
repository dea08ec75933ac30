#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgp/catalog.hpp"
#include "rgp/graph_ops.hpp"
#include "rgp/hyperbolic.hpp"
#include "rgp/io.hpp"
#include "rgp/multipoly.hpp"
#include "rgp/qpoly.hpp"

namespace rgp::test {

// Shorthand: t1, O2, a3, x1 ... stand for t_e1, O_e2, a_e3, x_e1.
inline MultiPoly P(const std::string& s) {
  static const std::regex short_var("([tOaxyzw])([0-9]+)");
  return parse_poly(std::regex_replace(s, short_var, "$1_e$2"));
}

inline RibbonGraph corpus_graph(const std::string& name) {
  for (auto& [n, g] : catalog::corpus())
    if (n == name) return g;
  throw std::invalid_argument("no corpus graph " + name);
}

inline std::vector<RibbonGraph> random_graphs(std::uint64_t seed, std::size_t count,
                                              const catalog::RandomGraphOptions& opt) {
  std::mt19937_64 rng(seed);
  std::vector<RibbonGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(catalog::random_graph(rng, opt));
  return out;
}

inline EdgeSubset random_subset(std::mt19937_64& rng, const RibbonGraph& g) {
  EdgeSubset s;
  for (const auto& l : g.edge_labels())
    if (rng() & 1U) s.insert(s.end(), l);
  return s;
}

// Vertex index (in g.vertices()) of both ends of each edge, in g.edges() order.
inline std::vector<std::pair<std::size_t, std::size_t>> edge_ends(const RibbonGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.edges()) {
    Cross x = e.crosses[0];
    out.emplace_back(g.vertex_of(x), g.vertex_of(g.map().sigma1(x)));
  }
  return out;
}

// Contraction of a non-loop edge done on the rotation system: the two
// rotations are spliced at the edge, the far one reversed when twisted.
inline RibbonGraph contract_by_rotation(const RibbonGraph& g, const std::string& e) {
  RotationSpec s = parse_rotation_text(format_rotation_system(g));
  auto eit = std::find_if(s.edges.begin(), s.edges.end(), [&](auto& x) { return x.id == e; });
  if (eit == s.edges.end()) throw std::invalid_argument("no edge " + e);
  const std::string h0 = eit->half_edges[0], h1 = eit->half_edges[1];
  const bool twisted = eit->twisted;
  auto holder = [&](const std::string& h) {
    for (std::size_t v = 0; v < s.vertices.size(); ++v) {
      auto& it = s.vertices[v].items;
      if (std::find(it.begin(), it.end(), h) != it.end()) return v;
    }
    throw std::invalid_argument("dangling half-edge " + h);
  };
  const std::size_t u = holder(h0), v = holder(h1);
  if (u == v) throw std::invalid_argument("loop");
  auto after = [](const std::vector<std::string>& items, const std::string& h) {
    auto pos = static_cast<std::size_t>(std::find(items.begin(), items.end(), h) - items.begin());
    std::vector<std::string> out;
    for (std::size_t k = 1; k < items.size(); ++k) out.push_back(items[(pos + k) % items.size()]);
    return out;
  };
  auto su = after(s.vertices[u].items, h0);
  auto sv = after(s.vertices[v].items, h1);
  if (twisted) {
    std::reverse(sv.begin(), sv.end());
    for (auto& other : s.edges) {
      if (other.id == e) continue;
      int at_v = 0;
      for (auto& h : other.half_edges)
        if (std::find(sv.begin(), sv.end(), h) != sv.end()) ++at_v;
      if (at_v == 1) other.twisted = !other.twisted;
    }
  }
  su.insert(su.end(), sv.begin(), sv.end());
  s.vertices[u].items = su;
  s.vertices.erase(s.vertices.begin() + static_cast<std::ptrdiff_t>(v));
  s.edges.erase(eit);
  return from_rotation_system(s);
}

// The half-line `end` of edge e becomes a flag at its vertex; the edge is
// re-attached to a new bivalent vertex carrying a second flag.
inline RibbonGraph hat_graph(const RibbonGraph& g, const std::string& e, int end) {
  RotationSpec s = parse_rotation_text(format_rotation_system(g));
  auto eit = std::find_if(s.edges.begin(), s.edges.end(), [&](auto& x) { return x.id == e; });
  if (eit == s.edges.end()) throw std::invalid_argument("no edge " + e);
  const std::string h = eit->half_edges[static_cast<std::size_t>(end)];
  for (auto& v : s.vertices)
    std::replace(v.items.begin(), v.items.end(), h, std::string("hat_a"));
  eit->half_edges[static_cast<std::size_t>(end)] = "hat_h";
  s.vertices.push_back({"hat_v", {"hat_h", "hat_b"}});
  s.flags.push_back("hat_a");
  s.flags.push_back("hat_b");
  return from_rotation_system(s);
}

inline RibbonGraph spanning_subgraph(const RibbonGraph& g, std::uint64_t mask) {
  RibbonGraph h = g;
  const auto labels = g.edge_labels();
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (!(mask >> k & 1U)) h = delete_edge(h, labels[k]);
  return h;
}

// Number of edge subsets whose spanning subgraph has one boundary component.
inline std::size_t count_quasi_trees(const RibbonGraph& g) {
  std::size_t n = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << g.num_edges()); ++a)
    if (boundary_components(spanning_subgraph(g, a)).size() == 1) ++n;
  return n;
}

// Number of edge subsets whose boundary has two components, one flag each.
inline std::size_t count_two_boundary_one_flag(const RibbonGraph& g) {
  std::size_t n = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << g.num_edges()); ++a) {
    RibbonGraph h = spanning_subgraph(g, a);
    auto faces = boundary_components(h);
    if (faces.size() != 2) continue;
    bool ok = true;
    for (auto& f : faces) {
      std::size_t flags = 0;
      for (Cross x : f)
        if (h.edge_of(x) < 0) ++flags;
      ok = ok && flags == 1;
    }
    if (ok) ++n;
  }
  return n;
}

// Image under x->t, y->O, z->O t^2, w->t O^2 of the expansion monomial of (A, B).
inline Monomial hu_monomial(const RibbonGraph& g, std::uint64_t a, std::uint64_t b) {
  MultiPoly m(1L);
  const auto labels = g.edge_labels();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const bool in_a = a >> k & 1U, in_b = b >> k & 1U;
    const auto t = MultiPoly::var(VarId::t(labels[k]));
    const auto o = MultiPoly::var(VarId::omega(labels[k]));
    if (!in_a && !in_b) m *= t;
    if (in_a && !in_b) m *= o;
    if (in_a && in_b) m *= o * t * t;
    if (!in_a && in_b) m *= t * o * o;
  }
  return m.terms().begin()->first;
}

struct Witness {
  std::uint64_t a = 0, b = 0;
};

// Spanning tree T and e in T; T minus e contracts to two vertices whose flag
// parities pick (A, B). Needs a connected graph with at least two vertices.
inline Witness nonvanishing_witness(const RibbonGraph& g) {
  const auto ends = edge_ends(g);
  const std::size_t nv = g.vertices().size();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<std::size_t> tree;
  for (std::size_t k = 0; k < ends.size(); ++k) {
    auto [p, q] = ends[k];
    if (find(p) != find(q)) {
      parent[find(p)] = find(q);
      tree.push_back(k);
    }
  }
  if (tree.empty() || tree.size() + 1 != nv) throw std::invalid_argument("needs a spanning tree");
  const std::size_t e = tree.front();
  std::iota(parent.begin(), parent.end(), 0);
  std::uint64_t rest = 0;
  for (std::size_t k : tree) {
    if (k == e) continue;
    rest |= std::uint64_t{1} << k;
    parent[find(ends[k].first)] = find(ends[k].second);
  }
  std::size_t f1 = 0, f2 = 0;
  const std::size_t root1 = find(ends[e].first);
  for (std::size_t v = 0; v < nv; ++v) (find(v) == root1 ? f1 : f2) += g.flags_at(v);
  const std::uint64_t ebit = std::uint64_t{1} << e;
  if (f1 % 2 == 1 && f2 % 2 == 1) return {rest, 0};
  if (f1 % 2 == 0 && f2 % 2 == 0) return {rest, ebit};
  return {rest | ebit, 0};
}

namespace golden {

// Bridge and loop with m, n flags; the parity pattern decides the shape.
inline MultiPoly bridge(std::size_t m, std::size_t n) {
  if (m % 2 == 0 && n % 2 == 0) return P("4*t1*O1^2");
  if (m % 2 == 1 && n % 2 == 1) return P("4*t1");
  return P("2*O1*(1+t1^2)");
}
inline MultiPoly loop(std::size_t m, std::size_t n) {
  if (m % 2 == 0 && n % 2 == 0) return P("4*O1*t1^2");
  if (m % 2 == 1 && n % 2 == 1) return P("4*O1");
  return P("2*t1*(1+O1^2)");
}

inline const char* const two_cycle = "4*(t1^2+t2^2)*O1*O2+4*(O1^2+O2^2)*t1*t2";
inline const char* const banana_planar =
    "4*(t1*t2*t3*(O1^2+O2^2+O3^2+O1^2*O2^2*O3^2) + t1*O2*O3*(t2^2+t3^2+O1^2*(t2^2+t3^2))"
    " + t2*O1*O3*(t1^2+t3^2+O2^2*(t1^2+t3^2)) + t3*O1*O2*(t1^2+t2^2+O3^2*(t1^2+t2^2)))";
// The non-planar banana is given with the same expression as the planar one.
inline const char* const banana_nonplanar_given = banana_planar;
inline const char* const banana_nonplanar_critical_given =
    "2*(8*t1*t2*t3+2*t1*(1+t2^2)*(1+t3^2)+2*t2*(1+t1^2)*(1+t3^2)+2*t3*(1+t1^2)*(1+t3^2))";
inline const char* const banana_nonplanar_critical =
    "2*(8*t1*t2*t3+2*t1*(1+t2^2)*(1+t3^2)+2*t2*(1+t1^2)*(1+t3^2)+2*t3*(1+t1^2)*(1+t2^2))";
inline const char* const double_tadpole = "4*(O1^2+t2^2)*t1*O2 + 4*(t1^2+O2^2)*O1*t2";
inline const char* const linear_tree =
    "16*t1*t2*O2^2*t3*O3^2 + 4*t1*O1^2*O2*(1+t2^2)*O3*(1+t3^2)"
    " + 4*t2*O2^2*O1*(1+t1^2)*O3*(1+t3^2) + 4*t3*O3^2*O1*(1+t1^2)*O2*(1+t2^2)";
inline const char* const dumbbell =
    "16*t1*O2*t2^2*O3*t3^2 + 4*t1*O1^2*t2*(1+O2^2)*t3*(1+O3^2)"
    " + 4*O2*t2^2*O1*(1+t1^2)*t3*(1+O3^2) + 4*O3*t3^2*O1*(1+t1^2)*t2*(1+O2^2)";
inline const char* const triangle =
    "4*O1*O2*O3*(t1^2+t2^2+t3^2+t1^2*t2^2*t3^2) + 4*O1*(1+t1^2)*t2*t3*(O2^2+O3^2)"
    " + 4*O2*(1+t2^2)*t1*t3*(O1^2+O3^2) + 4*O3*(1+t3^2)*t1*t2*(O1^2+O2^2)";
inline const char* const triangle_flags_given =
    "8*t1*t2*t3*(1+O1^2*O2^2*O3^2) + 2*t1*O2*(1+t2^2)*O3*(1+t3^2)"
    " + 2*t2*O1*(1+t1^2)*O3*(1+t3^2) + 2*t3*O1*(1+t1^2)*O2*(1+t2^2)";
inline const char* const triangle_flags =
    "8*t1*t2*t3*(1+O1^2*O2^2*O3^2) + 2*t1*(1+O1^2)*O2*(1+t2^2)*O3*(1+t3^2)"
    " + 2*t2*(1+O2^2)*O1*(1+t1^2)*O3*(1+t3^2) + 2*t3*(1+O3^2)*O1*(1+t1^2)*O2*(1+t2^2)";
inline const char* const sunset =
    "4*t1*t2*t3*(1+O1^2*O2^2+O1^2*O3^2+O2^2*O3^2) + 4*t1*(t2^2+t3^2)*O2*O3*(1+O1^2)"
    " + 4*t2*(t1^2+t3^2)*O1*O3*(1+O2^2) + 4*t3*(t1^2+t2^2)*O1*O2*(1+O3^2)";
inline const char* const broken_cycle3 =
    "4*O1*O2*O3*(1+t1^2*t2^2+t1^2*t3^2+t2^2*t3^2) + 4*O1*t2*t3*(1+t1^2)*(O2^2+O3^2)"
    " + 4*O2*t1*t3*(1+t2^2)*(O1^2+O3^2) + 4*O3*t1*t2*(1+t3^2)*(O1^2+O2^2)";
inline const char* const star3_flags =
    "2*O1*O2*O3*(1+t1^2)*(1+t2^2)*(1+t3^2) + 8*O1*(1+t1^2)*t2*t3"
    " + 8*O2*(1+t2^2)*t1*t3 + 8*O3*(1+t3^2)*t1*t2";

// n-star without flags: sum over A with |A| + n odd of
// coef(n, |A|) prod_{A} O(1+t^2) prod_{A^c} leaf, leaf = O t (as given) or t O^2.
inline MultiPoly star(std::size_t n, bool given) {
  MultiPoly out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(a));
    if ((k + n) % 2 == 0) continue;
    MultiPoly term(Integer(1) << (given ? n - k + 2 : n - k + 1));
    for (std::size_t i = 0; i < n; ++i) {
      const std::string l = "e" + std::to_string(i + 1);
      const auto t = MultiPoly::var(VarId::t(l));
      const auto o = MultiPoly::var(VarId::omega(l));
      if (a >> i & 1U)
        term *= o * (MultiPoly(1L) + t * t);
      else
        term *= given ? o * t : t * o * o;
    }
    out += term;
  }
  return out;
}

// Graphs built from the 3-bananas by turning one half-line of e1 into a flag.
// The t1-linear part carries O factors; the given one is it at O = 1, halved.
inline const char* const hat_banana_planar =
    "4*O1*(1+t1^2)*(O2*O3*(t2^2+t3^2)+t2*t3*(1+O2^2*O3^2)) "
    "+ 4*t1*(t2*O3*(1+O2^2)+t3*O2*(1+O3^2)+t2*t3*(t2*O2*(1+O3^2)+t3*O3*(1+O2^2)))";
inline const char* const hat_banana_nonplanar =
    "4*O1*(1+t1^2)*(O2*O3*(1+t2^2*t3^2)+t2*t3*(1+O2^2*O3^2)) "
    "+ 4*t1*(t2*O3*(1+O2^2)+t3*O2*(1+O3^2)+t2*t3*(t2*O2*(1+O3^2)+t3*O3*(1+O2^2)))";

// As given, with (1+t3)^2 in the last bracket.
inline const char* const hat_banana_planar_given =
    "4*O1*(1+t1^2)*(O2*O3*(t2^2+t3^2)+t2*t3*(1+O2^2*O3^2)) + 4*t1*(t2*(1+t3)^2+t3*(1+t2^2))";
inline const char* const hat_banana_nonplanar_given =
    "4*O1*(1+t1^2)*(O2*O3*(1+t2^2*t3^2)+t2*t3*(1+O2^2*O3^2)) + 4*t1*(t2*(1+t3)^2+t3*(1+t2^2))";

inline const char* const dumbbell_critical = "8*t2*t3*(2*t1*(1+t2*t3)+(1+t1^2)*(t2+t3))";
inline const char* const triangle_flags_critical = "4*(t1+t2+t3+t1*t2*t3)*(1+t1*t2+t1*t3+t2*t3)";

// Second polynomial, reference coefficients of x_i^2, x_i.x_j and x_i.Jx_j.
inline const char* const bridge_hv_diag = "2*O1*(t1^2+1)";
inline const char* const bridge_hv_sym = "4*O1*(t1^2-1)";
inline const char* const tadpole_hv_diag = "2*t1*(O1^2+1)";
inline const char* const tadpole_hv_sym = "4*t1*(O1^2-1)";
inline const char* const sunset_hv_diag =
    "8*O1*O2*O3*(t2^2+t1^2*t3^2) + 2*O1*t2*t3*(1+t1^2)*(1+O2^2)*(1+O3^2)"
    " + 2*O2*t1*t3*(1+t2^2)*(1+O1^2)*(1+O3^2) + 2*O3*t1*t2*(1+t3^2)*(1+O1^2)*(1+O2^2)";
inline const char* const sunset_hv_sym_given =
    "16*O1*O2*O3*(t1^2*t3^2-1) + 4*O1*(1+O2^2)*(1+O3^2)*t2*t3*(t1^2-1)"
    " + 4*O2*(1+O1^2)*(1+O3^2)*t1*t3*(t2^2-1) + 4*O3*(1+O1^2)*(1+O2^2)*t1*t2*(t3^2-1)";
inline const char* const sunset_hv_sym =
    "16*O1*O2*O3*(t1^2*t3^2-t2^2) + 4*O1*(1+O2^2)*(1+O3^2)*t2*t3*(t1^2-1)"
    " + 4*O2*(1+O1^2)*(1+O3^2)*t1*t3*(t2^2-1) + 4*O3*(1+O1^2)*(1+O2^2)*t1*t2*(t3^2-1)";
inline const char* const sunset_hv_antisym_given =
    "4*(1+O1^2)*O2*O3*t1*(t3^2-t2^2) + 4*(1+O2^2)*O1*O3*t2*(t3^2-t1^2)"
    " + 4*(1+O3^2)*O1*O2*t3*(t2^2-t1^2)";
inline const char* const star3_hv_diag3_given =
    "8*t1*t2*t3*O3^2 + 4*O1^2*t1*(1+t2^2)*O2*(1+t3^2)*O3"
    " + 4*O2^2*t2*(1+t1^2)*O1*(1+t3^2)*O3 + 4*O3^2*t3*(1+t1^2)*O1*(1+t2^2)*O2";
inline const char* const star3_hv_diag3 =
    "16*t1*t2*t3*O3^2 + 4*t1*O2*O3*(1+t2^2)*(1+t3^2)"
    " + 4*t2*O1*O3*(1+t1^2)*(1+t3^2) + 4*O3^2*t3*(1+t1^2)*O1*(1+t2^2)*O2";
inline const char* const star3_hv_sym12 = "8*(1-t1^2)*(t2^2-1)*O1*O2*t3";
inline const char* const star3_hv_antisym12_given = "4*(1-t1^2)*(1-t2^2)*O1*O2*O3";
inline const char* const star3_hv_antisym12 = "4*(1-t1^2)*(1-t2^2)*(1+t3^2)*O1*O2*O3";

// Commutative limits L; the library returns 2^v L.
inline const char* const dumbbell_limit_given =
    "4*t1*O2*t2^2*O3*t3^2 + 4*t1*O1^2*t2*t3 + 4*O2*t2^2*O1*(1+t1^2)*t3 + 4*O3*t3^2*O1*(1+t1^2)*t2";
inline const char* const dumbbell_limit =
    "4*t1*O2*t2^2*O3*t3^2 + t1*O1^2*t2*t3 + O2*t2^2*O1*(1+t1^2)*t3 + O3*t3^2*O1*(1+t1^2)*t2";
inline const char* const banana_limit =
    "t1*t2*t3*(O1^2+O2^2+O3^2) + t1*O2*O3*(t2^2+t3^2) + t2*O1*O3*(t1^2+t3^2)"
    " + t3*O1*O2*(t1^2+t2^2)";

inline const char* const u_banana_planar = "a1*a2+a1*a3+a2*a3";
inline const char* const u_banana_nonplanar = "a1*a2+a1*a3+a2*a3+b^2";
inline const char* const u_two_cycle = "a1+a2";
inline const char* const u_double_tadpole = "a1*a2+b^2";

}  // namespace golden

}  // namespace rgp::test

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<rgp::MultiPoly> {
  static String convert(const rgp::MultiPoly& p) { return rgp::to_string_canonical(p).c_str(); }
};
}  // namespace doctest
#endif
