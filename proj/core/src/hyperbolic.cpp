#include "rgp/hyperbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rgp {

namespace {

MultiPoly t_(const std::string& e, std::uint32_t k = 1) { return MultiPoly::var(VarId::t(e), k); }
MultiPoly om(const std::string& e, std::uint32_t k = 1) { return MultiPoly::var(VarId::omega(e), k); }
MultiPoly al(const std::string& e) { return MultiPoly::var(VarId::alpha(e)); }
MultiPoly beta(std::uint32_t k = 1) { return MultiPoly::var(VarId::beta(), k); }

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// Vertex indices (into g.vertices()) of the two ends of every edge, in edge order.
std::vector<std::pair<std::size_t, std::size_t>> edge_ends(const RibbonGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& e : g.edges()) {
    Cross c = e.crosses[0];
    ends.emplace_back(g.vertex_of(c), g.vertex_of(g.map().sigma1(c)));
  }
  return ends;
}

// Vertex parities after cutting the edges in `cut`, which must be odd everywhere.
bool all_odd(const RibbonGraph& g, const std::vector<std::pair<std::size_t, std::size_t>>& ends,
             const std::vector<bool>& cut) {
  if (g.bare_vertices() > 0) return false;
  std::vector<std::size_t> deg(g.vertices().size());
  for (std::size_t v = 0; v < deg.size(); ++v) deg[v] = g.flags_at(v);
  for (std::size_t k = 0; k < ends.size(); ++k) {
    if (!cut[k]) continue;
    ++deg[ends[k].first];
    ++deg[ends[k].second];
  }
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d % 2 == 1; });
}

struct FaceData {
  std::size_t flags = 0;
  std::vector<std::string> sides;  // edge label per traversed edge side
};

std::vector<FaceData> face_data(const RibbonGraph& g) {
  std::vector<FaceData> out;
  for (const auto& cyc : boundary_components(g)) {
    FaceData fd;
    for (Cross x : cyc) {
      int e = g.edge_of(x);
      if (e < 0)
        ++fd.flags;
      else
        fd.sides.push_back(g.edges()[static_cast<std::size_t>(e)].label);
    }
    out.push_back(std::move(fd));
  }
  return out;
}

bool has_variable_label(const MultiPoly& p, const std::string& label) {
  for (const auto& v : p.variables())
    if (v.edge_indexed() && v.label == label) return true;
  return false;
}

// Vertex count of the contraction of `in_a` and the degree (flags plus cut
// half-edges) of each contracted vertex; used by the tree and cycle formulas.
bool contracted_odd(const RibbonGraph& g, const std::vector<std::pair<std::size_t, std::size_t>>& ends,
                    std::uint64_t a, std::uint64_t b) {
  const std::size_t nv = g.vertices().size();
  UnionFind uf(nv);
  for (std::size_t k = 0; k < ends.size(); ++k)
    if (a >> k & 1U) uf.unite(ends[k].first, ends[k].second);
  std::vector<std::size_t> deg(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) deg[uf.find(v)] += g.flags_at(v);
  for (std::size_t k = 0; k < ends.size(); ++k) {
    if (!(b >> k & 1U)) continue;
    ++deg[uf.find(ends[k].first)];
    ++deg[uf.find(ends[k].second)];
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (uf.find(v) == v && deg[v] % 2 == 0) return false;
  return true;
}

}  // namespace

MultiPoly hu_from_q(const MultiPoly& q, const std::vector<std::string>& edge_labels) {
  std::map<VarId, MultiPoly> sub;
  for (const auto& e : edge_labels) {
    sub[VarId::x(e)] = t_(e);
    sub[VarId::y(e)] = om(e);
    sub[VarId::z(e)] = om(e) * t_(e, 2);
    sub[VarId::w(e)] = t_(e) * om(e, 2);
  }
  return substitute(q, sub);
}

MultiPoly hu(const RibbonGraph& g, HUMethod method) {
  const auto r = RSequenceSpec::odd_two_even_zero();
  switch (method) {
    case HUMethod::REDUCTION: return hu_from_q(q_by_reduction(g, r).poly, g.edge_labels());
    case HUMethod::EXPANSION: return hu_from_q(q_by_expansion(g, r).poly, g.edge_labels());
    case HUMethod::CRITICAL: return hu_via_critical_algorithm(g);
  }
  return {};
}

MultiPoly swap_omega_t(const MultiPoly& p, const EdgeSubset& s) {
  std::map<VarId, MultiPoly> sub;
  for (const auto& e : s) {
    sub[VarId::t(e)] = om(e);
    sub[VarId::omega(e)] = t_(e);
  }
  return substitute(p, sub);
}

bool hu_partial_dual_check(const RibbonGraph& g, const EdgeSubset& s) {
  for (const auto& e : s) g.edge_index(e);
  return swap_omega_t(hu(partial_dual(g, s)), s) == hu(g);
}

MultiPoly hu_tree(const RibbonGraph& g) {
  if (g.num_components() != 1 || g.num_vertices() != g.num_edges() + 1)
    throw Error(ErrorCode::NotATree, "graph is not a connected tree");
  if (g.num_edges() > 20) throw Error(ErrorCode::TooLarge, "tree formula limited to 20 edges");
  if (g.vertices().empty()) return {};  // a single bare vertex
  const auto labels = g.edge_labels();
  const auto ends = edge_ends(g);
  const std::size_t e = labels.size();
  MultiPoly out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << e); ++a) {
    MultiPoly pa(Integer(1) << (e - static_cast<std::size_t>(__builtin_popcountll(a)) + 1));
    for (std::size_t k = 0; k < e; ++k)
      if (a >> k & 1U) pa *= om(labels[k]) * (MultiPoly(1L) + t_(labels[k], 2));
    const std::uint64_t rest = ~a & ((std::uint64_t{1} << e) - 1);
    for (std::uint64_t b = rest;; b = (b - 1) & rest) {
      if (contracted_odd(g, ends, a, b)) {
        MultiPoly term = pa;
        for (std::size_t k = 0; k < e; ++k) {
          if (a >> k & 1U) continue;
          term *= (b >> k & 1U) ? t_(labels[k]) * om(labels[k], 2) : t_(labels[k]);
        }
        out += term;
      }
      if (b == 0) break;
    }
  }
  return out;
}

MultiPoly hu_cycle(const RibbonGraph& g) {
  const std::size_t e = g.num_edges();
  bool ok = e >= 1 && g.num_components() == 1 && g.num_vertices() == e && g.bare_vertices() == 0;
  if (ok) {
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
      std::size_t half_edges = g.vertices()[v].cycle.size() - g.flags_at(v);
      ok = ok && half_edges == 2;
    }
  }
  ok = ok && is_orientable(g);
  if (!ok) throw Error(ErrorCode::NotACycle, "graph is not an orientable cycle");
  auto faces = face_data(g);
  if (faces.size() != 2) throw Error(ErrorCode::NotACycle, "cycle must have two faces");
  const std::size_t m = faces[0].flags, n = faces[1].flags;
  const auto labels = g.edge_labels();
  const auto ends = edge_ends(g);
  const std::uint64_t full = (std::uint64_t{1} << e) - 1;
  MultiPoly out;
  if (m % 2 == n % 2) {
    MultiPoly sum;
    for (std::uint64_t a = 0; a <= full; ++a) {
      if ((static_cast<std::size_t>(__builtin_popcountll(a)) + n) % 2 == 0) continue;
      MultiPoly term(1L);
      for (std::size_t k = 0; k < e; ++k)
        if (a >> k & 1U) term *= t_(labels[k], 2);
      sum += term;
    }
    MultiPoly prod(4L);
    for (const auto& l : labels) prod *= om(l);
    out += prod * sum;
  }
  for (std::uint64_t a = 0; a < full; ++a) {  // A = E(C) is the only cyclic subset
    MultiPoly pa(Integer(1) << (e - static_cast<std::size_t>(__builtin_popcountll(a))));
    for (std::size_t k = 0; k < e; ++k)
      if (a >> k & 1U) pa *= om(labels[k]) * (MultiPoly(1L) + t_(labels[k], 2));
    const std::uint64_t rest = ~a & full;
    for (std::uint64_t b = rest;; b = (b - 1) & rest) {
      if (contracted_odd(g, ends, a, b)) {
        MultiPoly term = pa;
        for (std::size_t k = 0; k < e; ++k) {
          if (a >> k & 1U) continue;
          term *= (b >> k & 1U) ? t_(labels[k]) * om(labels[k], 2) : t_(labels[k]);
        }
        out += term;
      }
      if (b == 0) break;
    }
  }
  return out;
}

MultiPoly hu_critical(const RibbonGraph& g) {
  MultiPoly out(Integer(1) << boundary_components(g).size());
  for (const auto& face : face_data(g)) {
    // Even and odd parts of the product over sides of (1 + t); flags shift parity.
    MultiPoly even(1L), odd;
    if (face.flags % 2) std::swap(even, odd);
    for (const auto& s : face.sides) {
      MultiPoly ne = even + odd * t_(s);
      MultiPoly no = odd + even * t_(s);
      even = std::move(ne);
      odd = std::move(no);
    }
    out *= odd;
    if (out.is_zero()) break;
  }
  return out;
}

MultiPoly hu_via_critical_algorithm(const RibbonGraph& g) {
  const auto labels = g.edge_labels();
  const MultiPoly crit = hu_critical(g);
  MultiPoly out;
  for (const auto& [mono, coeff] : crit.terms()) {
    EdgeSubset a_set;
    std::vector<std::uint32_t> k(labels.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      k[i] = mono.exponent(VarId::t(labels[i]));
      if (k[i] > 2) throw Error(ErrorCode::AssertionFailure, "critical exponent above 2");
      if (k[i] % 2 == 0) a_set.push_back(labels[i]);
    }
    const RibbonGraph ga = partial_dual(g, a_set);
    const auto ends = edge_ends(ga);
    const Integer weight = Integer(1) << ga.num_vertices();
    MultiPoly fixed(1L);
    std::vector<std::size_t> free_edges;
    std::vector<bool> cut(labels.size(), false);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      // ga keeps the labels, and edges() is sorted by label like `labels`.
      if (k[i] % 2 == 0) {
        fixed *= om(labels[i]) * t_(labels[i], k[i]);
        cut[i] = k[i] == 2;
      } else {
        fixed *= t_(labels[i]);
        free_edges.push_back(i);
      }
    }
    Integer matched = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << free_edges.size()); ++b) {
      for (std::size_t j = 0; j < free_edges.size(); ++j) cut[free_edges[j]] = b >> j & 1U;
      if (!all_odd(ga, ends, cut)) continue;
      MultiPoly term = fixed;
      for (std::size_t j = 0; j < free_edges.size(); ++j)
        if (b >> j & 1U) term *= om(labels[free_edges[j]], 2);
      out += scale(term, weight);
      matched += weight;
    }
    if (matched != coeff)
      throw Error(ErrorCode::AssertionFailure, "critical coefficient " + coeff.str() +
                                                   " not matched (got " + matched.str() + ")");
  }
  return out;
}

QuadraticForm hv(const RibbonGraph& g) {
  if (g.num_flags() == 0) throw Error(ErrorCode::NoFlags, "HV needs at least one flag");
  const auto flags = g.flag_labels();
  const auto orient = local_orientation(g);
  QuadraticForm q;
  for (const auto& i : flags) q.diag[i] = hu(remove_flag(g, i));

  auto difference = [&](const RibbonGraph& gij) {
    RibbonGraph d = partial_dual(gij, {kHvEdge});
    MultiPoly p = hu(delete_edge(d, kHvEdge)) - hu(cut_edge(d, kHvEdge));
    if (has_variable_label(p, kHvEdge))
      throw Error(ErrorCode::AssertionFailure, "extra edge variable survived in HV");
    return p;
  };
  std::map<std::pair<std::string, std::string>, MultiPoly> sym_ordered;
  for (const auto& i : flags) {
    for (const auto& j : flags) {
      if (i == j) continue;
      RibbonGraph gij = join_flags(g, i, j, kHvEdge);
      sym_ordered[{i, j}] = difference(gij);
      const auto& fi = g.flags()[g.flag_index(i)];
      Cross pi = orient.positive[fi.crosses[0]] ? fi.crosses[0] : fi.crosses[1];
      q.antisym[{i, j}] = difference(insert_flag_after(gij, pi, kHvEdge + "f"));
    }
  }
  for (const auto& [key, p] : sym_ordered) {
    if (key.first > key.second) continue;
    if (!(sym_ordered[{key.second, key.first}] == p))
      throw Error(ErrorCode::AssertionFailure, "HV symmetric part depends on the flag order");
    q.sym[key] = p;
    if (!(q.antisym[{key.second, key.first}] == -q.antisym[key]))
      throw Error(ErrorCode::AssertionFailure, "HV antisymmetric part is not antisymmetric");
  }
  return q;
}

bool hv_partial_dual_check(const RibbonGraph& g, const EdgeSubset& s) {
  for (const auto& e : s) g.edge_index(e);
  QuadraticForm a = hv(partial_dual(g, s)), b = hv(g);
  auto same = [&](const auto& ma, const auto& mb) {
    if (ma.size() != mb.size()) return false;
    for (const auto& [k, p] : ma) {
      auto it = mb.find(k);
      if (it == mb.end() || !(swap_omega_t(p, s) == it->second)) return false;
    }
    return true;
  };
  return same(a.diag, b.diag) && same(a.sym, b.sym) && same(a.antisym, b.antisym);
}

namespace {

void require_flagless_connected(const RibbonGraph& g) {
  if (g.num_flags() != 0) throw Error(ErrorCode::HasFlags, "graph must not have flags");
  if (g.num_components() != 1) throw Error(ErrorCode::NotConnected, "graph must be connected");
}

}  // namespace

MultiPoly symanzik_u(const RibbonGraph& g) {
  require_flagless_connected(g);
  const auto labels = g.edge_labels();
  const std::size_t e = labels.size(), v = g.num_vertices();
  if (e > 20) throw Error(ErrorCode::TooLarge, "quasi-tree enumeration limited to 20 edges");
  MultiPoly out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << e); ++a) {
    RibbonGraph f = g;
    for (std::size_t k = 0; k < e; ++k)
      if (!(a >> k & 1U)) f = delete_edge(f, labels[k]);
    if (boundary_components(f).size() != 1) continue;
    const auto size = static_cast<std::size_t>(__builtin_popcountll(a));
    if (size + 1 < v) throw Error(ErrorCode::AssertionFailure, "quasi-tree with negative nullity");
    MultiPoly term = beta(static_cast<std::uint32_t>(size + 1 - v));
    for (std::size_t k = 0; k < e; ++k)
      if (!(a >> k & 1U)) term *= al(labels[k]);
    out += term;
  }
  return out;
}

MultiPoly symanzik_u_via_q(const RibbonGraph& g) {
  require_flagless_connected(g);
  std::map<VarId, MultiPoly> sub;
  for (const auto& e : g.edge_labels()) {
    sub[VarId::x(e)] = al(e);
    sub[VarId::y(e)] = beta();
    sub[VarId::z(e)] = 0L;
    sub[VarId::w(e)] = 0L;
  }
  MultiPoly q = substitute(q_by_reduction(g, RSequenceSpec::symbolic()).poly, sub);
  const VarId r0 = VarId::r(0);
  MultiPoly one_face = filter_terms(q, [&](const Monomial& m) { return m.exponent(r0) == 1; });
  Monomial d = Monomial(r0) * Monomial(VarId::beta(), static_cast<std::uint32_t>(g.num_vertices() - 1));
  return divide_exact(one_face, d);
}

MultiPoly symanzik_u_delta_one(const RibbonGraph& g) {
  require_flagless_connected(g);
  std::map<VarId, MultiPoly> sub;
  for (const auto& e : g.edge_labels()) {
    sub[VarId::x(e)] = al(e);
    sub[VarId::y(e)] = beta();
    sub[VarId::z(e)] = 0L;
    sub[VarId::w(e)] = 0L;
  }
  MultiPoly q = substitute(q_by_reduction(g, RSequenceSpec::delta_one()).poly, sub);
  if (q.is_zero()) return q;
  return divide_exact(q, Monomial(VarId::beta(), static_cast<std::uint32_t>(g.num_vertices() - 1)));
}

bool symanzik_dual_check(const RibbonGraph& g, const EdgeSubset& s) {
  std::set<std::string> in(s.begin(), s.end());
  for (const auto& e : s) g.edge_index(e);
  const RibbonGraph gd = partial_dual(g, s);
  const long shift = static_cast<long>(g.num_vertices()) - static_cast<long>(gd.num_vertices());
  const MultiPoly u = symanzik_u(g);
  MultiPoly rhs;
  for (const auto& [mono, c] : u.terms()) {
    long bexp = static_cast<long>(mono.exponent(VarId::beta())) + shift;
    std::vector<Monomial::Factor> fs;
    std::set<std::string> present;
    for (const auto& [v, k] : mono.factors())
      if (v.kind == VarKind::ALPHA) present.insert(v.label);
    for (const auto& e : g.edge_labels()) {
      bool has = present.count(e) > 0;
      if (in.count(e)) {
        // (a_e / b) * (b^2 / a_e) = b when present, a_e / b when absent.
        if (has) {
          ++bexp;
        } else {
          --bexp;
          fs.emplace_back(VarId::alpha(e), 1);
        }
      } else if (has) {
        fs.emplace_back(VarId::alpha(e), 1);
      }
    }
    if (bexp < 0) return false;
    fs.emplace_back(VarId::beta(), static_cast<std::uint32_t>(bexp));
    rhs.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return symanzik_u(gd) == rhs;
}

MultiPoly symanzik_commutative_limit(const MultiPoly& u) {
  return filter_terms(u, [](const Monomial& m) { return m.exponent(VarId::beta()) == 0; });
}

MultiPoly spanning_tree_polynomial(const RibbonGraph& g) {
  const auto labels = g.edge_labels();
  const auto ends = edge_ends(g);
  const std::size_t e = labels.size(), nv = g.vertices().size();
  if (g.num_components() != 1) return {};
  if (nv == 0) return 1L;
  MultiPoly out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << e); ++a) {
    if (static_cast<std::size_t>(__builtin_popcountll(a)) + 1 != nv) continue;
    UnionFind uf(nv);
    bool acyclic = true;
    for (std::size_t k = 0; k < e && acyclic; ++k)
      if (a >> k & 1U) acyclic = uf.unite(ends[k].first, ends[k].second);
    if (!acyclic) continue;
    MultiPoly term(1L);
    for (std::size_t k = 0; k < e; ++k)
      if (!(a >> k & 1U)) term *= al(labels[k]);
    out += term;
  }
  return out;
}

CommutativeLimit hu_commutative_limit(const RibbonGraph& g) {
  if (g.num_flags() != 0) throw Error(ErrorCode::HasFlags, "commutative limit needs a flagless graph");
  const auto labels = g.edge_labels();
  const auto ends = edge_ends(g);
  const std::size_t e = labels.size(), nv = g.vertices().size();
  if (e > 20) throw Error(ErrorCode::TooLarge, "commutative limit limited to 20 edges");
  CommutativeLimit res;
  res.vertices = g.num_vertices();
  if (g.bare_vertices() > 0) return res;
  auto om_one_plus_t2 = [&](std::size_t k) { return om(labels[k]) * (MultiPoly(1L) + t_(labels[k], 2)); };
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << e); ++a) {
    UnionFind uf(nv);
    for (std::size_t k = 0; k < e; ++k)
      if (a >> k & 1U) uf.unite(ends[k].first, ends[k].second);
    std::map<std::size_t, std::vector<std::size_t>> comp_edges;
    std::map<std::size_t, std::size_t> comp_vertices;
    for (std::size_t v = 0; v < nv; ++v) ++comp_vertices[uf.find(v)];
    for (std::size_t k = 0; k < e; ++k)
      if (a >> k & 1U) comp_edges[uf.find(ends[k].first)].push_back(k);
    MultiPoly term(1L);
    bool admissible = true;
    for (const auto& [root, nverts] : comp_vertices) {
      const auto& ce = comp_edges[root];
      if (ce.empty() || ce.size() > nverts) {
        admissible = false;
        break;
      }
      MultiPoly w;
      if (ce.size() + 1 == nverts) {
        for (std::size_t x : ce) {
          MultiPoly p = om(labels[x], 2) * t_(labels[x]);
          for (std::size_t y : ce)
            if (y != x) p *= om_one_plus_t2(y);
          w += p;
        }
      } else {
        // Prune leaves to find the cycle edges.
        std::map<std::size_t, std::size_t> deg;
        std::set<std::size_t> alive(ce.begin(), ce.end());
        for (std::size_t x : ce) {
          ++deg[ends[x].first];
          ++deg[ends[x].second];
        }
        for (bool changed = true; changed;) {
          changed = false;
          for (auto it = alive.begin(); it != alive.end();) {
            std::size_t x = *it;
            if (ends[x].first != ends[x].second && (deg[ends[x].first] == 1 || deg[ends[x].second] == 1)) {
              --deg[ends[x].first];
              --deg[ends[x].second];
              it = alive.erase(it);
              changed = true;
            } else {
              ++it;
            }
          }
        }
        std::vector<std::size_t> cyc(alive.begin(), alive.end());
        MultiPoly tree_part(1L);
        for (std::size_t x : ce)
          if (!alive.count(x)) tree_part *= om_one_plus_t2(x);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << cyc.size()); ++c) {
          if (__builtin_popcountll(c) % 2 == 0) continue;
          MultiPoly p = tree_part;
          for (std::size_t j = 0; j < cyc.size(); ++j)
            p *= (c >> j & 1U) ? om(labels[cyc[j]]) * t_(labels[cyc[j]], 2) : om(labels[cyc[j]]);
          w += p;
        }
      }
      term *= scale(w, 4);
    }
    if (!admissible) continue;
    for (std::size_t k = 0; k < e; ++k)
      if (!(a >> k & 1U)) term *= t_(labels[k]);
    res.scaled += term;
  }
  return res;
}

CommutativeLimit hu_commutative_limit_oracle(const RibbonGraph& g) {
  if (g.num_flags() != 0) throw Error(ErrorCode::HasFlags, "commutative limit needs a flagless graph");
  std::map<VarId, MultiPoly> sub;
  for (const auto& e : g.edge_labels()) sub[VarId::omega(e)] = beta() * om(e);
  MultiPoly scaled = substitute(hu(g), sub);
  CommutativeLimit res;
  res.vertices = g.num_vertices();
  if (scaled.is_zero()) return res;
  std::uint32_t low = UINT32_MAX;
  for (const auto& [m, c] : scaled.terms()) low = std::min(low, m.exponent(VarId::beta()));
  if (low != res.vertices)
    throw Error(ErrorCode::AssertionFailure, "lowest theta degree " + std::to_string(low) +
                                                 " differs from v(G) = " + std::to_string(res.vertices));
  MultiPoly lowest = filter_terms(scaled, [&](const Monomial& m) { return m.exponent(VarId::beta()) == low; });
  res.scaled = divide_exact(lowest, Monomial(VarId::beta(), low));
  return res;
}

}  // namespace rgp
