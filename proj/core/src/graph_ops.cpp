#include "rgp/graph_ops.hpp"

#include <algorithm>
#include <set>

namespace rgp {

namespace {

// Restricts the map to crosses with keep[x]; sigma0 skips removed crosses.
// Vertices losing all their crosses become bare vertices.
RibbonGraph restrict_graph(const RibbonGraph& g, const std::vector<bool>& keep,
                           const Perm* sigma1_override = nullptr,
                           const std::vector<std::string>* labels_override = nullptr) {
  const auto& m = g.map();
  const std::size_t n = m.size();
  const Perm& s1 = sigma1_override ? *sigma1_override : m.sigma1_perm();
  const auto& labels = labels_override ? *labels_override : g.cross_labels();
  std::vector<Cross> index(n, UINT32_MAX);
  std::vector<Cross> kept;
  for (Cross x = 0; x < n; ++x) {
    if (keep[x]) {
      index[x] = static_cast<Cross>(kept.size());
      kept.push_back(x);
    }
  }
  Perm s0(kept.size()), th(kept.size()), sg(kept.size());
  std::vector<std::uint32_t> ids(kept.size());
  std::vector<std::string> new_labels(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Cross x = kept[i];
    Cross y = m.sigma0(x);
    while (!keep[y]) y = m.sigma0(y);
    s0[i] = index[y];
    th[i] = index[m.theta(x)];
    sg[i] = index[s1[x]];
    ids[i] = m.id(x);
    new_labels[i] = labels[x];
  }
  std::size_t bare = g.bare_vertices();
  for (const auto& v : g.vertices()) {
    bool any = false;
    for (Cross x : v.cycle) any = any || keep[x];
    if (!any) ++bare;
  }
  return RibbonGraph(CombinatorialMap(std::move(s0), std::move(th), std::move(sg), std::move(ids)),
                     std::move(new_labels), bare);
}

std::vector<bool> edge_cross_mask(const RibbonGraph& g, const EdgeSubset& s) {
  std::vector<bool> in(g.map().size(), false);
  for (const auto& label : s) {
    for (Cross x : g.edges()[g.edge_index(label)].crosses) in[x] = true;
  }
  return in;
}

std::uint32_t next_id(const CombinatorialMap& m) {
  std::uint32_t mx = 0;
  for (auto id : m.ids()) mx = std::max(mx, id);
  return m.size() == 0 ? 0 : mx + 1;
}

}  // namespace

RibbonGraph delete_edge(const RibbonGraph& g, std::string_view e) {
  std::vector<bool> keep(g.map().size(), true);
  for (Cross x : g.edges()[g.edge_index(e)].crosses) keep[x] = false;
  return restrict_graph(g, keep);
}

RibbonGraph cut_edge(const RibbonGraph& g, std::string_view e) {
  const auto& m = g.map();
  const auto& edge = g.edges()[g.edge_index(e)];
  Perm s1 = m.sigma1_perm();
  auto labels = g.cross_labels();
  Cross first = edge.crosses[0];
  for (Cross x : edge.crosses) {
    s1[x] = x;
    bool first_half = (x == first || x == m.theta(first));
    labels[x] = edge.label + (first_half ? ".1" : ".2");
  }
  return RibbonGraph(CombinatorialMap(m.sigma0_perm(), m.theta_perm(), std::move(s1), m.ids()),
                     std::move(labels), g.bare_vertices());
}

RibbonGraph natural_dual(const RibbonGraph& g) {
  const auto& m = g.map();
  const std::size_t n = m.size();
  Perm s0(n), th(n), s1(n);
  for (Cross x = 0; x < n; ++x) {
    if (m.is_flag_cross(x)) {
      s0[x] = m.sigma0(x);
      th[x] = m.theta(x);
      s1[x] = x;
    } else {
      s0[x] = m.sigma0(m.theta(m.sigma1(x)));
      th[x] = m.sigma1(x);
      s1[x] = m.theta(x);
    }
  }
  return RibbonGraph(CombinatorialMap(std::move(s0), std::move(th), std::move(s1), m.ids()),
                     g.cross_labels(), g.bare_vertices());
}

RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSubset& s) {
  const auto& m = g.map();
  const std::size_t n = m.size();
  auto in = edge_cross_mask(g, s);
  Perm s0(n), th(n), s1(n);
  for (Cross x = 0; x < n; ++x) {
    Cross t = in[x] ? m.sigma1(x) : x;
    t = in[t] ? m.theta(t) : t;
    s0[x] = m.sigma0(t);
    th[x] = in[x] ? m.sigma1(x) : m.theta(x);
    s1[x] = in[x] ? m.theta(x) : m.sigma1(x);
  }
  return RibbonGraph(CombinatorialMap(std::move(s0), std::move(th), std::move(s1), m.ids()),
                     g.cross_labels(), g.bare_vertices());
}

RibbonGraph contract_edge(const RibbonGraph& g, std::string_view e) {
  return delete_edge(partial_dual(g, {std::string(e)}), e);
}

RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
  const auto& ma = a.map();
  const auto& mb = b.map();
  const std::size_t na = ma.size(), nb = mb.size();
  bool clash = false;
  {
    std::set<std::string> la, lb;
    for (const auto& l : a.cross_labels()) la.insert(l);
    for (const auto& l : b.cross_labels()) lb.insert(l);
    for (const auto& l : lb) clash = clash || la.count(l);
  }
  Perm s0(na + nb), th(na + nb), s1(na + nb);
  std::vector<std::uint32_t> ids(na + nb);
  std::vector<std::string> labels(na + nb);
  std::uint32_t offset = next_id(ma);
  for (Cross x = 0; x < na; ++x) {
    s0[x] = ma.sigma0(x);
    th[x] = ma.theta(x);
    s1[x] = ma.sigma1(x);
    ids[x] = ma.id(x);
    labels[x] = clash ? "a." + a.cross_labels()[x] : a.cross_labels()[x];
  }
  for (Cross x = 0; x < nb; ++x) {
    Cross y = static_cast<Cross>(na) + x;
    s0[y] = static_cast<Cross>(na) + mb.sigma0(x);
    th[y] = static_cast<Cross>(na) + mb.theta(x);
    s1[y] = static_cast<Cross>(na) + mb.sigma1(x);
    ids[y] = offset + mb.id(x);
    labels[y] = clash ? "b." + b.cross_labels()[x] : b.cross_labels()[x];
  }
  return RibbonGraph(CombinatorialMap(std::move(s0), std::move(th), std::move(s1), std::move(ids)),
                     std::move(labels), a.bare_vertices() + b.bare_vertices());
}

RibbonGraph remove_flag(const RibbonGraph& g, std::string_view f) {
  std::vector<bool> keep(g.map().size(), true);
  for (Cross x : g.flags()[g.flag_index(f)].crosses) keep[x] = false;
  return restrict_graph(g, keep);
}

RibbonGraph join_flags(const RibbonGraph& g, std::string_view i, std::string_view j,
                       const std::string& edge_label) {
  const auto& m = g.map();
  const auto& fi = g.flags()[g.flag_index(i)];
  const auto& fj = g.flags()[g.flag_index(j)];
  if (fi.label == fj.label) {
    throw Error(ErrorCode::UnknownFlag, "cannot join a flag with itself");
  }
  if (g.find_edge(edge_label)) {
    throw Error(ErrorCode::DuplicateId, "edge label already used: " + edge_label);
  }
  auto orient = local_orientation(g);
  auto positive_of = [&](const Flag& f) {
    return orient.positive[f.crosses[0]] ? f.crosses[0] : f.crosses[1];
  };
  Cross pi = positive_of(fi), qi = m.theta(pi);
  Cross pj = positive_of(fj), qj = m.theta(pj);
  Perm s1 = m.sigma1_perm();
  s1[pi] = qj;
  s1[qj] = pi;
  s1[qi] = pj;
  s1[pj] = qi;
  auto labels = g.cross_labels();
  for (Cross x : {pi, qi, pj, qj}) labels[x] = edge_label;
  return RibbonGraph(CombinatorialMap(m.sigma0_perm(), m.theta_perm(), std::move(s1), m.ids()),
                     std::move(labels), g.bare_vertices());
}

RibbonGraph insert_flag_after(const RibbonGraph& g, Cross a, const std::string& flag_label) {
  const auto& m = g.map();
  const std::size_t n = m.size();
  if (a >= n) throw Error(ErrorCode::InvalidMap, "cross out of range");
  if (g.find_flag(flag_label)) {
    throw Error(ErrorCode::DuplicateId, "flag label already used: " + flag_label);
  }
  const Cross fresh = static_cast<Cross>(n), partner = static_cast<Cross>(n + 1);
  Perm s0 = m.sigma0_perm(), th = m.theta_perm(), s1 = m.sigma1_perm();
  s0.resize(n + 2);
  th.resize(n + 2);
  s1.resize(n + 2);
  const Cross b = m.theta(a);
  const Cross before_b = m.sigma0_inv(b);
  s0[fresh] = m.sigma0(a);
  s0[a] = fresh;
  s0[partner] = b;
  s0[before_b] = partner;
  th[fresh] = partner;
  th[partner] = fresh;
  s1[fresh] = fresh;
  s1[partner] = partner;
  auto ids = m.ids();
  std::uint32_t id = next_id(m);
  ids.push_back(id);
  ids.push_back(id + 1);
  auto labels = g.cross_labels();
  labels.push_back(flag_label);
  labels.push_back(flag_label);
  return RibbonGraph(CombinatorialMap(std::move(s0), std::move(th), std::move(s1), std::move(ids)),
                     std::move(labels), g.bare_vertices());
}

ClassCounts class_counts(const RibbonGraph& g, std::size_t limit) {
  const std::size_t e = g.num_edges(), f = g.num_flags();
  if (2 * e + f > limit) {
    throw Error(ErrorCode::TooLarge, "class_counts needs 2e+f <= " + std::to_string(limit) +
                                         ", got " + std::to_string(2 * e + f));
  }
  const auto& m = g.map();
  const std::size_t nv = g.vertices().size();
  const std::uint64_t all = nv == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nv) - 1);
  const bool has_bare = g.bare_vertices() > 0;

  // Parity toggles per edge (both ends) and per half-ribbon (one end).
  std::vector<std::uint64_t> edge_toggle;
  for (const auto& edge : g.edges()) {
    Cross x = edge.crosses[0];
    std::uint64_t t = (std::uint64_t{1} << g.vertex_of(x)) ^
                      (std::uint64_t{1} << g.vertex_of(m.sigma1(x)));
    edge_toggle.push_back(t);
  }
  std::uint64_t flag_parity = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    if (g.flags_at(v) % 2) flag_parity |= std::uint64_t{1} << v;
  }
  std::vector<std::uint64_t> half_toggle;
  for (Cross x = 0; x < m.size(); ++x) {
    if (x < m.theta(x)) half_toggle.push_back(std::uint64_t{1} << g.vertex_of(x));
  }

  ClassCounts c;
  auto enumerate = [&](const std::vector<std::uint64_t>& toggles, std::uint64_t start,
                       std::uint64_t& odd, std::uint64_t& even) {
    std::uint64_t parity = start;
    const std::uint64_t total = std::uint64_t{1} << toggles.size();
    for (std::uint64_t k = 0; k < total; ++k) {
      if (k) parity ^= toggles[static_cast<std::size_t>(__builtin_ctzll(k))];
      if (parity == all && !has_bare) ++odd;
      if (parity == 0) ++even;
    }
  };
  enumerate(edge_toggle, flag_parity, c.odd, c.even);
  enumerate(half_toggle, 0, c.oddf, c.evf);
  const std::uint64_t colors = std::uint64_t{1} << g.num_vertices();
  c.codd = colors * c.odd;
  c.cev = colors * c.even;
  c.coddf = colors * c.oddf;
  c.cevf = colors * c.evf;
  return c;
}

}  // namespace rgp
