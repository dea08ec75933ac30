#include "rgp/map.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace rgp {

namespace {

bool is_permutation_of_range(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (Cross y : p) {
    if (y >= p.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Cycle index of every element.
std::vector<std::size_t> cycle_index(const Perm& p) {
  std::vector<std::size_t> idx(p.size(), SIZE_MAX);
  std::size_t next = 0;
  for (Cross x = 0; x < p.size(); ++x) {
    if (idx[x] != SIZE_MAX) continue;
    Cross y = x;
    do {
      idx[y] = next;
      y = p[y];
    } while (y != x);
    ++next;
  }
  return idx;
}

std::vector<Cross> cycle_from(const Perm& p, Cross start) {
  std::vector<Cross> c;
  Cross y = start;
  do {
    c.push_back(y);
    y = p[y];
  } while (y != start);
  return c;
}

// Pairs the cycles of p into conjugate pairs (c, c') where c' runs through
// inv of c.front(); the representative is the cycle holding the smaller cross.
std::vector<Vertex> conjugate_pairs(const Perm& p, const Perm& inv) {
  std::vector<Vertex> out;
  std::vector<bool> used(p.size(), false);
  for (Cross x = 0; x < p.size(); ++x) {
    if (used[x]) continue;
    Vertex v;
    v.cycle = cycle_from(p, x);
    for (Cross y : v.cycle) used[y] = true;
    Cross partner = inv[x];
    if (used[partner]) {
      throw Error(ErrorCode::InvalidMap,
                  "a cycle is its own conjugate (axiom A.4)");
    }
    v.conjugate = cycle_from(p, partner);
    for (Cross y : v.conjugate) used[y] = true;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

CombinatorialMap::CombinatorialMap(Perm sigma0, Perm theta, Perm sigma1,
                                   std::vector<std::uint32_t> ids)
    : sigma0_(std::move(sigma0)),
      theta_(std::move(theta)),
      sigma1_(std::move(sigma1)),
      ids_(std::move(ids)) {
  const std::size_t n = sigma0_.size();
  if (theta_.size() != n || sigma1_.size() != n) {
    throw Error(ErrorCode::InvalidMap, "permutations have different sizes");
  }
  if (!is_permutation_of_range(sigma0_) || !is_permutation_of_range(theta_) ||
      !is_permutation_of_range(sigma1_)) {
    throw Error(ErrorCode::InvalidMap, "a permutation is not a bijection");
  }
  if (ids_.empty()) {
    ids_.resize(n);
    std::iota(ids_.begin(), ids_.end(), 0u);
  } else if (ids_.size() != n) {
    throw Error(ErrorCode::InvalidMap, "cross id list has the wrong size");
  } else {
    std::set<std::uint32_t> distinct(ids_.begin(), ids_.end());
    if (distinct.size() != n) {
      throw Error(ErrorCode::InvalidMap, "cross ids are not distinct");
    }
  }
  sigma0_inv_.resize(n);
  for (Cross x = 0; x < n; ++x) sigma0_inv_[sigma0_[x]] = x;
}

std::optional<Cross> CombinatorialMap::index_of(std::uint32_t id) const {
  for (Cross x = 0; x < ids_.size(); ++x) {
    if (ids_[x] == id) return x;
  }
  return std::nullopt;
}

ValidationReport validate_map(const CombinatorialMap& m) {
  ValidationReport report;
  const std::size_t n = m.size();
  auto add = [&](const char* axiom, std::vector<Cross> xs, std::string detail) {
    MapViolation v{axiom, {}, std::move(detail)};
    for (Cross x : xs) v.witness.push_back(m.id(x));
    report.push_back(std::move(v));
  };
  if (n % 2 != 0) add("A.1", {}, "odd number of crosses");
  for (Cross x = 0; x < n; ++x) {
    if (m.theta(m.theta(x)) != x) add("A.1", {x}, "theta is not an involution");
    if (m.sigma1(m.sigma1(x)) != x) add("A.1", {x}, "sigma1 is not an involution");
    if (m.theta(m.sigma1(x)) != m.sigma1(m.theta(x))) {
      add("A.1", {x}, "theta and sigma1 do not commute");
    }
  }
  for (Cross x = 0; x < n; ++x) {
    if (m.theta(x) == x) add("A.2", {x}, "theta has a fixed point");
    if (m.theta(x) == m.sigma1(x)) add("A.2", {x}, "theta x equals sigma1 x");
  }
  for (Cross x = 0; x < n; ++x) {
    if (m.sigma0(m.theta(x)) != m.theta(m.sigma0_inv(x))) {
      add("A.3", {x}, "sigma0 theta differs from theta sigma0^-1");
    }
  }
  auto cyc = cycle_index(m.sigma0_perm());
  for (Cross x = 0; x < n; ++x) {
    if (cyc[x] == cyc[m.theta(x)]) {
      add("A.4", {x, m.theta(x)}, "sigma0-orbits of x and theta x coincide");
    }
  }
  return report;
}

std::vector<std::vector<Cross>> permutation_cycles(const Perm& p) {
  std::vector<std::vector<Cross>> out;
  std::vector<bool> seen(p.size(), false);
  for (Cross x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    out.push_back(cycle_from(p, x));
    for (Cross y : out.back()) seen[y] = true;
  }
  return out;
}

RibbonGraph::RibbonGraph(CombinatorialMap m, std::vector<std::string> cross_labels,
                         std::size_t bare_vertices)
    : map_(std::move(m)), cross_labels_(std::move(cross_labels)), bare_(bare_vertices) {
  const std::size_t n = map_.size();
  if (cross_labels_.size() != n) {
    throw Error(ErrorCode::InvalidMap, "label list does not match cross count");
  }
  auto report = validate_map(map_);
  if (!report.empty()) {
    throw Error(ErrorCode::InvalidMap,
                "axiom " + report.front().axiom + " violated: " + report.front().detail);
  }

  vertices_ = conjugate_pairs(map_.sigma0_perm(), map_.theta_perm());
  vertex_of_.assign(n, 0);
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (Cross x : vertices_[v].cycle) vertex_of_[x] = v;
    for (Cross x : vertices_[v].conjugate) vertex_of_[x] = v;
  }

  edge_of_.assign(n, -1);
  flag_of_.assign(n, -1);
  std::map<std::string, std::vector<Cross>> edge_groups, flag_groups;
  std::vector<bool> seen(n, false);
  for (Cross x = 0; x < n; ++x) {
    if (seen[x]) continue;
    if (map_.is_flag_cross(x)) {
      Cross y = map_.theta(x);
      seen[x] = seen[y] = true;
      if (cross_labels_[x] != cross_labels_[y]) {
        throw Error(ErrorCode::InvalidMap, "flag crosses carry different labels");
      }
      if (flag_groups.count(cross_labels_[x])) {
        throw Error(ErrorCode::DuplicateId, "duplicate flag label " + cross_labels_[x]);
      }
      flag_groups[cross_labels_[x]] = {std::min(x, y), std::max(x, y)};
    } else {
      std::array<Cross, 4> orbit{x, map_.theta(x), map_.sigma1(x),
                                 map_.theta(map_.sigma1(x))};
      std::sort(orbit.begin(), orbit.end());
      for (Cross y : orbit) {
        seen[y] = true;
        if (cross_labels_[y] != cross_labels_[x]) {
          throw Error(ErrorCode::InvalidMap, "edge crosses carry different labels");
        }
      }
      if (edge_groups.count(cross_labels_[x])) {
        throw Error(ErrorCode::DuplicateId, "duplicate edge label " + cross_labels_[x]);
      }
      edge_groups[cross_labels_[x]] = {orbit.begin(), orbit.end()};
    }
  }
  for (auto& [label, xs] : edge_groups) {
    Edge e{label, {xs[0], xs[1], xs[2], xs[3]}};
    for (Cross y : xs) edge_of_[y] = static_cast<int>(edges_.size());
    edges_.push_back(std::move(e));
  }
  flags_at_.assign(vertices_.size(), 0);
  for (auto& [label, xs] : flag_groups) {
    Flag f{label, {xs[0], xs[1]}};
    for (Cross y : xs) flag_of_[y] = static_cast<int>(flags_.size());
    ++flags_at_[vertex_of_[xs[0]]];
    flags_.push_back(std::move(f));
  }

  UnionFind uf(n);
  for (Cross x = 0; x < n; ++x) {
    uf.unite(x, map_.sigma0(x));
    uf.unite(x, map_.theta(x));
    uf.unite(x, map_.sigma1(x));
  }
  std::size_t roots = 0;
  for (Cross x = 0; x < n; ++x) {
    if (uf.find(x) == x) ++roots;
  }
  components_ = roots + bare_;
}

std::optional<std::size_t> RibbonGraph::find_edge(std::string_view label) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), label,
                             [](const Edge& e, std::string_view l) { return e.label < l; });
  if (it == edges_.end() || it->label != label) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<std::size_t> RibbonGraph::find_flag(std::string_view label) const {
  auto it = std::lower_bound(flags_.begin(), flags_.end(), label,
                             [](const Flag& f, std::string_view l) { return f.label < l; });
  if (it == flags_.end() || it->label != label) return std::nullopt;
  return static_cast<std::size_t>(it - flags_.begin());
}

std::size_t RibbonGraph::edge_index(std::string_view label) const {
  auto i = find_edge(label);
  if (!i) throw Error(ErrorCode::UnknownEdge, "unknown edge " + std::string(label));
  return *i;
}

std::size_t RibbonGraph::flag_index(std::string_view label) const {
  auto i = find_flag(label);
  if (!i) throw Error(ErrorCode::UnknownFlag, "unknown flag " + std::string(label));
  return *i;
}

std::vector<std::string> RibbonGraph::edge_labels() const {
  std::vector<std::string> out;
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

std::vector<std::string> RibbonGraph::flag_labels() const {
  std::vector<std::string> out;
  for (const auto& f : flags_) out.push_back(f.label);
  return out;
}

RibbonGraph derive_structure(const CombinatorialMap& m) {
  auto report = validate_map(m);
  if (!report.empty()) {
    throw Error(ErrorCode::InvalidMap,
                "axiom " + report.front().axiom + " violated: " + report.front().detail);
  }
  const std::size_t n = m.size();
  std::vector<std::string> labels(n);
  std::vector<bool> done(n, false);
  std::size_t edges = 0, flags = 0;
  for (Cross x = 0; x < n; ++x) {
    if (done[x]) continue;
    if (m.is_flag_cross(x)) {
      std::string l = "f" + std::to_string(++flags);
      for (Cross y : {x, m.theta(x)}) {
        labels[y] = l;
        done[y] = true;
      }
    } else {
      std::string l = "e" + std::to_string(++edges);
      for (Cross y : {x, m.theta(x), m.sigma1(x), m.theta(m.sigma1(x))}) {
        labels[y] = l;
        done[y] = true;
      }
    }
  }
  return RibbonGraph(m, std::move(labels));
}

std::vector<std::vector<Cross>> boundary_components(const RibbonGraph& g) {
  const auto& m = g.map();
  const std::size_t n = m.size();
  Perm face(n), partner(n);
  for (Cross x = 0; x < n; ++x) {
    Cross y = m.sigma1(x);
    if (!m.is_flag_cross(y)) y = m.theta(y);
    face[x] = m.sigma0(y);
    partner[x] = m.is_flag_cross(x) ? m.theta(x) : m.sigma1(x);
  }
  std::vector<std::vector<Cross>> out;
  for (auto& p : conjugate_pairs(face, partner)) out.push_back(std::move(p.cycle));
  for (std::size_t i = 0; i < g.bare_vertices(); ++i) out.emplace_back();
  return out;
}

LocalOrientation local_orientation(const RibbonGraph& g) {
  const auto& m = g.map();
  const auto& verts = g.vertices();
  LocalOrientation lo;
  lo.positive.assign(m.size(), false);
  std::vector<int> choice(verts.size(), -1);  // 0: cycle, 1: conjugate
  auto assign = [&](std::size_t v, int c) {
    choice[v] = c;
    for (Cross x : (c == 0 ? verts[v].cycle : verts[v].conjugate)) lo.positive[x] = true;
  };
  for (std::size_t root = 0; root < verts.size(); ++root) {
    if (choice[root] != -1) continue;
    assign(root, 0);
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (Cross x : (choice[v] == 0 ? verts[v].cycle : verts[v].conjugate)) {
        if (m.is_flag_cross(x)) continue;
        Cross want = m.theta(m.sigma1(x));  // must be positive at the far end
        std::size_t w = g.vertex_of(want);
        if (choice[w] == -1) {
          const auto& cyc = verts[w].cycle;
          bool in_cycle = std::find(cyc.begin(), cyc.end(), want) != cyc.end();
          assign(w, in_cycle ? 0 : 1);
          queue.push_back(w);
        } else if (!lo.positive[want]) {
          lo.orientable = false;
        }
      }
    }
  }
  return lo;
}

bool is_orientable(const RibbonGraph& g) { return local_orientation(g).orientable; }

StructureReport structure_report(const RibbonGraph& g) {
  StructureReport r;
  r.v = g.num_vertices();
  r.e = g.num_edges();
  r.f = g.num_flags();
  r.k = g.num_components();
  r.faces = boundary_components(g).size();
  r.euler_genus = 2 * static_cast<long>(r.k) - static_cast<long>(r.v) +
                  static_cast<long>(r.e) - static_cast<long>(r.faces);
  r.orientable = is_orientable(g);
  return r;
}

namespace {

// BFS numbering from `start`, visiting sigma0, theta, sigma1 images in that order.
void bfs_serialize(const CombinatorialMap& m, Cross start, std::vector<Cross>& order,
                   std::vector<std::uint32_t>& number, std::vector<std::uint32_t>& seq) {
  order.clear();
  seq.clear();
  order.push_back(start);
  number[start] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    Cross x = order[head];
    for (Cross y : {m.sigma0(x), m.theta(x), m.sigma1(x)}) {
      if (number[y] == UINT32_MAX) {
        number[y] = static_cast<std::uint32_t>(order.size());
        order.push_back(y);
      }
      seq.push_back(number[y]);
    }
  }
  for (Cross x : order) number[x] = UINT32_MAX;
}

}  // namespace

CanonicalForm canonical_form_with_order(const RibbonGraph& g) {
  const auto& m = g.map();
  const std::size_t n = m.size();
  UnionFind uf(n);
  for (Cross x = 0; x < n; ++x) {
    uf.unite(x, m.sigma0(x));
    uf.unite(x, m.theta(x));
    uf.unite(x, m.sigma1(x));
  }
  std::map<std::size_t, std::vector<Cross>> comps;
  for (Cross x = 0; x < n; ++x) comps[uf.find(x)].push_back(x);

  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<Cross>>> best_per_comp;
  std::vector<std::uint32_t> number(n, UINT32_MAX), seq;
  std::vector<Cross> order;
  for (auto& [root, members] : comps) {
    std::vector<std::uint32_t> best;
    std::vector<Cross> best_order;
    for (Cross s : members) {
      bfs_serialize(m, s, order, number, seq);
      if (best.empty() || seq < best) {
        best = seq;
        best_order = order;
      }
    }
    best_per_comp.emplace_back(std::move(best), std::move(best_order));
  }
  std::sort(best_per_comp.begin(), best_per_comp.end());

  CanonicalForm cf;
  for (auto& [s, o] : best_per_comp) {
    cf.key += '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) cf.key += ',';
      cf.key += std::to_string(s[i]);
    }
    cf.key += ']';
    cf.order.insert(cf.order.end(), o.begin(), o.end());
  }
  cf.key += "b" + std::to_string(g.bare_vertices());
  return cf;
}

std::string canonical_form(const RibbonGraph& g) { return canonical_form_with_order(g).key; }

}  // namespace rgp
