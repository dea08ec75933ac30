#include "rgp/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rgp/graph_ops.hpp"

namespace rgp::catalog {

namespace {

std::string he(std::size_t e, int side) { return "e" + std::to_string(e) + "." + std::to_string(side); }

RotationSpec::EdgeSpec edge(std::size_t e, bool twisted = false) {
  return {"e" + std::to_string(e), {he(e, 0), he(e, 1)}, twisted};
}

struct FlagNamer {
  std::size_t next = 1;
  std::string operator()() { return "f" + std::to_string(next++); }
};

}  // namespace

RibbonGraph isolated_vertex(std::size_t flags) {
  RotationSpec s;
  FlagNamer fn;
  s.vertices.push_back({"v1", {}});
  for (std::size_t i = 0; i < flags; ++i) s.vertices[0].items.push_back(fn());
  return from_rotation_system(s);
}

RibbonGraph bridge(std::size_t m, std::size_t n) {
  RotationSpec s;
  FlagNamer fn;
  s.vertices = {{"v1", {he(1, 0)}}, {"v2", {he(1, 1)}}};
  for (std::size_t i = 0; i < m; ++i) s.vertices[0].items.push_back(fn());
  for (std::size_t i = 0; i < n; ++i) s.vertices[1].items.push_back(fn());
  s.edges = {edge(1)};
  return from_rotation_system(s);
}

RibbonGraph loop(std::size_t m, std::size_t n) {
  RotationSpec s;
  FlagNamer fn;
  std::vector<std::string> items{he(1, 0)};
  for (std::size_t i = 0; i < m; ++i) items.push_back(fn());
  items.push_back(he(1, 1));
  for (std::size_t i = 0; i < n; ++i) items.push_back(fn());
  s.vertices = {{"v1", items}};
  s.edges = {edge(1)};
  return from_rotation_system(s);
}

RibbonGraph twisted_loop() {
  RotationSpec s;
  s.vertices = {{"v1", {he(1, 0), he(1, 1)}}};
  s.edges = {edge(1, true)};
  return from_rotation_system(s);
}

RibbonGraph cycle(std::size_t k, const std::vector<std::size_t>& flags) {
  RotationSpec s;
  FlagNamer fn;
  for (std::size_t v = 1; v <= k; ++v) {
    std::vector<std::string> items{he(v, 0)};
    std::size_t nf = v - 1 < flags.size() ? flags[v - 1] : 0;
    for (std::size_t i = 0; i < nf; ++i) items.push_back(fn());
    items.push_back(he(v == 1 ? k : v - 1, 1));
    s.vertices.push_back({"v" + std::to_string(v), items});
    s.edges.push_back(edge(v));
  }
  return from_rotation_system(s);
}

RibbonGraph banana(std::size_t k, bool planar) {
  RotationSpec s;
  std::vector<std::string> a, b;
  for (std::size_t e = 1; e <= k; ++e) {
    a.push_back(he(e, 0));
    b.push_back(he(e, 1));
    s.edges.push_back(edge(e));
  }
  if (planar) std::reverse(b.begin(), b.end());
  s.vertices = {{"v1", a}, {"v2", b}};
  return from_rotation_system(s);
}

RibbonGraph double_tadpole() {
  RotationSpec s;
  s.vertices = {{"v1", {he(1, 0), he(2, 0), he(1, 1), he(2, 1)}}};
  s.edges = {edge(1), edge(2)};
  return from_rotation_system(s);
}

RibbonGraph dumbbell() {
  RotationSpec s;
  s.vertices = {{"v1", {he(1, 0), he(2, 0), he(2, 1)}}, {"v2", {he(1, 1), he(3, 0), he(3, 1)}}};
  s.edges = {edge(1), edge(2), edge(3)};
  return from_rotation_system(s);
}

RibbonGraph linear_tree() {
  RotationSpec s;
  s.vertices = {{"v1", {he(2, 0)}},
                {"v2", {he(2, 1), he(1, 0)}},
                {"v3", {he(1, 1), he(3, 0)}},
                {"v4", {he(3, 1)}}};
  s.edges = {edge(1), edge(2), edge(3)};
  return from_rotation_system(s);
}

RibbonGraph star(std::size_t n, bool leaf_flags) {
  RotationSpec s;
  FlagNamer fn;
  s.vertices.push_back({"c", {}});
  for (std::size_t e = 1; e <= n; ++e) {
    s.vertices[0].items.push_back(he(e, 0));
    std::vector<std::string> leaf{he(e, 1)};
    if (leaf_flags) leaf.push_back(fn());
    s.vertices.push_back({"l" + std::to_string(e), leaf});
    s.edges.push_back(edge(e));
  }
  return from_rotation_system(s);
}

RibbonGraph triangle(bool flags) {
  return flags ? cycle(3, {1, 1, 1}) : cycle(3);
}

RibbonGraph sunset() {
  RotationSpec s;
  s.vertices = {{"v1", {he(1, 0), he(2, 0), he(3, 0), "f1"}},
                {"v2", {he(3, 1), he(2, 1), he(1, 1), "f2"}}};
  s.edges = {edge(1), edge(2), edge(3)};
  return from_rotation_system(s);
}

RibbonGraph broken_cycle3() {
  RotationSpec s;
  s.vertices = {{"v1", {he(1, 0), "f1", he(3, 1), "f2"}},
                {"v2", {he(2, 0), he(1, 1)}},
                {"v3", {he(3, 0), he(2, 1)}}};
  s.edges = {edge(1), edge(2), edge(3)};
  return from_rotation_system(s);
}

RibbonGraph twelve_cross() {
  return parse_graph_text(
      "crosses: 12\n"
      "sigma0: (1,3)(4,2)(6,9,11,8)(5,7,12,10)\n"
      "theta: (1,2)(3,4)(5,6)(7,8)(9,10)(11,12)\n"
      "sigma1: (1,5)(2,6)(3,8)(4,7)(9)(10)(11)(12)\n");
}

std::vector<std::pair<std::string, RibbonGraph>> corpus() {
  std::vector<std::pair<std::string, RibbonGraph>> out;
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      out.emplace_back("bridge_" + std::to_string(m) + "_" + std::to_string(n), bridge(m, n));
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      out.emplace_back("loop_" + std::to_string(m) + "_" + std::to_string(n), loop(m, n));
  out.emplace_back("two_cycle", cycle(2));
  out.emplace_back("banana3_planar", banana(3, true));
  out.emplace_back("banana3_nonplanar", banana(3, false));
  out.emplace_back("double_tadpole", double_tadpole());
  out.emplace_back("dumbbell", dumbbell());
  out.emplace_back("linear_tree", linear_tree());
  out.emplace_back("star3", star(3));
  out.emplace_back("star4", star(4));
  out.emplace_back("triangle", triangle(false));
  out.emplace_back("triangle_flags", triangle(true));
  out.emplace_back("sunset", sunset());
  out.emplace_back("broken_cycle3", broken_cycle3());
  out.emplace_back("star3_flags", star(3, true));
  out.emplace_back("twelve_cross", twelve_cross());
  return out;
}

RotationSpec random_rotation_spec(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  for (;;) {
    RotationSpec s;
    const std::size_t nv = pick(1, std::max<std::size_t>(1, opt.max_vertices));
    const std::size_t ne = pick(0, opt.max_edges);
    const std::size_t nf = pick(0, opt.max_flags);
    for (std::size_t v = 0; v < nv; ++v) s.vertices.push_back({"v" + std::to_string(v + 1), {}});
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 1; e <= ne; ++e) {
      std::size_t a = pick(0, nv - 1), b = pick(0, nv - 1);
      s.vertices[a].items.push_back(he(e, 0));
      s.vertices[b].items.push_back(he(e, 1));
      parent[find(a)] = find(b);
      s.edges.push_back(edge(e, opt.allow_twists && pick(0, 1) == 1));
    }
    for (std::size_t f = 1; f <= nf; ++f)
      s.vertices[pick(0, nv - 1)].items.push_back("f" + std::to_string(f));
    if (opt.connected) {
      bool ok = true;
      for (std::size_t v = 0; v < nv; ++v) ok = ok && find(v) == find(0);
      if (!ok) continue;
    }
    for (auto& v : s.vertices) std::shuffle(v.items.begin(), v.items.end(), rng);
    return s;
  }
}

RibbonGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  return from_rotation_system(random_rotation_spec(rng, opt));
}

}  // namespace rgp::catalog
