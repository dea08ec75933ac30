#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace rgp;
using rgp::test::contract_by_rotation;
using rgp::test::edge_ends;

namespace {

catalog::RandomGraphOptions opts(std::size_t v, std::size_t e, std::size_t f) {
  catalog::RandomGraphOptions o;
  o.max_vertices = v;
  o.max_edges = e;
  o.max_flags = f;
  return o;
}

std::vector<RibbonGraph> test_graphs(std::uint64_t seed, std::size_t n) {
  std::vector<RibbonGraph> out;
  for (auto& [name, g] : catalog::corpus()) out.push_back(g);
  auto r = rgp::test::random_graphs(seed, n, opts(4, 5, 4));
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

EdgeSubset all_edges(const RibbonGraph& g) {
  auto l = g.edge_labels();
  return {l.begin(), l.end()};
}

// Brute-force parity counts straight from the definitions.
ClassCounts brute_counts(const RibbonGraph& g) {
  ClassCounts c;
  const auto ends = edge_ends(g);
  const std::size_t nv = g.vertices().size();
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << ends.size()); ++b) {
    std::vector<std::size_t> deg(nv);
    for (std::size_t v = 0; v < nv; ++v) deg[v] = g.flags_at(v);
    for (std::size_t k = 0; k < ends.size(); ++k)
      if (b >> k & 1U) ++deg[ends[k].first], ++deg[ends[k].second];
    bool all_odd = g.bare_vertices() == 0, all_even = true;
    for (auto d : deg) all_odd = all_odd && d % 2 == 1, all_even = all_even && d % 2 == 0;
    c.odd += all_odd;
    c.even += all_even;
  }
  std::vector<std::size_t> half_vertex;
  for (Cross x = 0; x < g.map().size(); ++x)
    if (x < g.map().theta(x)) half_vertex.push_back(g.vertex_of(x));
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << half_vertex.size()); ++h) {
    std::vector<std::size_t> deg(nv);
    for (std::size_t k = 0; k < half_vertex.size(); ++k)
      if (h >> k & 1U) ++deg[half_vertex[k]];
    bool all_odd = g.bare_vertices() == 0, all_even = true;
    for (auto d : deg) all_odd = all_odd && d % 2 == 1, all_even = all_even && d % 2 == 0;
    c.oddf += all_odd;
    c.evf += all_even;
  }
  const std::uint64_t colors = std::uint64_t{1} << g.num_vertices();
  c.codd = colors * c.odd;
  c.cev = colors * c.even;
  c.coddf = colors * c.oddf;
  c.cevf = colors * c.evf;
  return c;
}

}  // namespace

TEST_CASE("full partial dual is the natural dual") {
  for (const auto& g : test_graphs(31, 100)) {
    CHECK(canonical_form(partial_dual(g, all_edges(g))) == canonical_form(natural_dual(g)));
    CHECK(canonical_form(partial_dual(g, {})) == canonical_form(g));
    CHECK(validate_map(natural_dual(g).map()).empty());
  }
}

TEST_CASE("partial duality is an involution and composes by symmetric difference") {
  std::mt19937_64 rng(32);
  for (const auto& g : test_graphs(33, 100)) {
    auto a = rgp::test::random_subset(rng, g);
    auto b = rgp::test::random_subset(rng, g);
    auto ga = partial_dual(g, a);
    CHECK(validate_map(ga.map()).empty());
    CHECK(canonical_form(partial_dual(ga, a)) == canonical_form(g));
    CHECK(ga.edge_labels() == g.edge_labels());
    EdgeSubset sym;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(sym, sym.end()));
    CHECK(canonical_form(partial_dual(ga, b)) == canonical_form(partial_dual(g, sym)));
  }
}

TEST_CASE("vertices of a partial dual are the boundaries of the spanning subgraph") {
  std::mt19937_64 rng(34);
  for (const auto& g : test_graphs(35, 100)) {
    auto a = rgp::test::random_subset(rng, g);
    std::uint64_t mask = 0;
    auto labels = g.edge_labels();
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (std::find(a.begin(), a.end(), labels[k]) != a.end()) mask |= std::uint64_t{1} << k;
    CHECK(partial_dual(g, a).num_vertices() ==
          boundary_components(rgp::test::spanning_subgraph(g, mask)).size());
  }
}

TEST_CASE("2-cycle under duality of one edge") {
  auto g = catalog::cycle(2);
  auto d = partial_dual(g, {"e1"});
  CHECK(canonical_form(d) == canonical_form(catalog::double_tadpole()));
  auto c = class_counts(g), cd = class_counts(d);
  CHECK(c.odd == 2);
  CHECK(c.even == 2);
  CHECK(cd.odd == 0);
  CHECK(cd.even == 4);
  CHECK(c.oddf == 4);
  CHECK(c.evf == 4);
  CHECK(cd.oddf == 8);
  CHECK(cd.evf == 8);
  CHECK(c.cev == cd.cev);
}

TEST_CASE("class counts match brute force and colored counts survive duality") {
  std::mt19937_64 rng(36);
  int used = 0;
  for (int i = 0; used < 100; ++i) {
    auto g = catalog::random_graph(rng, opts(4, 5, 5));
    if (2 * g.num_edges() + g.num_flags() > 16 || g.num_edges() == 0) continue;
    ++used;
    auto c = class_counts(g);
    CHECK(c == brute_counts(g));
    for (const auto& e : g.edge_labels()) {
      auto d = class_counts(partial_dual(g, {e}));
      CHECK(d.cev == c.cev);
      CHECK(d.coddf == c.coddf);
      CHECK(d.cevf == c.cevf);
    }
  }
  CHECK_THROWS_AS(class_counts(catalog::banana(3, true), 4), Error);
}

TEST_CASE("deletion and cutting commute") {
  for (const auto& g : test_graphs(37, 60)) {
    auto labels = g.edge_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        if (i == j) continue;
        auto dc = cut_edge(delete_edge(g, labels[i]), labels[j]);
        auto cd = delete_edge(cut_edge(g, labels[j]), labels[i]);
        CHECK(canonical_form(dc) == canonical_form(cd));
        auto dd = delete_edge(delete_edge(g, labels[i]), labels[j]);
        auto dd2 = delete_edge(delete_edge(g, labels[j]), labels[i]);
        CHECK(canonical_form(dd) == canonical_form(dd2));
      }
      auto del = delete_edge(g, labels[i]);
      CHECK(del.num_edges() + 1 == g.num_edges());
      CHECK(del.num_vertices() == g.num_vertices());
      auto cut = cut_edge(g, labels[i]);
      CHECK(cut.num_flags() == g.num_flags() + 2);
      CHECK(cut.num_vertices() == g.num_vertices());
    }
  }
}

TEST_CASE("contraction agrees with splicing rotations") {
  std::mt19937_64 rng(38);
  std::size_t checked = 0;
  for (const auto& g : test_graphs(39, 200)) {
    auto ends = edge_ends(g);
    auto labels = g.edge_labels();
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (ends[k].first == ends[k].second) continue;
      auto c = contract_edge(g, labels[k]);
      CHECK(validate_map(c.map()).empty());
      CHECK(c.num_vertices() + 1 == g.num_vertices());
      CHECK(canonical_form(c) == canonical_form(contract_by_rotation(g, labels[k])));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("flag operations") {
  auto g = catalog::sunset();
  auto r = remove_flag(g, "f1");
  CHECK(r.num_flags() == 1);
  auto j = join_flags(g, "f1", "f2", "x");
  CHECK(j.num_flags() == 0);
  CHECK(j.num_edges() == 4);
  CHECK(validate_map(j.map()).empty());
  auto x = j.edges()[j.edge_index("x")].crosses[0];
  auto ins = insert_flag_after(j, x, "g");
  CHECK(ins.num_flags() == 1);
  CHECK(validate_map(ins.map()).empty());
  CHECK_THROWS_AS(join_flags(g, "f1", "f1", "x"), Error);
  CHECK_THROWS_AS(join_flags(g, "f1", "f2", "e1"), Error);
}

TEST_CASE("unknown labels") {
  auto g = catalog::cycle(2);
  try {
    delete_edge(g, "nope");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownEdge);
  }
  try {
    remove_flag(g, "nope");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFlag);
  }
  CHECK_THROWS_AS(partial_dual(g, {"nope"}), Error);
}

TEST_CASE("disjoint union adds counts") {
  auto a = catalog::sunset(), b = catalog::cycle(2);
  auto u = disjoint_union(a, b);
  CHECK(u.num_vertices() == a.num_vertices() + b.num_vertices());
  CHECK(u.num_edges() == a.num_edges() + b.num_edges());
  CHECK(u.num_components() == 2);
  CHECK(validate_map(u.map()).empty());
}
