#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rgp/io.hpp"
#include "rgp/map.hpp"

namespace rgp::catalog {

// Edges are labelled e1, e2, ... and flags f1, f2, ... throughout.

RibbonGraph isolated_vertex(std::size_t flags);
// One edge, m flags on one end and n on the other.
RibbonGraph bridge(std::size_t m, std::size_t n);
// One untwisted loop, m flags in one face and n in the other.
RibbonGraph loop(std::size_t m, std::size_t n);
RibbonGraph twisted_loop();
// Cycle of length k; flags[v] is the number of flags on vertex v, all in the outer face.
RibbonGraph cycle(std::size_t k, const std::vector<std::size_t>& flags = {});
RibbonGraph banana(std::size_t k, bool planar = true);
RibbonGraph double_tadpole();  // one vertex, two interlaced loops
RibbonGraph dumbbell();        // e1 between two vertices carrying loops e2, e3
RibbonGraph linear_tree();     // path e2 - e1 - e3
RibbonGraph star(std::size_t n, bool leaf_flags = false);
RibbonGraph triangle(bool flags);
// Planar 3-banana with one flag per vertex, both in the face bounded by e1 and e3.
RibbonGraph sunset();
// Triangle with two flags on the vertex opposite e2, one in each face.
RibbonGraph broken_cycle3();
// The 12-cross map given by explicit permutations.
RibbonGraph twelve_cross();

std::vector<std::pair<std::string, RibbonGraph>> corpus();

struct RandomGraphOptions {
  std::size_t max_vertices = 3;
  std::size_t max_edges = 4;
  std::size_t max_flags = 4;
  bool allow_twists = true;
  bool connected = false;
};

RotationSpec random_rotation_spec(std::mt19937_64& rng, const RandomGraphOptions& opt);
RibbonGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt = {});

}  // namespace rgp::catalog
