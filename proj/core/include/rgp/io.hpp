#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rgp/map.hpp"

namespace rgp {

struct RotationSpec {
  struct VertexSpec {
    std::string id;
    std::vector<std::string> items;  // half-edge and flag ids, counterclockwise
  };
  struct EdgeSpec {
    std::string id;
    std::vector<std::string> half_edges;  // exactly two when well formed
    bool twisted = false;
  };
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<std::string> flags;  // optional declarations
};

// Half-ribbon r (numbered in rotation order) owns crosses 2r and 2r+1; the
// first crosses carry the counterclockwise cycle of each vertex.
// Throws DanglingHalfEdge, DuplicateId, OddIncidence.
RibbonGraph from_rotation_system(const RotationSpec& spec);

RotationSpec parse_rotation_text(std::string_view text);
// "crosses: N" plus sigma0/theta/sigma1 in cycle notation; omitted points are fixed.
CombinatorialMap parse_raw_map(std::string_view text);
// Detects the raw form by its "crosses:" header.
RibbonGraph parse_graph_text(std::string_view text);
RibbonGraph load_graph_file(const std::string& path);

// Rotation-system text; half-edges are named "<edge>.0" and "<edge>.1".
std::string format_rotation_system(const RibbonGraph& g);
std::string format_raw_map(const RibbonGraph& g);
std::string format_dot(const RibbonGraph& g);

}  // namespace rgp
