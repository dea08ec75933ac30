#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgp/error.hpp"

namespace rgp {

// Crosses are dense indices 0..n-1; external identifiers are kept for I/O.
using Cross = std::uint32_t;
using Perm = std::vector<Cross>;

class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  // Throws InvalidMap unless all three vectors are permutations of 0..n-1.
  CombinatorialMap(Perm sigma0, Perm theta, Perm sigma1,
                   std::vector<std::uint32_t> ids = {});

  std::size_t size() const { return sigma0_.size(); }
  Cross sigma0(Cross x) const { return sigma0_[x]; }
  Cross sigma0_inv(Cross x) const { return sigma0_inv_[x]; }
  Cross theta(Cross x) const { return theta_[x]; }
  Cross sigma1(Cross x) const { return sigma1_[x]; }
  bool is_flag_cross(Cross x) const { return sigma1_[x] == x; }

  const Perm& sigma0_perm() const { return sigma0_; }
  const Perm& theta_perm() const { return theta_; }
  const Perm& sigma1_perm() const { return sigma1_; }

  std::uint32_t id(Cross x) const { return ids_[x]; }
  const std::vector<std::uint32_t>& ids() const { return ids_; }
  std::optional<Cross> index_of(std::uint32_t id) const;

 private:
  Perm sigma0_, sigma0_inv_, theta_, sigma1_;
  std::vector<std::uint32_t> ids_;
};

struct MapViolation {
  std::string axiom;                   // "A.1" .. "A.4"
  std::vector<std::uint32_t> witness;  // external cross ids
  std::string detail;
};
using ValidationReport = std::vector<MapViolation>;

ValidationReport validate_map(const CombinatorialMap& m);

// Cycles of a permutation, each starting at its smallest element, ordered by that element.
std::vector<std::vector<Cross>> permutation_cycles(const Perm& p);

struct Vertex {
  std::vector<Cross> cycle;      // sigma0-cycle holding the smaller cross
  std::vector<Cross> conjugate;  // cycle through theta of cycle.front()
};

struct Edge {
  std::string label;
  std::array<Cross, 4> crosses;  // sorted
};

struct Flag {
  std::string label;
  std::array<Cross, 2> crosses;  // sorted
};

// A validated map together with edge and flag labels and the derived structure.
// Vertices without any half-ribbon cannot be written as crosses; they are
// counted separately as bare vertices.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  // cross_labels[x] is the label of the edge or flag that owns x.
  RibbonGraph(CombinatorialMap m, std::vector<std::string> cross_labels,
              std::size_t bare_vertices = 0);

  const CombinatorialMap& map() const { return map_; }
  const std::vector<std::string>& cross_labels() const { return cross_labels_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Flag>& flags() const { return flags_; }
  std::size_t bare_vertices() const { return bare_; }

  std::size_t num_vertices() const { return vertices_.size() + bare_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_flags() const { return flags_.size(); }
  std::size_t num_half_ribbons() const { return map_.size() / 2; }
  std::size_t num_components() const { return components_; }

  // Index into vertices(); every cross lies on exactly one vertex.
  std::size_t vertex_of(Cross x) const { return vertex_of_[x]; }
  // -1 when x belongs to a flag (resp. an edge).
  int edge_of(Cross x) const { return edge_of_[x]; }
  int flag_of(Cross x) const { return flag_of_[x]; }

  std::optional<std::size_t> find_edge(std::string_view label) const;
  std::optional<std::size_t> find_flag(std::string_view label) const;
  // Throws UnknownEdge / UnknownFlag.
  std::size_t edge_index(std::string_view label) const;
  std::size_t flag_index(std::string_view label) const;

  std::vector<std::string> edge_labels() const;
  std::vector<std::string> flag_labels() const;
  std::size_t flags_at(std::size_t vertex) const { return flags_at_[vertex]; }

 private:
  CombinatorialMap map_;
  std::vector<std::string> cross_labels_;
  std::size_t bare_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Flag> flags_;
  std::vector<std::size_t> vertex_of_;
  std::vector<int> edge_of_;
  std::vector<int> flag_of_;
  std::vector<std::size_t> flags_at_;
  std::size_t components_ = 0;
};

// Builds the graph with labels e1, e2, ... and f1, f2, ... in order of smallest cross.
RibbonGraph derive_structure(const CombinatorialMap& m);

// One representative cycle of sigma0 theta_H sigma1 per face; a bare vertex
// contributes one empty cycle.
std::vector<std::vector<Cross>> boundary_components(const RibbonGraph& g);

struct StructureReport {
  std::size_t v = 0, e = 0, f = 0, k = 0, faces = 0;
  long euler_genus = 0;
  bool orientable = true;
};

StructureReport structure_report(const RibbonGraph& g);

// positive[x] says whether x lies on the chosen cycle of its vertex. The
// choice is propagated along edges so that sigma1 pairs positive with
// negative crosses whenever possible; `orientable` reports full success.
struct LocalOrientation {
  std::vector<bool> positive;
  bool orientable = true;
};

LocalOrientation local_orientation(const RibbonGraph& g);
bool is_orientable(const RibbonGraph& g);

struct CanonicalForm {
  std::string key;
  std::vector<Cross> order;  // order[i] is the cross placed at position i
};

CanonicalForm canonical_form_with_order(const RibbonGraph& g);
std::string canonical_form(const RibbonGraph& g);

}  // namespace rgp
