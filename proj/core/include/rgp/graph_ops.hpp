#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rgp/map.hpp"

namespace rgp {

using EdgeSubset = std::vector<std::string>;

RibbonGraph delete_edge(const RibbonGraph& g, std::string_view e);
// Replaces e by two flags labelled "<e>.1" and "<e>.2".
RibbonGraph cut_edge(const RibbonGraph& g, std::string_view e);
RibbonGraph natural_dual(const RibbonGraph& g);
RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSubset& s);
RibbonGraph contract_edge(const RibbonGraph& g, std::string_view e);
// Labels are kept when the label sets are disjoint, otherwise prefixed "a." / "b.".
RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b);

RibbonGraph remove_flag(const RibbonGraph& g, std::string_view f);
// Turns flags i and j into the two half-edges of a new untwisted edge, relative
// to local_orientation(g).
RibbonGraph join_flags(const RibbonGraph& g, std::string_view i, std::string_view j,
                       const std::string& edge_label);
// Inserts a new flag right after cross x in the sigma0-cycle through x.
RibbonGraph insert_flag_after(const RibbonGraph& g, Cross x, const std::string& flag_label);

struct ClassCounts {
  std::uint64_t odd = 0, even = 0, codd = 0, cev = 0;
  std::uint64_t oddf = 0, evf = 0, coddf = 0, cevf = 0;
  bool operator==(const ClassCounts&) const = default;
};

inline constexpr std::size_t kClassCountGuard = 24;

// Exhaustive counts of odd/even spanning subgraphs (flags always kept) and
// odd/even cutting subgraphs (any set of half-ribbons). Guard: 2e + f <= limit.
ClassCounts class_counts(const RibbonGraph& g, std::size_t limit = kClassCountGuard);

}  // namespace rgp
