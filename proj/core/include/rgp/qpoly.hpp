#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgp/graph_ops.hpp"
#include "rgp/map.hpp"
#include "rgp/multipoly.hpp"

namespace rgp {

struct RSequenceSpec {
  enum class Rule { SYMBOLIC, EVEN_TWO_ODD_ZERO, ODD_TWO_EVEN_ZERO, DELTA_ONE, CONSTANT };

  Rule rule = Rule::SYMBOLIC;
  MultiPoly constant;  // used by CONSTANT only

  static RSequenceSpec symbolic() { return {Rule::SYMBOLIC, {}}; }
  static RSequenceSpec even_two_odd_zero() { return {Rule::EVEN_TWO_ODD_ZERO, {}}; }
  static RSequenceSpec odd_two_even_zero() { return {Rule::ODD_TWO_EVEN_ZERO, {}}; }
  static RSequenceSpec delta_one() { return {Rule::DELTA_ONE, {}}; }
  static RSequenceSpec constant_value(MultiPoly c) { return {Rule::CONSTANT, std::move(c)}; }

  MultiPoly value(std::size_t n) const;
  std::string key() const;
};

enum class QMethod { EXPANSION, REDUCTION };

struct QResult {
  MultiPoly poly;
  QMethod method = QMethod::REDUCTION;
  std::uint64_t admissible_pairs = 0;  // (A,B) pairs with non-zero weight
  std::vector<std::string> edge_labels;
};

inline constexpr std::size_t kExpansionGuard = 10;

// Sum over A, B; A-parallel with `threads` workers (0 picks the hardware count).
QResult q_by_expansion(const RibbonGraph& g, const RSequenceSpec& r,
                       std::size_t max_edges = kExpansionGuard, unsigned threads = 0);

struct ReductionOptions {
  std::vector<std::string> order;  // preferred edge order; the rest by label
  bool memoize = true;
};

QResult q_by_reduction(const RibbonGraph& g, const RSequenceSpec& r,
                       const ReductionOptions& opt = {});

// Swaps x<->y and z<->w on the edges of s.
QResult q_partial_dual_transform(const QResult& q, const EdgeSubset& s);

MultiPoly specialize_br(const RibbonGraph& g);
MultiPoly specialize_dimer(const RibbonGraph& g);
MultiPoly specialize_ising(const RibbonGraph& g);

}  // namespace rgp
