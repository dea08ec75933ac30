#pragma once

#include <map>
#include <string>
#include <utility>

#include "rgp/graph_ops.hpp"
#include "rgp/map.hpp"
#include "rgp/multipoly.hpp"
#include "rgp/qpoly.hpp"

namespace rgp {

enum class HUMethod { REDUCTION, EXPANSION, CRITICAL };

// x -> t, y -> O, z -> O t^2, w -> t O^2 on every edge label.
MultiPoly hu_from_q(const MultiPoly& q, const std::vector<std::string>& edge_labels);
MultiPoly hu(const RibbonGraph& g, HUMethod method = HUMethod::REDUCTION);

// Exchanges t_e and O_e for e in s.
MultiPoly swap_omega_t(const MultiPoly& p, const EdgeSubset& s);
bool hu_partial_dual_check(const RibbonGraph& g, const EdgeSubset& s);

// Closed forms; NotATree / NotACycle when the shape does not fit.
MultiPoly hu_tree(const RibbonGraph& g);
MultiPoly hu_cycle(const RibbonGraph& g);

// Face product at O = 1.
MultiPoly hu_critical(const RibbonGraph& g);
// Rebuilds HU from the monomials of hu_critical; throws AssertionFailure if a
// critical coefficient is not matched by the enumerated vertex weights.
MultiPoly hu_via_critical_algorithm(const RibbonGraph& g);

struct QuadraticForm {
  std::map<std::string, MultiPoly> diag;                             // coefficient of x_i^2
  std::map<std::pair<std::string, std::string>, MultiPoly> sym;      // coefficient of x_i.x_j, i < j
  std::map<std::pair<std::string, std::string>, MultiPoly> antisym;  // coefficient of x_i.Jx_j
};

inline const std::string kHvEdge = "~hv";

// sym and antisym hold the full coefficients (twice a_ij and b_ij); the extra
// flag of the antisymmetric graph goes right after i counterclockwise.
QuadraticForm hv(const RibbonGraph& g);
bool hv_partial_dual_check(const RibbonGraph& g, const EdgeSubset& s);

// Sum over quasi-trees A of b^(|A|-v+1) prod_{e not in A} a_e.
MultiPoly symanzik_u(const RibbonGraph& g);
// The same polynomial read off Q with symbolic r: x -> a, y -> b, z = w = 0,
// terms with exactly one r_0, divided by r_0 b^(v-1).
MultiPoly symanzik_u_via_q(const RibbonGraph& g);
// Q(2a/theta, 1, 0, 0, r_1 = 1) scaled by (theta/2)^(e-v+1), written in b = theta/2.
MultiPoly symanzik_u_delta_one(const RibbonGraph& g);
bool symanzik_dual_check(const RibbonGraph& g, const EdgeSubset& s);
MultiPoly symanzik_commutative_limit(const MultiPoly& u);
MultiPoly spanning_tree_polynomial(const RibbonGraph& g);

// lim theta^-v HU(theta O / 2, t) = scaled / 2^vertices.
struct CommutativeLimit {
  MultiPoly scaled;
  std::size_t vertices = 0;
};

CommutativeLimit hu_commutative_limit(const RibbonGraph& g);
// Lowest b-degree part of HU(b O, t); that degree must be v(G).
CommutativeLimit hu_commutative_limit_oracle(const RibbonGraph& g);

}  // namespace rgp
