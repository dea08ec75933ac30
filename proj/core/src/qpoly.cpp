#include "rgp/qpoly.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_map>

namespace rgp {

MultiPoly RSequenceSpec::value(std::size_t n) const {
  switch (rule) {
    case Rule::SYMBOLIC: return MultiPoly::var(VarId::r(n));
    case Rule::EVEN_TWO_ODD_ZERO: return n % 2 == 0 ? 2L : 0L;
    case Rule::ODD_TWO_EVEN_ZERO: return n % 2 == 1 ? 2L : 0L;
    case Rule::DELTA_ONE: return n == 1 ? 1L : 0L;
    case Rule::CONSTANT: return constant;
  }
  return {};
}

std::string RSequenceSpec::key() const {
  switch (rule) {
    case Rule::SYMBOLIC: return "sym";
    case Rule::EVEN_TWO_ODD_ZERO: return "even2";
    case Rule::ODD_TWO_EVEN_ZERO: return "odd2";
    case Rule::DELTA_ONE: return "delta1";
    case Rule::CONSTANT: return "const:" + to_string_canonical(constant);
  }
  return "?";
}

namespace {

long numeric_value(RSequenceSpec::Rule rule, std::size_t n) {
  switch (rule) {
    case RSequenceSpec::Rule::EVEN_TWO_ODD_ZERO: return n % 2 == 0 ? 2 : 0;
    case RSequenceSpec::Rule::ODD_TWO_EVEN_ZERO: return n % 2 == 1 ? 2 : 0;
    case RSequenceSpec::Rule::DELTA_ONE: return n == 1 ? 1 : 0;
    default: return 0;
  }
}

struct EdgeVars {
  Monomial x, y, z, w;
};

std::vector<EdgeVars> edge_vars(const std::vector<std::string>& labels) {
  std::vector<EdgeVars> out;
  for (const auto& l : labels)
    out.push_back({Monomial(VarId::x(l)), Monomial(VarId::y(l)), Monomial(VarId::z(l)),
                   Monomial(VarId::w(l))});
  return out;
}

struct Partial {
  MultiPoly poly;
  std::uint64_t count = 0;
};

// Contribution of all B for one fixed A.
void expand_one_a(const RibbonGraph& g, const std::vector<std::string>& labels,
                  const std::vector<EdgeVars>& vars, const RSequenceSpec& r, std::uint64_t a,
                  Partial& out) {
  const std::size_t e = labels.size();
  EdgeSubset sub;
  for (std::size_t k = 0; k < e; ++k)
    if (a >> k & 1U) sub.push_back(labels[k]);
  const RibbonGraph ga = partial_dual(g, sub);
  const std::size_t nv = ga.vertices().size(), bare = ga.bare_vertices();
  std::vector<std::size_t> base(nv);
  for (std::size_t v = 0; v < nv; ++v) base[v] = ga.flags_at(v);
  std::vector<std::pair<std::size_t, std::size_t>> ends(e);
  for (std::size_t k = 0; k < e; ++k) {
    Cross c = ga.edges()[ga.edge_index(labels[k])].crosses[0];
    ends[k] = {ga.vertex_of(c), ga.vertex_of(ga.map().sigma1(c))};
  }
  const bool symbolic = r.rule == RSequenceSpec::Rule::SYMBOLIC;
  const bool constant = r.rule == RSequenceSpec::Rule::CONSTANT;
  MultiPoly local;
  std::vector<std::size_t> deg(nv);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << e); ++b) {
    deg = base;
    for (std::size_t k = 0; k < e; ++k) {
      if (b >> k & 1U) {
        ++deg[ends[k].first];
        ++deg[ends[k].second];
      }
    }
    Integer coeff = 1;
    std::vector<Monomial::Factor> factors;
    if (symbolic) {
      std::map<std::size_t, std::uint32_t> hist;
      for (auto d : deg) ++hist[d];
      if (bare) hist[0] += static_cast<std::uint32_t>(bare);
      for (auto [d, c] : hist) factors.emplace_back(VarId::r(d), c);
    } else if (!constant) {
      for (auto d : deg) coeff *= numeric_value(r.rule, d);
      for (std::size_t i = 0; i < bare; ++i) coeff *= numeric_value(r.rule, 0);
      if (coeff == 0) continue;
    }
    Monomial m = Monomial::from_factors(std::move(factors));
    for (std::size_t k = 0; k < e; ++k) {
      bool in_a = a >> k & 1U, in_b = b >> k & 1U;
      const auto& ev = vars[k];
      m = m * (in_a ? (in_b ? ev.z : ev.y) : (in_b ? ev.w : ev.x));
    }
    local.add_term(m, coeff);
    ++out.count;
  }
  if (constant) {
    MultiPoly weight = pow(r.constant, static_cast<std::uint32_t>(nv + bare));
    if (weight.is_zero()) {
      out.count -= std::uint64_t{1} << e;
      return;
    }
    local *= weight;
  }
  out.poly += local;
}

}  // namespace

QResult q_by_expansion(const RibbonGraph& g, const RSequenceSpec& r, std::size_t max_edges,
                       unsigned threads) {
  const std::size_t e = g.num_edges();
  if (e > max_edges)
    throw Error(ErrorCode::TooLarge, "expansion needs e <= " + std::to_string(max_edges) +
                                         ", got " + std::to_string(e));
  const auto labels = g.edge_labels();
  const auto vars = edge_vars(labels);
  const std::uint64_t total = std::uint64_t{1} << e;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<Partial> parts(threads);
  auto work = [&](unsigned t) {
    for (std::uint64_t a = t; a < total; a += threads) expand_one_a(g, labels, vars, r, a, parts[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  QResult res;
  res.method = QMethod::EXPANSION;
  res.edge_labels = labels;
  for (auto& p : parts) {
    res.poly += p.poly;
    res.admissible_pairs += p.count;
  }
  return res;
}

namespace {

class Reducer {
 public:
  Reducer(const RSequenceSpec& r, const ReductionOptions& opt) : r_(r), opt_(opt) {}

  Partial run(const RibbonGraph& g) {
    if (g.num_edges() == 0) return terminal(g);
    std::string key;
    std::map<std::string, std::string> to_canon, from_canon;
    if (opt_.memoize) {
      auto cf = canonical_form_with_order(g);
      key = cf.key;
      for (Cross x : cf.order) {
        int e = g.edge_of(x);
        if (e < 0) continue;
        const auto& label = g.edges()[static_cast<std::size_t>(e)].label;
        if (to_canon.count(label)) continue;
        std::string c = "#" + std::to_string(to_canon.size());
        to_canon[label] = c;
        from_canon[c] = label;
      }
      auto it = memo_.find(key);
      if (it != memo_.end()) return {relabel(it->second.poly, from_canon), it->second.count};
    }
    const std::string e = pick_edge(g);
    const RibbonGraph gd = partial_dual(g, {e});
    const Partial p1 = run(delete_edge(g, e));
    const Partial p2 = run(delete_edge(gd, e));
    const Partial p3 = run(cut_edge(gd, e));
    const Partial p4 = run(cut_edge(g, e));
    Partial out;
    out.poly = MultiPoly::var(VarId::x(e)) * p1.poly + MultiPoly::var(VarId::y(e)) * p2.poly +
               MultiPoly::var(VarId::z(e)) * p3.poly + MultiPoly::var(VarId::w(e)) * p4.poly;
    out.count = p1.count + p2.count + p3.count + p4.count;
    if (opt_.memoize) memo_.emplace(key, Partial{relabel(out.poly, to_canon), out.count});
    return out;
  }

 private:
  Partial terminal(const RibbonGraph& g) const {
    MultiPoly p(1L);
    for (std::size_t v = 0; v < g.vertices().size(); ++v) p *= r_.value(g.flags_at(v));
    for (std::size_t i = 0; i < g.bare_vertices(); ++i) p *= r_.value(0);
    return {p, p.is_zero() ? 0U : 1U};
  }

  std::string pick_edge(const RibbonGraph& g) const {
    for (const auto& l : opt_.order)
      if (g.find_edge(l)) return l;
    return g.edges().front().label;
  }

  const RSequenceSpec& r_;
  const ReductionOptions& opt_;
  std::unordered_map<std::string, Partial> memo_;
};

}  // namespace

QResult q_by_reduction(const RibbonGraph& g, const RSequenceSpec& r, const ReductionOptions& opt) {
  Reducer red(r, opt);
  Partial p = red.run(g);
  QResult res;
  res.method = QMethod::REDUCTION;
  res.poly = std::move(p.poly);
  res.admissible_pairs = p.count;
  res.edge_labels = g.edge_labels();
  return res;
}

QResult q_partial_dual_transform(const QResult& q, const EdgeSubset& s) {
  std::map<VarId, MultiPoly> sub;
  for (const auto& e : s) {
    if (std::find(q.edge_labels.begin(), q.edge_labels.end(), e) == q.edge_labels.end())
      throw Error(ErrorCode::UnknownEdge, "unknown edge '" + e + "'");
    sub[VarId::x(e)] = MultiPoly::var(VarId::y(e));
    sub[VarId::y(e)] = MultiPoly::var(VarId::x(e));
    sub[VarId::z(e)] = MultiPoly::var(VarId::w(e));
    sub[VarId::w(e)] = MultiPoly::var(VarId::z(e));
  }
  QResult out = q;
  out.poly = substitute(q.poly, sub);
  return out;
}

namespace {

MultiPoly specialize(const RibbonGraph& g, const RSequenceSpec& r, long x, long y, long z,
                     bool keep_x, bool keep_w) {
  std::map<VarId, MultiPoly> sub;
  for (const auto& e : g.edge_labels()) {
    if (!keep_x) sub[VarId::x(e)] = x;
    sub[VarId::y(e)] = y;
    sub[VarId::z(e)] = z;
    if (!keep_w) sub[VarId::w(e)] = 0L;
  }
  return substitute(q_by_reduction(g, r).poly, sub);
}

}  // namespace

MultiPoly specialize_br(const RibbonGraph& g) {
  // x = 1, z = w = 0, y kept, uniform r.
  std::map<VarId, MultiPoly> sub;
  for (const auto& e : g.edge_labels()) {
    sub[VarId::x(e)] = 1L;
    sub[VarId::z(e)] = 0L;
    sub[VarId::w(e)] = 0L;
  }
  auto r = RSequenceSpec::constant_value(MultiPoly::var(VarId::r_uniform()));
  return substitute(q_by_reduction(g, r).poly, sub);
}

MultiPoly specialize_dimer(const RibbonGraph& g) {
  return specialize(g, RSequenceSpec::delta_one(), 1, 0, 0, false, true);
}

MultiPoly specialize_ising(const RibbonGraph& g) {
  return specialize(g, RSequenceSpec::even_two_odd_zero(), 0, 0, 0, true, true);
}

}  // namespace rgp
