#include "rgp/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rgp {

namespace {

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool looks_raw(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    std::string t = trim(strip_comment(line));
    if (t.empty()) continue;
    return t.rfind("crosses", 0) == 0;
  }
  return false;
}

}  // namespace

RibbonGraph from_rotation_system(const RotationSpec& spec) {
  std::map<std::string, std::size_t> half_edge_owner;  // half-edge id -> edge index
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& e = spec.edges[i];
    if (!edge_ids.insert(e.id).second)
      throw Error(ErrorCode::DuplicateId, "edge id '" + e.id + "' declared twice");
    if (e.half_edges.size() != 2)
      throw Error(ErrorCode::OddIncidence, "edge '" + e.id + "' must have exactly two half-edges, got " +
                                               std::to_string(e.half_edges.size()));
    if (e.half_edges[0] == e.half_edges[1])
      throw Error(ErrorCode::OddIncidence, "edge '" + e.id + "' uses half-edge '" +
                                               e.half_edges[0] + "' twice");
    for (const auto& h : e.half_edges)
      if (!half_edge_owner.emplace(h, i).second)
        throw Error(ErrorCode::DuplicateId, "half-edge '" + h + "' belongs to two edges");
  }

  std::set<std::string> vertex_ids, seen;
  std::vector<std::string> items;  // half-ribbons in order
  std::vector<std::size_t> vertex_start;
  std::size_t bare = 0;
  for (const auto& v : spec.vertices) {
    if (!vertex_ids.insert(v.id).second)
      throw Error(ErrorCode::DuplicateId, "vertex id '" + v.id + "' declared twice");
    if (v.items.empty()) ++bare;
    vertex_start.push_back(items.size());
    for (const auto& it : v.items) {
      if (!seen.insert(it).second)
        throw Error(ErrorCode::DuplicateId, "'" + it + "' appears twice in the rotations");
      items.push_back(it);
    }
  }
  vertex_start.push_back(items.size());

  for (const auto& [h, owner] : half_edge_owner)
    if (!seen.count(h))
      throw Error(ErrorCode::DanglingHalfEdge, "half-edge '" + h + "' of edge '" +
                                                   spec.edges[owner].id + "' is in no rotation");
  std::set<std::string> declared_flags;
  for (const auto& f : spec.flags) {
    if (!declared_flags.insert(f).second)
      throw Error(ErrorCode::DuplicateId, "flag '" + f + "' declared twice");
    if (half_edge_owner.count(f))
      throw Error(ErrorCode::DuplicateId, "'" + f + "' is both a flag and a half-edge");
    if (!seen.count(f)) throw Error(ErrorCode::DanglingHalfEdge, "flag '" + f + "' is in no rotation");
  }
  for (const auto& it : items)
    if (!half_edge_owner.count(it) && edge_ids.count(it))
      throw Error(ErrorCode::DuplicateId, "flag '" + it + "' clashes with an edge id");

  const std::size_t n = 2 * items.size();
  Perm s0(n), th(n), s1(n);
  std::vector<std::string> labels(n);
  std::map<std::string, std::size_t> ribbon_of;
  for (std::size_t r = 0; r < items.size(); ++r) ribbon_of[items[r]] = r;

  for (std::size_t v = 0; v + 1 < vertex_start.size(); ++v) {
    std::size_t b = vertex_start[v], e = vertex_start[v + 1];
    for (std::size_t r = b; r < e; ++r) {
      std::size_t next = r + 1 == e ? b : r + 1;
      s0[2 * r] = static_cast<Cross>(2 * next);
      s0[2 * next + 1] = static_cast<Cross>(2 * r + 1);
    }
  }
  for (std::size_t r = 0; r < items.size(); ++r) {
    th[2 * r] = static_cast<Cross>(2 * r + 1);
    th[2 * r + 1] = static_cast<Cross>(2 * r);
    auto owner = half_edge_owner.find(items[r]);
    if (owner == half_edge_owner.end()) {
      s1[2 * r] = static_cast<Cross>(2 * r);
      s1[2 * r + 1] = static_cast<Cross>(2 * r + 1);
      labels[2 * r] = labels[2 * r + 1] = items[r];
    } else {
      const auto& edge = spec.edges[owner->second];
      labels[2 * r] = labels[2 * r + 1] = edge.id;
    }
  }
  for (const auto& e : spec.edges) {
    auto p = static_cast<Cross>(2 * ribbon_of[e.half_edges[0]]);
    auto q = static_cast<Cross>(2 * ribbon_of[e.half_edges[1]]);
    if (e.twisted) {
      s1[p] = q, s1[q] = p;
      s1[p + 1] = q + 1, s1[q + 1] = p + 1;
    } else {
      s1[p] = q + 1, s1[q + 1] = p;
      s1[p + 1] = q, s1[q] = p + 1;
    }
  }
  return RibbonGraph(CombinatorialMap(std::move(s0), std::move(th), std::move(s1)), std::move(labels),
                     bare);
}

RotationSpec parse_rotation_text(std::string_view text) {
  RotationSpec spec;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto head = split_ws(line.substr(0, line.find(':')));
    if (head.empty()) fail_line(lineno, "missing keyword");
    const std::string& kw = head[0];
    if (kw == "flag") {
      if (line.find(':') != std::string::npos) fail_line(lineno, "flag lines take no ':'");
      if (head.size() < 2) fail_line(lineno, "flag line needs an id");
      for (std::size_t i = 1; i < head.size(); ++i) spec.flags.push_back(head[i]);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) fail_line(lineno, "expected ':' after " + kw + " id");
    if (head.size() != 2) fail_line(lineno, "expected '" + kw + " <id> :'");
    auto body = split_ws(line.substr(colon + 1));
    if (kw == "vertex") {
      spec.vertices.push_back({head[1], body});
    } else if (kw == "edge") {
      RotationSpec::EdgeSpec e;
      e.id = head[1];
      for (const auto& tok : body) {
        if (tok.rfind("twist=", 0) == 0) {
          std::string val = tok.substr(6);
          if (val != "0" && val != "1") fail_line(lineno, "twist must be 0 or 1");
          e.twisted = val == "1";
        } else {
          e.half_edges.push_back(tok);
        }
      }
      spec.edges.push_back(std::move(e));
    } else {
      fail_line(lineno, "unknown keyword '" + kw + "'");
    }
  }
  return spec;
}

CombinatorialMap parse_raw_map(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  long n = -1;
  std::map<std::string, Perm> perms;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail_line(lineno, "expected 'name: value'");
    std::string key = trim(line.substr(0, colon));
    std::string val = trim(line.substr(colon + 1));
    if (key == "crosses") {
      try {
        std::size_t used = 0;
        n = std::stol(val, &used);
        if (used != val.size() || n < 0) throw std::invalid_argument("");
      } catch (const std::exception&) {
        fail_line(lineno, "invalid cross count '" + val + "'");
      }
      if (n % 2 != 0) fail_line(lineno, "cross count must be even");
      continue;
    }
    if (key != "sigma0" && key != "theta" && key != "sigma1")
      fail_line(lineno, "unknown key '" + key + "'");
    if (n < 0) fail_line(lineno, "'crosses:' must come first");
    if (perms.count(key)) fail_line(lineno, key + " given twice");
    Perm p(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<Cross>(i);
    std::vector<bool> used(p.size(), false);
    std::size_t i = 0;
    while (i < val.size()) {
      if (std::isspace(static_cast<unsigned char>(val[i]))) {
        ++i;
        continue;
      }
      if (val[i] != '(') fail_line(lineno, "expected '(' in " + key);
      auto close = val.find(')', i);
      if (close == std::string::npos) fail_line(lineno, "unclosed cycle in " + key);
      std::string inner = val.substr(i + 1, close - i - 1);
      std::replace(inner.begin(), inner.end(), ',', ' ');
      std::vector<Cross> cyc;
      for (const auto& tok : split_ws(inner)) {
        long c = 0;
        try {
          std::size_t used_chars = 0;
          c = std::stol(tok, &used_chars);
          if (used_chars != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          fail_line(lineno, "invalid cross '" + tok + "'");
        }
        if (c < 1 || c > n) fail_line(lineno, "cross " + tok + " out of range 1.." + std::to_string(n));
        auto x = static_cast<Cross>(c - 1);
        if (used[x]) fail_line(lineno, "cross " + tok + " repeated in " + key);
        used[x] = true;
        cyc.push_back(x);
      }
      if (cyc.empty()) fail_line(lineno, "empty cycle in " + key);
      for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
      i = close + 1;
    }
    perms[key] = std::move(p);
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing 'crosses:' line");
  for (const char* k : {"sigma0", "theta", "sigma1"})
    if (!perms.count(k)) throw Error(ErrorCode::ParseError, std::string("missing '") + k + ":' line");
  std::vector<std::uint32_t> ids(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<std::uint32_t>(i + 1);
  return CombinatorialMap(perms["sigma0"], perms["theta"], perms["sigma1"], std::move(ids));
}

RibbonGraph parse_graph_text(std::string_view text) {
  if (looks_raw(text)) return derive_structure(parse_raw_map(text));
  return from_rotation_system(parse_rotation_text(text));
}

RibbonGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

std::string format_rotation_system(const RibbonGraph& g) {
  const auto& m = g.map();
  const auto lo = local_orientation(g);
  std::vector<std::string> name(m.size());
  std::map<int, int> halves_named;  // edge index -> half-edges named so far
  std::ostringstream out;
  std::vector<std::vector<Cross>> rotations;
  for (const auto& v : g.vertices()) {
    std::vector<Cross> rot = lo.positive[v.cycle.front()] ? v.cycle : v.conjugate;
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    rotations.push_back(rot);
  }
  // Name half-edges by first appearance so loops and bridges read naturally.
  for (const auto& rot : rotations) {
    for (Cross x : rot) {
      int e = g.edge_of(x);
      if (e < 0) {
        name[x] = g.flags()[static_cast<std::size_t>(g.flag_of(x))].label;
      } else {
        name[x] = g.edges()[static_cast<std::size_t>(e)].label + "." + std::to_string(halves_named[e]++);
      }
    }
  }
  std::size_t vid = 0;
  for (const auto& rot : rotations) {
    out << "vertex v" << ++vid << " :";
    for (Cross x : rot) out << ' ' << name[x];
    out << '\n';
  }
  for (std::size_t b = 0; b < g.bare_vertices(); ++b) out << "vertex v" << ++vid << " :\n";
  for (const auto& e : g.edges()) {
    std::vector<Cross> pos;
    for (Cross x : e.crosses)
      if (lo.positive[x]) pos.push_back(x);
    // Each half-ribbon has exactly one cross on the chosen cycle of its vertex.
    Cross a = pos[0], a2 = pos[1];
    std::string na = name[a], nb = name[a2];
    if (na > nb) std::swap(na, nb);
    bool twisted = m.sigma1(a) == a2;
    out << "edge " << e.label << " : " << na << ' ' << nb;
    if (twisted) out << " twist=1";
    out << '\n';
  }
  for (const auto& f : g.flags()) out << "flag " << f.label << '\n';
  return out.str();
}

std::string format_raw_map(const RibbonGraph& g) {
  const auto& m = g.map();
  auto cycles = [&](const Perm& p) {
    std::ostringstream s;
    for (const auto& c : permutation_cycles(p)) {
      s << '(';
      for (std::size_t i = 0; i < c.size(); ++i) s << (i ? "," : "") << c[i] + 1;
      s << ')';
    }
    return s.str();
  };
  std::ostringstream out;
  out << "crosses: " << m.size() << '\n';
  out << "sigma0: " << cycles(m.sigma0_perm()) << '\n';
  out << "theta: " << cycles(m.theta_perm()) << '\n';
  out << "sigma1: " << cycles(m.sigma1_perm()) << '\n';
  return out.str();
}

std::string format_dot(const RibbonGraph& g) {
  const auto& m = g.map();
  const auto lo = local_orientation(g);
  std::ostringstream out;
  out << "graph ribbon {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) out << "  v" << v + 1 << ";\n";
  for (const auto& e : g.edges()) {
    Cross a = e.crosses[0];
    Cross b = m.sigma1(a);
    bool twisted = lo.positive[a] == lo.positive[b];
    out << "  v" << g.vertex_of(a) + 1 << " -- v" << g.vertex_of(b) + 1 << " [label=\"" << e.label
        << (twisted ? " (twist)\", style=dashed" : "\"") << "];\n";
  }
  for (const auto& f : g.flags()) {
    out << "  \"" << f.label << "\" [shape=point];\n";
    out << "  v" << g.vertex_of(f.crosses[0]) + 1 << " -- \"" << f.label << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rgp
