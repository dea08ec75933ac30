#include "rgp/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace rgp {

namespace {

bool numeric_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const char* var_prefix(VarKind k) {
  switch (k) {
    case VarKind::X: return "x";
    case VarKind::Y: return "y";
    case VarKind::Z: return "z";
    case VarKind::W: return "w";
    case VarKind::T: return "t";
    case VarKind::OMEGA: return "O";
    case VarKind::ALPHA: return "a";
    case VarKind::BETA: return "b";
    case VarKind::R: return "r";
    case VarKind::S: return "s";
  }
  return "?";
}

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "polynomial parse error at offset " + std::to_string(pos) + ": " + what);
}

}  // namespace

const char* var_kind_name(VarKind k) {
  switch (k) {
    case VarKind::X: return "X";
    case VarKind::Y: return "Y";
    case VarKind::Z: return "Z";
    case VarKind::W: return "W";
    case VarKind::T: return "T";
    case VarKind::OMEGA: return "OMEGA";
    case VarKind::ALPHA: return "ALPHA";
    case VarKind::BETA: return "BETA";
    case VarKind::R: return "R";
    case VarKind::S: return "S";
  }
  return "?";
}

std::string VarId::name() const {
  std::string out = var_prefix(kind);
  if (kind == VarKind::BETA || label.empty()) return out;
  return out + "_" + label;
}

bool operator==(const VarId& a, const VarId& b) {
  return a.kind == b.kind && a.label == b.label;
}

bool operator<(const VarId& a, const VarId& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.kind == VarKind::R) return numeric_less(a.label, b.label);
  return a.label < b.label;
}

// ---- Monomial ----

Monomial::Monomial(VarId v, std::uint32_t exp) {
  if (exp > 0) {
    factors_.emplace_back(std::move(v), exp);
    degree_ = exp;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (auto& f : factors) {
    if (f.second == 0) continue;
    m.degree_ += f.second;
    if (!m.factors_.empty() && m.factors_.back().first == f.first)
      m.factors_.back().second += f.second;
    else
      m.factors_.push_back(std::move(f));
  }
  return m;
}

std::uint32_t Monomial::exponent(const VarId& v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() ||
        (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
      m.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
      m.factors_.push_back(o.factors_[j++]);
    } else {
      m.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
      ++i;
      ++j;
    }
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
      ++i;
      ++j;
    } else {
      return fa[i].first < fb[j].first;
    }
  }
  return i < fa.size() && j == fb.size();
}

// ---- MultiPoly ----

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial(), Integer(c));
}

MultiPoly::MultiPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

MultiPoly MultiPoly::var(const VarId& v, std::uint32_t exp) {
  return monomial(Monomial(v, exp));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Integer& c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

Integer MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::set<VarId> MultiPoly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly scale(const MultiPoly& a, const Integer& c) {
  if (c == 0) return {};
  MultiPoly out;
  for (const auto& [m, k] : a.terms()) out.add_term(m, k * c);
  return out;
}

MultiPoly pow(const MultiPoly& a, std::uint32_t n) {
  MultiPoly result(1L), base = a;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& sub) {
  MultiPoly out;
  std::map<std::pair<VarId, std::uint32_t>, MultiPoly> powers;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = sub.find(v);
      if (it == sub.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, pow(it->second, e)).first;
      term *= pit->second;
      if (term.is_zero()) break;
    }
    if (term.is_zero()) continue;
    if (!kept.empty()) term *= MultiPoly::monomial(Monomial::from_factors(std::move(kept)));
    out += term;
  }
  return out;
}

Rational eval_rational(const MultiPoly& p, const std::map<VarId, Rational>& point) {
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = Rational(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end())
        throw Error(ErrorCode::MissingVariable, "no value for variable " + v.name());
      Rational f = 1;
      for (std::uint32_t k = 0; k < e; ++k) f *= it->second;
      term *= f;
    }
    sum += term;
  }
  return sum;
}

MultiPoly relabel(const MultiPoly& p, const std::map<std::string, std::string>& labels) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> fs = m.factors();
    for (auto& [v, e] : fs) {
      if (!v.edge_indexed()) continue;
      auto it = labels.find(v.label);
      if (it != labels.end()) v.label = it->second;
    }
    out.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return out;
}

MultiPoly filter_terms(const MultiPoly& p, const std::function<bool(const Monomial&)>& pred) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms())
    if (pred(m)) out.add_term(m, c);
  return out;
}

MultiPoly divide_exact(const MultiPoly& p, const Integer& d) {
  if (d == 0) throw Error(ErrorCode::AssertionFailure, "division by zero");
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (c % d != 0)
      throw Error(ErrorCode::AssertionFailure,
                  "coefficient " + c.str() + " not divisible by " + d.str());
    out.add_term(m, c / d);
  }
  return out;
}

MultiPoly divide_exact(const MultiPoly& p, const Monomial& d) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> fs = m.factors();
    for (const auto& [v, e] : d.factors()) {
      auto it = std::find_if(fs.begin(), fs.end(),
                             [&](const Monomial::Factor& f) { return f.first == v; });
      if (it == fs.end() || it->second < e)
        throw Error(ErrorCode::AssertionFailure, "monomial division is not exact");
      it->second -= e;
    }
    out.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return out;
}

// ---- text ----

std::string to_string_canonical(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    bool need_star = false;
    if (mag != 1 || m.is_one()) {
      out += mag.str();
      need_star = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (need_star) out += "*";
      out += v.name();
      if (e != 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

namespace {

VarId var_from_name(const std::string& name, std::size_t pos) {
  if (name == "b") return VarId::beta();
  if (name == "r") return VarId::r_uniform();
  if (name.size() < 3 || name[1] != '_') parse_fail(pos, "unknown variable '" + name + "'");
  std::string label = name.substr(2);
  switch (name[0]) {
    case 'x': return VarId::x(label);
    case 'y': return VarId::y(label);
    case 'z': return VarId::z(label);
    case 'w': return VarId::w(label);
    case 't': return VarId::t(label);
    case 'O': return VarId::omega(label);
    case 'a': return VarId::alpha(label);
    case 's': return VarId::s(label);
    case 'r':
      if (!std::all_of(label.begin(), label.end(), [](char ch) { return std::isdigit(ch); }))
        parse_fail(pos, "r index must be a number");
      return {VarKind::R, std::to_string(std::stoul(label))};
    default: parse_fail(pos, "unknown variable '" + name + "'");
  }
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (i_ != s_.size()) parse_fail(i_, std::string("unexpected '") + s_[i_] + "'");
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly p;
    bool neg = eat('-');
    if (!neg) eat('+');
    p = term();
    if (neg) p = -p;
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  MultiPoly term() {
    MultiPoly p = power();
    while (eat('*')) p *= power();
    return p;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) parse_fail(i_, "expected exponent");
      base = pow(base, static_cast<std::uint32_t>(std::stoul(std::string(s_.substr(start, i_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (i_ >= s_.size()) parse_fail(i_, "unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      MultiPoly p = expr();
      if (!eat(')')) parse_fail(i_, "expected ')'");
      return p;
    }
    if (c == '-') {
      ++i_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return MultiPoly(Integer(std::string(s_.substr(start, i_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '.' ||
              s_[i_] == '~'))
        ++i_;
      return MultiPoly::var(var_from_name(std::string(s_.substr(start, i_ - start)), start));
    }
    parse_fail(i_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// ---- JSON ----

std::string to_json_text(const MultiPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [v, e] : m.factors()) {
      nlohmann::json jv;
      jv["kind"] = var_kind_name(v.kind);
      if (v.kind == VarKind::BETA || (v.kind == VarKind::R && v.label.empty()))
        jv["label"] = nullptr;
      else if (v.kind == VarKind::R)
        jv["label"] = std::stoul(v.label);
      else
        jv["label"] = v.label;
      jv["exp"] = e;
      vars.push_back(std::move(jv));
    }
    arr.push_back({{"coeff", c.str()}, {"vars", std::move(vars)}});
  }
  return arr.dump();
}

MultiPoly from_json_text(std::string_view text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid polynomial JSON: ") + e.what());
  }
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "polynomial JSON must be an array");
  static const std::map<std::string, VarKind> kinds = {
      {"X", VarKind::X},       {"Y", VarKind::Y},         {"Z", VarKind::Z},
      {"W", VarKind::W},       {"T", VarKind::T},         {"OMEGA", VarKind::OMEGA},
      {"ALPHA", VarKind::ALPHA}, {"BETA", VarKind::BETA}, {"R", VarKind::R},
      {"S", VarKind::S}};
  MultiPoly out;
  try {
    for (const auto& term : arr) {
      std::vector<Monomial::Factor> fs;
      for (const auto& jv : term.at("vars")) {
        auto k = kinds.find(jv.at("kind").get<std::string>());
        if (k == kinds.end()) throw Error(ErrorCode::ParseError, "unknown variable kind");
        VarId v{k->second, {}};
        const auto& lab = jv.at("label");
        if (lab.is_number_unsigned() || lab.is_number_integer())
          v.label = std::to_string(lab.get<std::uint64_t>());
        else if (lab.is_string())
          v.label = lab.get<std::string>();
        fs.emplace_back(std::move(v), jv.at("exp").get<std::uint32_t>());
      }
      out.add_term(Monomial::from_factors(std::move(fs)),
                   Integer(term.at("coeff").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid polynomial JSON: ") + e.what());
  }
  return out;
}

}  // namespace rgp
