#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rgp/error.hpp"

namespace rgp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// S is an auxiliary kind for scratch symbols (e.g. scaling parameters in tests).
enum class VarKind : std::uint8_t { X, Y, Z, W, T, OMEGA, ALPHA, BETA, R, S };

const char* var_kind_name(VarKind k);

struct VarId {
  VarKind kind = VarKind::X;
  std::string label;  // edge label; decimal index for R ("" is the uniform r); empty for BETA

  static VarId x(std::string e) { return {VarKind::X, std::move(e)}; }
  static VarId y(std::string e) { return {VarKind::Y, std::move(e)}; }
  static VarId z(std::string e) { return {VarKind::Z, std::move(e)}; }
  static VarId w(std::string e) { return {VarKind::W, std::move(e)}; }
  static VarId t(std::string e) { return {VarKind::T, std::move(e)}; }
  static VarId omega(std::string e) { return {VarKind::OMEGA, std::move(e)}; }
  static VarId alpha(std::string e) { return {VarKind::ALPHA, std::move(e)}; }
  static VarId beta() { return {VarKind::BETA, {}}; }
  static VarId r(std::size_t n) { return {VarKind::R, std::to_string(n)}; }
  static VarId r_uniform() { return {VarKind::R, {}}; }
  static VarId s(std::string name) { return {VarKind::S, std::move(name)}; }

  bool edge_indexed() const { return kind <= VarKind::ALPHA; }
  std::string name() const;
};

bool operator==(const VarId& a, const VarId& b);
bool operator<(const VarId& a, const VarId& b);

class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exp = 1);
  // Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(const VarId& v) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// Graded-lex order, greatest first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Integer, GradedLexGreater>;

  MultiPoly() = default;
  MultiPoly(long c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly var(const VarId& v, std::uint32_t exp = 1);
  static MultiPoly monomial(const Monomial& m, const Integer& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  std::set<VarId> variables() const;

  void add_term(const Monomial& m, const Integer& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(MultiPoly a);
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const Integer& c);
MultiPoly pow(const MultiPoly& a, std::uint32_t n);

// Simultaneous substitution; unmapped variables are left alone.
MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& m);
Rational eval_rational(const MultiPoly& p, const std::map<VarId, Rational>& point);

// Renames the labels of edge-indexed variables; labels not in the map stay.
MultiPoly relabel(const MultiPoly& p, const std::map<std::string, std::string>& labels);
// Keeps the terms whose monomial satisfies pred.
MultiPoly filter_terms(const MultiPoly& p, const std::function<bool(const Monomial&)>& pred);
// Throws AssertionFailure unless every coefficient is divisible by d.
MultiPoly divide_exact(const MultiPoly& p, const Integer& d);
// Throws AssertionFailure unless m divides every monomial.
MultiPoly divide_exact(const MultiPoly& p, const Monomial& m);

std::string to_string_canonical(const MultiPoly& p);
// Accepts the canonical text plus parentheses, unary minus and '^' on any factor.
MultiPoly parse_poly(std::string_view text);

std::string to_json_text(const MultiPoly& p);
MultiPoly from_json_text(std::string_view text);

}  // namespace rgp
