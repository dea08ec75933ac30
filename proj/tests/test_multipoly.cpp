#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace rgp;
using rgp::test::P;

namespace {

const std::vector<VarId> kVars = {VarId::t("e1"), VarId::omega("e1"), VarId::t("e2"),
                                  VarId::alpha("e1"), VarId::beta(), VarId::r(2)};

MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), coef(-6, 6), exp(0, 3), which(0, 5);
  MultiPoly p;
  for (int k = nterms(rng); k > 0; --k) {
    MultiPoly m(static_cast<long>(coef(rng)));
    if (rng() % 16 == 0) m = MultiPoly(Integer(1) << 90) * m;
    for (int j = which(rng) % 3; j >= 0; --j) m *= MultiPoly::var(kVars[static_cast<std::size_t>(which(rng))], static_cast<std::uint32_t>(exp(rng)));
    p += m;
  }
  return p;
}

std::map<VarId, Rational> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::map<VarId, Rational> pt;
  for (const auto& v : kVars) pt[v] = Rational(num(rng), den(rng));
  return pt;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + MultiPoly() == a);
    CHECK(a * MultiPoly(1L) == a);
    CHECK((a - a).is_zero());
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng), b = random_poly(rng);
    auto pt = random_point(rng);
    CHECK(eval_rational(a * b, pt) == eval_rational(a, pt) * eval_rational(b, pt));
    CHECK(eval_rational(a + b, pt) == eval_rational(a, pt) + eval_rational(b, pt));
  }
}

TEST_CASE("text and json round trips") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(rng);
    CHECK(parse_poly(to_string_canonical(a)) == a);
    CHECK(from_json_text(to_json_text(a)) == a);
    CHECK(to_string_canonical(parse_poly(to_string_canonical(a))) == to_string_canonical(a));
  }
}

TEST_CASE("zero and constants print") {
  CHECK(to_string_canonical(MultiPoly()) == "0");
  CHECK(to_string_canonical(MultiPoly(-3L)) == "-3");
  CHECK(parse_poly("0").is_zero());
}

TEST_CASE("parser expands products and powers") {
  CHECK(P("(1+t1)^2") == P("1+2*t1+t1^2"));
  CHECK(P("2*(t1-O1)*(t1+O1)") == P("2*t1^2-2*O1^2"));
  CHECK(P("-(t1)") == P("-t1"));
  CHECK(parse_poly("b^2 + r_3") == MultiPoly::var(VarId::beta(), 2) + MultiPoly::var(VarId::r(3)));
}

TEST_CASE("malformed text is a parse error") {
  for (const char* bad : {"", "t_e1 +", "(t_e1", "t_e1^", "q_e1", "2**t_e1", "t_e1)"}) {
    try {
      parse_poly(bad);
      FAIL("accepted: " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("substitution") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng);
    std::map<VarId, MultiPoly> id;
    for (const auto& v : kVars) id[v] = MultiPoly::var(v);
    CHECK(substitute(a, id) == a);
    CHECK(substitute(a, {}) == a);
    // Substituting constants agrees with evaluation.
    auto pt = random_point(rng);
    std::map<VarId, MultiPoly> ints;
    std::map<VarId, Rational> ipt;
    for (const auto& v : kVars) {
      long k = static_cast<long>(rng() % 7) - 3;
      ints[v] = MultiPoly(k);
      ipt[v] = Rational(k);
    }
    auto c = substitute(a, ints);
    CHECK(c.variables().empty());
    CHECK(eval_rational(c, {}) == eval_rational(a, ipt));
  }
}

TEST_CASE("exact division and powers") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng);
    CHECK(divide_exact(scale(a, 12), Integer(12)) == a);
    CHECK(pow(a, 3) == a * a * a);
    CHECK(pow(a, 0) == MultiPoly(1L));
    auto m = Monomial(VarId::t("e1"), 2) * Monomial(VarId::beta());
    CHECK(divide_exact(a * MultiPoly::monomial(m), m) == a);
  }
  CHECK_THROWS_AS(divide_exact(P("3*t1"), Integer(2)), Error);
  CHECK_THROWS_AS(divide_exact(P("t1"), Monomial(VarId::t("e2"))), Error);
}

TEST_CASE("relabel and filter") {
  auto p = P("t1*O2 + 3*t2^2");
  CHECK(relabel(p, {{"e1", "e2"}, {"e2", "e1"}}) == P("t2*O1 + 3*t1^2"));
  auto q = filter_terms(p, [](const Monomial& m) { return m.degree() == 2 && m.exponent(VarId::t("e2")) == 2; });
  CHECK(q == P("3*t2^2"));
}

TEST_CASE("big coefficients stay exact") {
  MultiPoly x = P("1+t1");
  auto p = pow(x, 80);
  Integer binom = 1;
  for (int k = 0; k < 40; ++k) binom = binom * (80 - k) / (k + 1);
  CHECK(p.coefficient(Monomial(VarId::t("e1"), 40)) == binom);
  CHECK(binom > Integer(1) << 70);
}
