#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conc/cyclotomic.hpp"
#include "conc/factor.hpp"
#include "conc/knot_table.hpp"
#include "helpers.hpp"

using namespace conc;
using testing_helpers::P;
using testing_helpers::uniform;

TEST_CASE("canonical form trims zeros and tracks the low exponent") {
  LaurentPoly f = from_integers({0, 0, 3, 0, -1}, -2);
  CHECK(f.low() == 0);
  CHECK(f.high() == 2);
  CHECK(f == P("3 - t^2"));
  CHECK((P("t - t")).is_zero());
  CHECK(P("t^-1 - 1 + t").span() == 2);
}

TEST_CASE("arithmetic examples") {
  CHECK(equal_up_to_units(reciprocal_conjugate(P("2 - t")), P("-1 + 2*t")));
  CHECK(P("1 - t + t^2") * LaurentPoly::constant(Rational(1)) == P("1 - t + t^2"));
  CHECK(P("1 - t + t^2") * P("3 - 5*t + 3*t^2") == P("3 - 8*t + 11*t^2 - 8*t^3 + 3*t^4"));
  CHECK(-P("1 - t") == P("-1 + t"));
}

TEST_CASE("string form round trips") {
  for (const char* s : {"t^-1 - 1 + t", "2 - 5*t + 2*t^2", "-3*t^-2 + 1/2*t", "1", "0"}) {
    LaurentPoly f = P(s);
    CHECK(P(to_string(f)) == f);
  }
  CHECK(to_string(P("1 - 3*t + t^2")) == "1 - 3*t + t^2");
  CHECK_THROWS_AS(P("1 + * t"), ParseError);
}

TEST_CASE("span is additive under multiplication") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> a, b;
    for (long i = 0, n = uniform(1, 6); i < n; ++i) a.push_back(uniform(-5, 5));
    for (long i = 0, n = uniform(1, 6); i < n; ++i) b.push_back(uniform(-5, 5));
    LaurentPoly f = from_integers(a, uniform(-3, 3)), g = from_integers(b, uniform(-3, 3));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).span() == f.span() + g.span());
    CHECK((f * g).low() == f.low() + g.low());
  }
}

TEST_CASE("factorization examples") {
  Factorization f = factor_over_rationals(P("2 - 5*t + 2*t^2"));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].poly.degree() == 1);
  CHECK(f.factors[1].poly.degree() == 1);
  CHECK(f.expand() == P("2 - 5*t + 2*t^2"));
  // Linear factors are 2t - 1 and t - 2 in some order.
  CHECK(((f.factors[0].poly == IntPoly{-1, 2}) || (f.factors[0].poly == IntPoly{-2, 1})));

  Factorization g = factor_over_rationals(P("1 - 3*t + t^2"));
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].multiplicity == 1);

  Factorization one = factor_over_rationals(P("1"));
  CHECK(one.factors.empty());
  CHECK(one.constant == 1);

  CHECK_THROWS_AS(factor_over_rationals(LaurentPoly()), DomainError);
}

TEST_CASE("factorization re-multiplies exactly on random products of table polynomials") {
  const KnotTable& table = shipped_table(Scope::nine);
  const auto& rec = table.records();
  for (int trial = 0; trial < 60; ++trial) {
    LaurentPoly prod = LaurentPoly::monomial(Rational(uniform(1, 3) * (uniform(0, 1) ? 1 : -1)), uniform(-4, 4));
    for (long k = 0, n = uniform(1, 3); k < n; ++k)
      prod = prod * table.alexander(rec[static_cast<std::size_t>(uniform(0, static_cast<long>(rec.size()) - 1))].name);
    Factorization f = factor_over_rationals(prod);
    CHECK(f.expand() == prod);
    for (const auto& fac : f.factors) {
      Factorization again = factor_over_rationals(LaurentPoly(to_rational(fac.poly)));
      CHECK(again.factors.size() == 1);
      CHECK(again.factors[0].multiplicity == 1);
      CHECK(content(fac.poly) == 1);
    }
  }
}

TEST_CASE("factor ordering is deterministic") {
  LaurentPoly a = P("1 - t + t^2") * P("2 - t") * P("1 - 3*t + t^2");
  LaurentPoly b = P("1 - 3*t + t^2") * P("2 - t") * P("1 - t + t^2");
  auto fa = factor_over_rationals(a), fb = factor_over_rationals(b);
  REQUIRE(fa.factors.size() == fb.factors.size());
  for (std::size_t i = 0; i < fa.factors.size(); ++i) CHECK(fa.factors[i].poly == fb.factors[i].poly);
  for (std::size_t i = 0; i + 1 < fa.factors.size(); ++i) CHECK(factor_less(fa.factors[i].poly, fa.factors[i + 1].poly));
}

TEST_CASE("Fox-Milnor examples") {
  FoxMilnorResult unit = fox_milnor_test(P("1"));
  CHECK(unit.pass);
  CHECK(equal_up_to_units(unit.witness, P("1")));

  FoxMilnorResult six1 = fox_milnor_test(P("2 - 5*t + 2*t^2"));
  REQUIRE(six1.pass);
  CHECK(six1.witness.span() == 1);
  CHECK(equal_up_to_units(six1.witness * reciprocal_conjugate(six1.witness), P("2 - 5*t + 2*t^2")));

  LaurentPoly sum = P("1 - t + t^2") * P("1 - t + t^2") * P("1 - t + t^2") * P("1 - t + t^2") * P("1 - 3*t + t^2");
  FoxMilnorResult blocked = fox_milnor_test(sum);
  CHECK_FALSE(blocked.pass);
  REQUIRE(blocked.obstruction.size() == 1);
  CHECK(blocked.obstruction[0].poly == IntPoly{1, -3, 1});
}

TEST_CASE("Fox-Milnor preconditions") {
  CHECK_THROWS_AS(fox_milnor_test(P("1 - 2*t")), DomainError);
  CHECK_THROWS_AS(fox_milnor_test(P("1 + t + t^2")), DomainError);
}

TEST_CASE("Fox-Milnor passes on f * f(1/t) for every table polynomial") {
  for (const auto& r : shipped_table(Scope::nine).records()) {
    const LaurentPoly& d = shipped_table(Scope::nine).alexander(r.name);
    FoxMilnorResult fm = fox_milnor_test(d * reciprocal_conjugate(d));
    CHECK_MESSAGE(fm.pass, r.name);
    CHECK(equal_up_to_units(fm.witness * reciprocal_conjugate(fm.witness), d * reciprocal_conjugate(d)));
  }
}

TEST_CASE("Fox-Milnor fails on the listed polynomials except the combined square entry") {
  for (const auto& [key, ref] : reference_alexander()) {
    const bool pass = fox_milnor_test(ref).pass;
    if (key == "8_15+7_2+3_1")
      CHECK(pass);
    else
      CHECK_MESSAGE(!pass, key);
  }
}

TEST_CASE("evaluation at roots of unity") {
  CHECK(evaluate_at_root_of_unity(P("1"), 5, 2) == Cyclotomic(1));
  CHECK(evaluate_at_root_of_unity(P("1 - t + t^2"), 2, 1) == Cyclotomic(3));
  const LaurentPoly d817 = P("-t^-3 + 4*t^-2 - 8*t^-1 + 11 - 8*t + 4*t^2 - t^3");
  Cyclotomic prod = evaluate_at_root_of_unity(d817, 3, 1) * evaluate_at_root_of_unity(d817, 3, 2);
  CHECK(prod == Cyclotomic(169));
  CHECK_THROWS_AS(evaluate_at_root_of_unity(d817, 3, 0), DomainError);
  CHECK_THROWS_AS(evaluate_at_root_of_unity(d817, 3, 3), DomainError);
}

TEST_CASE("Conway normalization") {
  CHECK(conway_normalize(P("1 - t + t^2")) == P("t^-1 - 1 + t"));
  CHECK(conway_normalize(P("-t + 3*t^2 - t^3")) == P("-t^-1 + 3 - t"));
  CHECK(is_symmetric(P("t^-1 - 1 + t")));
  CHECK_FALSE(is_symmetric(P("1 - 2*t")));
}
