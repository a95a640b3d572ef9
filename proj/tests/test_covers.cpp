#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conc/covers.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace conc;
using testing_helpers::P;
using testing_helpers::uniform;
using oracles::all_elements;
using oracles::span;

namespace {

const KnotTable& eight() { return shipped_table(Scope::eight); }

}  // namespace

TEST_CASE("homology orders of branched covers") {
  CHECK(homology_order(eight(), "8_17", 2) == 37);
  CHECK(homology_order(eight(), "8_17", 3) == 169);
  for (int q = 2; q <= 6; ++q) CHECK(homology_order(P("1"), q) == 1);
  for (const auto& c : reference_cover_orders())
    CHECK_MESSAGE(homology_order(shipped_table(Scope::nine), c.knot, c.q) == c.order, c.knot);
  for (const auto& r : shipped_table(Scope::nine).records()) {
    const LaurentPoly& d = shipped_table(Scope::nine).alexander(r.name);
    CHECK(homology_order(d, 2) == abs(Integer(d(Rational(-1)))));
    CHECK(homology_order(d, 2) % 2 == 1);
  }
  CHECK_THROWS_AS(homology_order(P("1"), 1), DomainError);
}

TEST_CASE("two-fold cover structure") {
  CoverHomology h41 = two_fold_structure(eight().at("4_1"));
  CHECK(h41.order == 5);
  CHECK(h41.invariant_factors == std::vector<Integer>{Integer(5)});

  CoverHomology h818 = two_fold_structure(eight().at("8_18"));
  CHECK(h818.order == 45);
  CHECK(h818.invariant_factors == std::vector<Integer>{Integer(3), Integer(15)});

  KnotRecord unknot;
  unknot.name = "0_1";
  unknot.seifert = IntMatrix(0, 0);
  CoverHomology u = two_fold_structure(unknot);
  CHECK(u.order == 1);
  CHECK(u.invariant_factors.empty());

  for (const auto& r : shipped_table(Scope::nine).records()) {
    CoverHomology h = two_fold_structure(r);
    Integer prod(1);
    for (const auto& f : h.invariant_factors) prod *= f;
    CHECK(prod == h.order);
    CHECK(h.order == homology_order(shipped_table(Scope::nine).alexander(r.name), 2));
    for (std::size_t i = 0; i + 1 < h.invariant_factors.size(); ++i)
      CHECK(h.invariant_factors[i + 1] % h.invariant_factors[i] == 0);
  }
}

TEST_CASE("linking forms are symmetric and nondegenerate") {
  for (const auto& r : shipped_table(Scope::nine).records()) {
    LinkingForm f = two_fold_linking_form(r);
    CHECK(f.is_nondegenerate());
    CHECK(f.group_order() == two_fold_structure(r).order);
    const auto els = all_elements(f.orders());
    for (int k = 0; k < 10; ++k) {
      const auto& x = els[static_cast<std::size_t>(uniform(0, static_cast<long>(els.size()) - 1))];
      const auto& y = els[static_cast<std::size_t>(uniform(0, static_cast<long>(els.size()) - 1))];
      CHECK(f(x, y) == f(y, x));
      CHECK(f(x, y) >= 0);
      CHECK(f(x, y) < 1);
    }
  }
}

TEST_CASE("metabolizer examples") {
  RatMatrix l25(1, 1);
  l25(0, 0) = Rational(1, 25);
  LinkingForm z25({25}, l25);
  auto m25 = metabolizers(z25);
  REQUIRE(m25.size() == 1);
  CHECK(m25[0] == Subgroup{{0}, {5}, {10}, {15}, {20}});

  RatMatrix l5(1, 1);
  l5(0, 0) = Rational(1, 5);
  CHECK(metabolizers(LinkingForm({5}, l5)).empty());

  RatMatrix hyp(2, 2);
  hyp << Rational(0), Rational(1, 3), Rational(1, 3), Rational(0);
  LinkingForm z33({3, 3}, hyp);
  auto m33 = metabolizers(z33);
  REQUIRE(m33.size() == 2);
  CHECK(m33[0] == Subgroup{{0, 0}, {0, 1}, {0, 2}});
  CHECK(m33[1] == Subgroup{{0, 0}, {1, 0}, {2, 0}});

  // 8_18: order 45 is not a square.
  CHECK(metabolizers(two_fold_linking_form(eight().at("8_18"))).empty());
}

TEST_CASE("metabolizers match a brute-force subgroup scan") {
  int with_metabolizers = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix a = oracles::random_presentation();
    LinkingForm form = LinkingForm::from_presentation(a);
    const Integer det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    REQUIRE(form.group_order() == Integer(abs(det)).get_si());
    auto got = metabolizers(form);
    auto want = oracles::brute_force_metabolizers(form);
    CHECK(got == want);
    with_metabolizers += !want.empty();
    for (const auto& h : got) {
      CHECK(static_cast<long>(h.size() * h.size()) == form.group_order());
      for (const auto& x : h)
        for (const auto& y : h) CHECK(form(x, y) == 0);
    }
  }
  CHECK(with_metabolizers > 5);
}

TEST_CASE("metabolizer search preconditions") {
  RatMatrix l(1, 1);
  l(0, 0) = Rational(1, 4);
  CHECK_THROWS_AS(metabolizers(LinkingForm({4}, l)), DomainError);
  RatMatrix big(1, 1);
  big(0, 0) = Rational(1, 3 * 3 * 5 * 5 * 7 * 7);
  CHECK_THROWS_AS(metabolizers(LinkingForm({3 * 3 * 5 * 5 * 7 * 7}, big), std::nullopt, 1000), DomainError);
}

TEST_CASE("characters from metabolizers") {
  RatMatrix l25(1, 1);
  l25(0, 0) = Rational(1, 25);
  LinkingForm z25({25}, l25);
  const Subgroup h25 = metabolizers(z25).at(0);
  auto c25 = characters_from_metabolizer(h25, z25, 5);
  REQUIRE(c25.size() == 2);
  CHECK(c25[0].values == std::vector<long>{1});
  CHECK(c25[1].values == std::vector<long>{2});
  for (const auto& c : c25) {
    CHECK(c.p == 5);
    CHECK(element_order(c.element, z25.orders()) == 5);
  }

  RatMatrix hyp(2, 2);
  hyp << Rational(0), Rational(1, 3), Rational(1, 3), Rational(0);
  LinkingForm z33({3, 3}, hyp);
  const auto lines = metabolizers(z33);
  auto c33 = characters_from_metabolizer(lines.at(0), z33, 3);
  REQUIRE(c33.size() == 1);
  // h = (0, 1) links with e_0 only.
  CHECK(c33[0].values == std::vector<long>{1, 0});
  // Each character kills its own metabolizer.
  for (const auto& x : lines[0]) {
    long v = 0;
    for (std::size_t i = 0; i < x.size(); ++i) v += c33[0].values[i] * x[i];
    CHECK(v % 3 == 0);
  }

  CHECK(characters_from_metabolizer(Subgroup{{0}}, z25, 5).empty());
  CHECK_THROWS_AS(characters_from_metabolizer(h25, z25, 3), DomainError);
  CHECK_THROWS_AS(characters_from_metabolizer(h25, z25, 4), DomainError);
}

TEST_CASE("generators and element orders") {
  const std::vector<long> orders{3, 15};
  CHECK(element_order({0, 0}, orders) == 1);
  CHECK(element_order({1, 5}, orders) == 3);
  CHECK(element_order({0, 1}, orders) == 15);
  Subgroup h = span({{1, 5}, {0, 3}}, orders);
  auto gens = generators_of(h, orders);
  CHECK(span(gens, orders) == h);
  CHECK(gens.size() <= 2);
}
