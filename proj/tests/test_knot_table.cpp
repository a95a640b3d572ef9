#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conc/knot_table.hpp"
#include "helpers.hpp"

using namespace conc;
using testing_helpers::P;

namespace {

std::string shipped_text(Scope s) {
  return read_text_file(data_directory() + (s == Scope::eight ? "/knots8.dat" : "/knots9.dat"));
}

// Replaces the Seifert field of one record.
std::string with_seifert(std::string text, const std::string& knot, const std::string& matrix) {
  const std::size_t row = text.find("\n" + knot + " |");
  const std::size_t a = text.find("seifert: ", row) + 9;
  const std::size_t b = text.find(" |", a);
  return text.replace(a, b - a, matrix);
}

}  // namespace

TEST_CASE("shipped tables load with the right cardinalities") {
  CHECK(shipped_table(Scope::eight).size() == 36);
  CHECK(shipped_table(Scope::nine).size() == 87);
  CHECK(expected_names(Scope::eight).size() == 36);
  CHECK(expected_names(Scope::nine).size() == 87);
  for (const char* n : {"3_1", "4_1", "7_7", "8_17", "8_17r", "8_21"}) CHECK(shipped_table(Scope::eight).contains(n));
  for (const char* n : {"9_32r", "9_33r", "9_49"}) CHECK(shipped_table(Scope::nine).contains(n));
  CHECK_FALSE(shipped_table(Scope::eight).contains("9_1"));
}

TEST_CASE("reversibility flags") {
  for (Scope s : {Scope::eight, Scope::nine}) {
    for (const auto& r : shipped_table(s).records()) {
      const std::string base = r.name.back() == 'r' ? r.name.substr(0, r.name.size() - 1) : r.name;
      const bool chiral_pair = base == "8_17" || base == "9_32" || base == "9_33";
      CHECK_MESSAGE(r.reversible == !chiral_pair, r.name);
    }
  }
  CHECK(shipped_table(Scope::eight).at("4_1").amphicheiral);
  CHECK_FALSE(shipped_table(Scope::eight).at("3_1").amphicheiral);
}

TEST_CASE("load errors") {
  CHECK_THROWS_AS(load_table("", Scope::eight), DomainError);
  CHECK_THROWS_WITH_AS(load_table("# only a comment\n", Scope::eight), doctest::Contains("needs 36"), DomainError);

  const std::string text = shipped_text(Scope::eight);
  CHECK(load_table(text, Scope::eight).size() == 36);
  CHECK_THROWS_AS(load_table(text, Scope::nine), DomainError);

  const std::string degenerate = with_seifert(text, "3_1", "1,0;0,1");
  REQUIRE(degenerate != text);
  CHECK_THROWS_WITH_AS(load_table(degenerate, Scope::eight), doctest::Contains("3_1"), DomainError);

  try {
    load_table("3_1 | 3 | maybe | false | seifert: -1,0;-1,-1 | pd: (1,5,2,4)(3,1,4,6)(5,3,6,2)\n", Scope::eight);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("Alexander polynomial from Seifert matrices") {
  IntMatrix trefoil(2, 2);
  trefoil << -1, 1, 0, -1;
  CHECK(alexander_from_seifert(trefoil) == P("t^-1 - 1 + t"));
  CHECK(alexander_from_seifert(IntMatrix(0, 0)) == P("1"));
  const KnotTable& t = shipped_table(Scope::eight);
  CHECK(t.alexander("4_1") == P("-t^-1 + 3 - t"));
  CHECK(t.alexander("3_1") == P("t^-1 - 1 + t"));
}

TEST_CASE("every record has a normalized symmetric Alexander polynomial") {
  for (const auto& r : shipped_table(Scope::nine).records()) {
    const LaurentPoly& d = shipped_table(Scope::nine).alexander(r.name);
    CHECK_MESSAGE(d(Rational(1)) == 1, r.name);
    CHECK_MESSAGE(is_symmetric(d), r.name);
    CHECK(d.low() == -d.high());
    CHECK(d.span() <= 2 * r.genus());
    REQUIRE(static_cast<int>(r.pd.size()) == r.crossing_number);
  }
}

TEST_CASE("reference polynomials and multiplicativity") {
  const KnotTable& t = shipped_table(Scope::eight);
  for (const auto& [key, ref] : reference_alexander()) {
    LaurentPoly prod = P("1");
    std::size_t start = 0;
    while (start <= key.size()) {
      const std::size_t plus = key.find('+', start);
      prod = prod * t.alexander(key.substr(start, plus - start));
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    CHECK_MESSAGE(equal_up_to_units(prod, ref), key);
  }
  const LaurentPoly d31 = t.alexander("3_1");
  CHECK(t.alexander("8_10") == d31 * d31 * d31);
  CHECK(t.alexander("8_21") == d31 * t.alexander("4_1"));
}

TEST_CASE("mirror-reverse tokens") {
  const KnotTable& t = shipped_table(Scope::eight);
  CHECK(mirror_reverse(t, "8_17", 1, true) == "8_17r");
  CHECK(mirror_reverse(t, "8_17r", 1, true) == "8_17");
  CHECK(mirror_reverse(t, "3_1", -1, false) == "-3_1");
  CHECK(mirror_reverse(t, "4_1", 1, true) == "4_1");
  CHECK_THROWS_AS(mirror_reverse(t, "4_1r", 1, false), UnknownKnot);
  CHECK_THROWS_AS(mirror_reverse(t, "9_1", 1, false), UnknownKnot);
  CHECK_THROWS_AS(mirror_reverse(t, "3_1", 2, false), DomainError);
  CHECK(reverse_name(t, "8_17") == "8_17r");
  CHECK(reverse_name(t, "5_2") == "5_2");
}

TEST_CASE("unknown names suggest nine-crossing scope") {
  CHECK_THROWS_WITH_AS(shipped_table(Scope::eight).at("9_1"), doctest::Contains("--scope 9"), UnknownKnot);
  CHECK_THROWS_AS(shipped_table(Scope::nine).at("10_1"), UnknownKnot);
}

TEST_CASE("scope parsing") {
  CHECK(parse_scope("8") == Scope::eight);
  CHECK(parse_scope("9") == Scope::nine);
  CHECK_THROWS_AS(parse_scope("7"), DomainError);
}
