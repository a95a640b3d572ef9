#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conc/basis.hpp"
#include "conc/exact_linear.hpp"
#include "helpers.hpp"

using namespace conc;
using testing_helpers::uniform;

namespace {

const KnotTable& eight() { return shipped_table(Scope::eight); }

LinearCombination random_combination(const KnotTable& table) {
  LinearCombination out;
  const auto& recs = table.records();
  for (long k = 0, n = uniform(0, 6); k < n; ++k)
    out.add(recs[static_cast<std::size_t>(uniform(0, static_cast<long>(recs.size()) - 1))].name, Integer(uniform(-5, 5)));
  return out;
}

int column_of(const std::string& text) {
  try {
    parse_expression(text, eight());
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("expression parsing") {
  LinearCombination a = parse_expression("8_10 + 8_21", eight());
  CHECK(a.terms().size() == 2);
  CHECK(a.coeff("8_10") == 1);
  CHECK(a.coeff("8_21") == 1);

  CHECK(parse_expression("2(8_13)", eight()) == LinearCombination("8_13", Integer(2)));
  CHECK(parse_expression("2*8_13", eight()) == LinearCombination("8_13", Integer(2)));
  CHECK(parse_expression("3_1 - 3_1", eight()).empty());
  CHECK(parse_expression("3_1 # 4_1", eight()) == parse_expression("3_1 + 4_1", eight()));
  CHECK(parse_expression("-(3_1 - 2(4_1 + 5_2))", eight()) ==
        parse_expression("-3_1 + 2*4_1 + 2*5_2", eight()));

  LinearCombination r = parse_expression("8_17^r + 8_17r - 8_17", eight());
  CHECK(r.coeff("8_17r") == 2);
  CHECK(r.coeff("8_17") == -1);
}

TEST_CASE("parse errors carry columns") {
  CHECK(column_of("3_1 + +") == 7);
  CHECK(column_of("3_1 4_1") == 5);
  CHECK(column_of("(3_1") == 5);
  CHECK(column_of("3_1)") == 4);
  CHECK(column_of("3x1") == 2);
  CHECK(column_of("") == 1);
  CHECK_THROWS_AS(parse_expression("4_1r", eight()), ParseError);
  CHECK_THROWS_WITH_AS(parse_expression("3_1 + 9_1", eight()), doctest::Contains("--scope 9"), UnknownKnot);
  CHECK_NOTHROW(parse_expression("3_1 + 9_1", shipped_table(Scope::nine)));
}

TEST_CASE("render round trips") {
  CHECK(render(LinearCombination(), eight()) == "0");
  CHECK(render(parse_expression("8_21 + 8_10", eight()), eight()) == "8_10 + 8_21");
  CHECK(render(parse_expression("-2(3_1) + 8_17^r", eight()), eight()) == "-2*3_1 + 8_17r");
  for (Scope s : {Scope::eight, Scope::nine}) {
    const KnotTable& table = shipped_table(s);
    for (int trial = 0; trial < 500; ++trial) {
      LinearCombination c = random_combination(table);
      CHECK(parse_expression(render(c, table), table) == c);
    }
  }
}

TEST_CASE("labels") {
  for (Label l : {Label::Finf_inf, Label::F4_inf, Label::F2_inf, Label::F2_2, Label::F1_inf, Label::F1_2, Label::F1_1})
    CHECK(parse_label(to_string(l)) == l);
  CHECK(g_order(Label::Finf_inf) == 0);
  CHECK(g_order(Label::F4_inf) == 4);
  CHECK(g_order(Label::F2_2) == 2);
  CHECK(g_order(Label::F1_1) == 1);
  CHECK(c_order(Label::F2_2) == 2);
  CHECK(c_order(Label::F1_inf) == 0);
  CHECK(c_order(Label::F1_1) == 1);
  CHECK_THROWS_AS(parse_label("F3^inf"), DomainError);
}

TEST_CASE("shipped bases are unimodular with the expected ranks") {
  for (Scope s : {Scope::eight, Scope::nine}) {
    const BasisTable& b = shipped_basis(s);
    const std::size_t n = shipped_table(s).size();
    CHECK(b.elements().size() == n);
    CHECK(b.matrix().rows() == static_cast<Eigen::Index>(n));
    CHECK(abs(determinant(b.matrix())) == 1);
    std::vector<std::size_t> ranks;
    for (Label l : {Label::Finf_inf, Label::F4_inf, Label::F2_inf, Label::F2_2, Label::F1_inf, Label::F1_2, Label::F1_1})
      ranks.push_back(b.indices(l).size());
    CHECK(ranks == expected_ranks(s));
    CHECK(b.bold_indices().size() == expected_bold_count(s));
  }
  CHECK(expected_ranks(Scope::eight) == std::vector<std::size_t>{18, 1, 3, 6, 1, 1, 6});
  const BasisTable& nine = shipped_basis(Scope::nine);
  // The first open-span element.
  CHECK(nine.elements()[nine.bold_indices().front()].expression == "9_2 - 7_4");
}

TEST_CASE("decomposition examples") {
  const BasisTable& b = shipped_basis(Scope::eight);
  CHECK(b.decompose(LinearCombination()) == std::vector<Integer>(36, Integer(0)));

  auto index_of = [&](const std::string& expr) {
    for (std::size_t i = 0; i < b.elements().size(); ++i)
      if (b.elements()[i].expression == expr) return i;
    FAIL("missing basis element " << expr);
    return std::size_t{0};
  };
  std::vector<Integer> x = b.decompose(parse_expression("8_10 + 8_21", eight()));
  std::vector<Integer> want(36, Integer(0));
  want[index_of("8_10 + 3_1")] = 1;
  want[index_of("8_21 - 8_18 - 3_1")] = 1;
  want[index_of("8_18")] = 1;
  CHECK(x == want);

  x = b.decompose(parse_expression("8_17^r + 8_21 - 3_1", eight()));
  want.assign(36, Integer(0));
  want[index_of("8_17 - 8_17^r")] = -1;
  want[index_of("8_17")] = 1;
  want[index_of("8_21 - 8_18 - 3_1")] = 1;
  want[index_of("8_18")] = 1;
  CHECK(x == want);
}

TEST_CASE("decompose and recompose are inverse") {
  for (Scope s : {Scope::eight, Scope::nine}) {
    const KnotTable& table = shipped_table(s);
    const BasisTable& b = shipped_basis(s);
    for (int trial = 0; trial < 500; ++trial) {
      LinearCombination c = random_combination(table);
      CHECK(b.recompose(b.decompose(c)) == c);
    }
    for (std::size_t i = 0; i < b.elements().size(); ++i) {
      std::vector<Integer> e = b.decompose(b.elements()[i].comb);
      for (std::size_t j = 0; j < e.size(); ++j) CHECK(e[j] == (i == j ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(shipped_basis(Scope::eight).decompose(LinearCombination("9_1")), UnknownKnot);
}

TEST_CASE("basis loading errors") {
  CHECK_THROWS_AS(load_basis("Finf^inf | - | 3_1\n", eight()), DomainError);
  CHECK_THROWS_AS(load_basis("Finf^inf - 3_1\n", eight()), ParseError);
  CHECK_THROWS_AS(load_basis("Finf^inf | maybe | 3_1\n", eight()), ParseError);
  try {
    load_basis("# header\nFinf^inf | - | 3_1 +\n", eight());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 0);
  }
  // Replacing 5_1 by 2*5_1 breaks unimodularity.
  std::string text = read_text_file(data_directory() + "/basis8.dat");
  const std::string from = "Finf^inf | - | 5_1\n";
  text.replace(text.find(from), from.size(), "Finf^inf | - | 2(5_1)\n");
  CHECK_THROWS_AS(load_basis(text, eight()), DomainError);
}
