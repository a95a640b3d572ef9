#include "conc/laurent.hpp"

#include <cctype>
#include <map>

namespace conc {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 0, static_cast<int>(i) + 1);
  }
  Integer digits() {
    skip();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected digits");
    return Integer(s.substr(start, i - start));
  }
  bool peek_digit() {
    skip();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, char var) {
  Cursor cur{text};
  std::map<long, Rational> terms;
  bool first = true;
  if (cur.at_end()) cur.fail("empty polynomial");
  while (!cur.at_end()) {
    int sign = 1;
    if (cur.eat('+')) {
    } else if (cur.eat('-')) {
      sign = -1;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    bool have_coeff = false;
    if (cur.peek_digit()) {
      Integer num = cur.digits();
      Integer den(1);
      if (cur.eat('/')) den = cur.digits();
      if (den == 0) cur.fail("zero denominator");
      coeff = Rational(num, den);
      coeff.canonicalize();
      have_coeff = true;
    }
    long exponent = 0;
    bool star = cur.eat('*');
    if (star && !have_coeff) cur.fail("expected a coefficient before '*'");
    if (cur.eat(var)) {
      exponent = 1;
      if (cur.eat('^')) {
        int esign = 1;
        if (cur.eat('-')) esign = -1;
        else cur.eat('+');
        exponent = esign * cur.digits().get_si();
      }
    } else if (star || !have_coeff) {
      cur.fail(std::string("expected '") + var + "'");
    }
    terms[exponent] += sign * coeff;
  }
  if (terms.empty()) return {};
  long low = terms.begin()->first;
  long high = terms.rbegin()->first;
  std::vector<Rational> c(static_cast<std::size_t>(high - low + 1), Rational(0));
  for (auto& [e, v] : terms) c[static_cast<std::size_t>(e - low)] = v;
  return LaurentPoly::from_coeffs(std::move(c), low);
}

Rational evaluate(const LaurentPoly& f, const Rational& t) { return f(t); }

LaurentPoly from_integers(const std::vector<long>& coeffs, long low) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return LaurentPoly::from_coeffs(std::move(c), low);
}

bool is_symmetric(const LaurentPoly& f) {
  if (f.is_zero()) return true;
  LaurentPoly a = shift_to_origin(f);
  LaurentPoly r = reciprocal_conjugate(f);
  return r == a || r == -a;
}

LaurentPoly conway_normalize(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  LaurentPoly g = shift_to_origin(f);
  if (g.span() % 2 == 0) g = g.shifted(-g.span() / 2);
  if (sgn(g(Rational(1))) < 0) g = -g;
  return g;
}

}  // namespace conc
