#pragma once

#include <map>
#include <string>

#include "conc/scalar.hpp"

namespace conc {

/// Formal integer combination of table records. A negative coefficient is the
/// mirror-reverse; distinct reverses are their own records (e.g. "8_17r").
class LinearCombination {
 public:
  using Terms = std::map<std::string, Integer>;

  LinearCombination() = default;
  explicit LinearCombination(const std::string& name, Integer coeff = 1) { add(name, std::move(coeff)); }

  void add(const std::string& name, const Integer& coeff) {
    if (sgn(coeff) == 0) return;
    Integer& c = terms_[name];
    c += coeff;
    if (sgn(c) == 0) terms_.erase(name);
  }
  bool empty() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Integer coeff(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator*(const Integer& s, const LinearCombination& a) {
    LinearCombination out;
    for (const auto& [k, v] : a.terms_) out.add(k, s * v);
    return out;
  }
  friend LinearCombination operator-(const LinearCombination& a) { return Integer(-1) * a; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a += -b; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

}  // namespace conc
