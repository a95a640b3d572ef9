#pragma once

#include <random>

#include "conc/laurent.hpp"

namespace testing_helpers {

inline conc::LaurentPoly P(const std::string& s) { return conc::parse_laurent(s); }

// Fixed seed so every run sees the same cases.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace testing_helpers
