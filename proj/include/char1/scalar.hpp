#pragma once

#include <cstddef>
#include <string>

#include "char1/rational.hpp"

namespace char1 {

/// (Q, max, +) with unit E = 1: the simplest lawful model.
class ScalarTrop {
 public:
  using value_type = Rat;

  Rat oplus(const Rat& x, const Rat& y) const { return x < y ? y : x; }
  Rat plus(const Rat& x, const Rat& y) const { return x + y; }
  Rat neg(const Rat& x) const { return -x; }
  Rat zero() const { return 0; }
  Rat unit() const { return 1; }
  Rat div_by_nat(const Rat& x, std::size_t n) const { return x / Rat(static_cast<unsigned long>(n)); }
  bool equal(const Rat& x, const Rat& y) const { return x == y; }
  Rat r_norm(const Rat& x) const { return abs_rat(x); }
  std::string describe(const Rat& x) const { return to_string(x); }
};

}  // namespace char1
