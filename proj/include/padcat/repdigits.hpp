#pragma once

#include <optional>

#include "padcat/real_ball.hpp"

namespace padcat {

// Concatenation of two distinct repdigit blocks: d1 repeated l1 times
// followed by d2 repeated l2 times. d1 >= 1 and d1 != d2; both lengths >= 1.
class RepdigitConcat {
 public:
  RepdigitConcat(int d1, int d2, long l1, long l2);

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  long l1() const { return l1_; }
  long l2() const { return l2_; }

  // Exact integer value d1*(10^l1-1)/9 * 10^l2 + d2*(10^l2-1)/9.
  BigInt value() const;
  // Decimal length of value(): l1 + l2.
  long digit_count() const { return l1_ + l2_; }

  bool operator==(const RepdigitConcat& other) const = default;

 private:
  int d1_, d2_;
  long l1_, l2_;
};

// Run-length recognition: non-empty exactly when the decimal expansion of n
// consists of two maximal runs of distinct digits.
std::optional<RepdigitConcat> parse_concat(const BigInt& n);

}  // namespace padcat
