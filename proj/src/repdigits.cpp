#include "padcat/repdigits.hpp"

#include <string>

namespace padcat {

namespace {

BigInt repunit(long l) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(l));
  return (p - 1) / 9;
}

}  // namespace

RepdigitConcat::RepdigitConcat(int d1, int d2, long l1, long l2)
    : d1_(d1), d2_(d2), l1_(l1), l2_(l2) {
  if (d1 < 1 || d1 > 9) throw std::invalid_argument("RepdigitConcat: d1 must be in 1..9");
  if (d2 < 0 || d2 > 9) throw std::invalid_argument("RepdigitConcat: d2 must be in 0..9");
  if (d1 == d2) throw std::invalid_argument("RepdigitConcat: d1 and d2 must differ");
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("RepdigitConcat: block lengths must be >= 1");
}

BigInt RepdigitConcat::value() const {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(l2_));
  return d1_ * repunit(l1_) * p + d2_ * repunit(l2_);
}

std::optional<RepdigitConcat> parse_concat(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("parse_concat: n must be non-negative");
  const std::string s = n.get_str();
  if (s.size() < 2) return std::nullopt;
  // Two maximal runs of distinct digits; boundaries are digit changes, so the
  // decomposition is unique when it exists.
  std::size_t boundary = 0;
  int runs = 1;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != s[i - 1]) {
      ++runs;
      if (runs > 2) return std::nullopt;
      boundary = i;
    }
  }
  if (runs != 2) return std::nullopt;
  return RepdigitConcat(s[0] - '0', s[boundary] - '0',
                        static_cast<long>(boundary),
                        static_cast<long>(s.size() - boundary));
}

}  // namespace padcat
