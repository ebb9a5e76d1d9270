#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "padcat/cubic.hpp"
#include "padcat/real_ball.hpp"

namespace padcat {

// Memoized exact Padovan terms: P0=0, P1=P2=1, P(k+3)=P(k+1)+P(k).
// Concurrent readers; extension is serialized.
class PadovanCache {
 public:
  PadovanCache();
  BigInt at(std::size_t n);
  void ensure(std::size_t n);
  std::size_t computed() const;

 private:
  mutable std::shared_mutex mu_;
  std::vector<BigInt> terms_;
};

// Process-wide cache.
BigInt padovan(std::size_t n);

struct BinetError {
  RealBall error;  // contains P_n - a * alpha^n
  RealBall bound;  // alpha^(-n/2); |error| < bound is certified
};

// Certified Binet error e(n) = P_n - a*alpha^n with the |e(n)| < alpha^(-n/2)
// check. Throws PrecisionError when the inequality cannot be decided at the
// requested precision.
BinetError binet_error(std::size_t n, const CubicData& cubic);
BinetError binet_error(std::size_t n, Prec prec);

struct SandwichCertificate {
  std::size_t n = 0;
  RealBall lower_margin;  // P_n - alpha^(n-3), certified >= 0
  RealBall upper_margin;  // alpha^(n-1) - P_n, certified >= 0
  Prec prec_used = 0;
};

// Certifies alpha^(n-3) <= P_n <= alpha^(n-1). Starts at base_prec and
// doubles up to four times before giving up.
SandwichCertificate power_sandwich(std::size_t n, Prec base_prec = 256);

}  // namespace padcat
