#include "padcat/sequences.hpp"

#include <mutex>

namespace padcat {

PadovanCache::PadovanCache() : terms_{BigInt(0), BigInt(1), BigInt(1)} {}

void PadovanCache::ensure(std::size_t n) {
  {
    std::shared_lock rd(mu_);
    if (n < terms_.size()) return;
  }
  std::unique_lock wr(mu_);
  while (terms_.size() <= n) {
    std::size_t k = terms_.size();
    terms_.push_back(terms_[k - 2] + terms_[k - 3]);
  }
}

BigInt PadovanCache::at(std::size_t n) {
  ensure(n);
  std::shared_lock rd(mu_);
  return terms_[n];
}

std::size_t PadovanCache::computed() const {
  std::shared_lock rd(mu_);
  return terms_.size();
}

BigInt padovan(std::size_t n) {
  static PadovanCache cache;
  return cache.at(n);
}

BinetError binet_error(std::size_t n, const CubicData& cubic) {
  if (n < 1) throw std::invalid_argument("binet_error: n must be >= 1");
  const Prec prec = cubic.prec;
  RealBall pn = RealBall::exact(padovan(n), prec);
  RealBall err = pn - cubic.a * pow_int(cubic.alpha, static_cast<long>(n));
  RealBall bound = pow_int(cubic.beta_abs, static_cast<long>(n));
  if (!abs(err).certainly_less(bound))
    throw PrecisionError("binet_error: |e(n)| < alpha^(-n/2) not decidable at this precision");
  return {err, bound};
}

BinetError binet_error(std::size_t n, Prec prec) {
  return binet_error(n, compute_cubic(prec));
}

SandwichCertificate power_sandwich(std::size_t n, Prec base_prec) {
  if (n < 1) throw std::invalid_argument("power_sandwich: n must be >= 1");
  BigInt pn_exact = padovan(n);
  Prec prec = std::max(base_prec, kMinPrec);
  for (int attempt = 0; attempt <= 4; ++attempt, prec *= 2) {
    CubicData cubic = compute_cubic(prec);
    RealBall pn = RealBall::exact(pn_exact, prec);
    RealBall lower = pow_int(cubic.alpha, static_cast<long>(n) - 3);
    RealBall upper = pow_int(cubic.alpha, static_cast<long>(n) - 1);
    if (lower.certainly_le(pn) && pn.certainly_le(upper)) {
      SandwichCertificate cert;
      cert.n = n;
      cert.lower_margin = pn - lower;
      cert.upper_margin = upper - pn;
      cert.prec_used = prec;
      return cert;
    }
  }
  throw PrecisionError("power_sandwich: not certified after 4 precision doublings");
}

}  // namespace padcat
