#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "padcat/bounds.hpp"
#include "padcat/cubic.hpp"
#include "padcat/real_ball.hpp"

namespace padcat {

struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Certified partial quotients and exact convergents of a real number.
// Convergents are 0-based: p0/q0 = a0/1, p_k = a_k p_{k-1} + p_{k-2}.
class ContinuedFraction {
 public:
  const std::vector<BigInt>& quotients() const { return quotients_; }
  std::size_t size() const { return quotients_.size(); }
  const BigInt& p(std::size_t k) const { return ps_.at(k); }
  const BigInt& q(std::size_t k) const { return qs_.at(k); }
  std::optional<std::size_t> first_q_above(const BigInt& bound) const;
  Prec source_precision() const { return source_prec_; }
  bool exact_terminated() const { return exact_terminated_; }

  // Exact Euclidean expansion of a rational (canonical form).
  static ContinuedFraction of_rational(const BigRat& x);

 private:
  friend ContinuedFraction continued_fraction(const std::function<RealBall(Prec)>&,
                                              std::size_t, const BigInt&, Prec, int);
  void push(const BigInt& a);

  std::vector<BigInt> quotients_;
  std::vector<BigInt> ps_, qs_;
  Prec source_prec_ = 0;
  bool exact_terminated_ = false;
};

// Evaluates a constant as a certified enclosure at any requested precision.
using ConstantFn = std::function<RealBall(Prec)>;

// Certified expansion: quotients are emitted only while the exact rational
// endpoints of the enclosure agree, so every emitted quotient is correct for
// the enclosed number. Escalates (doubles) precision until min_terms terms
// are available and the last denominator exceeds min_q.
ContinuedFraction continued_fraction(const ConstantFn& value, std::size_t min_terms,
                                     const BigInt& min_q, Prec start_prec,
                                     int max_escalations = 6);

// Distance from x to the nearest integer, as a ball inside [0, 1/2].
RealBall nearest_int_distance(const RealBall& x);

// One Dujella-Petho application: no solution of 0 < |u tau - v + mu| < A B^-w
// with u <= M and w > w_bound, provided epsilon = ||mu q|| - M ||tau q|| > 0.
struct ReductionParams {
  RealBall tau;
  RealBall mu;
  RealBall A;  // > 0
  RealBall B;  // > 1
  BigInt M;    // >= 1
};

struct ReductionPolicy {
  int max_retries = 10;   // convergents to try past failures (epsilon <= 0)
  int refine_extra = 0;   // extra convergents examined after first success
  std::optional<std::size_t> start_index;  // default: first q > 6M
};

struct ReductionOutcome {
  BigInt q_used;
  RealBall epsilon;        // certified positive, for the selected convergent
  BigInt w_bound;          // largest w not excluded
  std::size_t convergent_index = 0;
  std::size_t first_index = 0;  // first convergent with certified epsilon > 0
  RealBall first_epsilon;
  int failures_skipped = 0;
};

ReductionOutcome dp_reduce(const ReductionParams& params, const ContinuedFraction& cf,
                           const ReductionPolicy& policy = {});

// Shared certified inputs for the two reduction rounds of the pipeline.
struct TauContext {
  CubicData cubic;
  RealBall tau;        // log 10 / log alpha
  RealBall log_alpha;
  ContinuedFraction cf;
  BigInt M;            // reduction_m(prec)
  Prec prec = 0;
};

TauContext make_tau_context(Prec prec);

struct Round1Digit {
  int d1 = 0;
  ReductionOutcome outcome;
};

struct Round1Result {
  std::vector<Round1Digit> per_d1;
  RealBall min_epsilon;
  long l1_bound = 0;
  BigInt q_used;
};

// Round 1: u = l1+l2, v = n, w = l1, A = 60/log alpha, B = 10, over d1 = 1..9.
Round1Result reduction_round1(const TauContext& ctx);

struct Round2Instance {
  int d1 = 0, d2 = 0;
  long l1 = 0;
  std::size_t convergent_index = 0;
  long w_bound = 0;
};

struct Round2Result {
  std::size_t instance_count = 0;
  RealBall min_epsilon;        // over selected convergents
  RealBall min_first_epsilon;  // over first successes
  long n_bound = 0;
  Round2Instance worst;
  std::vector<std::pair<std::size_t, std::size_t>> convergent_histogram;
  std::vector<Round2Instance> failures;  // instances with uncertifiable epsilon
};

// Round 2: u = l2, v = n, w = n, A = 8/log alpha, B = alpha, over all
// d1 in 1..9, d2 != d1 in 0..9, l1 in 1..l1_max. Instances are independent
// and may be processed in parallel.
Round2Result reduction_round2(const TauContext& ctx, long l1_max, int threads = 1);

}  // namespace padcat
