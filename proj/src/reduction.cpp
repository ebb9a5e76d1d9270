#include "padcat/reduction.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace padcat {

void ContinuedFraction::push(const BigInt& a) {
  quotients_.push_back(a);
  std::size_t k = quotients_.size() - 1;
  if (k == 0) {
    ps_.push_back(a);
    qs_.push_back(BigInt(1));
  } else if (k == 1) {
    ps_.push_back(a * ps_[0] + 1);
    qs_.push_back(a);
  } else {
    ps_.push_back(a * ps_[k - 1] + ps_[k - 2]);
    qs_.push_back(a * qs_[k - 1] + qs_[k - 2]);
  }
}

std::optional<std::size_t> ContinuedFraction::first_q_above(const BigInt& bound) const {
  for (std::size_t k = 0; k < qs_.size(); ++k)
    if (qs_[k] > bound) return k;
  return std::nullopt;
}

ContinuedFraction ContinuedFraction::of_rational(const BigRat& x) {
  ContinuedFraction cf;
  cf.exact_terminated_ = true;
  BigInt num = x.get_num(), den = x.get_den();
  while (den != 0) {
    BigInt a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    cf.push(a);
    num = den;
    den = r;
  }
  return cf;
}

ContinuedFraction continued_fraction(const ConstantFn& value, std::size_t min_terms,
                                     const BigInt& min_q, Prec start_prec,
                                     int max_escalations) {
  Prec prec = std::max(start_prec, kMinPrec);
  for (int esc = 0; esc <= max_escalations; ++esc, prec *= 2) {
    RealBall ball = value(prec);
    BigRat lo = ball.lo_rational();
    BigRat hi = ball.hi_rational();
    if (lo == hi) {
      ContinuedFraction cf = ContinuedFraction::of_rational(lo);
      cf.source_prec_ = prec;
      return cf;  // exact rational: complete expansion
    }
    // Emit quotients common to every number in [lo, hi]: floors must agree,
    // and the interval flips under x -> 1/(x - a).
    ContinuedFraction cf;
    cf.source_prec_ = prec;
    while (true) {
      BigInt flo, fhi;
      mpz_fdiv_q(flo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
      mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
      if (flo != fhi) break;
      cf.push(flo);
      BigRat frac_lo = lo - BigRat(flo);
      BigRat frac_hi = hi - BigRat(flo);
      if (frac_lo == 0 || frac_hi == 0) break;
      BigRat nlo = 1 / frac_hi;
      BigRat nhi = 1 / frac_lo;
      lo = std::move(nlo);
      hi = std::move(nhi);
      if (cf.size() >= std::max<std::size_t>(min_terms, 1) &&
          (min_q == 0 || cf.qs_.back() > min_q))
        break;
    }
    if (cf.size() >= std::max<std::size_t>(min_terms, 1) &&
        (min_q == 0 || (!cf.qs_.empty() && cf.qs_.back() > min_q)))
      return cf;
  }
  throw PrecisionError("continued_fraction: target not reached within the escalation cap");
}

RealBall nearest_int_distance(const RealBall& x) {
  const Prec prec = x.precision();
  const BigRat half(1, 2);
  BigRat lo = x.lo_rational();
  BigRat hi = x.hi_rational();
  if (hi - lo >= 1) return RealBall::of_endpoints(BigRat(0), half, prec);

  // Shift by the integer nearest to the midpoint; then t = |x - k| < 1 and
  // ||x|| = min(t, 1 - t) on that range.
  BigRat mid = (lo + hi) / 2;
  BigInt k;
  {
    // round-half-up of mid
    BigRat shifted = mid + half;
    mpz_fdiv_q(k.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  }
  BigRat alo = lo - BigRat(k), ahi = hi - BigRat(k);
  // |.| over [alo, ahi]
  BigRat tlo, thi;
  if (alo >= 0) {
    tlo = alo;
    thi = ahi;
  } else if (ahi <= 0) {
    tlo = BigRat(-ahi);
    thi = BigRat(-alo);
  } else {
    tlo = 0;
    BigRat neg_alo(-alo);
    thi = neg_alo > ahi ? neg_alo : ahi;
  }
  // tent g(t) = min(t, 1-t) over [tlo, thi] (subset of [0, 1))
  auto g = [](const BigRat& t) {
    BigRat u = 1 - t;
    return t < u ? t : u;
  };
  BigRat g_lo = g(tlo), g_hi = g(thi);
  BigRat glo = g_lo < g_hi ? g_lo : g_hi;
  if (glo < 0) glo = 0;
  BigRat ghi = (tlo <= half && half <= thi) ? half : (g_lo > g_hi ? g_lo : g_hi);
  return RealBall::of_endpoints(glo, ghi, prec);
}

ReductionOutcome dp_reduce(const ReductionParams& params, const ContinuedFraction& cf,
                           const ReductionPolicy& policy) {
  if (!params.A.certainly_positive())
    throw std::invalid_argument("dp_reduce: A must be certified > 0");
  if (!params.B.certainly_gt(BigRat(1)))
    throw std::invalid_argument("dp_reduce: B must be certified > 1");
  if (params.M < 1) throw std::invalid_argument("dp_reduce: M must be >= 1");

  const Prec prec = params.tau.precision();
  std::size_t start;
  if (policy.start_index) {
    start = *policy.start_index;
  } else {
    auto found = cf.first_q_above(BigInt(6) * params.M);
    if (!found) throw ReductionError("dp_reduce: no convergent with q > 6M");
    start = *found;
  }
  if (start >= cf.size()) throw ReductionError("dp_reduce: start index beyond computed convergents");

  RealBall m_ball = RealBall::exact(params.M, prec);
  auto epsilon_at = [&](std::size_t k) {
    RealBall qb = RealBall::exact(cf.q(k), prec);
    return nearest_int_distance(params.mu * qb) -
           m_ball * nearest_int_distance(params.tau * qb);
  };
  auto bound_at = [&](std::size_t k, const RealBall& eps) -> BigInt {
    RealBall w = log(params.A * RealBall::exact(cf.q(k), prec) / eps) / log(params.B);
    return w.ceil_of_upper() - 1;
  };

  // Advance past convergents whose epsilon is not certified positive.
  std::size_t k = start;
  int failures = 0;
  RealBall eps;
  while (true) {
    if (k >= cf.size()) throw ReductionError("dp_reduce: ran out of convergents");
    eps = epsilon_at(k);
    if (eps.certainly_positive()) break;
    if (++failures > policy.max_retries)
      throw ReductionError("dp_reduce: epsilon not certified positive after retries");
    ++k;
  }

  ReductionOutcome out;
  out.first_index = k;
  out.first_epsilon = eps;
  out.failures_skipped = failures;
  out.convergent_index = k;
  out.epsilon = eps;
  out.w_bound = bound_at(k, eps);

  // Each further convergent with certified epsilon > 0 yields another valid
  // exclusion; keep the strongest.
  for (int extra = 1; extra <= policy.refine_extra; ++extra) {
    std::size_t k2 = k + static_cast<std::size_t>(extra);
    if (k2 >= cf.size()) break;
    RealBall eps2 = epsilon_at(k2);
    if (!eps2.certainly_positive()) continue;
    BigInt b2 = bound_at(k2, eps2);
    if (b2 < out.w_bound) {
      out.w_bound = b2;
      out.convergent_index = k2;
      out.epsilon = eps2;
    }
  }
  out.q_used = cf.q(out.convergent_index);
  return out;
}

TauContext make_tau_context(Prec prec) {
  TauContext ctx;
  ctx.prec = prec;
  ctx.cubic = compute_cubic(prec);
  ctx.log_alpha = log(ctx.cubic.alpha);
  ctx.tau = log_int(10, prec) / ctx.log_alpha;
  ctx.M = reduction_m(ctx.cubic);
  ConstantFn tau_fn = [](Prec p) {
    CubicData c = compute_cubic(p);
    return log_int(10, p) / log(c.alpha);
  };
  // Find the first q > 6M, then extend so failure advancement and refinement
  // have convergents to work with.
  ctx.cf = continued_fraction(tau_fn, 0, BigInt(6) * ctx.M, prec);
  ctx.cf = continued_fraction(tau_fn, ctx.cf.size() + 16, BigInt(0), prec);
  return ctx;
}

Round1Result reduction_round1(const TauContext& ctx) {
  const Prec prec = ctx.prec;
  // Premise of the |e^x - 1| < y < 1/2  =>  |x| < 2y step: for l1 >= 2 the
  // right side 30/10^l1 is at most 3/10.
  if (!(BigRat(30, 100) <= BigRat(1, 2)))
    throw std::logic_error("round1: premise 30/10^2 <= 1/2 violated");

  ReductionParams params;
  params.tau = ctx.tau;
  params.A = RealBall(60, prec) / ctx.log_alpha;
  params.B = RealBall(10, prec);
  params.M = ctx.M;

  RealBall nine_a = RealBall(9, prec) * ctx.cubic.a;
  Round1Result out;
  bool have_min = false;
  BigInt max_bound(1);  // l1 < 2 is subsumed trivially
  for (int d1 = 1; d1 <= 9; ++d1) {
    params.mu = log(RealBall(d1, prec) / nine_a) / ctx.log_alpha;
    ReductionOutcome oc = dp_reduce(params, ctx.cf);
    if (!have_min || oc.epsilon.lo_rational() < out.min_epsilon.lo_rational()) {
      out.min_epsilon = oc.epsilon;
      have_min = true;
    }
    if (oc.w_bound > max_bound) max_bound = oc.w_bound;
    out.per_d1.push_back({d1, std::move(oc)});
  }
  out.q_used = out.per_d1.front().outcome.q_used;
  out.l1_bound = static_cast<long>(max_bound.get_si());
  return out;
}

Round2Result reduction_round2(const TauContext& ctx, long l1_max, int threads) {
  const Prec prec = ctx.prec;
  // For n > 500 the round-2 right side 4/alpha^n is below 1/2: alpha^501 > 8.
  if (!pow_int(ctx.cubic.alpha, 501).certainly_gt(BigRat(8)))
    throw PrecisionError("round2: premise alpha^501 > 8 not certified");

  struct Task {
    int d1, d2;
    long l1;
  };
  std::vector<Task> tasks;
  for (int d1 = 1; d1 <= 9; ++d1)
    for (int d2 = 0; d2 <= 9; ++d2) {
      if (d2 == d1) continue;
      for (long l1 = 1; l1 <= l1_max; ++l1) tasks.push_back({d1, d2, l1});
    }

  struct Slot {
    bool ok = false;
    ReductionOutcome outcome;
  };
  std::vector<Slot> slots(tasks.size());

  RealBall nine_a = RealBall(9, prec) * ctx.cubic.a;
  ReductionParams base;
  base.tau = ctx.tau;
  base.A = RealBall(8, prec) / ctx.log_alpha;
  base.B = ctx.cubic.alpha;
  base.M = ctx.M;
  ReductionPolicy policy;
  policy.refine_extra = 2;

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Task& t = tasks[i];
      BigInt pow10;
      mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(t.l1));
      BigInt numer = t.d1 * pow10 - (t.d1 - t.d2);
      ReductionParams params = base;
      params.mu = log(RealBall::exact(numer, prec) / nine_a) / ctx.log_alpha;
      try {
        slots[i].outcome = dp_reduce(params, ctx.cf, policy);
        slots[i].ok = true;
      } catch (const ReductionError&) {
        slots[i].ok = false;
      }
    }
  };

  int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    run_range(0, tasks.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (tasks.size() + nthreads - 1) / nthreads;
    for (int w = 0; w < nthreads; ++w) {
      std::size_t b = std::min(tasks.size(), w * chunk);
      std::size_t e = std::min(tasks.size(), b + chunk);
      if (b < e) pool.emplace_back(run_range, b, e);
    }
    for (auto& th : pool) th.join();
  }

  Round2Result out;
  out.instance_count = tasks.size();
  std::map<std::size_t, std::size_t> hist;
  bool have_min = false, have_first = false;
  BigInt max_bound(0);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    if (!slots[i].ok) {
      out.failures.push_back({t.d1, t.d2, t.l1, 0, 0});
      continue;
    }
    const ReductionOutcome& oc = slots[i].outcome;
    ++hist[oc.convergent_index];
    if (!have_min || oc.epsilon.lo_rational() < out.min_epsilon.lo_rational()) {
      out.min_epsilon = oc.epsilon;
      have_min = true;
    }
    if (!have_first ||
        oc.first_epsilon.lo_rational() < out.min_first_epsilon.lo_rational()) {
      out.min_first_epsilon = oc.first_epsilon;
      have_first = true;
    }
    if (oc.w_bound > max_bound) {
      max_bound = oc.w_bound;
      out.worst = {t.d1, t.d2, t.l1, oc.convergent_index,
                   static_cast<long>(oc.w_bound.get_si())};
    }
  }
  out.n_bound = static_cast<long>(max_bound.get_si());
  out.convergent_histogram.assign(hist.begin(), hist.end());
  return out;
}

}  // namespace padcat
