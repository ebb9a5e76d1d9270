#include "padcat/bounds.hpp"

#include "padcat/heights.hpp"

namespace padcat {

namespace {

// Published coefficients of the paper's bounding chain, as exact rationals.
const char* kStep1Matveev = "1.45e30";   // lower-bound constant for log|Lambda_1|
const char* kStep1L1 = "1.46e30";        // l1 log10 < 1.46e30 (1+log n)
const char* kStep2Height = "1.48e30";    // h(eta_1) < 1.48e30 (1+log n)
const char* kStep2A1 = "4.44e30";        // A_1 = 3 h-bound
const char* kStep2Matveev = "2.38e43";   // log|Lambda_2| > -2.38e43 (1+log n)^2
const char* kStep2N = "1.70e44";         // n < 1.70e44 (log n)^2
const char* kLemma4N = "7.38e48";        // n < 7.38e48
const char* kLemma4L = "9.15e47";        // l1+l2 < 9.15e47

// (1 + log 500): the n > 500 regime is used to absorb additive constants
// into (1+log n) factors.
RealBall one_plus_log_floor(Prec prec) {
  return RealBall(1, prec) + log_int(500, prec);
}

void require_dominated(const RealBall& computed, const char* published, const char* what) {
  if (!computed.certainly_le(rational_from_decimal(published)))
    throw PrecisionError(std::string("paper-replication check failed: computed ") + what +
                         " not certified <= " + published);
}

}  // namespace

const char* mode_name(Mode mode) {
  return mode == Mode::Certified ? "certified" : "paper";
}

Mode mode_from_name(const std::string& name) {
  if (name == "certified") return Mode::Certified;
  if (name == "paper" || name == "paper-replication") return Mode::Paper;
  throw std::invalid_argument("unknown mode: " + name);
}

RealBall matveev_constant(long t, long D, const std::vector<RealBall>& A) {
  if (t < 1 || D < 1) throw std::invalid_argument("matveev: t and D must be >= 1");
  if (A.size() != static_cast<std::size_t>(t))
    throw std::invalid_argument("matveev: need exactly t values A_i");
  const BigRat kMinA(16, 100);
  Prec prec = kMinPrec;
  std::vector<RealBall> a_eff;
  a_eff.reserve(A.size());
  for (const auto& a : A) {
    prec = std::max(prec, a.precision());
    if (a.certainly_lt(kMinA))
      throw std::invalid_argument("matveev: every A_i must be >= 0.16");
    // Raising any A_i to 0.16 is always admissible, so clamp the enclosure.
    BigRat lo = a.lo_rational(), hi = a.hi_rational();
    if (lo < kMinA) lo = kMinA;
    if (hi < kMinA) hi = kMinA;
    a_eff.push_back(RealBall::of_endpoints(lo, hi, a.precision()));
  }
  BigInt pow30;
  mpz_ui_pow_ui(pow30.get_mpz_t(), 30, static_cast<unsigned long>(t + 3));
  // t^4.5 = sqrt(t^9)
  RealBall t45 = sqrt(pow_int(RealBall(t, prec), 9));
  RealBall v = RealBall::of_rational(BigRat(7, 5), prec) *
               RealBall::exact(pow30, prec) * t45 *
               RealBall(D * D, prec) *
               (RealBall(1, prec) + log(RealBall(D, prec)));
  for (const auto& a : a_eff) v = v * a;
  return v;
}

RealBall matveev_bound(const MatveevInput& input) {
  if (!input.B.certainly_ge(BigRat(1)))
    throw std::invalid_argument("matveev: B must be >= 1");
  return matveev_constant(input.t, input.D, input.A) *
         (RealBall(1, input.B.precision()) + log(input.B));
}

RealBall SymbolicBound::eval_at(const BigInt& n) const {
  if (n < 1) throw std::invalid_argument("SymbolicBound: n must be >= 1");
  RealBall l = log(RealBall::exact(n, coefficient.precision()));
  if (one_plus) l = RealBall(1, coefficient.precision()) + l;
  return coefficient * pow_int(l, log_power);
}

IntInterval size_relation(const BigInt& l_total, const CubicData& cubic) {
  if (l_total < 2) throw std::invalid_argument("size_relation: l1+l2 must be >= 2");
  const Prec prec = cubic.prec;
  RealBall l10 = log_int(10, prec);
  RealBall la = log(cubic.alpha);
  RealBall lt = RealBall::exact(l_total, prec);
  RealBall lower = (lt * l10 - RealBall(3, prec)) / la;
  RealBall upper = (lt * l10 + RealBall(1, prec)) / la;
  return {lower.floor_of_lower() + 1, upper.ceil_of_upper() - 1};
}

IntInterval size_relation(const BigInt& l_total, Prec prec) {
  return size_relation(l_total, compute_cubic(prec));
}

SymbolicBound step1_l1_bound(Mode mode, const CubicData& cubic) {
  const Prec prec = cubic.prec;
  RealBall log_alpha = log(cubic.alpha);
  RealBall l10 = log_int(10, prec);

  // Paper data: A1 = 16.32 (from h(9a/d1) <= 5.44, D = 3), A2 = log alpha,
  // A3 = 3 log 10, B = n. Certify the A_i against Theorem 2's requirements.
  RealBall a1 = RealBall::of_decimal("16.32", prec);
  RealBall h1 = height_eta1_step1(9, prec);
  if (!(RealBall(3, prec) * h1).certainly_le(a1))
    throw PrecisionError("step1: A1 = 16.32 not certified >= 3 h(eta1)");
  // |log eta1| over d1 in 1..9: eta1 = 9a/d1 lies in [a, 9a].
  RealBall nine_a = RealBall(9, prec) * cubic.a;
  if (!abs(log(cubic.a)).certainly_le(a1) || !abs(log(nine_a)).certainly_le(a1))
    throw PrecisionError("step1: A1 = 16.32 not certified >= |log eta1|");
  RealBall a2 = log_alpha;  // = 3 h(alpha); dominant root, monic cubic
  RealBall a3 = RealBall(3, prec) * l10;

  RealBall computed = matveev_constant(3, 3, {a1, a2, a3});

  // Combine log|Lambda_1| > -C (1+log n) with |Lambda_1| < 30/10^l1:
  // l1 log10 < C (1+log n) + log 30 <= coefficient (1+log n) for n > 500.
  RealBall log30 = log_int(30, prec);
  RealBall computed_l1 = computed + log30 / one_plus_log_floor(prec);

  SymbolicBound out;
  out.log_power = 1;
  out.one_plus = true;
  if (mode == Mode::Paper) {
    require_dominated(computed, kStep1Matveev, "step-1 Matveev product");
    // Published absorption: 1.45e30 (1+log n) + log 30 < 1.46e30 (1+log n).
    RealBall published_l1 = RealBall::of_decimal(kStep1Matveev, prec) +
                            log30 / one_plus_log_floor(prec);
    require_dominated(published_l1, kStep1L1, "step-1 l1 coefficient");
    out.coefficient = RealBall::of_decimal(kStep1L1, prec);
  } else {
    require_dominated(computed_l1, kStep1L1, "certified step-1 l1 coefficient");
    out.coefficient = computed_l1;
  }
  return out;
}

SymbolicBound step2_n_bound(Mode mode, const SymbolicBound& l1_bound, const CubicData& cubic) {
  const Prec prec = cubic.prec;
  RealBall log_alpha = log(cubic.alpha);
  RealBall l10 = log_int(10, prec);
  RealBall opl = one_plus_log_floor(prec);

  // Height chain: h(eta_1) <= l1 log10 + tail <= (l1_coeff + tail/(1+log n)) (1+log n).
  RealBall tail = height_eta1_step2_tail(prec);
  RealBall h_coeff = l1_bound.coefficient + tail / opl;

  // Theorem-2 admissibility of A1 = 3 h(eta_1): D h(eta_1) >= |log eta_1|.
  // |log eta_1| <= l1 log10 + 2 log 9 + log(1.33) + 1/9, so it is enough that
  // 3 h_coeff dominates l1_coeff plus that constant, absorbed at n > 500.
  RealBall log_eta_coeff =
      l1_bound.coefficient +
      (RealBall(2, prec) * log_int(9, prec) + log(RealBall::of_decimal("1.33", prec)) +
       RealBall::of_rational(BigRat(1, 9), prec)) /
          opl;
  if (!log_eta_coeff.certainly_le(RealBall(3, prec) * h_coeff))
    throw PrecisionError("step2: D h(eta1) >= |log eta1| not certified");

  RealBall a1_coeff;
  if (mode == Mode::Paper) {
    RealBall published_h = RealBall::of_decimal(kStep1L1, prec) + tail / opl;
    require_dominated(published_h, kStep2Height, "step-2 height coefficient");
    a1_coeff = RealBall::of_decimal(kStep2A1, prec);
    require_dominated(RealBall(3, prec) * RealBall::of_decimal(kStep2Height, prec),
                      kStep2A1, "step-2 A1 coefficient");
  } else {
    a1_coeff = RealBall(3, prec) * h_coeff;
  }

  // Matveev with A1 symbolic: the (1+log n) of A1 joins (1+log B).
  RealBall c2 = matveev_constant(3, 3, {a1_coeff, log_alpha, RealBall(3, prec) * l10});

  // n log(alpha) - log 4 < c2 (1+log n)^2; absorb (1+log n)^2 <= absorb (log n)^2
  // for n > 500, with absorb = ((1+log 500)/log 500)^2 <= 1.35.
  RealBall absorb = pow_int(opl / log_int(500, prec), 2);
  if (!absorb.certainly_le(rational_from_decimal("1.35")))
    throw PrecisionError("step2: absorption factor not certified <= 1.35");
  RealBall log4 = log_int(4, prec);
  RealBall h_n = (c2 + log4 / pow_int(opl, 2)) * absorb / log_alpha;

  SymbolicBound out;
  out.log_power = 2;
  out.one_plus = false;
  if (mode == Mode::Paper) {
    require_dominated(c2, kStep2Matveev, "step-2 Matveev product");
    RealBall published_n = (RealBall::of_decimal(kStep2Matveev, prec) + log4 / pow_int(opl, 2)) *
                           absorb / log_alpha;
    require_dominated(published_n, kStep2N, "step-2 n coefficient");
    out.coefficient = RealBall::of_decimal(kStep2N, prec);
  } else {
    require_dominated(h_n, kStep2N, "certified step-2 n coefficient");
    out.coefficient = h_n;
  }
  return out;
}

RealBall guzman_luca(long r, const RealBall& H) {
  if (r < 1) throw std::invalid_argument("guzman_luca: r must be >= 1");
  BigInt threshold;  // (4 r^2)^r
  {
    BigInt base = BigInt(4) * r * r;
    mpz_pow_ui(threshold.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(r));
  }
  if (!H.certainly_gt(BigRat(threshold)))
    throw std::domain_error("guzman_luca: precondition H > (4r^2)^r fails");
  BigInt two_r;
  mpz_ui_pow_ui(two_r.get_mpz_t(), 2, static_cast<unsigned long>(r));
  return RealBall::exact(two_r, H.precision()) * H * pow_int(log(H), static_cast<long>(r));
}

InitialBounds initial_bounds(Mode mode, Prec prec) {
  CubicData cubic = compute_cubic(prec);
  RealBall log_alpha = log(cubic.alpha);
  RealBall l10 = log_int(10, prec);

  SymbolicBound s1 = step1_l1_bound(mode, cubic);
  SymbolicBound s2 = step2_n_bound(mode, s1, cubic);

  InitialBounds out;
  out.mode = mode;
  out.step1_coefficient = s1.coefficient;
  out.step2_coefficient = s2.coefficient;

  RealBall gl = guzman_luca(2, s2.coefficient);
  out.computed_n_max = gl;
  if (mode == Mode::Paper) {
    require_dominated(gl, kLemma4N, "Lemma-4 n bound");
    out.n_max = RealBall::of_decimal(kLemma4N, prec);
  } else {
    out.n_max = gl;
  }

  RealBall lt = (out.n_max * log_alpha + RealBall(3, prec)) / l10;
  out.computed_l_total = (out.computed_n_max * log_alpha + RealBall(3, prec)) / l10;
  if (mode == Mode::Paper) {
    require_dominated(lt, kLemma4L, "Lemma-4 l1+l2 bound");
    out.l_total_max = RealBall::of_decimal(kLemma4L, prec);
  } else {
    out.l_total_max = lt;
  }

  out.n_max_ceil = out.n_max.ceil_of_upper();
  out.l_total_ceil = out.l_total_max.ceil_of_upper();
  return out;
}

BigInt reduction_m(const CubicData& cubic) {
  const Prec prec = cubic.prec;
  RealBall published_n = RealBall::of_decimal(kLemma4N, prec);
  RealBall lt = (published_n * log(cubic.alpha) + RealBall(3, prec)) / log_int(10, prec);
  return lt.ceil_of_upper();
}

BigInt reduction_m(Prec prec) { return reduction_m(compute_cubic(prec)); }

}  // namespace padcat
