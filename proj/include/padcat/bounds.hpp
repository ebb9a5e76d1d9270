#pragma once

#include <vector>

#include "padcat/cubic.hpp"
#include "padcat/real_ball.hpp"

namespace padcat {

enum class Mode { Certified, Paper };

const char* mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

// Data for the Bugeaud-Mignotte-Siksek form of Matveev's lower bound:
// log|Lambda| > -1.4 * 30^(t+3) * t^4.5 * D^2 (1+log D)(1+log B) A_1...A_t.
struct MatveevInput {
  long t = 0;
  long D = 0;
  RealBall B;               // >= max |b_i|, >= 1
  std::vector<RealBall> A;  // each >= 0.16
};

// Upper ball for the full product V, so that log|Lambda| > -V.
RealBall matveev_bound(const MatveevInput& input);
// Same product without the (1+log B) factor, for symbolic-B use.
RealBall matveev_constant(long t, long D, const std::vector<RealBall>& A);

// coefficient * (1+log n)^log_power, or coefficient * (log n)^log_power when
// one_plus is false.
struct SymbolicBound {
  RealBall coefficient;
  int log_power = 1;
  bool one_plus = true;

  RealBall eval_at(const BigInt& n) const;
};

struct IntInterval {
  BigInt lo, hi;
};

// Certified integer interval for n from
// (l1+l2) log10 - 3 < n log(alpha) < (l1+l2) log10 + 1,
// rounded outward (the interval may only include extra candidates).
IntInterval size_relation(const BigInt& l_total, Prec prec);
IntInterval size_relation(const BigInt& l_total, const CubicData& cubic);

// Step 1 of the Baker-method bounding: l1*log10 < coefficient*(1+log n).
// Paper mode carries the published coefficient 1.46e30 after verifying it
// dominates the computed product; certified mode carries the computed value.
SymbolicBound step1_l1_bound(Mode mode, const CubicData& cubic);

// Step 2: n < coefficient*(log n)^2 (published: 1.70e44).
SymbolicBound step2_n_bound(Mode mode, const SymbolicBound& l1_bound, const CubicData& cubic);

// Guzman Sanchez-Luca collapse: if H > (4r^2)^r and H > L/(log L)^r then
// L < 2^r * H * (log H)^r. Returns the right-hand side as an upper ball.
RealBall guzman_luca(long r, const RealBall& H);

struct InitialBounds {
  Mode mode = Mode::Paper;
  RealBall n_max;        // reported bound on n
  RealBall l_total_max;  // reported bound on l1+l2
  BigInt n_max_ceil;
  BigInt l_total_ceil;
  // Computed (mode-independent) audit values.
  RealBall step1_coefficient;  // on l1*log10, times (1+log n)
  RealBall step2_coefficient;  // on n, times (log n)^2
  RealBall computed_n_max;
  RealBall computed_l_total;
};

// Full Lemma-4 chain: step1 -> step2 -> Guzman-Luca(r=2) -> size relation.
InitialBounds initial_bounds(Mode mode, Prec prec);

// The fixed reduction hypothesis bound used by both rounds and both modes:
// ceil of the certified upper end of ((7.38e48) log(alpha) + 3)/log 10, the
// Lemma-3 transfer of the published n-bound.
BigInt reduction_m(Prec prec);
BigInt reduction_m(const CubicData& cubic);

}  // namespace padcat
