#include <doctest.h>

#include "padcat/cubic.hpp"

using namespace padcat;

namespace {

// 50-digit reference values, computed independently (mpmath, 420 digits).
const char* kAlpha50 = "1.3247179572447460259609088544780973407344040569017";
const char* kA50 = "0.54511559562840436790760385523575075916628905441872";
const char* kBetaAbs50 = "0.8688369618327093018065699641910972224774656620145";
const char* kBAbs50 = "0.28241761320690319201279089621102849149728916641922";

bool close_to(const RealBall& ball, const char* literal, const char* tol) {
  return abs(ball - RealBall::of_decimal(literal, ball.precision()))
      .certainly_lt(rational_from_decimal(tol));
}

}  // namespace

TEST_CASE("cubic invariants hold at several precisions") {
  for (Prec prec : {Prec(64), Prec(128), Prec(256), Prec(1024)}) {
    CubicData c = compute_cubic(prec);
    CHECK(c.alpha.certainly_gt(BigRat(132, 100)));
    CHECK(c.alpha.certainly_lt(BigRat(133, 100)));
    CHECK(c.beta_abs.certainly_gt(BigRat(86, 100)));
    CHECK(c.beta_abs.certainly_lt(BigRat(87, 100)));
    CHECK(c.a.certainly_gt(BigRat(54, 100)));
    CHECK(c.a.certainly_lt(BigRat(55, 100)));
    CHECK(c.b_abs.certainly_gt(BigRat(28, 100)));
    CHECK(c.b_abs.certainly_lt(BigRat(29, 100)));
    CHECK((c.beta_abs * c.beta_abs * c.alpha).contains(BigRat(1)));
    // 23 a^3 - 5 a - 1 must straddle zero.
    RealBall mp = RealBall(23, prec) * pow_int(c.a, 3) - RealBall(5, prec) * c.a -
                  RealBall(1, prec);
    CHECK(mp.contains_zero());
  }
  CHECK_THROWS_AS(compute_cubic(32), PrecisionError);
}

TEST_CASE("alpha enclosure straddles the root of psi, checked with exact rationals") {
  CubicData c = compute_cubic(digits_to_bits(60));
  BigRat lo = c.alpha.lo_rational(), hi = c.alpha.hi_rational();
  CHECK(lo * lo * lo - lo - 1 < 0);
  CHECK(hi * hi * hi - hi - 1 > 0);
}

TEST_CASE("reference digits") {
  CubicData c = compute_cubic(digits_to_bits(100));
  CHECK(close_to(c.alpha, kAlpha50, "1e-48"));
  CHECK(close_to(c.a, kA50, "1e-48"));
  CHECK(close_to(c.beta_abs, kBetaAbs50, "1e-48"));
  CHECK(close_to(c.b_abs, kBAbs50, "1e-48"));
}

TEST_CASE("cardano radicals agree with the isolated root") {
  Prec prec = digits_to_bits(80);
  CHECK(alpha_cardano(prec).overlaps(compute_cubic(prec).alpha));
}

TEST_CASE("self-consistency across precisions") {
  RealBall a300 = compute_cubic(digits_to_bits(300)).alpha;
  RealBall a400 = compute_cubic(digits_to_bits(400)).alpha;
  CHECK(a300.overlaps(a400));
  CHECK(abs(a300 - a400).certainly_lt(rational_from_decimal("1e-290")));
}
