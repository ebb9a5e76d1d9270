#include <doctest.h>

#include <random>

#include "padcat/real_ball.hpp"

using namespace padcat;

namespace {

BigRat random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  BigRat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("decimal literal parsing is exact") {
  CHECK(rational_from_decimal("0.16") == BigRat(16, 100));
  CHECK(rational_from_decimal("1.70e44") == BigRat(BigInt(17) * BigInt("10000000000000000000000000000000000000000000", 10)));
  CHECK(rational_from_decimal("-0.5") == BigRat(-1, 2));
  CHECK(rational_from_decimal("12") == 12);
  CHECK(rational_from_decimal("0.0375413") == BigRat(375413, 10000000));
  CHECK(rational_from_decimal("2.4E1") == 24);
  CHECK_THROWS_AS(rational_from_decimal("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal(""), std::invalid_argument);
}

TEST_CASE("balls contain exact rational results") {
  std::mt19937 rng(42);
  for (int i = 0; i < 1000; ++i) {
    BigRat x = random_rational(rng), y = random_rational(rng), z = random_rational(rng);
    RealBall bx = RealBall::of_rational(x, 64);
    RealBall by = RealBall::of_rational(y, 64);
    RealBall bz = RealBall::of_rational(z, 64);
    RealBall lhs = (bx + by) * bz;
    BigRat exact = (x + y) * z;
    CHECK(lhs.contains(exact));
    // (x+y)z - xz - yz == 0 exactly; the ball difference must contain 0.
    RealBall diff = lhs - bx * bz - by * bz;
    CHECK(diff.contains_zero());
  }
}

TEST_CASE("division rounds outward") {
  RealBall third = RealBall(1, 128) / RealBall(3, 128);
  BigRat exact(1, 3);
  CHECK(third.contains(exact));
  CHECK(third.lo_rational() < exact);
  CHECK(third.hi_rational() > exact);
  CHECK_THROWS_AS(RealBall(1, 64) / RealBall(0, 64), std::domain_error);
  CHECK_THROWS_AS(RealBall(1, 64) / RealBall::of_endpoints(BigRat(-1), BigRat(1), 64),
                  PrecisionError);
}

TEST_CASE("doubling precision refines without losing containment") {
  RealBall coarse = sqrt(RealBall(2, 64));
  RealBall fine = sqrt(RealBall(2, 128));
  CHECK(coarse.overlaps(fine));
  CHECK(fine.hi_rational() - fine.lo_rational() <
        coarse.hi_rational() - coarse.lo_rational());
}

TEST_CASE("certified comparisons go undecided on overlap") {
  RealBall a = RealBall::of_endpoints(BigRat(0), BigRat(1), 64);
  RealBall b = RealBall::of_endpoints(BigRat(2), BigRat(3), 64);
  RealBall c = RealBall::of_endpoints(BigRat(1, 2), BigRat(5, 2), 64);
  CHECK(a.compare(b) == Cmp::Less);
  CHECK(b.compare(a) == Cmp::Greater);
  CHECK(a.compare(c) == Cmp::Undecided);
  CHECK(b.certainly_positive());
  CHECK(!c.certainly_positive());
  CHECK((-b).certainly_negative());
  CHECK(a.certainly_lt(BigRat(2)));
  CHECK(b.certainly_gt(BigRat(1)));
}

TEST_CASE("floors") {
  RealBall x = RealBall::of_endpoints(BigRat(24, 10), BigRat(26, 10), 64);
  auto f = x.unique_floor();
  REQUIRE(f.has_value());
  CHECK(*f == 2);
  RealBall straddle = RealBall::of_endpoints(BigRat(299, 100), BigRat(301, 100), 64);
  CHECK(!straddle.unique_floor().has_value());
  CHECK(straddle.floor_of_lower() == 2);
  CHECK(straddle.ceil_of_upper() == 4);
  CHECK(RealBall(3, 64).unique_floor().value() == 3);
}

TEST_CASE("integer powers") {
  CHECK(pow_int(RealBall(-2, 64), 3).contains(BigRat(-8)));
  CHECK(pow_int(RealBall(-2, 64), 2).contains(BigRat(4)));
  RealBall straddle = RealBall::of_endpoints(BigRat(-2), BigRat(3), 64);
  RealBall sq = pow_int(straddle, 2);
  CHECK(sq.lo_rational() == 0);
  CHECK(sq.contains(BigRat(9)));
  CHECK(pow_int(straddle, 0).contains(BigRat(1)));
  RealBall inv2 = pow_int(RealBall(2, 64), -2);
  CHECK(inv2.contains(BigRat(1, 4)));
}

TEST_CASE("exp and log enclose round trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<long> num(1, 5000);
    BigRat x(num(rng), 100);
    RealBall bx = RealBall::of_rational(x, 128);
    CHECK(exp(log(bx)).contains(x));
  }
  CHECK_THROWS_AS(log(RealBall(0, 64)), PrecisionError);
  CHECK_THROWS_AS(log(RealBall(-1, 64)), std::domain_error);
  CHECK_THROWS_AS(sqrt(RealBall(-1, 64)), std::domain_error);
}

TEST_CASE("string output") {
  RealBall x = RealBall::of_rational(BigRat(1, 3), 256);
  CHECK(x.midpoint_string(10).substr(0, 6) == "0.3333");
  CHECK(RealBall(5, 64).radius_string() == "0");
  CHECK(RealBall(5, 64).to_string() == "5");
}
