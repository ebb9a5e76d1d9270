#include <doctest.h>

#include "padcat/heights.hpp"

using namespace padcat;

namespace {
const Prec kPrec = digits_to_bits(60);

bool near(const RealBall& b, const char* literal, const char* tol) {
  return abs(b - RealBall::of_decimal(literal, b.precision()))
      .certainly_lt(rational_from_decimal(tol));
}
}  // namespace

TEST_CASE("height of rationals") {
  CHECK(log_height_rational(BigInt(10), BigInt(1), kPrec).contains(
      log_int(10, kPrec).lo_rational()));
  CHECK(log_height_rational(BigInt(1), BigInt(1), kPrec).contains(BigRat(0)));
  RealBall h = log_height_rational(BigInt(-7), BigInt(3), kPrec);
  CHECK(h.overlaps(log_int(7, kPrec)));
  CHECK_THROWS_AS(log_height_rational(BigInt(2), BigInt(4), kPrec), std::invalid_argument);
  CHECK_THROWS_AS(log_height_rational(BigInt(1), BigInt(0), kPrec), std::invalid_argument);
  CHECK_THROWS_AS(log_height_rational(BigInt(1), BigInt(-3), kPrec), std::invalid_argument);
}

TEST_CASE("step-1 height bound") {
  CHECK(near(height_of_a(kPrec), "1.04516473864", "1e-9"));
  for (int d1 : {1, 5, 9}) {
    RealBall b = height_eta1_step1(d1, kPrec);
    CHECK(b.certainly_le(rational_from_decimal("5.44")));
    CHECK(near(b, "5.43961389332", "1e-9"));
  }
  CHECK_THROWS_AS(height_eta1_step1(0, kPrec), std::invalid_argument);
}

TEST_CASE("step-2 height chain") {
  CHECK(near(height_eta1_step2_tail(kPrec), "11.2203574091", "1e-9"));
  // l1 = 1: log 10 + 4 log 9 + (1/3) log 23 + 2 log 2
  CHECK(near(height_eta1_step2(1, 0, 1, kPrec), "13.5229425021", "1e-9"));
  CHECK(height_eta1_step2(2, 7, 5, kPrec)
            .certainly_greater(height_eta1_step2(2, 7, 4, kPrec)));
  CHECK_THROWS_AS(height_eta1_step2(3, 3, 1, kPrec), std::invalid_argument);
  CHECK_THROWS_AS(height_eta1_step2(1, 2, 0, kPrec), std::invalid_argument);
}
