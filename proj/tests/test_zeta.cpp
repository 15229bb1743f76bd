#include <doctest.h>

#include "primroot/errors.hpp"
#include "primroot/root_solver.hpp"
#include "primroot/zeta.hpp"
#include "test_support.hpp"

using namespace primroot;
using namespace primroot::testing;

namespace {

const char* kSqrt3Over2 = "0.86602540378443864676372317075293618347140262690519";
const char* kSqrtHalf = "0.70710678118654752440084436210484903928483593768847";
const char* kTwoMinusSqrt2 = "0.58578643762690495119831127579030192143032812462305";
// cos(2 pi / 64), sin(2 pi / 64) from an independent library.
const char* kCos64 = "0.99518472667219688624483695310947992157547486872986";
const char* kSin64 = "0.098017140329560601994195563888641845861136673167501";

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no throw");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("zeta") {
  TEST_CASE("exact small cases") {
    const Zeta z1 = construct_zeta(1);
    CHECK(z1.value().identical(Complex::one(128)));
    CHECK(z1.r.is_zero());
    const Zeta z2 = construct_zeta(2);
    CHECK(z2.a == Real::from_int(-1));
    CHECK(z2.b.is_zero());
    CHECK(z2.r == Real::from_int(2));
    const Zeta z4 = construct_zeta(4);
    CHECK(z4.a.is_zero());
    CHECK(z4.b == Real::from_int(1));
  }

  TEST_CASE("n = 6") {
    const Zeta z = construct_zeta(6);
    CHECK(z.a == Real::ratio(1, 2));
    CHECK(near(z.b, R(kSqrt3Over2), two_pow(-126)));
    CHECK(near(z.r, Real::from_int(1), two_pow(-126)));
    CHECK(radius_identity_check(z));
  }

  TEST_CASE("n = 3 is the square of zeta(6)") {
    const Zeta z = construct_zeta(3);
    CHECK(z.a == Real::ratio(-1, 2));
    CHECK(near(z.b, R(kSqrt3Over2), two_pow(-126)));
  }

  TEST_CASE("n = 8") {
    const Zeta z = construct_zeta(8);
    CHECK(near(z.a, R(kSqrtHalf), two_pow(-126)));
    CHECK(near(z.b, R(kSqrtHalf), two_pow(-126)));
    // r^2 = 2 - 2a = 2 - sqrt(2)
    CHECK(near(z.r * z.r, R(kTwoMinusSqrt2), two_pow(-120)));
  }

  TEST_CASE("n = 64 against frozen trig values") {
    const Zeta z = construct_zeta(64);
    CHECK(near(z.a, R(kCos64), two_pow(-120)));
    CHECK(near(z.b, R(kSin64), two_pow(-120)));
  }

  TEST_CASE("odd n via the doubled construction") {
    for (int n : {5, 7, 9, 15}) {
      const Zeta z = construct_zeta(n);
      CHECK(z.n == n);
      const Complex w = z.value();
      CHECK(near(complex_pow(w, static_cast<std::uint64_t>(n)), Complex::one(128), two_pow(-100)));
      CHECK(w.im() > Real(128));
      CHECK(radius_identity_check(z));
      // Closest upper root to 1 among all n-th roots.
      const RootSet set = solve_unity(n);
      for (const auto& root : set.roots) {
        if (root.im() > two_pow(-64)) {
          CHECK(distance(w, Complex::one(128)) <= distance(root, Complex::one(128)) + two_pow(-100));
        }
      }
    }
  }

  TEST_CASE("property: minimal distance and r^2 = 2 - 2a") {
    for (int n = 5; n <= 40; ++n) {
      const Zeta z = construct_zeta(n);
      CHECK(radius_identity_check(z));
      CHECK(z.b.sign() > 0);
      CHECK(z.a.sign() > 0);
      // Among the powers zeta^k (k = 1..n-1), zeta itself is closest to 1.
      const Complex w = z.value();
      Complex pw = w;
      for (int k = 2; k < n; ++k) {
        pw = pw * w;
        CHECK(distance(pw, Complex::one(128)) >= z.r - two_pow(-100));
      }
    }
  }

  TEST_CASE("select_zeta error paths") {
    CHECK(kind_of([] { (void)select_zeta(solve_unity(5)); }) == ErrorKind::InvalidN);
    CHECK(kind_of([] { (void)select_zeta(solve_unity(2)); }) == ErrorKind::InvalidN);
    // n = 4: the minimizer is i, and a = 0 violates 0 < a.
    CHECK(kind_of([] { (void)select_zeta(solve_unity(4)); }) == ErrorKind::ConstraintViolation);

    RootSet lower_only = solve_unity(6);
    for (auto& w : lower_only.roots) {
      if (w.im().sign() > 0) w = complex_conj(w);
    }
    CHECK(kind_of([&] { (void)select_zeta(lower_only); }) == ErrorKind::NoUpperRoot);

    RootSet tie = solve_unity(6);
    // A duplicated minimizer is a tie.
    tie.roots.push_back(tie.roots[0]);
    CHECK(kind_of([&] { (void)select_zeta(tie); }) == ErrorKind::AmbiguousMinimizer);
  }

  TEST_CASE("construct_zeta rejects n < 1") {
    CHECK(kind_of([] { (void)construct_zeta(0); }) == ErrorKind::InvalidN);
    CHECK(kind_of([] { (void)construct_zeta(-3); }) == ErrorKind::InvalidN);
  }

  TEST_CASE("precision") {
    const Zeta z = construct_zeta(12, 256);
    CHECK(z.precision == 256);
    CHECK(z.a.precision() == 256);
    CHECK(near(z.b, Real::ratio(1, 2, 256), two_pow(-250, 256)));
  }

  TEST_CASE("radius identity detects a bad r") {
    Zeta z = construct_zeta(10);
    z.r = z.r + two_pow(-40);
    CHECK_FALSE(radius_identity_check(z));
  }
}
