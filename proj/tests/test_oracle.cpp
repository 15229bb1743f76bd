#include <doctest.h>

#include "primroot/oracle.hpp"
#include "test_support.hpp"

using namespace primroot;
using namespace primroot::testing;

TEST_SUITE("oracle") {
  TEST_CASE("pi") {
    const Real p = oracle::pi(128);
    CHECK(near(p, R("3.1415926535897932384626433832795028841971693993751"), two_pow(-124)));
    const Real p256 = oracle::pi(256);
    CHECK(near(p256,
               R("3.14159265358979323846264338327950288419716939937510582097494459230781640628620899863", 256),
               two_pow(-250, 256)));
  }

  TEST_CASE("exact octant points") {
    const Real tol = two_pow(-126);
    CHECK(near(oracle::trig_root(4, 1).value, C(0, 1), tol));
    CHECK(near(oracle::trig_root(2, 1).value, C(-1, 0), tol));
    CHECK(near(oracle::trig_root(8, 0).value, C(1, 0), tol));
    const Real s = R("0.70710678118654752440084436210484903928483593768847");
    CHECK(near(oracle::trig_root(8, 3).value, Complex{-s, s}, tol));
    CHECK(near(oracle::trig_root(8, -1).value, Complex{s, -s}, tol));
  }

  TEST_CASE("frozen values") {
    const Complex w = oracle::trig_root(64, 1).value;
    CHECK(near(w.re(), R("0.99518472667219688624483695310947992157547486872986"), two_pow(-124)));
    CHECK(near(w.im(), R("0.098017140329560601994195563888641845861136673167501"), two_pow(-124)));
    const Complex v = oracle::trig_root(12, 1).value;
    CHECK(near(v.re(), R("0.86602540378443864676372317075293618347140262690519"), two_pow(-124)));
    CHECK(near(v.im(), Real::ratio(1, 2), two_pow(-124)));
  }

  TEST_CASE("property: unit modulus and additivity") {
    for (int n : {7, 11, 30, 97}) {
      for (long k = 0; k < 5; ++k) {
        const Complex a = oracle::trig_root(n, k).value;
        const Complex b = oracle::trig_root(n, k + 1).value;
        const Complex one = oracle::trig_root(n, 1).value;
        CHECK(near(complex_abs(a), Real::from_int(1), two_pow(-124)));
        CHECK(near(a * one, b, two_pow(-122)));
      }
    }
  }

  TEST_CASE("constructed zeta agrees with the trig value") {
    for (int n : {1, 2, 3, 4, 5, 6, 10, 16}) {
      CHECK(oracle::assert_remark5(n));
      CHECK(oracle::oracle_distance(n) < two_pow(-100));
    }
  }

  TEST_CASE("documented examples and self-consistency") {
    CHECK(near(oracle::trig_root(1, 0).value, C(1, 0), two_pow(-126)));
    const Complex w6 = oracle::trig_root(6, 1).value;
    CHECK(near(w6.re(), Real::ratio(1, 2), two_pow(-126)));
    for (int n : {5, 9, 64}) {
      for (long k = 0; k < n; k += 3) {
        for (long j = 0; j < n; j += 5) {
          const Complex lhs = oracle::trig_root(n, k).value * oracle::trig_root(n, j).value;
          CHECK(near(lhs, oracle::trig_root(n, (k + j) % n).value, two_pow(-120)));
        }
      }
    }
  }
}
