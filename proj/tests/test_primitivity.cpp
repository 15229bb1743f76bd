#include <doctest.h>

#include "primroot/errors.hpp"
#include "primroot/primitivity.hpp"
#include "primroot/root_solver.hpp"
#include "primroot/zeta.hpp"
#include "test_support.hpp"

using namespace primroot;
using namespace primroot::testing;

namespace {

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

TEST_SUITE("primitivity") {
  TEST_CASE("number theory helpers") {
    CHECK(divisors(1) == std::vector<int>{1});
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<int>{1, 7, 49});
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(7, 0) == 7);
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
  }

  TEST_CASE("orders of zeta(6) powers") {
    const Complex z = construct_zeta(6).value();
    const Real tol = order_tolerance(128);
    const int expected[] = {0, 6, 3, 2, 3, 6, 1};
    Complex w = Complex::one(128);
    for (int m = 1; m <= 6; ++m) {
      w = w * z;
      const PrimitivityReport r = multiplicative_order(w, 6, tol);
      CHECK(r.order == expected[m]);
      CHECK(r.is_primitive == (expected[m] == 6));
      CHECK(r.is_primitive == gcd_primitivity(m, 6));
    }
  }

  TEST_CASE("exact units") {
    const Real tol = order_tolerance(128);
    CHECK(multiplicative_order(C(1, 0), 1, tol).order == 1);
    CHECK(multiplicative_order(C(-1, 0), 2, tol).is_primitive);
    CHECK(multiplicative_order(C(0, 1), 4, tol).order == 4);
    CHECK(multiplicative_order(C(0, 1), 8, tol).order == 4);
  }

  TEST_CASE("error paths") {
    const Real tol = order_tolerance(128);
    CHECK(kind_of([&] { (void)multiplicative_order(C(2, 0), 3, tol); }) == ErrorKind::NotARoot);
    CHECK(kind_of([&] { (void)prime_shortcut(C(1, 0), 6, tol); }) == ErrorKind::NotPrime);
    CHECK(kind_of([&] { (void)prime_shortcut(C(0, 1), 5, tol); }) == ErrorKind::NotARoot);
    CHECK(kind_of([] { (void)gcd_primitivity(0, 5); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { (void)gcd_primitivity(6, 5); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { (void)roots_of(Complex(128), 3); }) == ErrorKind::ZeroTarget);
  }

  TEST_CASE("prime shortcut") {
    const Real tol = order_tolerance(128);
    for (int p : {2, 3, 5, 7}) {
      const RootSet set = solve_unity(p);
      for (const auto& w : set.roots) {
        const bool trivial = near(w, Complex::one(128), tol);
        CHECK(prime_shortcut(w, p, tol) == !trivial);
        CHECK(multiplicative_order(w, p, tol).is_primitive == !trivial);
      }
    }
  }

  TEST_CASE("property: order equals n / gcd(m, n)") {
    const Real tol = order_tolerance(128);
    for (int n = 1; n <= 24; ++n) {
      const Complex z = construct_zeta(n).value();
      Complex w = Complex::one(128);
      for (int m = 1; m <= n; ++m) {
        w = w * z;
        const auto g = static_cast<int>(gcd(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)));
        CHECK(multiplicative_order(w, n, tol).order == n / g);
      }
    }
  }

  TEST_CASE("newton root") {
    const Complex cube = newton_root(C(-8, 0), 3, 128);
    CHECK(near(complex_pow(cube, 3), C(-8, 0), two_pow(-100)));
    for (int n : {2, 4, 6}) {
      // Negative real targets with even n.
      const Complex z = newton_root(C(-16, 0), n, 128);
      CHECK(near(complex_pow(z, static_cast<std::uint64_t>(n)), C(-16, 0), two_pow(-100)));
    }
  }

  TEST_CASE("roots_of z^2 = 3 + 4i") {
    const RootSet set = roots_of(C(3, 4), 2);
    REQUIRE(set.roots.size() == 2);
    CHECK(near(set.roots[0], C(2, 1), two_pow(-110)));
    CHECK(near(set.roots[1], C(-2, -1), two_pow(-110)));
  }

  TEST_CASE("property: roots_of agrees with the binomial solver") {
    RealGen gen(17, 128);
    for (int i = 0; i < 8; ++i) {
      const Complex c = gen.complex(-10, 10);
      const int n = 2 + i;
      const RootSet a = roots_of(c, n);
      const RootSet b = solve_binomial(c, n);
      CHECK(*set_distance(a.roots, b.roots) <= two_pow(-60));
    }
  }

  TEST_CASE("documented examples") {
    const Real tol = order_tolerance(128);
    for (int n : {1, 2, 5, 6}) {
      const PrimitivityReport r = multiplicative_order(C(1, 0), n, tol);
      CHECK(r.order == 1);
      CHECK(r.is_primitive == (n == 1));
    }
    CHECK(gcd_primitivity(5, 6));
    CHECK_FALSE(gcd_primitivity(2, 6));
    CHECK(gcd_primitivity(1, 1));
    const RootSet seven = solve_unity(7);
    for (const auto& w : seven.roots) {
      const bool is_one = near(w, C(1, 0), tol);
      CHECK(prime_shortcut(w, 7, tol) == !is_one);
      if (!is_one) CHECK(multiplicative_order(w, 7, tol).order == 7);
    }
  }
}
