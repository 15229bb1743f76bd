#pragma once

#include <cstdint>
#include <string>

#include "primroot/real.hpp"

namespace primroot {

/// x + iy with both parts at one precision.
class Complex {
 public:
  Complex() = default;
  explicit Complex(int precision) : re_(precision), im_(precision) {}
  Complex(Real re, Real im);

  static Complex one(int precision);
  static Complex i(int precision);
  static Complex from_ints(long re, long im, int precision);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  int precision() const { return re_.precision(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex with_precision(int precision) const;
  Complex operator-() const { return {-re_, -im_}; }

  friend Complex operator+(const Complex& z, const Complex& w);
  friend Complex operator-(const Complex& z, const Complex& w);
  friend Complex operator*(const Complex& z, const Complex& w);
  friend Complex operator*(const Complex& z, const Real& s);
  friend Complex operator/(const Complex& z, const Complex& w);
  friend Complex operator/(const Complex& z, const Real& s);
  Complex& operator+=(const Complex& w) { return *this = *this + w; }
  Complex& operator-=(const Complex& w) { return *this = *this - w; }
  Complex& operator*=(const Complex& w) { return *this = *this * w; }

  bool identical(const Complex& other) const {
    return re_.identical(other.re_) && im_.identical(other.im_);
  }

  std::string to_string() const;

 private:
  Real re_;
  Real im_;
};

Complex complex_mul(const Complex& z, const Complex& w);
Complex complex_conj(const Complex& z);
/// x^2 + y^2.
Real complex_norm(const Complex& z);
/// sqrt(x^2 + y^2).
Real complex_abs(const Complex& z);
/// z^k by binary exponentiation; z^0 = 1.
Complex complex_pow(const Complex& z, std::uint64_t k);
/// |z - w|.
Real distance(const Complex& z, const Complex& w);

}  // namespace primroot
