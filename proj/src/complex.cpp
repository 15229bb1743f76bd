#include "primroot/complex.hpp"

#include <algorithm>

namespace primroot {

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() != im_.precision()) {
    const int prec = std::max(re_.precision(), im_.precision());
    re_ = re_.with_precision(prec);
    im_ = im_.with_precision(prec);
  }
}

Complex Complex::one(int precision) { return {Real::from_int(1, precision), Real(precision)}; }

Complex Complex::i(int precision) { return {Real(precision), Real::from_int(1, precision)}; }

Complex Complex::from_ints(long re, long im, int precision) {
  return {Real::from_int(re, precision), Real::from_int(im, precision)};
}

Complex Complex::with_precision(int precision) const {
  return {re_.with_precision(precision), im_.with_precision(precision)};
}

Complex operator+(const Complex& z, const Complex& w) { return {z.re_ + w.re_, z.im_ + w.im_}; }

Complex operator-(const Complex& z, const Complex& w) { return {z.re_ - w.re_, z.im_ - w.im_}; }

Complex operator*(const Complex& z, const Complex& w) {
  return {z.re_ * w.re_ - z.im_ * w.im_, z.re_ * w.im_ + z.im_ * w.re_};
}

Complex operator*(const Complex& z, const Real& s) { return {z.re_ * s, z.im_ * s}; }

Complex operator/(const Complex& z, const Complex& w) {
  const Real den = complex_norm(w);
  const Complex num = z * complex_conj(w);
  return {num.re_ / den, num.im_ / den};
}

Complex operator/(const Complex& z, const Real& s) { return {z.re_ / s, z.im_ / s}; }

std::string Complex::to_string() const {
  std::string out = re_.to_string();
  if (im_.sign() < 0) {
    out += " - " + (-im_).to_string();
  } else {
    out += " + " + im_.to_string();
  }
  return out + "i";
}

Complex complex_mul(const Complex& z, const Complex& w) { return z * w; }

Complex complex_conj(const Complex& z) { return {z.re(), -z.im()}; }

Real complex_norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real complex_abs(const Complex& z) { return hp_sqrt(complex_norm(z)); }

Complex complex_pow(const Complex& z, std::uint64_t k) {
  Complex result = Complex::one(z.precision());
  Complex base = z;
  while (k != 0) {
    if ((k & 1U) != 0) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Real distance(const Complex& z, const Complex& w) { return complex_abs(z - w); }

}  // namespace primroot
