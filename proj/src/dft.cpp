#include "primroot/dft.hpp"

#include <algorithm>
#include <string>

#include "primroot/errors.hpp"
#include "primroot/zeta.hpp"

namespace primroot {

TwiddleTable twiddle_table(int n, int precision) {
  const Zeta zeta = construct_zeta(n, precision);
  const Complex w = zeta.value();
  TwiddleTable table;
  table.n = n;
  table.precision = precision;
  table.inverse.reserve(static_cast<std::size_t>(n));
  table.forward.reserve(static_cast<std::size_t>(n));
  Complex power = Complex::one(precision);
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      power = (k % kTwiddleReanchor == 0) ? complex_pow(w, static_cast<std::uint64_t>(k)) : power * w;
    }
    table.inverse.push_back(power);
    table.forward.push_back(complex_conj(power));
  }
  return table;
}

namespace {

int common_precision(std::span<const Complex> v) {
  int prec = Real::kMinPrecision;
  for (const auto& z : v) prec = std::max(prec, z.precision());
  return prec;
}

std::vector<Complex> transform(std::span<const Complex> in, const std::vector<Complex>& kernel, int n) {
  if (static_cast<int>(in.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "input length " + std::to_string(in.size()) +
                                                " does not match twiddle table size " + std::to_string(n));
  }
  const int prec = kernel.front().precision();
  std::vector<Complex> out;
  out.reserve(in.size());
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t j = 0; j < un; ++j) {
    Complex acc(prec);
    for (std::size_t k = 0; k < un; ++k) acc += in[k] * kernel[(j * k) % un];
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

std::vector<Complex> dft_forward(std::span<const Complex> x, const TwiddleTable& table) {
  if (x.empty()) throw Error(ErrorKind::InvalidArgument, "empty input");
  return transform(x, table.forward, table.n);
}

std::vector<Complex> dft_inverse(std::span<const Complex> X, const TwiddleTable& table) {
  if (X.empty()) throw Error(ErrorKind::InvalidArgument, "empty input");
  std::vector<Complex> out = transform(X, table.inverse, table.n);
  const Real scale = Real::from_int(table.n, table.precision);
  for (auto& v : out) v = v / scale;
  return out;
}

std::vector<Complex> dft_forward(std::span<const Complex> x) {
  if (x.empty()) throw Error(ErrorKind::InvalidArgument, "empty input");
  return dft_forward(x, twiddle_table(static_cast<int>(x.size()), common_precision(x)));
}

std::vector<Complex> dft_inverse(std::span<const Complex> X) {
  if (X.empty()) throw Error(ErrorKind::InvalidArgument, "empty input");
  return dft_inverse(X, twiddle_table(static_cast<int>(X.size()), common_precision(X)));
}

}  // namespace primroot
