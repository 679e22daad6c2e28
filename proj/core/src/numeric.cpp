#include "loghat/numeric.hpp"

#include <string>

namespace loghat {

long double to_long_double(const BigInt& x) { return std::stold(x.get_str()); }

long double to_long_double(const BigRat& x) {
  return to_long_double(BigInt(x.get_num())) / to_long_double(BigInt(x.get_den()));
}

std::vector<std::complex<long double>> complex_roots(const IntPoly& p) {
  std::vector<Cx<long double>> c;
  for (const auto& a : p.coeffs()) c.emplace_back(to_long_double(a));
  auto z = polynomial_roots<long double>(std::move(c), 1e-17L);
  std::vector<std::complex<long double>> out;
  out.reserve(z.size());
  for (const auto& w : z) out.emplace_back(w.re, w.im);
  return out;
}

BigRat rationalize(long double x, const BigInt& max_den) {
  // Convergents h/k of the continued fraction of x.
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double r = x;
  for (int i = 0; i < 64; ++i) {
    long double a = std::floor(r);
    BigInt ai(std::to_string(static_cast<long long>(a)));
    BigInt h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    long double frac = r - a;
    if (std::fabs(frac) < 1e-18L) break;
    r = 1.0L / frac;
    if (std::fabs(r) > 1e18L) break;
  }
  if (k1 == 0) return BigRat(BigInt(std::to_string(static_cast<long long>(std::llround(x)))));
  return make_rat(h1, k1);
}

}  // namespace loghat
