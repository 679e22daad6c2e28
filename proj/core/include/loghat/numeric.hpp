#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "loghat/polynomial.hpp"

namespace loghat {

// Minimal complex type usable with multiprecision reals.
template <class R>
struct Cx {
  R re{}, im{};
  Cx() = default;
  Cx(R r, R i = R(0)) : re(std::move(r)), im(std::move(i)) {}
  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    R den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  R norm2() const { return re * re + im * im; }
  R modulus() const {
    using std::sqrt;
    return sqrt(norm2());
  }
  Cx conj() const { return {re, -im}; }
};

// All complex roots of Σ c_i z^i (lowest degree first, leading coefficient
// nonzero) by Aberth–Ehrlich iteration followed by Newton polishing.
template <class R>
std::vector<Cx<R>> polynomial_roots(std::vector<Cx<R>> c, const R& tol, int max_iter = 2000) {
  using std::sqrt;
  while (!c.empty() && c.back().re == 0 && c.back().im == 0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};
  Cx<R> lead = c.back();
  for (auto& x : c) x = x / lead;
  auto eval = [&](const Cx<R>& z, Cx<R>& dp) {
    Cx<R> p = c[n];
    dp = Cx<R>(R(0));
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + c[i];
    }
    return p;
  };
  R bound(0);
  for (int i = 0; i < n; ++i) {
    R m = c[i].modulus();
    if (m > bound) bound = m;
  }
  bound = bound + R(1);
  std::vector<Cx<R>> z(n);
  for (int k = 0; k < n; ++k) {
    long double ang = 2.0L * 3.14159265358979323846L * k / n + 0.4L;
    R rad = bound * R(0.5L + 0.5L * (k + 1) / n);
    z[k] = Cx<R>(rad * R(std::cos(ang)), rad * R(std::sin(ang)));
  }
  for (int it = 0; it < max_iter; ++it) {
    R worst(0);
    for (int k = 0; k < n; ++k) {
      Cx<R> dp;
      Cx<R> p = eval(z[k], dp);
      if (p.re == 0 && p.im == 0) continue;
      Cx<R> ratio = p / dp;
      Cx<R> sum(R(0));
      for (int j = 0; j < n; ++j)
        if (j != k) sum = sum + Cx<R>(R(1)) / (z[k] - z[j]);
      Cx<R> w = ratio / (Cx<R>(R(1)) - ratio * sum);
      z[k] = z[k] - w;
      R rel = w.modulus() / (R(1) + z[k].modulus());
      if (rel > worst) worst = rel;
    }
    if (worst < tol) break;
  }
  for (int k = 0; k < n; ++k)
    for (int it = 0; it < 3; ++it) {
      Cx<R> dp;
      Cx<R> p = eval(z[k], dp);
      if (dp.norm2() == 0) break;
      z[k] = z[k] - p / dp;
    }
  return z;
}

long double to_long_double(const BigInt& x);
long double to_long_double(const BigRat& x);
std::vector<std::complex<long double>> complex_roots(const IntPoly& p);
// Best rational approximation with denominator at most max_den.
BigRat rationalize(long double x, const BigInt& max_den);

}  // namespace loghat
