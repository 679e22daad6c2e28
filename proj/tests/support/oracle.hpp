#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library except for the container types used to compare results.

#include <cstdint>
#include <random>
#include <vector>

#include "loghat/matrix.hpp"
#include "loghat/polynomial.hpp"

namespace oracle {

using I64 = std::int64_t;
using IPoly = std::vector<I64>;  // lowest degree first
using IMat = std::vector<std::vector<I64>>;

inline void trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IPoly mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Exact division by a monic divisor; the remainder must vanish.
inline IPoly div_monic(IPoly a, const IPoly& b) {
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  IPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    I64 c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) return {};
  return q;
}

inline int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  return n > 1 ? -m : m;
}

inline int totient(int n) {
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    int a = i, b = n;
    while (b) { int t = a % b; a = b; b = t; }
    c += a == 1;
  }
  return c;
}

// Φ_r = ∏_{d|r} (x^d − 1)^{μ(r/d)}: multiply the positive factors, then divide.
inline IPoly cyclotomic(int r) {
  IPoly num{1}, den{1};
  for (int d = 1; d <= r; ++d) {
    if (r % d) continue;
    IPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    int mu = mobius(r / d);
    if (mu == 1) num = mul(num, f);
    if (mu == -1) den = mul(den, f);
  }
  return div_monic(num, den);
}

inline loghat::IntPoly to_int_poly(const IPoly& p) {
  std::vector<loghat::BigInt> c;
  for (I64 x : p) c.emplace_back(static_cast<long>(x));
  return loghat::IntPoly(std::move(c));
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
  IMat c(a.size(), std::vector<I64>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IMat imat_t(const IMat& a) {
  IMat t(a[0].size(), std::vector<I64>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Laplace expansion; fine for n ≤ 6.
inline I64 idet(const IMat& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  I64 s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IMat m;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<I64> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      m.push_back(row);
    }
    I64 t = a[0][j] * idet(m);
    s += (j % 2 ? -t : t);
  }
  return s;
}

// Sylvester's criterion on all principal minors: PSD iff every one is ≥ 0.
inline bool is_psd(const IMat& a) {
  std::size_t n = a.size();
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    IMat m(idx.size(), std::vector<I64>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m[i][j] = a[idx[i]][idx[j]];
    if (idet(m) < 0) return false;
  }
  return true;
}

// Leading principal minors all positive.
inline bool is_pd(const IMat& a) {
  for (std::size_t k = 1; k <= a.size(); ++k) {
    IMat m(k, std::vector<I64>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = a[i][j];
    if (idet(m) <= 0) return false;
  }
  return true;
}

inline bool is_sym(const IMat& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

inline loghat::QMatrix to_q(const IMat& a) {
  std::size_t r = a.size(), c = r ? a[0].size() : 0;
  loghat::QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(a[i][j]);
  return m;
}

inline IMat from_q(const loghat::QMatrix& m) {
  IMat a(m.rows(), std::vector<I64>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num().get_si();
  return a;
}

inline IMat random_imat(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IMat a(r, std::vector<I64>(c));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

// Random unimodular matrix: product of elementary transvections.
inline IMat random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  IMat u(n, std::vector<I64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    I64 c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
  }
  return u;
}

}  // namespace oracle
