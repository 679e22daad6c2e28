#include "loghat/linalg.hpp"

#include <utility>

#include "loghat/error.hpp"

namespace loghat {

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

IntRows to_int_rows(const QMatrix& a) {
  if (!a.is_integer()) throw PreconditionError("integer matrix expected");
  IntRows m(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_num();
  return m;
}

QMatrix from_int_rows(const IntRows& m, std::size_t cols) {
  QMatrix a(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = m[i][j];
  return a;
}

IntRows identity_rows(std::size_t n) {
  IntRows m(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

QMatrix rref(const QMatrix& a, std::vector<std::size_t>* pivots) {
  QMatrix m = a;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    BigRat inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      BigRat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const QMatrix& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

BigRat det(const QMatrix& a) {
  if (!a.is_square()) throw PreconditionError("determinant of non-square matrix");
  QMatrix m = a;
  const std::size_t n = m.rows();
  BigRat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      BigRat f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

QMatrix inverse(const QMatrix& a) {
  if (!a.is_square()) throw PreconditionError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, QMatrix::identity(n));
  std::vector<std::size_t> piv;
  QMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw PreconditionError("singular matrix");
  return r.block(0, n, n, n);
}

QMatrix adjugate(const QMatrix& a) {
  if (!a.is_square()) throw PreconditionError("adjugate of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  BigRat d = det(a);
  if (d != 0) return d * inverse(a);
  QMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      BigRat m = det(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? m : BigRat(-m);
    }
  return adj;
}

std::vector<QVector> nullspace(const QMatrix& a) {
  std::vector<std::size_t> piv;
  QMatrix r = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(a.cols(), BigRat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw PreconditionError("solve: shape mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  std::vector<std::size_t> piv;
  QMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  QVector x(a.cols(), BigRat(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, a.cols());
  return x;
}

RatPoly char_poly_rational(const QMatrix& a) {
  if (!a.is_square()) throw PreconditionError("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    const std::size_t c = m - 1;
    std::size_t p = m;
    while (p < n && h(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, m));
    }
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h(j, c) == 0) continue;
      BigRat u = h(j, c) / h(m, c);
      for (std::size_t l = 0; l < n; ++l) h(j, l) -= u * h(m, l);
      for (std::size_t l = 0; l < n; ++l) h(l, m) += u * h(l, j);
    }
  }
  // p_k = (x − h_kk) p_{k−1} − Σ_{i<k} h_ik (∏_{j=i+1}^{k} h_{j,j−1}) p_{i−1}, 1-indexed.
  std::vector<RatPoly> p(n + 1);
  p[0] = RatPoly::constant(1);
  const RatPoly x = RatPoly::x();
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (x - RatPoly::constant(h(k - 1, k - 1))) * p[k - 1];
    BigRat prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      BigRat f = h(i - 1, k - 1) * prod;
      if (f != 0) p[k] -= f * p[i - 1];
    }
  }
  return p[n];
}

IntPoly char_poly(const QMatrix& a) {
  if (!a.is_square()) throw PreconditionError("characteristic polynomial of non-square matrix");
  if (!a.is_integer()) throw PreconditionError("characteristic polynomial needs integer entries");
  auto p = to_int(char_poly_rational(a));
  if (!p) throw Error("internal: non-integral characteristic polynomial");
  return *p;
}

QMatrix evaluate(const RatPoly& p, const QMatrix& a) {
  if (!a.is_square()) throw PreconditionError("polynomial of non-square matrix");
  QMatrix acc(a.rows(), a.cols());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * a + QMatrix::scalar(a.rows(), *it);
  return acc;
}

QMatrix evaluate(const IntPoly& p, const QMatrix& a) { return evaluate(to_rat(p), a); }

SmithForm smith_normal_form(const QMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntRows d = to_int_rows(a);
  IntRows u = identity_rows(m), v = identity_rows(n);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  // row_i += f·row_j
  auto add_row = [&](std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t c = 0; c < n; ++c) d[i][c] += f * d[j][c];
    for (std::size_t c = 0; c < m; ++c) u[i][c] += f * u[j][c];
  };
  auto add_col = [&](std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t r = 0; r < m; ++r) d[r][i] += f * d[r][j];
    for (std::size_t r = 0; r < n; ++r) v[r][i] += f * v[r][j];
  };

  const std::size_t steps = std::min(m, n);
  std::size_t rk = 0;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot of minimal absolute value in the trailing block.
      std::size_t pi = m, pj = n;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d[i][j] == 0) continue;
          if (pi == m || abs(d[i][j]) < best) {
            best = abs(d[i][j]);
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break;
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
        if (q != 0) add_row(i, t, -q);
        if (d[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
        if (q != 0) add_col(j, t, -q);
        if (d[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d[i][j].get_mpz_t(), d[t][t].get_mpz_t())) {
            add_row(t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (d[t][t] == 0) break;
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
    ++rk;
  }
  SmithForm s;
  s.U = from_int_rows(u, m);
  s.D = from_int_rows(d, n);
  s.V = from_int_rows(v, n);
  s.rank = rk;
  for (std::size_t t = 0; t < steps; ++t) s.diagonal.push_back(d[t][t]);
  return s;
}

QMatrix hermite_rows(const QMatrix& a) {
  IntRows h = to_int_rows(a);
  const std::size_t m = h.size(), n = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = row; i < m; ++i)
        if (h[i][col] != 0 && (p == m || abs(h[i][col]) < abs(h[p][col]))) p = i;
      if (p == m) break;
      std::swap(h[p], h[row]);
      bool done = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h[i][col] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][col].get_mpz_t(), h[row][col].get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) h[i][j] -= q * h[row][j];
        if (h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0)
      for (auto& x : h[row]) x = -x;
    for (std::size_t i = 0; i < row; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][col].get_mpz_t(), h[row][col].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) h[i][j] -= q * h[row][j];
    }
    ++row;
  }
  h.resize(row);
  return from_int_rows(h, n);
}

QMatrix integer_kernel(const QMatrix& a) {
  const std::size_t n = a.cols();
  SmithForm s = smith_normal_form(a);
  if (s.rank == n) return QMatrix(n, 0);
  QMatrix basis = s.V.block(0, s.rank, n, n - s.rank).transpose();
  return hermite_rows(basis).transpose();
}

std::optional<BigInt> cokernel_order(const QMatrix& a) {
  SmithForm s = smith_normal_form(a);
  if (s.rank < a.rows()) return std::nullopt;
  BigInt o = 1;
  for (std::size_t i = 0; i < s.rank; ++i) o *= s.diagonal[i];
  return o;
}

}  // namespace loghat
