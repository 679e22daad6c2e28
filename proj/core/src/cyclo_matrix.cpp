#include "loghat/cyclo_matrix.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numeric>

#include "loghat/error.hpp"
#include "loghat/numeric.hpp"

namespace loghat {

CycloMatrix::CycloMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, CycloElem(f_)) {}

CycloMatrix CycloMatrix::identity(FieldPtr f, std::size_t n) {
  return scalar(f, n, CycloElem::rational(f, 1));
}

CycloMatrix CycloMatrix::scalar(FieldPtr f, std::size_t n, const CycloElem& s) {
  CycloMatrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

CycloMatrix CycloMatrix::from_regular(const QMatrix& m, FieldPtr f) {
  const std::size_t phi = static_cast<std::size_t>(f->phi());
  if (m.rows() % phi || m.cols() % phi) throw PreconditionError("size is not a multiple of φ(r)");
  CycloMatrix out(f, m.rows() / phi, m.cols() / phi);
  for (std::size_t i = 0; i < out.rows_; ++i)
    for (std::size_t j = 0; j < out.cols_; ++j) {
      QMatrix b = m.block(i * phi, j * phi, phi, phi);
      CycloElem x = from_column(f, b.column(0));
      if (mult_matrix(x) != b) throw PreconditionError("matrix does not commute with ζ_r");
      out(i, j) = x;
    }
  return out;
}

CycloMatrix from_rational(const QMatrix& m, const FieldPtr& f) {
  CycloMatrix out(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = CycloElem::rational(f, m(i, j));
  return out;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CycloMatrix CycloMatrix::conj_transpose() const {
  CycloMatrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
  return t;
}

QMatrix CycloMatrix::regular() const {
  const std::size_t phi = static_cast<std::size_t>(f_->phi());
  QMatrix out(rows_ * phi, cols_ * phi);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set_block(i * phi, j * phi, mult_matrix((*this)(i, j)));
  return out;
}

bool CycloMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool CycloMatrix::is_scalar() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
      if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
    }
  return true;
}

std::string CycloMatrix::to_string(const std::string& var) const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string(var);
    s += "]";
  }
  return s + "]";
}

namespace {

void check_same(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.r() != b.r()) throw PreconditionError("conductor mismatch");
}

}  // namespace

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
  check_same(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("shape mismatch");
  CycloMatrix c(a.f_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
  return c;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
  check_same(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("shape mismatch");
  CycloMatrix c(a.f_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
  return c;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  check_same(a, b);
  if (a.cols_ != b.rows_) throw PreconditionError("shape mismatch");
  CycloMatrix c(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

CycloMatrix operator*(const CycloElem& s, const CycloMatrix& a) {
  CycloMatrix c(a.f_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = s * a.e_[i];
  return c;
}

CycloVector operator*(const CycloMatrix& a, const CycloVector& v) {
  if (v.size() != a.cols_) throw PreconditionError("shape mismatch");
  CycloVector out(a.rows_, CycloElem(a.f_));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_rows(std::vector<CycloVector>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    CycloElem inv = invert(m[row][col]);
    for (auto& x : m[row]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      CycloElem f = m[i][col];
      for (std::size_t j = col; j < m[i].size(); ++j)
        if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::vector<CycloVector> to_rows(const CycloMatrix& a) {
  std::vector<CycloVector> rows(a.rows(), CycloVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return rows;
}

}  // namespace

CycloElem det(const CycloMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  auto m = to_rows(a);
  CycloElem d = CycloElem::rational(a.field(), 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return CycloElem(a.field());
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    CycloElem inv = invert(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      CycloElem f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

CycloMatrix inverse(const CycloMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<CycloVector> m(n, CycloVector(2 * n, CycloElem(a.field())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n + i] = CycloElem::rational(a.field(), 1);
  }
  auto piv = rref_rows(m, n);
  if (piv.size() != n) throw PreconditionError("singular matrix over Q(ζ_r)");
  CycloMatrix out(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m[i][n + j];
  return out;
}

std::size_t rank(const CycloMatrix& a) {
  auto m = to_rows(a);
  return rref_rows(m, a.cols()).size();
}

std::vector<CycloVector> nullspace(const CycloMatrix& a) {
  auto m = to_rows(a);
  auto piv = rref_rows(m, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<CycloVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    CycloVector v(a.cols(), CycloElem(a.field()));
    v[free] = CycloElem::rational(a.field(), 1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<CycloVector> span_basis(const std::vector<CycloVector>& vs) {
  if (vs.empty()) return {};
  auto m = vs;
  rref_rows(m, vs.front().size());
  return m;
}

CycloVector minimal_polynomial(const CycloMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const FieldPtr& f = a.field();
  std::vector<CycloMatrix> powers{CycloMatrix::identity(f, n)};
  for (std::size_t m = 1; m <= n; ++m) {
    powers.push_back(powers.back() * a);
    // Columns vec(A^0..A^m); a kernel vector gives the relation.
    CycloMatrix sys(f, n * n, m + 1);
    for (std::size_t j = 0; j <= m; ++j)
      for (std::size_t e = 0; e < n * n; ++e) sys(e, j) = powers[j](e / n, e % n);
    auto ker = nullspace(sys);
    if (ker.empty()) continue;
    CycloVector rel = ker.front();
    CycloElem lead = rel[m];
    if (lead.is_zero()) throw Error("internal: minimal polynomial relation lost its leading term");
    CycloElem inv = invert(lead);
    for (auto& c : rel) c = c * inv;
    return rel;
  }
  throw Error("internal: no polynomial relation up to the matrix size");
}

CycloElem evaluate(const CycloVector& poly, const CycloElem& x) {
  CycloElem acc(x.field());
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

namespace {

using cld = std::complex<long double>;

std::vector<cld> embedded_roots(const std::vector<CycloElem>& intpoly, int s) {
  std::vector<Cx<long double>> c;
  for (const auto& x : intpoly) {
    cld z = embed(x, s);
    c.emplace_back(z.real(), z.imag());
  }
  auto rts = polynomial_roots<long double>(c, 1e-16L);
  std::vector<cld> out;
  for (auto& z : rts) out.emplace_back(z.re, z.im);
  return out;
}

}  // namespace

FieldRoots roots_in_field(const CycloVector& poly) {
  FieldRoots result;
  std::size_t deg = poly.size();
  while (deg > 0 && poly[deg - 1].is_zero()) --deg;
  if (deg == 0) throw PreconditionError("roots of the zero polynomial");
  if (deg == 1) return result;
  const FieldPtr& f = poly.front().field();
  const int n = static_cast<int>(deg) - 1;
  const int phi = f->phi(), r = f->r();

  // Monic with algebraic-integer coefficients: x = y / D.
  CycloElem inv_lead = invert(poly[n]);
  CycloVector m(n + 1);
  BigInt D = 1;
  for (int i = 0; i <= n; ++i) {
    m[i] = poly[i] * inv_lead;
    for (const auto& c : m[i].coeffs()) D = lcm(D, BigInt(c.get_den()));
  }
  CycloVector y(n + 1);
  BigInt Dp = 1;
  for (int i = n; i >= 0; --i) {
    y[i] = BigRat(Dp) * m[i];
    Dp *= D;
  }

  // Embeddings ζ ↦ e^{2πis/r}, one per complex-conjugate pair.
  std::vector<int> units;
  for (int s = 1; s <= std::max(1, r); ++s)
    if (std::gcd(s, r) == 1 && (2 * s <= r || r <= 2)) units.push_back(s);
  if (r <= 2) units = {1};
  std::vector<std::vector<cld>> rts;
  for (int s : units) rts.push_back(embedded_roots(y, s));

  long double combos = std::pow(static_cast<long double>(n), static_cast<long double>(units.size()));
  const long double cap = 2e5L;
  if (combos > cap) result.complete = false;

  // Vandermonde over all φ embeddings: row s, column j = e^{2πisj/r}.
  std::vector<int> all;
  for (int s = 1; s <= std::max(1, r); ++s)
    if (std::gcd(s, r) == 1) all.push_back(s);
  Eigen::Matrix<cld, Eigen::Dynamic, Eigen::Dynamic> V(phi, phi);
  const long double two_pi = 6.283185307179586476925286766559L;
  for (int a = 0; a < phi; ++a)
    for (int j = 0; j < phi; ++j) {
      long double ang = two_pi * static_cast<long double>((static_cast<long>(all[a]) * j) % r) / r;
      V(a, j) = cld(std::cos(ang), std::sin(ang));
    }
  Eigen::PartialPivLU<decltype(V)> lu(V);

  std::vector<std::size_t> idx(units.size(), 0);
  long double visited = 0;
  while (visited < cap) {
    ++visited;
    Eigen::Matrix<cld, Eigen::Dynamic, 1> rhs(phi);
    for (int a = 0; a < phi; ++a) {
      int s = all[a];
      for (std::size_t u = 0; u < units.size(); ++u) {
        if (units[u] == s) rhs(a) = rts[u][idx[u]];
        else if ((units[u] + s) % std::max(r, 1) == 0) rhs(a) = std::conj(rts[u][idx[u]]);
      }
    }
    Eigen::Matrix<cld, Eigen::Dynamic, 1> sol = lu.solve(rhs);
    std::vector<BigRat> coords(phi);
    bool ok = true;
    for (int j = 0; j < phi && ok; ++j) {
      long double re = sol(j).real();
      long double rounded = std::round(re);
      if (std::fabs(re - rounded) > 0.25L || std::fabs(sol(j).imag()) > 0.25L || std::fabs(rounded) > 1e17L) ok = false;
      else coords[j] = BigRat(BigInt(static_cast<long>(rounded)));
    }
    if (ok) {
      CycloElem cand(f, coords);
      if (evaluate(y, cand).is_zero()) {
        CycloElem root = BigRat(1, 1) / BigRat(D) * cand;
        bool seen = false;
        for (const auto& x : result.roots) seen = seen || x == root;
        if (!seen) result.roots.push_back(root);
      }
    }
    std::size_t u = 0;
    while (u < idx.size() && ++idx[u] == rts[u].size()) idx[u++] = 0;
    if (u == idx.size()) break;
  }
  return result;
}

}  // namespace loghat
