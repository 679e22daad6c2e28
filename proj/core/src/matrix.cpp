#include "loghat/matrix.hpp"

#include <sstream>

#include "loghat/error.hpp"

namespace loghat {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  e_.reserve(r_ * c_);
  for (const auto& row : rows) {
    if (row.size() != c_) throw ValidationError("ragged matrix literal");
    for (long v : row) e_.emplace_back(v);
  }
}

QMatrix QMatrix::identity(std::size_t n) { return scalar(n, 1); }

QMatrix QMatrix::scalar(std::size_t n, const BigRat& s) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<BigRat>>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ValidationError("ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QMatrix QMatrix::block_diagonal(const std::vector<QMatrix>& blocks) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) nr += b.rows(), nc += b.cols();
  QMatrix m(nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    m.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(e_.begin() + static_cast<long>(i * c_), e_.begin() + static_cast<long>((i + 1) * c_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) throw PreconditionError("block out of range");
  QMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void QMatrix::set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
  if (r0 + b.rows() > r_ || c0 + b.cols() > c_) throw PreconditionError("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool QMatrix::is_integer() const {
  for (const auto& x : e_)
    if (!is_integral(x)) return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool QMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

BigRat QMatrix::trace() const {
  if (!is_square()) throw PreconditionError("trace of non-square matrix");
  BigRat t = 0;
  for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
  return t;
}

BigInt QMatrix::denominator() const {
  BigInt d = 1;
  for (const auto& x : e_) d = lcm(d, x.get_den());
  return d;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw PreconditionError("matrix sum shape mismatch");
  QMatrix m(a.r_, a.c_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw PreconditionError("matrix difference shape mismatch");
  QMatrix m(a.r_, a.c_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
  return m;
}

QMatrix operator-(const QMatrix& a) {
  QMatrix m(a.r_, a.c_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = -a.e_[i];
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.c_ != b.r_) throw PreconditionError("matrix product shape mismatch");
  QMatrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t l = 0; l < a.c_; ++l) {
      const BigRat& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(l, j);
    }
  return m;
}

QMatrix operator*(const BigRat& s, const QMatrix& a) {
  QMatrix m(a.r_, a.c_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = s * a.e_[i];
  return m;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.c_ != v.size()) throw PreconditionError("matrix-vector shape mismatch");
  QVector out(a.r_, BigRat(0));
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < c_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

BigRat dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw PreconditionError("dot product length mismatch");
  BigRat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigRat quadratic_form(const QMatrix& a, const QVector& v) { return dot(v, a * v); }

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

}  // namespace loghat
