#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "loghat/numbers.hpp"

namespace loghat {

using QVector = std::vector<BigRat>;

// Dense rational matrix, row-major. Zero-sized matrices are allowed so that
// rank-0 lattices can be represented.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols, BigRat(0)) {}
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix scalar(std::size_t n, const BigRat& s);
  static QMatrix from_rows(const std::vector<std::vector<BigRat>>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);
  static QMatrix block_diagonal(const std::vector<QMatrix>& blocks);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  BigRat& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const BigRat& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  const std::vector<BigRat>& entries() const { return e_; }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;
  QMatrix transpose() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& b);

  bool is_integer() const;
  bool is_symmetric() const;
  bool is_zero() const;
  BigRat trace() const;
  // Least common denominator of the entries.
  BigInt denominator() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const BigRat& s, const QMatrix& a);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  QMatrix& operator+=(const QMatrix& o) { return *this = *this + o; }

  std::string to_string() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<BigRat> e_;
};

BigRat dot(const QVector& a, const QVector& b);
// vᵀ A v
BigRat quadratic_form(const QMatrix& a, const QVector& v);
QMatrix kron(const QMatrix& a, const QMatrix& b);

}  // namespace loghat
