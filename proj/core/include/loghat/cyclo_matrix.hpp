#pragma once

#include <cstddef>
#include <vector>

#include "loghat/cyclotomic.hpp"

namespace loghat {

using CycloVector = std::vector<CycloElem>;

// Dense matrix over Q(ζ_r).
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(FieldPtr f, std::size_t rows, std::size_t cols);
  static CycloMatrix identity(FieldPtr f, std::size_t n);
  static CycloMatrix scalar(FieldPtr f, std::size_t n, const CycloElem& s);
  // Inverse of regular(): every φ×φ block must be a multiplication matrix.
  static CycloMatrix from_regular(const QMatrix& m, FieldPtr f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int r() const { return f_ ? f_->r() : 0; }
  const FieldPtr& field() const { return f_; }
  CycloElem& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const CycloElem& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  CycloMatrix transpose() const;
  CycloMatrix conj_transpose() const;
  // Rational matrix of size (rows·φ)×(cols·φ), block (i,j) = mult_matrix(entry).
  QMatrix regular() const;
  bool is_zero() const;
  bool is_scalar() const;
  std::string to_string(const std::string& var = "z") const;

  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }
  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloElem& s, const CycloMatrix& a);
  friend CycloVector operator*(const CycloMatrix& a, const CycloVector& v);

 private:
  FieldPtr f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CycloElem> e_;
};

CycloMatrix from_rational(const QMatrix& m, const FieldPtr& f);

CycloElem det(const CycloMatrix& a);
CycloMatrix inverse(const CycloMatrix& a);
std::size_t rank(const CycloMatrix& a);
// Basis of {v : A v = 0} over Q(ζ_r).
std::vector<CycloVector> nullspace(const CycloMatrix& a);
// Row echelon basis of the span of the given vectors.
std::vector<CycloVector> span_basis(const std::vector<CycloVector>& vs);

// Monic minimal polynomial over Q(ζ_r), lowest degree first.
CycloVector minimal_polynomial(const CycloMatrix& a);
CycloElem evaluate(const CycloVector& poly, const CycloElem& x);

struct FieldRoots {
  std::vector<CycloElem> roots;  // distinct, each verified exactly
  bool complete = true;          // false if the candidate enumeration was capped
};
// Roots in Q(ζ_r) of a nonzero polynomial with coefficients in Q(ζ_r).
FieldRoots roots_in_field(const CycloVector& poly);

}  // namespace loghat
