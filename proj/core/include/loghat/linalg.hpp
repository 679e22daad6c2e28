#pragma once

#include <optional>
#include <vector>

#include "loghat/matrix.hpp"
#include "loghat/polynomial.hpp"

namespace loghat {

BigRat det(const QMatrix& a);
std::size_t rank(const QMatrix& a);
QMatrix inverse(const QMatrix& a);  // throws on singular input
QMatrix adjugate(const QMatrix& a);

// Reduced row echelon form; pivot columns returned through `pivots`.
QMatrix rref(const QMatrix& a, std::vector<std::size_t>* pivots = nullptr);
// Basis of {v : a v = 0} over Q.
std::vector<QVector> nullspace(const QMatrix& a);
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

RatPoly char_poly_rational(const QMatrix& a);
// det(θI − A) for square A with integer entries.
IntPoly char_poly(const QMatrix& a);
QMatrix evaluate(const RatPoly& p, const QMatrix& a);
QMatrix evaluate(const IntPoly& p, const QMatrix& a);

struct SmithForm {
  QMatrix U, D, V;             // D = U·A·V
  std::vector<BigInt> diagonal;  // d_1 | d_2 | ..., nonnegative
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const QMatrix& a);

// Row Hermite normal form of an integer matrix (same row lattice, zero rows dropped).
QMatrix hermite_rows(const QMatrix& a);
// Columns form a Z-basis of {v ∈ Z^n : a v = 0}.
QMatrix integer_kernel(const QMatrix& a);
// Order of Z^rows / image(a); nullopt when infinite.
std::optional<BigInt> cokernel_order(const QMatrix& a);

}  // namespace loghat
