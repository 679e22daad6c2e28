#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "loghat/matrix.hpp"
#include "loghat/polynomial.hpp"

namespace loghat {

int euler_phi(int r);
int moebius(int n);
std::vector<int> divisors(int r);
// Every r with φ(r) <= n, ascending.
std::vector<int> conductors_up_to_phi(int n);

IntPoly cyclotomic_poly(int r);
// |disc(Z[ζ_r])| = r^φ / ∏_{p | r} p^{φ/(p−1)}.
BigInt cyclotomic_discriminant_abs(int r);

// Immutable context for Q(ζ_r): modulus F_r, reductions of ζ^k, basis traces.
class CyclotomicField {
 public:
  explicit CyclotomicField(int r);
  int r() const { return r_; }
  int phi() const { return phi_; }
  const IntPoly& modulus() const { return modulus_; }
  // Power-basis coordinates of ζ^k.
  const std::vector<BigInt>& power(long k) const;
  const BigInt& basis_trace(int j) const { return trace_[j]; }

 private:
  int r_, phi_;
  IntPoly modulus_;
  std::vector<std::vector<BigInt>> pow_;
  std::vector<BigInt> trace_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;
FieldPtr cyclotomic_field(int r);

class CycloElem {
 public:
  CycloElem() = default;
  explicit CycloElem(FieldPtr f);
  CycloElem(FieldPtr f, std::vector<BigRat> coeffs);
  static CycloElem rational(FieldPtr f, const BigRat& x);
  static CycloElem zeta_power(FieldPtr f, long k);

  int r() const { return f_ ? f_->r() : 0; }
  const FieldPtr& field() const { return f_; }
  const std::vector<BigRat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  bool has_integer_coeffs() const;
  std::string to_string(const std::string& var = "z") const;

  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.r() == b.r() && a.c_ == b.c_; }
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }
  friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator-(const CycloElem& a);
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(const BigRat& s, const CycloElem& a);
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b);
  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

 private:
  FieldPtr f_;
  std::vector<BigRat> c_;
};

CycloElem invert(const CycloElem& x);
CycloElem conj(const CycloElem& x);
BigRat trace(const CycloElem& x);
BigRat norm(const CycloElem& x);
// Matrix of y ↦ x·y in the power basis (column j = x·ζ^j).
QMatrix mult_matrix(const CycloElem& x);
RatPoly charpoly(const CycloElem& x);
CycloElem from_column(const FieldPtr& f, const QVector& coords);

bool is_totally_real(const CycloElem& x);
bool is_totally_positive(const CycloElem& x);
bool in_inverse_different(const CycloElem& x);
// g with g·Z[ζ_r] = d^{-1}, verified against the trace condition and |disc|.
CycloElem inverse_different_generator(int r);
CycloElem inverse_different_generator(const FieldPtr& f);

// Image under ζ ↦ exp(2πi s / r).
std::complex<long double> embed(const CycloElem& x, int s);

}  // namespace loghat
