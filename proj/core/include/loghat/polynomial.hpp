#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loghat/numbers.hpp"

namespace loghat {

// Dense univariate polynomial, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(const T& c, std::size_t deg) {
    std::vector<T> v(deg + 1, T(0));
    v[deg] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> v(a.c_);
    for (auto& x : v) x = -x;
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> v(a.c_);
    for (auto& x : v) x *= s;
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = T(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<BigRat>;

IntPoly int_poly(std::initializer_list<long> coeffs);
RatPoly to_rat(const IntPoly& p);
// Integer polynomial if every coefficient is integral.
std::optional<IntPoly> to_int(const RatPoly& p);

BigInt content(const IntPoly& p);
// Scaled by a nonzero rational to a primitive integer polynomial with positive leading coefficient.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// a / b when the quotient is exact with integer coefficients.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);
RatPoly monic(const RatPoly& p);
RatPoly gcd(const RatPoly& a, const RatPoly& b);

struct ExtGcd {
  RatPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b);

IntPoly squarefree_part(const IntPoly& p);
bool is_squarefree(const IntPoly& p);
IntPoly pow(const IntPoly& p, unsigned e);

BigRat evaluate(const IntPoly& p, const BigRat& x);
BigRat evaluate(const RatPoly& p, const BigRat& x);

struct PolyFormat {
  std::string_view var = "x";
  bool unicode = false;  // U+2212 minus sign, superscript exponents
};
std::string format(const IntPoly& p, PolyFormat fmt = {});
std::string format(const RatPoly& p, PolyFormat fmt = {});

}  // namespace loghat
