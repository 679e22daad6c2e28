#pragma once

#include "loghat/polynomial.hpp"

namespace loghat {

// Point of the extended real line of the form u + v·√d (d > 0), or ±∞.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  BigRat u = 0, v = 0;
  BigInt d = 1;

  static Endpoint neg_inf() { return {Kind::NegInf, 0, 0, 1}; }
  static Endpoint pos_inf() { return {Kind::PosInf, 0, 0, 1}; }
  static Endpoint rational(const BigRat& x) { return {Kind::Finite, x, 0, 1}; }
  static Endpoint quadratic(const BigRat& u, const BigRat& v, const BigInt& d);
};

// Sign of u + v·√d.
int sign_quadratic(const BigRat& u, const BigRat& v, const BigInt& d);
// Sign of p at a finite or infinite endpoint, exact.
int sign_at(const IntPoly& p, const Endpoint& e);
// -1, 0, 1; irrational endpoints must share d unless one is rational.
int compare(const Endpoint& a, const Endpoint& b);

// Number of distinct real roots of p in the open interval (a, b).
std::size_t sturm_count(const IntPoly& p, const Endpoint& a, const Endpoint& b);

}  // namespace loghat
