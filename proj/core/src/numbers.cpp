#include "loghat/numbers.hpp"

#include "loghat/error.hpp"

namespace loghat {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const BigRat& x) { return x.get_den() == 1; }

int sign(const BigInt& x) { return sgn(x); }
int sign(const BigRat& x) { return sgn(x); }

BigInt abs_int(const BigInt& x) { return abs(x); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt parse_int(std::string_view text) {
  BigInt x;
  if (text.empty() || x.set_str(std::string(text), 10) != 0)
    throw ValidationError("not an integer: '" + std::string(text) + "'");
  return x;
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const BigRat& x) { return x.get_str(); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw PreconditionError("isqrt of negative number");
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

bool is_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace loghat
