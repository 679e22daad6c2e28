#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loghat {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);
bool is_integral(const BigRat& x);
int sign(const BigInt& x);
int sign(const BigRat& x);
BigInt abs_int(const BigInt& x);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt parse_int(std::string_view text);
std::string to_string(const BigInt& x);
std::string to_string(const BigRat& x);

// Largest s with s*s <= n; n >= 0.
BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);

}  // namespace loghat
