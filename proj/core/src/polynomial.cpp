#include "loghat/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "loghat/error.hpp"

namespace loghat {

IntPoly int_poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

RatPoly to_rat(const IntPoly& p) {
  std::vector<BigRat> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

std::optional<IntPoly> to_int(const RatPoly& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (!is_integral(c)) return std::nullopt;
    v.emplace_back(c.get_num());
  }
  return IntPoly(std::move(v));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  BigInt den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<BigInt> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c.get_num() * (den / c.get_den()));
  return primitive_part(IntPoly(std::move(v)));
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  BigInt g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<BigInt> v(p.coeffs());
  for (auto& c : v) c /= g;
  return IntPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<BigRat> r(a.coeffs());
  std::vector<BigRat> q(a.degree() - b.degree() + 1, BigRat(0));
  const int db = b.degree();
  const BigRat& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    BigRat f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rat(a), to_rat(b));
  if (!r.is_zero()) return std::nullopt;
  return to_int(q);
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  BigRat inv = 1 / p.lead();
  return inv * p;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

ExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1{};
  RatPoly t0{}, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  BigRat inv = 1 / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  RatPoly rp = to_rat(p);
  RatPoly g = gcd(rp, rp.derivative());
  return primitive_part(divmod(rp, g).first);
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() <= 0) return true;
  RatPoly rp = to_rat(p);
  return gcd(rp, rp.derivative()).degree() == 0;
}

IntPoly pow(const IntPoly& p, unsigned e) {
  IntPoly result = IntPoly::constant(1), base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

BigRat evaluate(const IntPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRat evaluate(const RatPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

template <class T>
std::string format_impl(const Polynomial<T>& p, PolyFormat fmt) {
  if (p.is_zero()) return "0";
  const std::string minus = fmt.unicode ? "−" : "-";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeffs()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    T a = neg ? T(-c) : c;
    if (first) {
      if (neg) os << minus;
    } else {
      os << (neg ? minus : std::string("+"));
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || i == 0) os << a.get_str();
    if (i >= 1) os << fmt.var;
    if (i >= 2) os << (fmt.unicode ? superscript(i) : "^" + std::to_string(i));
  }
  return os.str();
}

}  // namespace

std::string format(const IntPoly& p, PolyFormat fmt) { return format_impl(p, fmt); }
std::string format(const RatPoly& p, PolyFormat fmt) { return format_impl(p, fmt); }

}  // namespace loghat
