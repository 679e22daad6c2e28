#include "loghat/sturm.hpp"

#include <vector>

#include "loghat/error.hpp"

namespace loghat {

Endpoint Endpoint::quadratic(const BigRat& u, const BigRat& v, const BigInt& d) {
  if (d <= 0) throw PreconditionError("quadratic endpoint needs d > 0");
  return {Kind::Finite, u, v, d};
}

int sign_quadratic(const BigRat& u, const BigRat& v, const BigInt& d) {
  const int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  BigRat uu = u * u, vvd = v * v * BigRat(d);
  if (uu > vvd) return su;
  if (uu < vvd) return sv;
  return 0;
}

int sign_at(const IntPoly& p, const Endpoint& e) {
  if (p.is_zero()) return 0;
  if (e.kind == Endpoint::Kind::PosInf) return sgn(p.lead());
  if (e.kind == Endpoint::Kind::NegInf) return (p.degree() % 2 == 0) ? sgn(p.lead()) : -sgn(p.lead());
  // Horner in Q(√d): (A + B√d)(u + v√d) = (Au + Bvd) + (Av + Bu)√d.
  BigRat a = 0, b = 0;
  const BigRat dd(e.d);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    BigRat na = a * e.u + b * e.v * dd + *it;
    BigRat nb = a * e.v + b * e.u;
    a = std::move(na);
    b = std::move(nb);
  }
  return sign_quadratic(a, b, e.d);
}

int compare(const Endpoint& a, const Endpoint& b) {
  using K = Endpoint::Kind;
  auto rank = [](K k) { return k == K::NegInf ? 0 : (k == K::Finite ? 1 : 2); };
  if (a.kind != K::Finite || b.kind != K::Finite) {
    int ra = rank(a.kind), rb = rank(b.kind);
    return ra < rb ? -1 : (ra > rb ? 1 : 0);
  }
  if (a.v == 0) return -sign_quadratic(b.u - a.u, b.v, b.d);
  if (b.v == 0 || a.d == b.d) return sign_quadratic(a.u - b.u, b.v == 0 ? a.v : BigRat(a.v - b.v), a.d);
  throw PreconditionError("endpoints from different quadratic fields");
}

namespace {

// Integer multiple of p by a positive rational; signs are unchanged.
IntPoly positive_scale(const RatPoly& p) {
  IntPoly q = primitive_part(p);
  if (!p.is_zero() && sgn(p.lead()) < 0) q = -q;
  return q;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p, positive_scale(to_rat(p.derivative()))};
  while (chain.back().degree() > 0) {
    RatPoly r = divmod(to_rat(chain[chain.size() - 2]), to_rat(chain.back())).second;
    if (r.is_zero()) break;
    chain.push_back(positive_scale(-r));
  }
  return chain;
}

std::size_t variations(const std::vector<IntPoly>& chain, const Endpoint& e) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, e);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::size_t sturm_count(const IntPoly& p, const Endpoint& a, const Endpoint& b) {
  if (compare(a, b) >= 0) throw PreconditionError("sturm_count needs a < b");
  if (p.is_zero()) throw PreconditionError("sturm_count of zero polynomial");
  IntPoly f = squarefree_part(p);
  if (f.degree() <= 0) return 0;
  auto chain = sturm_chain(f);
  std::size_t va = variations(chain, a), vb = variations(chain, b);
  // V(a) − V(b) counts roots in (a, b].
  std::size_t n = va - vb;
  if (b.kind == Endpoint::Kind::Finite && sign_at(f, b) == 0) --n;
  return n;
}

}  // namespace loghat
