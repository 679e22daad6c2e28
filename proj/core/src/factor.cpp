#include "loghat/factor.hpp"

#include <algorithm>
#include <functional>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "loghat/cyclotomic.hpp"
#include "loghat/error.hpp"
#include "loghat/numeric.hpp"

namespace loghat {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::cpp_bin_float<60>, mp::et_off>;

std::vector<PolyFactor> squarefree_decomposition(const IntPoly& p) {
  std::vector<PolyFactor> out;
  if (p.degree() <= 0) return out;
  RatPoly f = to_rat(p);
  RatPoly a = gcd(f, f.derivative());
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(f.derivative(), a).first;
  RatPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    RatPoly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({primitive_part(g), i});
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::map<int, unsigned> peel_cyclotomic(const IntPoly& p, IntPoly* rest) {
  std::map<int, unsigned> mult;
  IntPoly cur = p;
  if (cur.degree() > 0) {
    for (int r : conductors_up_to_phi(cur.degree())) {
      if (euler_phi(r) > cur.degree()) continue;
      IntPoly fr = cyclotomic_poly(r);
      while (cur.degree() >= fr.degree()) {
        auto q = exact_divide(cur, fr);
        if (!q) break;
        cur = std::move(*q);
        ++mult[r];
      }
    }
  }
  if (rest) *rest = cur;
  return mult;
}

namespace {

constexpr int kSearchDegreeCap = 20;

BigInt round_to_int(const Real& x) {
  mp::cpp_int i = static_cast<mp::cpp_int>(mp::round(x));
  return BigInt(i.str());
}

struct Orbit {
  std::vector<Cx<Real>> roots;  // one real root or a conjugate pair
};

std::vector<Orbit> root_orbits(const IntPoly& g) {
  std::vector<Cx<Real>> c;
  for (const auto& x : g.coeffs()) c.emplace_back(Real(x.get_str()), Real(0));
  auto rts = polynomial_roots<Real>(c, Real("1e-50"));
  std::vector<Orbit> orbits;
  std::vector<bool> used(rts.size(), false);
  const Real eps("1e-30");
  for (std::size_t i = 0; i < rts.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (mp::abs(rts[i].im) <= eps * (1 + rts[i].modulus())) {
      rts[i].im = 0;
      orbits.push_back({{rts[i]}});
      continue;
    }
    std::size_t best = rts.size();
    Real best_d = 0;
    for (std::size_t j = 0; j < rts.size(); ++j) {
      if (used[j]) continue;
      Real d = (rts[j] - rts[i].conj()).modulus();
      if (best == rts.size() || d < best_d) best = j, best_d = d;
    }
    if (best == rts.size()) throw Error("internal: unpaired complex root");
    used[best] = true;
    orbits.push_back({{rts[i], rts[i].conj()}});
  }
  return orbits;
}

IntPoly candidate(const std::vector<Orbit>& orbits, const std::vector<std::size_t>& pick, const BigInt& lead) {
  std::vector<Cx<Real>> prod{Cx<Real>(Real(1))};
  for (auto k : pick)
    for (const auto& z : orbits[k].roots) {
      std::vector<Cx<Real>> next(prod.size() + 1, Cx<Real>(Real(0)));
      for (std::size_t i = 0; i < prod.size(); ++i) {
        next[i + 1] = next[i + 1] + prod[i];
        next[i] = next[i] - prod[i] * z;
      }
      prod = std::move(next);
    }
  Real l(lead.get_str());
  std::vector<BigInt> coeffs;
  for (auto& z : prod) coeffs.push_back(round_to_int(z.re * l));
  return primitive_part(IntPoly(std::move(coeffs)));
}

// Recursively split a primitive squarefree polynomial with no rational roots.
void split(const IntPoly& g, std::vector<IntPoly>& out) {
  const int n = g.degree();
  if (n <= 1) {
    if (n == 1) out.push_back(g);
    return;
  }
  if (n > kSearchDegreeCap) throw Error("factor search limit exceeded (degree " + std::to_string(n) + ")");
  auto orbits = root_orbits(g);
  const std::size_t m = orbits.size();
  // Subsets in order of increasing total degree, up to n/2.
  for (int target = 1; target <= n / 2; ++target) {
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int deg) -> bool {
      if (deg == target) {
        IntPoly h = candidate(orbits, pick, g.lead());
        if (h.degree() != target) return false;
        if (auto q = exact_divide(g, h)) {
          split(h, out);
          split(primitive_part(*q), out);
          return true;
        }
        return false;
      }
      for (std::size_t k = start; k < m; ++k) {
        int d = static_cast<int>(orbits[k].roots.size());
        if (deg + d > target) continue;
        pick.push_back(k);
        if (rec(k + 1, deg + d)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(0, 0)) return;
  }
  out.push_back(g);
}

}  // namespace

std::vector<PolyFactor> factor_integer_poly(const IntPoly& p) {
  std::map<std::string, PolyFactor> acc;
  std::vector<std::string> order;
  auto add = [&](const IntPoly& f, unsigned e) {
    IntPoly pf = primitive_part(f);
    std::string key = format(pf);
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(key, PolyFactor{pf, e});
      order.push_back(key);
    } else {
      it->second.multiplicity += e;
    }
  };
  for (const auto& sf : squarefree_decomposition(p)) {
    IntPoly rest;
    for (auto [r, e] : peel_cyclotomic(sf.poly, &rest)) add(cyclotomic_poly(r), e * sf.multiplicity);
    if (rest.degree() <= 0) continue;
    std::vector<IntPoly> parts;
    split(primitive_part(rest), parts);
    for (const auto& f : parts) add(f, sf.multiplicity);
  }
  std::vector<PolyFactor> out;
  for (const auto& k : order) out.push_back(acc.at(k));
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return format(a.poly) < format(b.poly);
  });
  return out;
}

bool is_irreducible(const IntPoly& p) {
  if (p.degree() <= 0) return false;
  auto f = factor_integer_poly(p);
  return f.size() == 1 && f.front().multiplicity == 1;
}

}  // namespace loghat
