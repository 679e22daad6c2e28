#include "loghat/motive.hpp"

#include "loghat/classify.hpp"
#include "loghat/cyclotomic.hpp"
#include "loghat/error.hpp"
#include "loghat/factor.hpp"
#include "loghat/linalg.hpp"
#include "loghat/sturm.hpp"

namespace loghat {

bool is_prime_power(const BigInt& q) {
  if (q < 2) return false;
  const unsigned long bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (unsigned long e = 1; e <= bits; ++e) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), e) && mpz_probab_prime_p(root.get_mpz_t(), 30)) return true;
  }
  return false;
}

namespace {

// θ^g·h(θ + q/θ) = Σ h_j θ^{g−j}(θ² + q)^j.
std::optional<RatPoly> weil_trace_poly(const IntPoly& p, const BigInt& q) {
  const int n = p.degree();
  if (n % 2) return std::nullopt;
  const int g = n / 2;
  QMatrix sys(n + 1, g + 1);
  IntPoly base = IntPoly::constant(1);
  const IntPoly quad = IntPoly({BigInt(q), BigInt(0), BigInt(1)});
  for (int j = 0; j <= g; ++j) {
    IntPoly term = base * IntPoly::monomial(1, g - j);
    for (int i = 0; i <= n; ++i) sys(i, j) = term.coeff(i);
    base *= quad;
  }
  QVector rhs(n + 1);
  for (int i = 0; i <= n; ++i) rhs[i] = p.coeff(i);
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return RatPoly(*sol);
}

std::optional<int> matching_conductor(const RatPoly& p) {
  const int n = p.degree();
  if (n < 1) return std::nullopt;
  for (int r : conductors_up_to_phi(n))
    if (euler_phi(r) == n && to_rat(cyclotomic_poly(r)) == p) return r;
  return std::nullopt;
}

}  // namespace

WeightCheck weight_check(const IntPoly& p, const BigInt& q, int w) {
  if (!p.is_monic()) throw PreconditionError("weight_check needs a monic polynomial");
  if (w < 0 || w > 2) throw PreconditionError("weight must be 0, 1 or 2");
  auto require_irreducible = [&] {
    if (!is_irreducible(p)) throw PreconditionError("weight_check needs an irreducible polynomial; factor first");
  };
  WeightCheck out;
  // A match with F_r (or its image under α ↦ q/α) already proves irreducibility.
  if (w == 0 || w == 2) {
    out.ok = matching_conductor(w == 0 ? to_rat(p) : q_reciprocal(p, q)).has_value();
    if (!out.ok) {
      require_irreducible();
      out.reason = w == 0 ? "not a cyclotomic polynomial" : "q-reciprocal is not a cyclotomic polynomial";
    }
    return out;
  }
  require_irreducible();
  const int n = p.degree();
  if (n == 1) {
    // θ ∓ √q for square q.
    out.ok = is_square(q) && p.coeff(0) * p.coeff(0) == q;
    if (!out.ok) out.reason = "odd degree: only θ ± √q (q a square) is a real weight-1 factor";
    return out;
  }
  if (p == IntPoly({BigInt(-q), BigInt(0), BigInt(1)})) {
    out.ok = true;
    return out;
  }
  if (n % 2) {
    out.reason = "odd degree " + std::to_string(n) + " is impossible for a weight-1 factor";
    return out;
  }
  auto h = weil_trace_poly(p, q);
  if (!h) {
    out.reason = "not of the form θ^g·h(θ + q/θ)";
    return out;
  }
  auto hi = to_int(*h);
  if (!hi) {
    out.reason = "trace polynomial h is not integral";
    return out;
  }
  IntPoly sf = squarefree_part(*hi);
  const std::size_t inside =
      sturm_count(sf, Endpoint::quadratic(0, -2, q), Endpoint::quadratic(0, 2, q));
  out.ok = inside == static_cast<std::size_t>(sf.degree());
  if (!out.ok) out.reason = "h has roots outside (−2√q, 2√q)";
  return out;
}

IntPoly torus_charpoly(const GammaModule& x, const BigInt& q) {
  if (x.rank() == 0) return IntPoly::constant(1);
  auto p = to_int(q_reciprocal(x.charpoly(), q));
  if (!p) throw Error("internal: torus polynomial is not integral");
  return *p;
}

SymbolicLogOneMotive make_motive(const BigInt& q, std::size_t k, const GammaModule& y, const GammaModule& x,
                                 const std::vector<QMatrix>& pairing, const IntPoly& abelian, bool classical_torsion) {
  if (!is_prime_power(q)) throw ValidationError("q = " + q.get_str() + " is not a prime power");
  if (!abelian.is_monic()) throw ValidationError("abelian_poly must be monic");
  for (const auto& f : factor_integer_poly(abelian)) {
    WeightCheck c = weight_check(f.poly, q, 1);
    if (!c) throw ValidationError("abelian_poly factor " + format(f.poly) + " is not weight 1: " + c.reason);
  }
  SymbolicLogOneMotive m;
  m.q = q;
  m.k = k;
  m.Y = y;
  m.X = x;
  m.pairing = validate_pairing(y, x, k, pairing);
  m.abelian = {q, abelian};
  m.classical_torsion = classical_torsion;
  return m;
}

IntPoly frobenius_charpoly_motive(const SymbolicLogOneMotive& m) {
  return m.Y.charpoly() * m.abelian.poly * torus_charpoly(m.X, m.q);
}

std::vector<WeightEntry> weight_spectrum(const SymbolicLogOneMotive& m) {
  std::vector<WeightEntry> out;
  for (auto [r, a] : m.Y.multiplicities()) out.push_back({0, r, cyclotomic_poly(r), a});
  for (const auto& f : factor_integer_poly(m.abelian.poly)) out.push_back({1, 0, f.poly, f.multiplicity});
  for (auto [r, a] : m.X.multiplicities())
    out.push_back({2, r, *to_int(q_reciprocal(cyclotomic_poly(r), m.q)), a});
  return out;
}

SymbolicLogOneMotive split_classical(const SymbolicLogOneMotive& m) {
  SymbolicLogOneMotive out = m;
  out.classical_torsion = false;
  return out;
}

Decomposition decompose(const SymbolicLogOneMotive& m, std::uint64_t seed) {
  Decomposition d;
  d.pairing_part = m.pairing;
  d.ppol = is_pointwise_polarizable(m.pairing, seed);
  if (d.ppol.verdict == Verdict::No)
    throw ValidationError("pairing part is not pointwise polarizable: " + d.ppol.reason);
  d.abelian_part = m.abelian;
  d.cleared = split_classical(m);
  return d;
}

WeightEntry honda_tate_1motive(MotiveKind kind, const GammaModule& module, const BigInt& q) {
  if (kind == MotiveKind::Abelian) throw PreconditionError("abelian data is a polynomial");
  if (!is_simple(module)) throw PreconditionError("module is not simple");
  const int r = module.multiplicities().begin()->first;
  if (kind == MotiveKind::Lattice) return {0, r, cyclotomic_poly(r), 1};
  return {2, r, *to_int(q_reciprocal(cyclotomic_poly(r), q)), 1};
}

WeightEntry honda_tate_1motive(const IntPoly& abelian, const BigInt& q) {
  WeightCheck c = weight_check(abelian, q, 1);
  if (!c) throw PreconditionError("not a weight-1 Weil polynomial: " + c.reason);
  return {1, 0, abelian, 1};
}

}  // namespace loghat
