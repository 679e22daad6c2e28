#include "loghat/classify.hpp"

#include "loghat/error.hpp"
#include "loghat/factor.hpp"
#include "loghat/linalg.hpp"
#include "loghat/psd.hpp"

namespace loghat {

RatPoly q_reciprocal(const IntPoly& p, const BigInt& q) {
  const int n = p.degree();
  if (n < 0 || p.coeff(0) == 0) throw PreconditionError("q-reciprocal needs a nonzero constant term");
  std::vector<BigRat> c(n + 1);
  BigInt qj = 1;
  for (int j = 0; j <= n; ++j) {
    c[n - j] = BigRat(p.coeff(j) * qj) / BigRat(p.coeff(0));
    qj *= q;
  }
  return RatPoly(std::move(c));
}

namespace {

bool tp_or_zero(const CycloElem& x) { return x.is_zero() || is_totally_positive(x); }

}  // namespace

bool polarizable_rank1(const std::vector<CycloElem>& t) {
  bool any = false;
  for (const auto& x : t) any = any || !x.is_zero();
  if (!any) return false;
  for (const auto& a : t)
    for (const auto& b : t)
      if (!tp_or_zero(a * conj(b))) return false;
  return true;
}

bool check_lambda_t(const CycloElem& t, const std::vector<CycloElem>& tvec) {
  if (!in_inverse_different(t)) throw PreconditionError("t is not in the inverse different");
  CycloElem sum(t.field());
  for (const auto& ti : tvec) {
    CycloElem prod = ti * conj(t);
    if (!tp_or_zero(prod)) return false;
    sum += prod;
  }
  return is_totally_positive(sum);
}

std::vector<CycloElem> rank1_multipliers(const LatticePairing& p) {
  if (!is_simple(p.M) || p.M.multiplicities() != p.N.multiplicities())
    throw PreconditionError("M and N^∨ must both be of the form Z[ζ_r] up to isogeny");
  const int r = p.M.multiplicities().begin()->first;
  FieldPtr f = cyclotomic_field(r);
  const QMatrix psi_m = split_isotypic(p.M).psi.matrix;
  const QMatrix psi_n_inv = inverse(split_isotypic(dual_module(p.N)).psi.matrix);
  std::vector<CycloElem> t;
  for (const auto& x : p.X) {
    QMatrix y = psi_n_inv * x * psi_m;
    CycloElem ti = from_column(f, y.column(0));
    if (mult_matrix(ti) != y) throw Error("internal: pairing is not a multiplication map");
    t.push_back(ti);
  }
  return t;
}

IsotypicBlock isotypic_shape(const LatticePairing& p) {
  const auto& mult = p.M.multiplicities();
  if (mult.size() != 1) throw PreconditionError("M is not isotypic");
  auto [r, a] = *mult.begin();
  GammaModule z = cyclotomic_module(r);
  if (p.M.frob() != direct_sum(std::vector<GammaModule>(a, z)).frob())
    throw PreconditionError("M is not in normal form ⊕ Z[ζ_r]");
  if (!(p.N == dual_module(p.M))) throw PreconditionError("N is not the dual of M");
  return {r, a};
}

SimpleClassK1 classify_simple_k1(const LatticePairing& p, const BigInt& q, std::uint64_t seed) {
  if (p.k() != 1) throw PreconditionError("classify_simple_k1 needs k = 1");
  if (!is_simple(p.M)) throw PreconditionError("M is not simple");
  if (is_pointwise_polarizable(p, seed).verdict != Verdict::Yes) throw PreconditionError("pairing is not pointwise polarizable");
  SimpleClassK1 c;
  c.r = p.M.multiplicities().begin()->first;
  c.q = q;
  c.F = cyclotomic_poly(c.r);
  c.G = *to_int(q_reciprocal(c.F, q));
  return c;
}

namespace {

TrkPoint normalized_point(const LatticePairing& p) {
  auto t = rank1_multipliers(p);
  FieldPtr f = t.front().field();
  CycloElem sum(f);
  for (const auto& ti : t) sum += ti;
  if (sum.is_zero()) throw PreconditionError("Σ t_i = 0: degenerate pairing");
  CycloElem inv = invert(sum);
  TrkPoint pt;
  pt.r = f->r();
  CycloElem check(f);
  for (const auto& ti : t) {
    pt.t.push_back(ti * inv);
    if (!tp_or_zero(pt.t.back())) throw Error("internal: normalized t_i is not totally positive or zero");
    check += pt.t.back();
  }
  if (check != CycloElem::rational(f, 1)) throw Error("internal: normalized tuple does not sum to 1");
  return pt;
}

}  // namespace

TrkPoint classify_rank1(const LatticePairing& p, std::uint64_t seed) {
  if (is_pointwise_polarizable(p, seed).verdict != Verdict::Yes) throw PreconditionError("pairing is not pointwise polarizable");
  return normalized_point(p);
}

TrkMatrixClass classify_rank_a(const LatticePairing& p, const QMatrix& lambda) {
  auto [r, a] = isotypic_shape(p);
  FieldPtr f = cyclotomic_field(r);
  TrkMatrixClass c;
  c.r = r;
  c.k = p.k();
  c.a = a;
  std::vector<CycloMatrix> xs;
  CycloMatrix x(f, a, a);
  QMatrix xreg(p.M.rank(), p.M.rank());
  for (const auto& xi : p.X) {
    xs.push_back(CycloMatrix::from_regular(xi, f));
    x = x + xs.back();
    xreg = xreg + xi;
  }
  if (det(x).is_zero()) throw PreconditionError("ΣX_i is singular");
  CycloMatrix xinv = inverse(x);
  for (const auto& xi : xs) c.Xbar.push_back(xi * xinv);
  c.witness = lambda * inverse(xreg);
  CycloMatrix sum(f, a, a);
  for (const auto& xb : c.Xbar) sum = sum + xb;
  if (sum != CycloMatrix::identity(f, a)) throw Error("internal: representatives do not sum to 1");
  if (!c.witness.is_symmetric() || psd_status(c.witness).status != PsdStatus::PD)
    throw PreconditionError("witness is not positive definite");
  for (const auto& xb : c.Xbar) {
    QMatrix s = xb.regular().transpose() * c.witness;
    if (!s.is_symmetric() || psd_status(s).status == PsdStatus::Indefinite)
      throw PreconditionError("witness fails the PSD condition");
  }
  return c;
}

TrkMatrixClass classify_rank_a(const LatticePairing& p, std::uint64_t seed) {
  PpolResult r = is_pointwise_polarizable(p, seed);
  if (r.verdict != Verdict::Yes) throw PreconditionError("pairing is not certified pointwise polarizable");
  return classify_rank_a(p, *r.certificate);
}

namespace {

// Incremental echelon basis of a K-subspace.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}
  std::size_t size() const { return rows_.size(); }
  bool add(CycloVector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const CycloElem& c = v[piv_[i]];
      if (c.is_zero()) continue;
      CycloElem f = c;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) return false;
    CycloElem inv = invert(v[p]);
    for (auto& x : v) x = x * inv;
    // Keep rows reduced in the new pivot column.
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      CycloElem f = row[p];
      for (std::size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<CycloVector> rows_;
  std::vector<std::size_t> piv_;
};

CycloVector flatten(const CycloMatrix& m) {
  CycloVector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

std::size_t spin_dimension(const CycloVector& v, const std::vector<CycloMatrix>& mats) {
  SpanTracker span(v.size());
  if (!span.add(v)) return 0;
  std::vector<CycloVector> queue{v};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& m : mats) {
      CycloVector w = m * queue[h];
      if (span.add(w)) queue.push_back(std::move(w));
    }
  return span.size();
}

// Basis of {Y : Y·A_i = B_i·Y for all i} over Q(ζ_r).
std::vector<CycloMatrix> intertwiners(const std::vector<CycloMatrix>& A, const std::vector<CycloMatrix>& B) {
  const FieldPtr& f = A.front().field();
  const std::size_t a = A.front().rows();
  CycloMatrix sys(f, A.size() * a * a, a * a);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t u = 0; u < a; ++u)
      for (std::size_t v = 0; v < a; ++v) {
        const std::size_t row = i * a * a + u * a + v;
        for (std::size_t w = 0; w < a; ++w) {
          sys(row, u * a + w) += A[i](w, v);
          sys(row, w * a + v) -= B[i](u, w);
        }
      }
  std::vector<CycloMatrix> out;
  for (const auto& vec : nullspace(sys)) {
    CycloMatrix y(f, a, a);
    for (std::size_t e = 0; e < a * a; ++e) y(e / a, e % a) = vec[e];
    out.push_back(std::move(y));
  }
  return out;
}

CycloMatrix combination(const std::vector<CycloMatrix>& basis, const std::vector<long>& c) {
  CycloMatrix y(basis.front().field(), basis.front().rows(), basis.front().cols());
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (c[j]) y = y + CycloElem::rational(y.field(), c[j]) * basis[j];
  return y;
}

// xorshift-style deterministic generator
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL) {}
  long uniform(long lo, long hi) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return lo + static_cast<long>(s % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace

std::size_t spin_algebra_dimension(const std::vector<CycloMatrix>& mats) {
  const FieldPtr& f = mats.front().field();
  const std::size_t a = mats.front().rows();
  SpanTracker span(a * a);
  CycloMatrix id = CycloMatrix::identity(f, a);
  span.add(flatten(id));
  std::vector<CycloMatrix> queue{id};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& g : mats) {
      CycloMatrix w = g * queue[h];
      if (span.add(flatten(w))) queue.push_back(std::move(w));
    }
  return span.size();
}

Verdict same_class(const TrkMatrixClass& c1, const TrkMatrixClass& c2, std::uint64_t seed) {
  if (c1.r != c2.r || c1.k != c2.k || c1.a != c2.a) return Verdict::No;
  auto basis = intertwiners(c1.Xbar, c2.Xbar);
  if (basis.empty()) return Verdict::No;
  const std::size_t d = basis.size();
  Rng rng(seed);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<long> c(d);
    for (auto& x : c) x = rng.uniform(-3, 3);
    if (!det(combination(basis, c)).is_zero()) return Verdict::Yes;
  }
  if (d > 3) return Verdict::Unknown;
  // det(Σ c_j Y_j) has degree ≤ a in each c_j: vanishing on {0..a}^d means identically zero.
  std::vector<long> c(d, 0);
  for (;;) {
    if (!det(combination(basis, c)).is_zero()) return Verdict::Yes;
    std::size_t u = 0;
    while (u < d && ++c[u] > static_cast<long>(c1.a)) c[u++] = 0;
    if (u == d) break;
  }
  return Verdict::No;
}

Verdict is_simple_class(const TrkMatrixClass& c, std::uint64_t seed) {
  const std::size_t a = c.a;
  if (a == 1) return Verdict::Yes;
  if (spin_algebra_dimension(c.Xbar) == a * a) return Verdict::Yes;
  const FieldPtr f = cyclotomic_field(c.r);
  Rng rng(seed);
  std::vector<CycloMatrix> tr;
  for (const auto& x : c.Xbar) tr.push_back(x.transpose());
  std::vector<CycloVector> probes;
  for (std::size_t j = 0; j < a; ++j) {
    CycloVector e(a, CycloElem(f));
    e[j] = CycloElem::rational(f, 1);
    probes.push_back(e);
  }
  for (int extra = 0; extra < 3; ++extra) {
    CycloVector v(a, CycloElem(f));
    for (auto& x : v) x = CycloElem::rational(f, rng.uniform(-3, 3)) + CycloElem::zeta_power(f, rng.uniform(0, f->r()));
    probes.push_back(v);
  }
  for (const auto& v : probes) {
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) continue;
    // A proper spin of the transposes gives a proper invariant annihilator.
    if (spin_dimension(v, c.Xbar) < a || spin_dimension(v, tr) < a) return Verdict::No;
  }
  // The witness makes the module semisimple, so simple ⇔ the commutant is a division algebra.
  auto comm = intertwiners(c.Xbar, c.Xbar);
  const std::size_t dim_c = comm.size();
  if (dim_c == 1) return Verdict::Yes;
  std::vector<CycloMatrix> elems = comm;
  for (int extra = 0; extra < 3; ++extra) {
    std::vector<long> coef(dim_c);
    for (auto& x : coef) x = rng.uniform(-3, 3);
    elems.push_back(combination(comm, coef));
  }
  bool commutative = true;
  for (std::size_t i = 0; i < dim_c; ++i)
    for (std::size_t j = i + 1; j < dim_c; ++j) commutative = commutative && comm[i] * comm[j] == comm[j] * comm[i];
  bool field_generator = false;
  for (const auto& y : elems) {
    if (y.is_scalar()) continue;
    CycloVector mu = minimal_polynomial(y);
    FieldRoots roots = roots_in_field(mu);
    // y − λ is a nonzero singular endomorphism: its kernel is invariant.
    if (!roots.roots.empty()) return Verdict::No;
    const std::size_t deg = mu.size() - 1;
    if (roots.complete && deg == dim_c && deg <= 3) field_generator = true;
    // Over Q the minimal polynomial can be factored outright.
    if (f->phi() == 1 && commutative && deg == dim_c && deg <= 20) {
      std::vector<BigRat> rc;
      for (const auto& x : mu) rc.push_back(x.coeffs()[0]);
      if (!is_irreducible(primitive_part(RatPoly(rc)))) return Verdict::No;
      field_generator = true;
    }
  }
  if (commutative && field_generator) return Verdict::Yes;
  // A noncommutative division algebra over K has K-dimension ≥ 4 and would force a ≥ 4.
  if (!commutative && a <= 3) return Verdict::No;
  return Verdict::Unknown;
}

Verdict is_simple_class(const LatticePairing& p, std::uint64_t seed) {
  return is_simple_class(classify_rank_a(p, seed), seed);
}

EndRingDescriptor endomorphism_ring(const LatticePairing& p) {
  EndRingDescriptor d;
  for (auto [r, a] : p.M.multiplicities()) {
    d.blocks.push_back({r, a});
    d.hom_rank += static_cast<std::size_t>(a) * a * euler_phi(r);
  }
  if (hom_space(p.M, p.M).size() != d.hom_rank) throw Error("internal: endomorphism rank mismatch");
  return d;
}

Classification classify_pairing(const LatticePairing& p, const BigInt& q, std::uint64_t seed) {
  Classification out;
  out.ppol = is_pointwise_polarizable(p, seed);
  if (out.ppol.verdict != Verdict::Yes) return out;
  out.normal_form = normal_form(p, out.ppol);
  const NormalForm& nf = *out.normal_form;
  std::size_t off = 0;
  for (const auto& blk : nf.blocks) {
    const std::size_t sz = blk.a * static_cast<std::size_t>(euler_phi(blk.r));
    BlockClassification bc;
    bc.r = blk.r;
    bc.a = blk.a;
    GammaModule m = direct_sum(std::vector<GammaModule>(blk.a, cyclotomic_module(blk.r)));
    std::vector<QMatrix> xs;
    for (const auto& x : nf.Q.X) xs.push_back(x.block(off, off, sz, sz));
    bc.block = validate_pairing(m, dual_module(m), p.k(), xs);
    QMatrix lam = nf.lambda->block(off, off, sz, sz);
    if (p.k() == 1 && blk.a == 1) {
      SimpleClassK1 c;
      c.r = blk.r;
      c.q = q;
      c.F = cyclotomic_poly(blk.r);
      c.G = *to_int(q_reciprocal(c.F, q));
      bc.invariant = c;
      bc.simple = Verdict::Yes;
    } else if (blk.a == 1) {
      bc.invariant = normalized_point(bc.block);
      bc.simple = Verdict::Yes;
    } else {
      TrkMatrixClass c = classify_rank_a(bc.block, lam);
      bc.simple = p.k() == 1 ? Verdict::No : is_simple_class(c, seed);
      bc.invariant = std::move(c);
    }
    out.blocks.push_back(std::move(bc));
    off += sz;
  }
  if (out.blocks.size() == 1) out.simple = out.blocks.front().simple;
  else out.simple = Verdict::No;
  return out;
}

Verdict same_invariants(const Classification& a, const Classification& b, std::uint64_t seed) {
  if (a.ppol.verdict != b.ppol.verdict) return Verdict::No;
  if (a.ppol.verdict != Verdict::Yes) return a.ppol.verdict == Verdict::No ? Verdict::Yes : Verdict::Unknown;
  if (a.blocks.size() != b.blocks.size()) return Verdict::No;
  Verdict out = Verdict::Yes;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    const auto& x = a.blocks[i];
    const auto& y = b.blocks[i];
    if (x.r != y.r || x.a != y.a || x.invariant.index() != y.invariant.index()) return Verdict::No;
    if (auto* p = std::get_if<SimpleClassK1>(&x.invariant)) {
      const auto& q = std::get<SimpleClassK1>(y.invariant);
      if (p->F != q.F || p->G != q.G) return Verdict::No;
    } else if (auto* p = std::get_if<TrkPoint>(&x.invariant)) {
      if (p->t != std::get<TrkPoint>(y.invariant).t) return Verdict::No;
    } else {
      Verdict v = same_class(std::get<TrkMatrixClass>(x.invariant), std::get<TrkMatrixClass>(y.invariant), seed);
      if (v == Verdict::No) return Verdict::No;
      if (v == Verdict::Unknown) out = Verdict::Unknown;
    }
  }
  return out;
}

}  // namespace loghat
