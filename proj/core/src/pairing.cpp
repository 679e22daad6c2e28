#include "loghat/pairing.hpp"

#include "loghat/error.hpp"
#include "loghat/linalg.hpp"
#include "loghat/psd.hpp"

namespace loghat {

namespace {

std::string shape(const QMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

LatticePairing validate_pairing(const GammaModule& m, const GammaModule& n, std::size_t k,
                                const std::vector<QMatrix>& x) {
  if (k == 0) throw ValidationError("k must be positive");
  if (x.size() != k) throw ValidationError("expected " + std::to_string(k) + " matrices, got " + std::to_string(x.size()));
  // (frob_N^{-1})ᵀ is the Frobenius of N^∨.
  const QMatrix dual_frob = n.rank() ? n.frob_inverse().transpose() : QMatrix(0, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i].rows() != n.rank() || x[i].cols() != m.rank())
      throw ValidationError("X[" + std::to_string(i) + "] has shape " + shape(x[i]) + ", expected " +
                            std::to_string(n.rank()) + "x" + std::to_string(m.rank()));
    if (!x[i].is_integer()) throw ValidationError("X[" + std::to_string(i) + "] must have integer entries");
    QMatrix diff = x[i] * m.frob() - dual_frob * x[i];
    for (std::size_t a = 0; a < diff.rows(); ++a)
      for (std::size_t b = 0; b < diff.cols(); ++b)
        if (diff(a, b) != 0)
          throw ValidationError("X[" + std::to_string(i) + "] is not equivariant: entry (" + std::to_string(a) + "," +
                                std::to_string(b) + ") of X·frob_M − frob_N^{-T}·X is " + diff(a, b).get_str());
  }
  return {m, n, x};
}

PairingMorphism validate_morphism(const LatticePairing& src, const LatticePairing& dst, const QMatrix& psi1,
                                  const QMatrix& psi2) {
  if (src.k() != dst.k()) throw ValidationError("morphism between pairings with different k");
  make_lattice_map(src.M, dst.M, psi1);
  make_lattice_map(dst.N, src.N, psi2);
  const QMatrix p2t = psi2.transpose();
  for (std::size_t i = 0; i < src.k(); ++i)
    if (p2t * src.X[i] != dst.X[i] * psi1)
      throw ValidationError("square does not commute: ψ2ᵀ·X[" + std::to_string(i) + "] ≠ X′[" + std::to_string(i) +
                            "]·ψ1");
  return {psi1, psi2};
}

IsogenyInfo is_isogeny(const LatticePairing& src, const LatticePairing& dst, const PairingMorphism& phi) {
  validate_morphism(src, dst, phi.psi1, phi.psi2);
  IsogenyInfo info;
  auto order = [](const QMatrix& a) -> std::optional<BigInt> {
    if (a.rows() != a.cols()) return std::nullopt;
    if (a.rows() == 0) return BigInt(1);
    return cokernel_order(a);
  };
  info.cokernel1 = order(phi.psi1);
  info.cokernel2 = order(phi.psi2);
  info.isogeny = info.cokernel1.has_value() && info.cokernel2.has_value();
  return info;
}

bool satisfies_polarization_inequalities(const LatticePairing& p, const QMatrix& l) {
  if (l.rows() != p.N.rank() || l.cols() != p.M.rank()) return false;
  QMatrix total(p.M.rank(), p.M.rank());
  for (const auto& x : p.X) {
    QMatrix s = x.transpose() * l;
    if (!s.is_symmetric()) return false;
    if (psd_status(s).status == PsdStatus::Indefinite) return false;
    total = total + s;
  }
  return total.rows() == 0 || psd_status(total).status == PsdStatus::PD;
}

bool is_polarization(const LatticePairing& p, const QMatrix& l) {
  if (l.rows() != p.N.rank() || l.cols() != p.M.rank()) throw PreconditionError("polarization has the wrong shape");
  if (!l.is_integer()) throw PreconditionError("polarization must have integer entries");
  if (!is_equivariant(p.M, p.N, l)) throw PreconditionError("polarization is not Frobenius-equivariant");
  if (l.rows() != l.cols() || (l.rows() && det(l) == 0)) return false;
  return satisfies_polarization_inequalities(p, l);
}

LatticePairing sum_pairing(const LatticePairing& p) {
  QMatrix s(p.N.rank(), p.M.rank());
  for (const auto& x : p.X) s = s + x;
  return {p.M, p.N, {s}};
}

LatticePairing dual_pairing(const LatticePairing& p) {
  std::vector<QMatrix> xt;
  for (const auto& x : p.X) xt.push_back(x.transpose());
  return {p.N, p.M, xt};
}

NormalForm normal_form(const LatticePairing& p, std::uint64_t seed) {
  return normal_form(p, is_pointwise_polarizable(p, seed));
}

NormalForm normal_form(const LatticePairing& p, const PpolResult& ppol) {
  if (ppol.verdict != Verdict::Yes || !ppol.certificate) throw PreconditionError("normal form needs a pointwise polarizable pairing");
  IsotypicSplit split = split_isotypic(p.M);
  const QMatrix& psi = split.psi.matrix;
  QMatrix x(p.N.rank(), p.M.rank());
  for (const auto& xi : p.X) x = x + xi;
  QMatrix xpsi = x * psi;
  NormalForm nf;
  nf.blocks = split.blocks;
  if (xpsi.rows() == 0) {
    nf.n = 1;
  } else {
    auto idx = cokernel_order(xpsi);
    if (!idx) throw Error("degenerate Σ-pairing");
    nf.n = *idx;
  }
  QMatrix scaled_inv = xpsi.rows() ? BigRat(nf.n) * inverse(xpsi) : xpsi;
  std::vector<QMatrix> xq;
  for (const auto& xi : p.X) {
    QMatrix q = scaled_inv * xi * psi;
    if (!q.is_integer()) throw Error("internal: normal-form pairing is not integral");
    xq.push_back(std::move(q));
  }
  nf.Q = validate_pairing(split.R, dual_module(split.R), p.k(), xq);
  nf.phi = validate_morphism(nf.Q, p, BigRat(nf.n) * psi, xpsi.transpose());
  nf.isogeny = is_isogeny(nf.Q, p, nf.phi);
  if (!nf.isogeny.isogeny) throw Error("internal: normal-form morphism is not an isogeny");
  QMatrix lq = nf.phi.psi2 * *ppol.certificate * psi;
  if (lq.rows()) {
    BigInt den = lq.denominator(), g = 0;
    lq = BigRat(den) * lq;
    for (std::size_t i = 0; i < lq.rows(); ++i)
      for (std::size_t j = 0; j < lq.cols(); ++j) g = gcd(g, BigInt(lq(i, j).get_num()));
    if (g > 1) lq = BigRat(1, 1) / BigRat(g) * lq;
  }
  if (!satisfies_polarization_inequalities(nf.Q, lq)) throw Error("internal: transported polarization fails");
  nf.lambda = lq;
  return nf;
}

}  // namespace loghat
