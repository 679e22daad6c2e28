#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loghat/gammamod.hpp"
#include "loghat/verdict.hpp"

namespace loghat {

// (M, N, Φ) with Φ_i : M → N^∨ given in the basis dual to N's.
struct LatticePairing {
  GammaModule M, N;
  std::vector<QMatrix> X;  // each N.rank × M.rank
  std::size_t k() const { return X.size(); }
};

LatticePairing validate_pairing(const GammaModule& m, const GammaModule& n, std::size_t k,
                                const std::vector<QMatrix>& x);

// Morphism P → P′: ψ1 : M → M′, ψ2 : N′ → N with ψ2ᵀ·X_i = X′_i·ψ1.
struct PairingMorphism {
  QMatrix psi1;  // M′.rank × M.rank
  QMatrix psi2;  // N.rank × N′.rank
};
PairingMorphism validate_morphism(const LatticePairing& src, const LatticePairing& dst, const QMatrix& psi1,
                                  const QMatrix& psi2);

struct IsogenyInfo {
  bool isogeny = false;
  std::optional<BigInt> cokernel1, cokernel2;  // set when the map is injective with finite cokernel
};
IsogenyInfo is_isogeny(const LatticePairing& src, const LatticePairing& dst, const PairingMorphism& phi);

// X_iᵀL symmetric PSD for all i and ΣX_iᵀL PD; no equivariance requirement.
bool satisfies_polarization_inequalities(const LatticePairing& p, const QMatrix& l);
// Additionally requires L equivariant M → N (throws otherwise) and det L ≠ 0.
bool is_polarization(const LatticePairing& p, const QMatrix& l);

struct PpolResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<QMatrix> certificate;  // integer L : M → N when verdict is yes
  bool equivariant = false;            // certificate averaged over the Frobenius orbit
  std::string tier;                    // "rank", "T1", "T2", "T3"
  std::string reason;
};
PpolResult is_pointwise_polarizable(const LatticePairing& p, std::uint64_t seed = 0);

LatticePairing sum_pairing(const LatticePairing& p);
LatticePairing dual_pairing(const LatticePairing& p);

struct NormalForm {
  LatticePairing Q;             // on R = ⊕ Z[ζ_r]^{a(r)}, N = R^∨
  std::vector<IsotypicBlock> blocks;
  PairingMorphism phi;          // Q → P
  BigInt n;                     // index of (ΣX_i)ψ1(R) in N^∨
  IsogenyInfo isogeny;
  std::optional<QMatrix> lambda;  // polarization of Q transported from P
};
// Requires a yes verdict; the certificate is transported to Q.
NormalForm normal_form(const LatticePairing& p, const PpolResult& ppol);
NormalForm normal_form(const LatticePairing& p, std::uint64_t seed = 0);

}  // namespace loghat
