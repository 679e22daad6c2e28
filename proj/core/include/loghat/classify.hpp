#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "loghat/cyclo_matrix.hpp"
#include "loghat/pairing.hpp"

namespace loghat {

// ([ζ_r], [q·ζ_r^{-1}]) with the polynomial pair (F_r, G_r).
struct SimpleClassK1 {
  int r = 1;
  BigInt q;
  IntPoly F, G;
};

struct TrkPoint {
  int r = 1;
  std::vector<CycloElem> t;  // Σ t_i = 1, each totally positive or zero
};

struct TrkMatrixClass {
  int r = 1;
  std::size_t k = 0, a = 0;
  std::vector<CycloMatrix> Xbar;  // Σ Xbar_i = 1
  QMatrix witness;                // Λ of size a·φ(r)
};

struct EndRingDescriptor {
  std::vector<IsotypicBlock> blocks;
  std::size_t hom_rank = 0;  // Σ a(r)²·φ(r), cross-checked against hom_space
};

// Coefficient of θ^{n−j} is c_j·q^j / c_0: roots α ↦ q/α.
RatPoly q_reciprocal(const IntPoly& p, const BigInt& q);

bool polarizable_rank1(const std::vector<CycloElem>& t);
bool check_lambda_t(const CycloElem& t, const std::vector<CycloElem>& tvec);

// For M simple of type r with N^∨ of the same type: X_i = multiplication by t_i
// in isotypic coordinates of M and N^∨.
std::vector<CycloElem> rank1_multipliers(const LatticePairing& p);

// (r, a) if M is ⊕ Z[ζ_r]^a in the power basis and N = M^∨; throws otherwise.
IsotypicBlock isotypic_shape(const LatticePairing& p);

SimpleClassK1 classify_simple_k1(const LatticePairing& p, const BigInt& q, std::uint64_t seed = 0);
TrkPoint classify_rank1(const LatticePairing& p, std::uint64_t seed = 0);
TrkMatrixClass classify_rank_a(const LatticePairing& p, std::uint64_t seed = 0);
// Same as above with a known polarization of p.
TrkMatrixClass classify_rank_a(const LatticePairing& p, const QMatrix& lambda);

Verdict same_class(const TrkMatrixClass& c1, const TrkMatrixClass& c2, std::uint64_t seed = 0);
Verdict is_simple_class(const TrkMatrixClass& c, std::uint64_t seed = 0);
Verdict is_simple_class(const LatticePairing& p, std::uint64_t seed = 0);

EndRingDescriptor endomorphism_ring(const LatticePairing& p);

// Dimension over Q(ζ_r) of the algebra generated by the matrices.
std::size_t spin_algebra_dimension(const std::vector<CycloMatrix>& mats);

using BlockInvariant = std::variant<SimpleClassK1, TrkPoint, TrkMatrixClass>;

struct BlockClassification {
  int r = 1;
  unsigned a = 0;
  LatticePairing block;
  BlockInvariant invariant;
  Verdict simple = Verdict::Unknown;
};

struct Classification {
  PpolResult ppol;
  std::optional<NormalForm> normal_form;
  std::vector<BlockClassification> blocks;
  Verdict simple = Verdict::Unknown;
};
// Full pipeline: ppol, normal form, per-block invariants and simplicity.
Classification classify_pairing(const LatticePairing& p, const BigInt& q, std::uint64_t seed = 0);

// Equality of ppol verdicts, block shapes and block invariants.
Verdict same_invariants(const Classification& a, const Classification& b, std::uint64_t seed = 0);

}  // namespace loghat
