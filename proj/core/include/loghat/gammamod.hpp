#pragma once

#include <map>
#include <vector>

#include "loghat/matrix.hpp"
#include "loghat/polynomial.hpp"

namespace loghat {

// Free Z-module of finite rank with a finite-order Frobenius matrix.
class GammaModule {
 public:
  GammaModule() = default;  // rank 0

  std::size_t rank() const { return frob_.rows(); }
  const QMatrix& frob() const { return frob_; }
  const QMatrix& frob_inverse() const { return frob_inv_; }
  const IntPoly& charpoly() const { return charpoly_; }
  const std::map<int, unsigned>& multiplicities() const { return mult_; }
  // Multiplicative order of frob: lcm of the conductors present.
  const BigInt& order() const { return order_; }

  friend bool operator==(const GammaModule& a, const GammaModule& b) { return a.frob_ == b.frob_; }
  friend GammaModule validate_module(std::size_t rank, const QMatrix& frob);

 private:
  QMatrix frob_, frob_inv_;
  IntPoly charpoly_ = IntPoly::constant(1);
  std::map<int, unsigned> mult_;
  BigInt order_ = 1;
};

GammaModule validate_module(std::size_t rank, const QMatrix& frob);
GammaModule trivial_module(std::size_t rank);
// Z[ζ_r] in the power basis: frob = multiplication by ζ_r.
GammaModule cyclotomic_module(int r);
GammaModule direct_sum(const std::vector<GammaModule>& parts);
QMatrix companion_matrix(const IntPoly& monic);

IntPoly frobenius_charpoly(const GammaModule& m);
GammaModule dual_module(const GammaModule& m);
std::map<int, unsigned> cyclotomic_multiplicities(const GammaModule& m);
bool is_simple(const GammaModule& m);

struct LatticeMap {
  GammaModule src, dst;
  QMatrix matrix;  // dst.rank × src.rank
};
// Checks shape, integrality and matrix·frob_src = frob_dst·matrix.
LatticeMap make_lattice_map(const GammaModule& src, const GammaModule& dst, const QMatrix& matrix);
bool is_equivariant(const GammaModule& src, const GammaModule& dst, const QMatrix& matrix);

struct IsotypicBlock {
  int r;
  unsigned a;
};

struct IsotypicSplit {
  std::vector<IsotypicBlock> blocks;  // ascending r
  GammaModule R;                      // ⊕ Z[ζ_r]^{a(r)}
  LatticeMap psi;                     // R → M
  BigInt cokernel_order;
};
IsotypicSplit split_isotypic(const GammaModule& m);

struct QuasiInverse {
  LatticeMap G;  // dst → src of the input map
  BigInt r;      // G·F = r·Id
};
QuasiInverse quasi_inverse(const LatticeMap& f);

// Z-basis of the equivariant maps M → N (each a N.rank × M.rank matrix).
std::vector<QMatrix> hom_space(const GammaModule& m, const GammaModule& n);

}  // namespace loghat
