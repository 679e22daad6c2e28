#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loghat/pairing.hpp"

namespace loghat {

bool is_prime_power(const BigInt& q);

struct WeilPoly1 {
  BigInt q;
  IntPoly poly = IntPoly::constant(1);  // 1 when there is no abelian part
};

struct SymbolicLogOneMotive {
  BigInt q;
  std::size_t k = 1;
  GammaModule Y, X;
  LatticePairing pairing;  // M = Y, N = X
  WeilPoly1 abelian;
  bool classical_torsion = false;
};

// Validates q, the pairing shape and the weight-1 factors of the abelian polynomial.
SymbolicLogOneMotive make_motive(const BigInt& q, std::size_t k, const GammaModule& y, const GammaModule& x,
                                 const std::vector<QMatrix>& pairing, const IntPoly& abelian, bool classical_torsion);

struct WeightCheck {
  bool ok = false;
  std::string reason;  // set when !ok
  explicit operator bool() const { return ok; }
};
// p monic and irreducible (throws PreconditionError otherwise); w ∈ {0, 1, 2}.
WeightCheck weight_check(const IntPoly& p, const BigInt& q, int w);

IntPoly torus_charpoly(const GammaModule& x, const BigInt& q);
IntPoly frobenius_charpoly_motive(const SymbolicLogOneMotive& m);

struct WeightEntry {
  int weight = 0;
  int r = 0;        // conductor for weights 0 and 2
  IntPoly poly;     // F_r, its q-reciprocal, or the irreducible weight-1 factor
  unsigned multiplicity = 1;
};
std::vector<WeightEntry> weight_spectrum(const SymbolicLogOneMotive& m);

struct Decomposition {
  LatticePairing pairing_part;
  PpolResult ppol;
  WeilPoly1 abelian_part;
  SymbolicLogOneMotive cleared;
};
// Throws ValidationError when the pairing part is certified not pointwise polarizable.
Decomposition decompose(const SymbolicLogOneMotive& m, std::uint64_t seed = 0);

SymbolicLogOneMotive split_classical(const SymbolicLogOneMotive& m);

enum class MotiveKind { Lattice, Torus, Abelian };
// Throws PreconditionError unless the data is simple of its kind.
WeightEntry honda_tate_1motive(MotiveKind kind, const GammaModule& module, const BigInt& q);
WeightEntry honda_tate_1motive(const IntPoly& abelian, const BigInt& q);

}  // namespace loghat
