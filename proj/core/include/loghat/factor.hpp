#pragma once

#include <map>
#include <vector>

#include "loghat/polynomial.hpp"

namespace loghat {

struct PolyFactor {
  IntPoly poly;  // primitive, positive leading coefficient
  unsigned multiplicity = 1;
};

// Yun's algorithm; the product of f_i^i equals p up to a rational constant.
std::vector<PolyFactor> squarefree_decomposition(const IntPoly& p);

// Multiplicity of each F_r dividing p; *rest receives the cofactor.
std::map<int, unsigned> peel_cyclotomic(const IntPoly& p, IntPoly* rest = nullptr);

// Factorization over Z into irreducibles (up to sign and content). Cyclotomic
// and linear factors are peeled exactly; the remainder is split by a search
// over products of conjugation orbits of numeric roots, each candidate
// confirmed by exact division.
std::vector<PolyFactor> factor_integer_poly(const IntPoly& p);
bool is_irreducible(const IntPoly& p);

}  // namespace loghat
