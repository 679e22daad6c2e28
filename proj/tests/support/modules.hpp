#pragma once

// Random test modules: conjugates of block companion matrices by unimodular
// matrices. Built from the library's companion_matrix and cyclotomic_poly,
// which are checked separately.

#include <random>
#include <vector>

#include "loghat/cyclotomic.hpp"
#include "loghat/gammamod.hpp"
#include "loghat/linalg.hpp"
#include "oracle.hpp"

namespace testmod {

inline loghat::QMatrix block_companions(const std::vector<int>& conductors) {
  std::vector<loghat::QMatrix> blocks;
  for (int r : conductors) blocks.push_back(loghat::companion_matrix(loghat::cyclotomic_poly(r)));
  return loghat::QMatrix::block_diagonal(blocks);
}

inline loghat::GammaModule conjugated(std::mt19937_64& rng, const std::vector<int>& conductors) {
  loghat::QMatrix f = block_companions(conductors);
  loghat::QMatrix u = oracle::to_q(oracle::random_unimodular(rng, f.rows()));
  return loghat::validate_module(f.rows(), u * f * loghat::inverse(u));
}

// Random multiset of conductors with total φ at most max_rank.
inline std::vector<int> random_conductors(std::mt19937_64& rng, std::size_t max_rank,
                                          const std::vector<int>& pool = {1, 2, 3, 4, 6}) {
  std::vector<int> out;
  std::size_t used = 0;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int tries = 0; tries < 8; ++tries) {
    int r = pool[pick(rng)];
    std::size_t p = static_cast<std::size_t>(loghat::euler_phi(r));
    if (used + p > max_rank) continue;
    out.push_back(r);
    used += p;
    if (rng() % 3 == 0) break;
  }
  if (out.empty()) out.push_back(1);
  return out;
}

}  // namespace testmod

#include "loghat/pairing.hpp"

namespace testmod {

// Random integer combination of a Z-basis.
inline loghat::QMatrix random_combination(std::mt19937_64& rng, const std::vector<loghat::QMatrix>& basis,
                                          std::size_t rows, std::size_t cols, int bound = 2) {
  std::uniform_int_distribution<int> d(-bound, bound);
  loghat::QMatrix x(rows, cols);
  for (const auto& b : basis) x = x + loghat::BigRat(d(rng)) * b;
  return x;
}

// k equivariant matrices M → N^∨.
inline loghat::LatticePairing random_pairing(std::mt19937_64& rng, const loghat::GammaModule& m,
                                             const loghat::GammaModule& n, std::size_t k, int bound = 2) {
  auto basis = loghat::hom_space(m, loghat::dual_module(n));
  std::vector<loghat::QMatrix> xs;
  for (std::size_t i = 0; i < k; ++i) xs.push_back(random_combination(rng, basis, n.rank(), m.rank(), bound));
  return loghat::validate_pairing(m, n, k, xs);
}

// M random; N a random conjugate of M^∨ so that pairings can be nondegenerate.
inline loghat::LatticePairing random_dual_pairing(std::mt19937_64& rng, std::size_t max_rank, std::size_t k,
                                                  const std::vector<int>& pool = {1, 2, 3, 4, 6}) {
  auto cs = random_conductors(rng, max_rank, pool);
  loghat::GammaModule m = conjugated(rng, cs);
  loghat::GammaModule n = conjugated(rng, cs);  // F_r is self-dual up to conjugacy
  return random_pairing(rng, m, n, k);
}

}  // namespace testmod
