#include <gtest/gtest.h>

#include "loghat/error.hpp"
#include "loghat/gammamod.hpp"
#include "loghat/linalg.hpp"
#include "modules.hpp"

using namespace loghat;

TEST(GammaModule, ValidationRejectsBadFrobenius) {
  EXPECT_THROW(validate_module(2, QMatrix{{1, 1}, {0, 1}}), ValidationError);  // infinite order
  EXPECT_THROW(validate_module(1, QMatrix{{2}}), ValidationError);              // not in GL
  EXPECT_THROW(validate_module(2, QMatrix{{2, 1}, {1, 1}}), ValidationError);   // hyperbolic
  EXPECT_THROW(validate_module(3, QMatrix{{1, 0}, {0, 1}}), ValidationError);   // shape
  GammaModule m = validate_module(2, QMatrix{{0, -1}, {1, 0}});
  EXPECT_EQ(m.order(), 4);
  EXPECT_EQ(m.charpoly(), int_poly({1, 0, 1}));
  EXPECT_EQ(m.frob() * m.frob_inverse(), QMatrix::identity(2));
}

TEST(GammaModule, CyclotomicModuleAndDual) {
  for (int r : {1, 2, 3, 5, 8, 12}) {
    GammaModule m = cyclotomic_module(r);
    EXPECT_EQ(m.rank(), static_cast<std::size_t>(euler_phi(r)));
    EXPECT_EQ(frobenius_charpoly(m), cyclotomic_poly(r));
    EXPECT_TRUE(is_simple(m));
    GammaModule d = dual_module(m);
    EXPECT_EQ(d.frob(), m.frob_inverse().transpose());
    EXPECT_EQ(cyclotomic_multiplicities(d), cyclotomic_multiplicities(m));
  }
  EXPECT_FALSE(is_simple(trivial_module(2)));
  EXPECT_EQ(trivial_module(0).rank(), 0u);
  GammaModule s = direct_sum({cyclotomic_module(3), trivial_module(1), cyclotomic_module(3)});
  EXPECT_EQ(s.multiplicities().at(3), 2u);
  EXPECT_EQ(s.order(), 3);
}

TEST(GammaModule, EquivarianceOfMaps) {
  GammaModule m = cyclotomic_module(4);
  EXPECT_TRUE(is_equivariant(m, m, m.frob()));
  EXPECT_FALSE(is_equivariant(m, m, QMatrix{{1, 0}, {0, 2}}));
  EXPECT_THROW(make_lattice_map(m, m, QMatrix{{1, 0}, {0, 2}}), ValidationError);
  EXPECT_THROW(make_lattice_map(m, m, BigRat(1, 2) * QMatrix::identity(2)), ValidationError);
}

TEST(GammaModule, HomSpaceRankIsSchurCount) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 40; ++it) {
    GammaModule m = testmod::conjugated(rng, testmod::random_conductors(rng, 6));
    GammaModule n = testmod::conjugated(rng, testmod::random_conductors(rng, 6));
    std::size_t want = 0;
    for (auto [r, a] : m.multiplicities()) {
      auto it2 = n.multiplicities().find(r);
      if (it2 != n.multiplicities().end()) want += a * it2->second * static_cast<std::size_t>(euler_phi(r));
    }
    auto basis = hom_space(m, n);
    EXPECT_EQ(basis.size(), want);
    for (const auto& h : basis) {
      EXPECT_TRUE(h.is_integer());
      EXPECT_TRUE(is_equivariant(m, n, h));
    }
  }
}

TEST(GammaModule, IsotypicSplitIsAnEquivariantIsogeny) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    auto cs = testmod::random_conductors(rng, 6, {1, 2, 3, 4, 5, 6, 8});
    GammaModule m = testmod::conjugated(rng, cs);
    IsotypicSplit s = split_isotypic(m);
    EXPECT_EQ(s.R.rank(), m.rank());
    EXPECT_TRUE(is_equivariant(s.R, m, s.psi.matrix));
    auto co = cokernel_order(s.psi.matrix);
    ASSERT_TRUE(co.has_value());
    EXPECT_EQ(*co, s.cokernel_order);
    std::map<int, unsigned> want;
    for (int r : cs) ++want[r];
    std::map<int, unsigned> got;
    for (auto b : s.blocks) got[b.r] = b.a;
    EXPECT_EQ(got, want);
    // R is literally ⊕ companion(F_r)^{a(r)} in ascending r
    std::vector<int> expanded;
    for (auto b : s.blocks)
      for (unsigned i = 0; i < b.a; ++i) expanded.push_back(b.r);
    EXPECT_EQ(s.R.frob(), testmod::block_companions(expanded));
  }
}

TEST(GammaModule, QuasiInverse) {
  GammaModule m = trivial_module(2);
  LatticeMap f = make_lattice_map(m, m, QMatrix{{2, 1}, {0, 3}});
  QuasiInverse g = quasi_inverse(f);
  EXPECT_EQ(g.G.matrix * f.matrix, QMatrix::scalar(2, g.r));
  EXPECT_EQ(g.r, 6);
}
