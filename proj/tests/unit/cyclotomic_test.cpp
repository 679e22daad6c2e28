#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "loghat/cyclo_matrix.hpp"
#include "loghat/cyclotomic.hpp"
#include "loghat/error.hpp"
#include "oracle.hpp"

using namespace loghat;

namespace {

// Σ c_j ω^j with ω = exp(2πi s / r), straight from the coordinates.
std::complex<double> numeric_embed(const CycloElem& x, int s) {
  std::complex<double> z = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t j = 0; j < x.coeffs().size(); ++j)
    z += x.coeffs()[j].get_d() * std::polar(1.0, 2 * pi * s * static_cast<double>(j) / x.r());
  return z;
}

std::vector<int> units_mod(int r) {
  std::vector<int> s;
  for (int i = 1; i <= r; ++i)
    if (std::gcd(i, r) == 1) s.push_back(i % r);
  return s;
}

}  // namespace

TEST(Cyclotomic, PolynomialsMatchMoebiusProduct) {
  for (int r = 1; r <= 40; ++r) {
    EXPECT_EQ(cyclotomic_poly(r), oracle::to_int_poly(oracle::cyclotomic(r))) << r;
    EXPECT_EQ(euler_phi(r), oracle::totient(r));
    EXPECT_EQ(moebius(r), oracle::mobius(r));
  }
  EXPECT_EQ(cyclotomic_poly(12), int_poly({1, 0, -1, 0, 1}));
  EXPECT_EQ(divisors(12), (std::vector<int>{1, 2, 3, 4, 6, 12}));
}

TEST(Cyclotomic, ConductorsWithSmallPhi) {
  auto c = conductors_up_to_phi(2);
  EXPECT_EQ(c, (std::vector<int>{1, 2, 3, 4, 6}));
  for (int r : conductors_up_to_phi(8)) EXPECT_LE(euler_phi(r), 8);
  auto c8 = conductors_up_to_phi(8);
  for (int r = 1; r < 200; ++r)
    if (oracle::totient(r) <= 8) EXPECT_NE(std::find(c8.begin(), c8.end(), r), c8.end()) << r;
}

TEST(Cyclotomic, DiscriminantsOfSmallFields) {
  EXPECT_EQ(cyclotomic_discriminant_abs(1), 1);
  EXPECT_EQ(cyclotomic_discriminant_abs(3), 3);
  EXPECT_EQ(cyclotomic_discriminant_abs(4), 4);
  EXPECT_EQ(cyclotomic_discriminant_abs(5), 125);
  EXPECT_EQ(cyclotomic_discriminant_abs(8), 256);
  EXPECT_EQ(cyclotomic_discriminant_abs(12), 144);
}

TEST(Cyclotomic, TraceIsRamanujanSum) {
  for (int r : {1, 2, 5, 8, 9, 12, 15}) {
    auto f = cyclotomic_field(r);
    for (int k = 0; k < 2 * r; ++k) {
      long want = 0;
      int g = std::gcd(k, r);
      for (int d = 1; d <= g; ++d)
        if (g % d == 0) want += static_cast<long>(oracle::mobius(r / d)) * d;
      EXPECT_EQ(trace(CycloElem::zeta_power(f, k)), want) << r << " " << k;
    }
  }
}

TEST(Cyclotomic, FieldOperationsAgreeWithEmbeddings) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int r : {3, 5, 7, 8, 12}) {
    auto f = cyclotomic_field(r);
    for (int it = 0; it < 10; ++it) {
      std::vector<BigRat> a(f->phi()), b(f->phi());
      for (auto& x : a) x = d(rng);
      for (auto& x : b) x = d(rng);
      CycloElem x(f, a), y(f, b);
      if (x.is_zero() || y.is_zero()) continue;
      for (int s : units_mod(r)) {
        EXPECT_LT(std::abs(numeric_embed(x * y, s) - numeric_embed(x, s) * numeric_embed(y, s)), 1e-9);
        EXPECT_LT(std::abs(numeric_embed(x / y, s) - numeric_embed(x, s) / numeric_embed(y, s)), 1e-9);
        EXPECT_LT(std::abs(numeric_embed(conj(x), s) - std::conj(numeric_embed(x, s))), 1e-9);
      }
      std::complex<double> n = 1;
      for (int s : units_mod(r)) n *= numeric_embed(x, s);
      EXPECT_NEAR(norm(x).get_d(), n.real(), 1e-6 * (1 + std::abs(n)));
      EXPECT_EQ(x * invert(x), CycloElem::rational(f, 1));
    }
  }
}

TEST(Cyclotomic, MultMatrixAndCharpoly) {
  auto f = cyclotomic_field(5);
  CycloElem z = CycloElem::zeta_power(f, 1);
  EXPECT_EQ(charpoly(z), to_rat(cyclotomic_poly(5)));
  CycloElem x = z + CycloElem::rational(f, 2);
  QMatrix mx = mult_matrix(x), mz = mult_matrix(z);
  EXPECT_EQ(mult_matrix(x * z), mx * mz);
  EXPECT_EQ(from_column(f, mx.column(0)), x);
  // 1 − ζ has norm 5
  EXPECT_EQ(norm(CycloElem::rational(f, 1) - z), 5);
}

TEST(Cyclotomic, TotalPositivity) {
  auto f = cyclotomic_field(5);
  CycloElem z = CycloElem::zeta_power(f, 1), zi = CycloElem::zeta_power(f, 4);
  CycloElem two = CycloElem::rational(f, 2);
  EXPECT_TRUE(is_totally_real(z + zi));
  EXPECT_FALSE(is_totally_real(z));
  EXPECT_FALSE(is_totally_positive(z + zi));        // 2cos(4π/5) < 0
  EXPECT_TRUE(is_totally_positive(two + z + zi));   // 2 + 2cos > 0
  EXPECT_FALSE(is_totally_positive(CycloElem::rational(f, 0)));
  // random totally real elements: compare against the numeric embeddings
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int r : {5, 7, 8, 12}) {
    auto g = cyclotomic_field(r);
    for (int it = 0; it < 30; ++it) {
      CycloElem t = CycloElem::rational(g, d(rng));
      for (int k = 1; k < 3; ++k) {
        int c = d(rng);
        t += BigRat(c) * (CycloElem::zeta_power(g, k) + CycloElem::zeta_power(g, -k));
      }
      bool pos = true;
      for (int s : units_mod(r)) pos = pos && numeric_embed(t, s).real() > 1e-9;
      EXPECT_EQ(is_totally_positive(t), pos) << t.to_string();
    }
  }
}

TEST(Cyclotomic, InverseDifferentGenerator) {
  EXPECT_EQ(inverse_different_generator(4), BigRat(-1, 2) * CycloElem::zeta_power(cyclotomic_field(4), 1));
  for (int r : {1, 3, 4, 5, 8, 12}) {
    auto f = cyclotomic_field(r);
    CycloElem g = inverse_different_generator(r);
    EXPECT_EQ(abs(norm(g)) * cyclotomic_discriminant_abs(r), 1);
    for (int j = 0; j < f->phi(); ++j) {
      CycloElem x = g * CycloElem::zeta_power(f, j);
      EXPECT_TRUE(in_inverse_different(x));
      // Tr(x·ζ^i) integral, computed by embeddings
      for (int i = 0; i < f->phi(); ++i) {
        std::complex<double> t = 0;
        for (int s : units_mod(r)) t += numeric_embed(x * CycloElem::zeta_power(f, i), s);
        EXPECT_NEAR(t.real(), std::round(t.real()), 1e-9);
      }
    }
    if (r > 2) EXPECT_FALSE(in_inverse_different(BigRat(1, 2 * r) * CycloElem::rational(f, 1)));
  }
}

TEST(CycloMatrix, RegularRoundTripAndInverse) {
  auto f = cyclotomic_field(3);
  CycloElem z = CycloElem::zeta_power(f, 1);
  CycloMatrix a(f, 2, 2);
  a(0, 0) = z;
  a(0, 1) = CycloElem::rational(f, 1);
  a(1, 0) = CycloElem::rational(f, 2);
  a(1, 1) = z * z;
  EXPECT_EQ(CycloMatrix::from_regular(a.regular(), f), a);
  EXPECT_EQ(a * inverse(a), CycloMatrix::identity(f, 2));
  EXPECT_EQ(det(a), z * z * z - CycloElem::rational(f, 2));
  EXPECT_THROW(CycloMatrix::from_regular(QMatrix{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, f),
               Error);
  EXPECT_EQ(rank(a), 2u);
}

TEST(CycloMatrix, MinimalPolynomialAnnihilates) {
  auto f = cyclotomic_field(4);
  CycloElem i = CycloElem::zeta_power(f, 1);
  CycloMatrix a(f, 3, 3);
  a(0, 0) = i;
  a(1, 1) = i;
  a(2, 2) = CycloElem::rational(f, 1);
  a(0, 1) = CycloElem::rational(f, 1);
  CycloVector mu = minimal_polynomial(a);
  // (x − i)²(x − 1)
  EXPECT_EQ(mu.size(), 4u);
  CycloMatrix acc(f, 3, 3), pw = CycloMatrix::identity(f, 3);
  for (const auto& c : mu) {
    acc = acc + c * pw;
    pw = pw * a;
  }
  EXPECT_TRUE(acc.is_zero());
}

TEST(CycloMatrix, RootsInField) {
  auto f = cyclotomic_field(5);
  CycloElem one = CycloElem::rational(f, 1);
  // x² − 5 splits in Q(ζ_5)
  auto rr = roots_in_field({CycloElem::rational(f, -5), CycloElem(f), one});
  EXPECT_TRUE(rr.complete);
  ASSERT_EQ(rr.roots.size(), 2u);
  for (const auto& x : rr.roots) EXPECT_EQ(x * x, CycloElem::rational(f, 5));
  // x² − 2 does not
  auto r2 = roots_in_field({CycloElem::rational(f, -2), CycloElem(f), one});
  EXPECT_TRUE(r2.roots.empty());
  // x² − ζ_8² over Q(ζ_8)
  auto g = cyclotomic_field(8);
  auto r8 = roots_in_field({-CycloElem::zeta_power(g, 2), CycloElem(g), CycloElem::rational(g, 1)});
  ASSERT_EQ(r8.roots.size(), 2u);
  for (const auto& x : r8.roots) EXPECT_EQ(x * x, CycloElem::zeta_power(g, 2));
}
