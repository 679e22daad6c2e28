#include <gtest/gtest.h>

#include <random>

#include "loghat/error.hpp"
#include "loghat/factor.hpp"
#include "loghat/linalg.hpp"
#include "loghat/psd.hpp"
#include "loghat/sturm.hpp"
#include "oracle.hpp"

using namespace loghat;

TEST(Numbers, SquaresAndRoots) {
  EXPECT_EQ(isqrt(BigInt(0)), 0);
  EXPECT_EQ(isqrt(BigInt(15)), 3);
  EXPECT_EQ(isqrt(BigInt(16)), 4);
  EXPECT_TRUE(is_square(BigInt(49)));
  EXPECT_FALSE(is_square(BigInt(50)));
  EXPECT_FALSE(is_square(BigInt(-4)));
  EXPECT_EQ(parse_int("-123456789012345678901234567890"), BigInt("-123456789012345678901234567890"));
  EXPECT_THROW(parse_int("12a"), ValidationError);
  EXPECT_EQ(make_rat(6, -4), BigRat(-3, 2));
  EXPECT_EQ(to_string(BigRat(-3, 2)), "-3/2");
}

TEST(Polynomial, ArithmeticMatchesOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int it = 0; it < 50; ++it) {
    oracle::IPoly a(1 + it % 5), b(1 + (it * 3) % 4);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    oracle::trim(a);
    oracle::trim(b);
    EXPECT_EQ(oracle::to_int_poly(a) * oracle::to_int_poly(b), oracle::to_int_poly(oracle::mul(a, b)));
  }
}

TEST(Polynomial, DivmodAndGcd) {
  IntPoly a = int_poly({-1, 0, 0, 0, 1});  // x⁴ − 1
  IntPoly b = int_poly({-1, 0, 1});        // x² − 1
  auto [q, r] = divmod(to_rat(a), to_rat(b));
  EXPECT_EQ(q, to_rat(int_poly({1, 0, 1})));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(to_rat(a), to_rat(int_poly({1, 1}))), to_rat(int_poly({1, 1})));
  ExtGcd e = ext_gcd(to_rat(int_poly({1, 0, 1})), to_rat(int_poly({1, 1})));
  EXPECT_EQ(e.s * to_rat(int_poly({1, 0, 1})) + e.t * to_rat(int_poly({1, 1})), e.g);
  EXPECT_EQ(e.g.degree(), 0);
  EXPECT_EQ(exact_divide(a, int_poly({1, 1})), int_poly({-1, 1, -1, 1}));
  EXPECT_FALSE(exact_divide(a, int_poly({2, 1})).has_value());
}

TEST(Polynomial, SquarefreeAndFormat) {
  IntPoly p = pow(int_poly({-1, 1}), 3) * int_poly({1, 0, 1});
  EXPECT_EQ(squarefree_part(p), int_poly({-1, 1}) * int_poly({1, 0, 1}));
  EXPECT_FALSE(is_squarefree(p));
  EXPECT_EQ(format(int_poly({2, -1, 1}), {"θ", true}), "θ²−θ+2");
  EXPECT_EQ(format(int_poly({-5, 1})), "x-5");
}

TEST(Linalg, DetMatchesLaplace) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n)
    for (int it = 0; it < 20; ++it) {
      auto a = oracle::random_imat(rng, n, n, -4, 4);
      EXPECT_EQ(det(oracle::to_q(a)), BigRat(static_cast<long>(oracle::idet(a))));
    }
}

TEST(Linalg, InverseNullspaceSolve) {
  QMatrix a{{2, 1}, {1, 1}};
  EXPECT_EQ(inverse(a) * a, QMatrix::identity(2));
  EXPECT_THROW(inverse(QMatrix{{1, 2}, {2, 4}}), Error);
  QMatrix s{{1, 2, 3}, {2, 4, 6}};
  auto ns = nullspace(s);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns)
    for (const auto& x : s * v) EXPECT_EQ(x, 0);
  EXPECT_EQ(rank(s), 1u);
  auto x = solve(a, QVector{BigRat(3), BigRat(2)});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (QVector{BigRat(3), BigRat(2)}));
  EXPECT_FALSE(solve(s, QVector{BigRat(1), BigRat(1)}).has_value());
}

TEST(Linalg, CharPolyCayleyHamilton) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    auto a = oracle::to_q(oracle::random_imat(rng, 4, 4, -3, 3));
    IntPoly cp = char_poly(a);
    EXPECT_EQ(cp.degree(), 4);
    EXPECT_EQ(cp.coeff(3), -a.trace());
    EXPECT_EQ(BigRat(cp.coeff(0)), det(a));  // even dimension
    EXPECT_TRUE(evaluate(cp, a).is_zero());
  }
}

TEST(Linalg, SmithFormProductIsAbsDet) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    auto a = oracle::random_imat(rng, 3, 3, -6, 6);
    QMatrix q = oracle::to_q(a);
    SmithForm s = smith_normal_form(q);
    EXPECT_EQ(s.U * q * s.V, s.D);
    EXPECT_EQ(abs(det(s.U)), 1);
    EXPECT_EQ(abs(det(s.V)), 1);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
    oracle::I64 d = oracle::idet(a);
    auto co = cokernel_order(q);
    if (d == 0) {
      EXPECT_FALSE(co.has_value());
    } else {
      ASSERT_TRUE(co.has_value());
      EXPECT_EQ(*co, BigInt(static_cast<long>(d < 0 ? -d : d)));
    }
  }
}

TEST(Linalg, IntegerKernelIsSaturated) {
  QMatrix a{{2, 4, 6}};
  QMatrix k = integer_kernel(a);
  ASSERT_EQ(k.cols(), 2u);
  EXPECT_TRUE(k.is_integer());
  EXPECT_TRUE((a * k).is_zero());
  // saturated: the kernel lattice has index 1 in its rational span, so some
  // 2×2 minor of k is ±1 (the lattice contains (−2,1,0) and (−3,0,1)).
  EXPECT_EQ(cokernel_order(k.block(1, 0, 2, 2)), BigInt(1));
}

TEST(Sturm, CountsMatchKnownRoots) {
  IntPoly p = int_poly({-2, 0, 1});  // ±√2
  EXPECT_EQ(sturm_count(p, Endpoint::neg_inf(), Endpoint::pos_inf()), 2u);
  EXPECT_EQ(sturm_count(p, Endpoint::rational(0), Endpoint::pos_inf()), 1u);
  EXPECT_EQ(sturm_count(p, Endpoint::rational(BigRat(3, 2)), Endpoint::pos_inf()), 0u);
  // (x−1)(x−2)(x−3) on (1, 3) open: only x = 2
  IntPoly c = int_poly({-1, 1}) * int_poly({-2, 1}) * int_poly({-3, 1});
  EXPECT_EQ(sturm_count(c, Endpoint::rational(1), Endpoint::rational(3)), 1u);
  // quadratic endpoints: x² − 3 on (−√3, √3)... roots sit at the endpoints
  EXPECT_EQ(sturm_count(int_poly({-3, 0, 1}), Endpoint::quadratic(0, -1, 3), Endpoint::quadratic(0, 1, 3)), 0u);
  EXPECT_EQ(sturm_count(int_poly({0, 1}), Endpoint::quadratic(0, -1, 3), Endpoint::quadratic(0, 1, 3)), 1u);
  EXPECT_EQ(sign_quadratic(1, -1, 2), -1);
  EXPECT_EQ(sign_quadratic(BigRat(3, 2), -1, 2), 1);
}

TEST(Sturm, AgreesWithEnumerationOfIntegerRoots) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int it = 0; it < 30; ++it) {
    // product of distinct linear factors (x − r_i)
    std::vector<int> roots;
    IntPoly p = IntPoly::constant(1);
    for (int j = 0; j < 4; ++j) {
      int r = d(rng);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      p *= int_poly({-r, 1});
    }
    int lo = d(rng), hi = lo + 1 + (it % 7);
    std::size_t expect = 0;
    for (int r : roots) expect += (r > lo && r < hi);
    EXPECT_EQ(sturm_count(p, Endpoint::rational(lo), Endpoint::rational(hi)), expect);
  }
}

TEST(Psd, AgreesWithPrincipalMinors) {
  std::mt19937_64 rng(21);
  int pd = 0, singular = 0, indefinite = 0;
  for (int it = 0; it < 300; ++it) {
    std::size_t n = 1 + it % 4;
    auto b = oracle::random_imat(rng, n, n, -2, 2);
    oracle::IMat a = oracle::imat_mul(oracle::imat_t(b), b);
    if (it % 3 == 0) {  // random symmetric instead of a Gram matrix
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) a[i][j] = a[j][i] = b[i][j];
    }
    PsdResult res = psd_status(oracle::to_q(a));
    bool want_psd = oracle::is_psd(a), want_pd = oracle::is_pd(a);
    if (want_pd) {
      EXPECT_EQ(res.status, PsdStatus::PD);
      ++pd;
    } else if (want_psd) {
      EXPECT_EQ(res.status, PsdStatus::PSDSingular);
      ++singular;
    } else {
      ASSERT_EQ(res.status, PsdStatus::Indefinite);
      EXPECT_LT(quadratic_form(oracle::to_q(a), res.witness), 0);
      ++indefinite;
    }
  }
  EXPECT_GT(pd, 0);
  EXPECT_GT(singular, 0);
  EXPECT_GT(indefinite, 0);
  EXPECT_THROW(psd_status(QMatrix{{1, 2}, {0, 1}}), PreconditionError);
}

TEST(Factor, CyclotomicPeelingAndIrreducibles) {
  // (x−1)²(x²+x+1)(x²−x+2)
  IntPoly rest;
  IntPoly p = pow(int_poly({-1, 1}), 2) * int_poly({1, 1, 1}) * int_poly({2, -1, 1});
  auto m = peel_cyclotomic(p, &rest);
  EXPECT_EQ(m.at(1), 2u);
  EXPECT_EQ(m.at(3), 1u);
  EXPECT_EQ(rest, int_poly({2, -1, 1}));
  auto fs = factor_integer_poly(p);
  IntPoly back = IntPoly::constant(1);
  for (const auto& f : fs) back *= pow(f.poly, f.multiplicity);
  EXPECT_EQ(back, p);
  for (const auto& f : fs) EXPECT_TRUE(is_irreducible(f.poly));
}

TEST(Factor, SplitsProductsOfIrreducibleQuartics) {
  IntPoly a = int_poly({2, 0, 0, 0, 1});   // x⁴ + 2, Eisenstein
  IntPoly b = int_poly({3, 3, 0, 0, 1});   // Eisenstein at 3
  IntPoly c = int_poly({5, 0, 1});
  auto fs = factor_integer_poly(a * b * c);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].poly, c);
  EXPECT_FALSE(is_irreducible(int_poly({4, 0, 0, 0, 1})));  // (x²+2x+2)(x²−2x+2)
  EXPECT_TRUE(is_irreducible(a));
}
