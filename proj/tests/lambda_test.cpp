#include <gtest/gtest.h>

#include <logiw/lambda.hpp>

#include <random>

using namespace logiw;

namespace {

LambdaElem elem(unsigned long ell, std::initializer_list<long> c, unsigned prec = 20, std::size_t m = 16) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return LambdaElem(ell, prec, m, v);
}

LambdaElem poly_elem(const char *text, unsigned long ell = 3, unsigned prec = 20, std::size_t m = 16) {
  return LambdaElem::from_poly(parse_poly(text), ell, prec, m);
}

void expect_code(ErrorCode code, auto &&fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Laplace expansion along the first row; exponential, fine for 3x3 and 4x4.
LambdaElem cofactor_det(const LambdaMatrix &a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  LambdaElem total = a[0][0].like({});
  for (std::size_t col = 0; col < n; ++col) {
    LambdaMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LambdaElem> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(a[i][j]);
      minor.push_back(row);
    }
    LambdaElem term = a[0][col] * cofactor_det(minor);
    total = (col % 2 == 0) ? total + term : total - term;
  }
  return total;
}

} // namespace

TEST(LambdaElem, ArithmeticAndInverse) {
  LambdaElem a = elem(3, {1, 2, 0, 5});
  LambdaElem b = elem(3, {4, 0, 1});
  EXPECT_EQ(a * b, poly_elem("5T^5 + 22T^3 + T^2 + 8T + 4"));
  EXPECT_EQ(a * a.inverse(), elem(3, {1}));
  expect_code(ErrorCode::NonUnit, [] { elem(3, {3, 1}).inverse(); });
  EXPECT_EQ(elem(3, {1, 2, 3}, 20, 2), elem(3, {1, 2}, 20, 2));
}

TEST(Omega, SmallCases) {
  EXPECT_EQ(omega(3, 20, 16, 0), poly_elem("T"));
  EXPECT_EQ(omega(3, 20, 16, 1), poly_elem("T^3 + 3T^2 + 3T"));
  EXPECT_EQ(omega(5, 20, 16, 1), poly_elem("T^5 + 5T^4 + 10T^3 + 10T^2 + 5T", 5));
  expect_code(ErrorCode::DegreeOverflow, [] { omega(3, 20, 9, 2); });
  EXPECT_NO_THROW(omega(3, 20, 10, 2));
}

TEST(Omega, ReducesToPowerOfTModEll) {
  for (unsigned long ell : {3UL, 5UL, 7UL}) {
    for (unsigned n = 0; n <= 2; ++n) {
      IntPoly w = omega_poly(ell, n).reduced(Integer(ell));
      EXPECT_EQ(w, IntPoly::monomial(ipow(ell, n).get_ui()));
    }
  }
}

TEST(OmegaQuotient, Examples) {
  EXPECT_EQ(omega_quotient(3, 20, 16, 1, 0), poly_elem("T^2 + 3T + 3"));
  EXPECT_EQ(omega_quotient(3, 20, 16, 2, 2), elem(3, {1}));
  LambdaElem q = omega_quotient(3, 20, 16, 2, 1);
  EXPECT_EQ(omega(3, 20, 16, 1) * q, omega(3, 20, 16, 2));
  expect_code(ErrorCode::InvalidArgument, [] { omega_quotient(3, 20, 16, 1, 2); });
}

TEST(OmegaQuotient, Telescopes) {
  for (unsigned long ell : {3UL, 5UL}) {
    const std::size_t m = default_degree_bound(ell, 3);
    LambdaElem prod = omega(ell, 12, m, 0);
    for (unsigned k = 1; k <= 3; ++k) {
      prod = prod * omega_quotient(ell, 12, m, k, k - 1);
      EXPECT_EQ(prod, omega(ell, 12, m, k));
    }
  }
}

TEST(Weierstrass, ScalarTimesUnit) {
  auto w = weierstrass(elem(3, {3, 3}));
  EXPECT_EQ(w.mu, 1u);
  EXPECT_EQ(w.lambda(), 0u);
  EXPECT_EQ(w.P.poly, IntPoly{1});
  EXPECT_EQ(w.U, elem(3, {1, 1}));
}

TEST(Weierstrass, AlreadyDistinguished) {
  auto w = weierstrass(poly_elem("T^2 + 3"));
  EXPECT_EQ(w.mu, 0u);
  EXPECT_EQ(w.P.poly, parse_poly("T^2 + 3"));
  EXPECT_EQ(w.U, elem(3, {1}));
}

TEST(Weierstrass, RecoversBuiltFactorisation) {
  LambdaElem f = Integer(9) * poly_elem("T^3 + 3T + 3") * poly_elem("1 + T + 5T^2");
  auto w = weierstrass(f);
  EXPECT_EQ(w.mu, 2u);
  EXPECT_EQ(w.P.poly, parse_poly("T^3 + 3T + 3"));
  EXPECT_EQ(w.U, poly_elem("1 + T + 5T^2"));
  EXPECT_EQ(Integer(9) * LambdaElem::from_poly(w.P.poly, 3, 20, 16) * w.U, f);
}

TEST(Weierstrass, Errors) {
  expect_code(ErrorCode::ZeroSeries, [] { weierstrass(elem(3, {0})); });
  expect_code(ErrorCode::ZeroSeries, [] { weierstrass(elem(3, {27}, 3)); });
}

TEST(Weierstrass, RandomRoundTrip) {
  std::mt19937 rng(17);
  for (unsigned long ell : {3UL, 5UL, 7UL}) {
    const unsigned prec = 16;
    const std::size_t m = 24;
    const long L = static_cast<long>(ell);
    std::uniform_int_distribution<long> small(-40, 40);
    std::uniform_int_distribution<int> deg(0, 5), mus(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
      // distinguished P of random degree, unit U, scalar ell^mu
      int d = deg(rng);
      std::vector<Integer> pc(d + 1);
      for (int i = 0; i < d; ++i) pc[i] = Integer(small(rng) * L);
      pc[d] = 1;
      std::vector<Integer> uc(6);
      for (auto &x : uc) x = small(rng);
      if (uc[0] % L == 0) uc[0] += 1;
      unsigned mu = static_cast<unsigned>(mus(rng));
      LambdaElem P = LambdaElem(ell, prec, m, pc), U = LambdaElem(ell, prec, m, uc);
      LambdaElem f = ipow(ell, mu) * P * U;
      auto w = weierstrass(f);
      ASSERT_EQ(w.mu, mu);
      ASSERT_EQ(w.lambda(), static_cast<std::size_t>(d));
      ASSERT_TRUE(w.U.is_unit());
      for (long i = 0; i < w.P.poly.degree(); ++i)
        ASSERT_EQ(mpz_divisible_ui_p(w.P.poly.coeffs()[i].get_mpz_t(), ell), 1);
      // P and U only carry prec - mu digits; the product is exact to prec.
      ASSERT_EQ(ipow(ell, mu) * LambdaElem::from_poly(w.P.poly, ell, prec, m) * w.U, f);
      // uniqueness: same P, U modulo the significant digits
      const Integer sig = ipow(ell, prec - mu);
      ASSERT_EQ(w.P.poly.reduced(sig), IntPoly(pc).reduced(sig));
    }
  }
}

TEST(CharPoly, Diagonal) {
  LambdaElem zero = elem(3, {0});
  LambdaMatrix a{{elem(3, {3}), zero}, {zero, poly_elem("T^2 + 3")}};
  EXPECT_EQ(char_poly(a), Integer(3) * poly_elem("T^2 + 3"));
}

TEST(CharPoly, TriangularWithConstant) {
  LambdaMatrix a{{poly_elem("T"), elem(3, {3})}, {elem(3, {0}), elem(3, {1})}};
  EXPECT_EQ(char_poly(a), poly_elem("T"));
}

TEST(CharPoly, SingularRejected) {
  LambdaMatrix a{{poly_elem("T"), poly_elem("T")}, {poly_elem("T"), poly_elem("T")}};
  expect_code(ErrorCode::SingularPresentation, [&] { char_poly(a); });
}

TEST(CharPoly, AgreesWithCofactorExpansion) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> coef(-30, 30);
  for (unsigned long ell : {3UL, 5UL}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 3 + trial % 2;
      LambdaMatrix a(n);
      for (auto &row : a)
        for (std::size_t j = 0; j < n; ++j) row.push_back(elem(ell, {coef(rng), coef(rng), coef(rng)}, 12, 10));
      LambdaElem expected = cofactor_det(a);
      if (expected.is_zero()) continue;
      EXPECT_EQ(char_poly(a), expected);
    }
  }
}

TEST(CharPoly, UpperTriangularDistinguishedDiagonal) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> coef(-9, 9);
  const char *diag[] = {"T^2 + 3T + 3", "T - 3", "T^3 + 6", "T + 9", "T^2 - 3T"};
  for (int trial = 0; trial < 20; ++trial) {
    LambdaMatrix a(3);
    LambdaElem expected = elem(3, {1});
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (j < i)
          a[i].push_back(elem(3, {0}));
        else if (j == i)
          a[i].push_back(poly_elem(diag[(trial + i) % 5]));
        else
          a[i].push_back(elem(3, {coef(rng), coef(rng)}));
      }
      expected = expected * a[i][i];
    }
    EXPECT_EQ(char_poly(a), expected);
    EXPECT_EQ(char_poly(a), cofactor_det(a));
  }
}

TEST(CharPoly, BlockDiagonalMultiplies) {
  LambdaElem z = elem(3, {0});
  LambdaMatrix b1{{poly_elem("T + 3"), elem(3, {1})}, {elem(3, {6}), poly_elem("T^2")}};
  LambdaMatrix b2{{poly_elem("T - 3")}};
  LambdaMatrix both{{b1[0][0], b1[0][1], z}, {b1[1][0], b1[1][1], z}, {z, z, b2[0][0]}};
  EXPECT_EQ(char_poly(both), char_poly(b1) * char_poly(b2));
}

TEST(Invariants, FromCharPoly) {
  EXPECT_EQ(invariants_from_charpoly(Integer(9) * poly_elem("T^3 + 3T + 3")), (std::pair<unsigned, std::size_t>{2, 3}));
  EXPECT_EQ(invariants_from_charpoly(elem(3, {1})), (std::pair<unsigned, std::size_t>{0, 0}));
  EXPECT_EQ(invariants_from_charpoly(omega_quotient(3, 20, 16, 1, 0)), (std::pair<unsigned, std::size_t>{0, 2}));
}

TEST(Invariants, AdditiveOnProducts) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 40; ++trial) {
    LambdaElem f = elem(3, {coef(rng), coef(rng), coef(rng), coef(rng)});
    LambdaElem g = elem(3, {coef(rng), coef(rng), coef(rng)});
    if (f.min_valuation() > 3 || g.min_valuation() > 3) continue;
    auto a = invariants_from_charpoly(f), b = invariants_from_charpoly(g), c = invariants_from_charpoly(f * g);
    EXPECT_EQ(c.first, a.first + b.first);
    EXPECT_EQ(c.second, a.second + b.second);
  }
}

TEST(Polynomial, ParseAndPrint) {
  EXPECT_EQ(parse_poly("T^2+3T+3"), (IntPoly{3, 3, 1}));
  EXPECT_EQ(parse_poly("T - 3"), (IntPoly{-3, 1}));
  EXPECT_EQ(parse_poly("-2*T^3 + t"), (IntPoly{0, 1, 0, -2}));
  EXPECT_EQ(parse_poly("T^2 + 3T + 3").str(), "T^2 + 3T + 3");
  EXPECT_EQ(parse_poly("T-3").str(), "T - 3");
  for (const char *bad : {"", "T^", "3**T", "T3", "2x"}) EXPECT_THROW(parse_poly(bad), Error) << bad;
}
