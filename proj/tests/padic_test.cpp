#include <gtest/gtest.h>

#include <logiw/padic.hpp>

#include <random>
#include <vector>

using namespace logiw;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

PadicInt z(unsigned long ell, unsigned prec, long v) { return PadicInt(ell, prec, Integer(v)); }

// Independent oracle: log of a 1-unit by summing the series over Q exactly,
// then reducing. Shares no code with the library's truncated summation.
Integer exact_series_log(const Integer &one_unit, unsigned long ell, unsigned prec, unsigned terms) {
  Rational y(one_unit - 1), sum(0), power(1);
  for (unsigned n = 1; n <= terms; ++n) {
    power *= y;
    Rational term = power / Rational(n);
    if (n % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  sum.canonicalize();
  Integer m = ipow(ell, prec);
  return mod(sum.get_num() * inverse_mod(sum.get_den(), m), m);
}

} // namespace

TEST(PadicInt, ArithmeticIsExactModPrecision) {
  PadicInt a = z(5, 4, 123), b = z(5, 4, 600);
  EXPECT_EQ((a + b).value(), (123 + 600) % 625);
  EXPECT_EQ((a * b).value(), (123L * 600L) % 625);
  EXPECT_EQ((a - b).value(), ((123 - 600) % 625 + 625) % 625);
  EXPECT_EQ((a * a.inverse()).value(), 1);
  EXPECT_EQ(z(3, 5, -1).value(), 242);
}

TEST(PadicInt, RejectsTwoAndNonUnits) {
  try {
    PadicInt(2, 4, 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::EvenPrime);
  }
  EXPECT_THROW(z(3, 4, 9).inverse(), Error);
  EXPECT_THROW(z(3, 4, 1) + z(3, 5, 1), Error);
}

TEST(Teichmuller, MinusOneForTwoModThree) { EXPECT_EQ(teichmuller(z(3, 5, 2)).value(), 242); }

TEST(Teichmuller, OneIsFixed) { EXPECT_EQ(teichmuller(z(5, 4, 1)).value(), 1); }

TEST(Teichmuller, FiveModThreeToFourMatchesPowerIteration) {
  // u^(3^k) mod 81 iterated to stability by plain integers.
  unsigned long x = 5;
  for (int k = 0; k < 10; ++k) x = (x * x * x) % 81;
  PadicInt w = teichmuller(z(3, 4, 5));
  EXPECT_EQ(w.value(), x);
  EXPECT_EQ(w.value(), 80);
  EXPECT_EQ((w * w).value(), 1);
}

TEST(Teichmuller, NonUnitRejected) {
  try {
    teichmuller(z(3, 4, 6));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnit);
  }
}

TEST(Teichmuller, RootOfUnityAndLogVanishes) {
  for (unsigned long ell : {3UL, 5UL, 7UL, 11UL}) {
    for (long u = 1; u < 40; ++u) {
      if (u % static_cast<long>(ell) == 0) continue;
      PadicInt w = teichmuller(z(ell, 12, u));
      EXPECT_EQ(w.pow(ell - 1).value(), 1);
      EXPECT_EQ((w - z(ell, 12, u)).valuation() >= 1, true);
      EXPECT_TRUE(iwasawa_log(PadicValue{0, w}).is_zero());
    }
  }
}

TEST(IwasawaLog, KnownValues) {
  EXPECT_TRUE(iwasawa_log(q(-1), 3, 10).is_zero());
  EXPECT_EQ(iwasawa_log(q(4), 3, 3).value(), 21);
  EXPECT_TRUE(iwasawa_log(q(9), 3, 10).is_zero());
  // Frozen from exact rational series summation (tests/oracle values).
  EXPECT_EQ(iwasawa_log(q(2), 3, 10).value(), 33801);
  EXPECT_EQ(iwasawa_log(q(2), 5, 8).value(), 190335);
  EXPECT_EQ(iwasawa_log(q(6), 5, 4).value(), 555);
  EXPECT_EQ(iwasawa_log(q(10), 7, 6).value(), 25718);
}

TEST(IwasawaLog, ZeroRejected) {
  try {
    iwasawa_log(q(0), 3, 5);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroArgument);
  }
}

TEST(IwasawaLog, AgreesWithExactSeriesOfPowerOnUnits) {
  for (unsigned long ell : {3UL, 5UL, 7UL}) {
    const unsigned prec = 8;
    for (long u = 2; u < 30; ++u) {
      if (u % static_cast<long>(ell) == 0) continue;
      // Log(u) = Log(u^(ell-1)) / (ell-1), with u^(ell-1) a 1-unit.
      Integer w = ipow(Integer(u), ell - 1);
      Integer m = ipow(ell, prec);
      Integer expected = mod(exact_series_log(w, ell, prec, 3 * prec + 12) * inverse_mod(Integer(ell - 1), m), m);
      EXPECT_EQ(iwasawa_log(q(u), ell, prec).value(), expected) << "ell=" << ell << " u=" << u;
    }
  }
}

TEST(IwasawaLog, IsAHomomorphism) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-500, 500);
  for (int i = 0; i < 200; ++i) {
    long a = dist(rng), b = dist(rng);
    if (a == 0 || b == 0) continue;
    for (unsigned long ell : {3UL, 5UL}) {
      EXPECT_EQ(iwasawa_log(q(a * b), ell, 20), iwasawa_log(q(a), ell, 20) + iwasawa_log(q(b), ell, 20));
    }
  }
}

TEST(DegPrime, Examples) {
  EXPECT_EQ(deg_prime(3, 3, 3).value(), 21);
  // 2 v = Log(4) = 21 mod 27 gives v = 24.
  PadicInt d2 = deg_prime(2, 3, 3);
  EXPECT_EQ(d2.value(), 24);
  EXPECT_EQ((z(3, 3, 2) * d2).value(), iwasawa_log(q(4), 3, 3).value());
  EXPECT_EQ(deg_prime(5, 5, 4), iwasawa_log(q(6), 5, 4));
}

TEST(DegPrime, NonvanishingAndEllDegreeHasValuationOne) {
  for (unsigned long ell : {3UL, 5UL, 7UL}) {
    EXPECT_EQ(deg_prime(Integer(ell), ell, 32).valuation(), 1u);
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
      EXPECT_FALSE(deg_prime(p, ell, 32).is_zero());
  }
  EXPECT_THROW(deg_prime(9, 3, 5), Error);
}

TEST(DegPrime, DegenerateAtLowPrecision) {
  // 19 = 1 + 2*9, so Log(19) has valuation 2 and vanishes mod 3^2.
  try {
    deg_prime(19, 3, 2);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateAtPrecision);
  }
}

TEST(LogValuation, Examples) {
  EXPECT_EQ(log_valuation(5, q(50), 3, 10).value(), 2);
  EXPECT_EQ(log_valuation(3, q(4), 3, 10), z(3, 10, -1));
  EXPECT_TRUE(log_valuation(7, q(1, 2), 3, 10).is_zero());
  EXPECT_EQ(log_valuation(2, q(3, 8), 5, 6), z(5, 6, -3));
}

TEST(LogValuation, TamePrimesAgreeWithClassicalValuation) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(1, 100000);
  for (int i = 0; i < 100; ++i) {
    long a = dist(rng), b = dist(rng);
    Rational x = q(a, b);
    for (long p : {2, 5, 7, 11, 13}) {
      long v = 0;
      for (long t = a; t % p == 0; t /= p) ++v;
      for (long t = b; t % p == 0; t /= p) --v;
      EXPECT_EQ(log_valuation(p, x, 3, 16), z(3, 16, v));
    }
  }
}

TEST(LogValuation, HomomorphismAtEveryPrime) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> dist(-300, 300);
  for (int i = 0; i < 60; ++i) {
    long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    if (!a || !b || !c || !d) continue;
    Rational x = q(a, b), y = q(c, d);
    for (unsigned long ell : {3UL, 5UL}) {
      for (long p : {2L, 3L, 5L, 7L}) {
        EXPECT_EQ(log_valuation(p, x * y, ell, 16), log_valuation(p, x, ell, 16) + log_valuation(p, y, ell, 16));
      }
    }
  }
}

TEST(LogValuation, HOfOnePlusEllIsOne) {
  for (unsigned long ell : {3UL, 5UL, 7UL}) {
    for (unsigned prec : {1u, 2u, 5u, 32u}) {
      PadicInt h = iwasawa_log(q(static_cast<long>(ell) + 1), ell, prec + 1);
      PadicInt d = deg_prime(Integer(ell), ell, prec + 1);
      PadicInt ratio = PadicInt(ell, prec, h.value() / ell) * PadicInt(ell, prec, d.value() / ell).inverse();
      EXPECT_EQ(ratio.value(), 1);
      EXPECT_EQ(h_ell(q(static_cast<long>(ell) + 1), ell, prec).value(), 1);
      // and the wild valuation of 1 + ell is -1
      EXPECT_EQ(log_valuation(Integer(ell), q(static_cast<long>(ell) + 1), ell, prec), z(ell, prec, -1));
    }
  }
}

TEST(PrincipalDivisor, Examples) {
  EXPECT_TRUE(principal_divisor(q(1), 3, 10).empty());
  EXPECT_TRUE(principal_divisor(q(-1), 3, 10).empty());
  LogDivisor d = principal_divisor(q(4), 3, 10);
  ASSERT_EQ(d.entries.size(), 2u);
  EXPECT_EQ(d.entries.at(2), z(3, 10, 2));
  EXPECT_EQ(d.entries.at(3), z(3, 10, -1));
  EXPECT_THROW(principal_divisor(q(0), 3, 10), Error);
}

TEST(DivisorDegree, Examples) {
  EXPECT_TRUE(divisor_degree(LogDivisor{3, 10, {}}).is_zero());
  EXPECT_TRUE(divisor_degree(principal_divisor(q(5), 3, 32)).is_zero());
  LogDivisor single{3, 12, {}};
  single.entries.emplace(Integer(2), z(3, 12, 1));
  EXPECT_EQ(divisor_degree(single), iwasawa_log(q(2), 3, 12));
}

TEST(DivisorDegree, ProductFormulaOnRandomRationals) {
  std::mt19937 rng(3);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<int> expo(-3, 3);
  for (int i = 0; i < 40; ++i) {
    Rational x(1);
    for (int k = 0; k < 4; ++k) {
      int e = expo(rng);
      Rational p(primes[pick(rng)]);
      for (int j = 0; j < std::abs(e); ++j) x = e > 0 ? Rational(x * p) : Rational(x / p);
    }
    if (i % 2) x = -x;
    for (unsigned long ell : {3UL, 5UL, 7UL})
      EXPECT_TRUE(divisor_degree(principal_divisor(x, ell, 20)).is_zero()) << x.get_str() << " ell=" << ell;
  }
}
