#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "padic.hpp"
#include "polynomial.hpp"

// The Iwasawa algebra Z_ell[[T]] truncated to (ell^N, T^M).
namespace logiw {

/// Truncation bound large enough to hold omega_n for n <= n_max.
inline std::size_t default_degree_bound(unsigned long ell, unsigned n_max) {
  return ipow(ell, n_max).get_ui() + 8;
}

class LambdaElem {
public:
  /// Coefficients at index >= degree_bound vanish in the truncated ring and are dropped.
  LambdaElem(unsigned long ell, unsigned precision, std::size_t degree_bound, std::vector<Integer> coeffs = {})
      : ell_(ell), precision_(precision) {
    require_odd_prime(ell);
    if (precision == 0) fail(ErrorCode::InvalidArgument, "precision must be positive");
    if (degree_bound == 0) fail(ErrorCode::InvalidArgument, "degree bound must be positive");
    modulus_ = ipow(ell, precision);
    coeffs.resize(degree_bound, 0);
    for (auto &c : coeffs) c = mod(c, modulus_);
    c_ = std::move(coeffs);
  }

  static LambdaElem from_poly(const IntPoly &p, unsigned long ell, unsigned precision, std::size_t degree_bound) {
    return LambdaElem(ell, precision, degree_bound, p.coeffs());
  }

  unsigned long ell() const { return ell_; }
  unsigned precision() const { return precision_; }
  std::size_t degree_bound() const { return c_.size(); }
  const Integer &modulus() const { return modulus_; }
  const std::vector<Integer> &raw() const { return c_; }
  PadicInt coeff(std::size_t i) const { return PadicInt(ell_, precision_, i < c_.size() ? c_[i] : Integer(0)); }

  bool is_zero() const {
    for (const auto &c : c_)
      if (c != 0) return false;
    return true;
  }
  bool is_unit() const { return mpz_divisible_ui_p(c_[0].get_mpz_t(), ell_) == 0; }

  /// Smallest ell-adic valuation among the coefficients; precision() for zero.
  unsigned min_valuation() const {
    unsigned best = precision_;
    for (const auto &c : c_)
      if (c != 0) best = std::min(best, static_cast<unsigned>(valuation(c, ell_)));
    return best;
  }

  /// Canonical lift to a polynomial with coefficients in [0, ell^N).
  IntPoly to_poly() const { return IntPoly(c_); }

  LambdaElem inverse() const {
    if (!is_unit()) fail(ErrorCode::NonUnit, "constant term is divisible by ell");
    const Integer a0inv = inverse_mod(c_[0], modulus_);
    std::vector<Integer> b(c_.size(), 0);
    b[0] = a0inv;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      Integer s = 0;
      for (std::size_t j = 1; j <= k; ++j) s += c_[j] * b[k - j];
      b[k] = mod(-s * a0inv, modulus_);
    }
    return like(std::move(b));
  }

  LambdaElem operator-() const {
    std::vector<Integer> r(c_);
    for (auto &x : r) x = -x;
    return like(std::move(r));
  }

  friend LambdaElem operator+(const LambdaElem &a, const LambdaElem &b) {
    a.check_compatible(b);
    std::vector<Integer> r(a.c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
    return a.like(std::move(r));
  }
  friend LambdaElem operator-(const LambdaElem &a, const LambdaElem &b) {
    a.check_compatible(b);
    std::vector<Integer> r(a.c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
    return a.like(std::move(r));
  }
  friend LambdaElem operator*(const LambdaElem &a, const LambdaElem &b) {
    a.check_compatible(b);
    const std::size_t m = a.c_.size();
    std::vector<Integer> r(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < m; ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return a.like(std::move(r));
  }
  friend LambdaElem operator*(const Integer &s, const LambdaElem &a) {
    std::vector<Integer> r(a.c_);
    for (auto &x : r) x *= s;
    return a.like(std::move(r));
  }
  friend bool operator==(const LambdaElem &a, const LambdaElem &b) {
    return a.ell_ == b.ell_ && a.precision_ == b.precision_ && a.c_ == b.c_;
  }

  /// Element of the same ring.
  LambdaElem like(std::vector<Integer> coeffs) const {
    return LambdaElem(ell_, precision_, c_.size(), std::move(coeffs));
  }

  std::string str() const {
    return to_poly().reduced_signed(modulus_).str() + " (mod " + std::to_string(ell_) + "^" +
           std::to_string(precision_) + ", T^" + std::to_string(c_.size()) + ")";
  }

private:
  void check_compatible(const LambdaElem &o) const {
    if (ell_ != o.ell_ || precision_ != o.precision_ || c_.size() != o.c_.size())
      fail(ErrorCode::InvalidArgument, "mixing elements of differently truncated rings");
  }

  unsigned long ell_;
  unsigned precision_;
  Integer modulus_;
  std::vector<Integer> c_;
};

/// Monic polynomial with every lower coefficient divisible by ell.
struct DistinguishedPoly {
  unsigned long ell = 3;
  IntPoly poly;

  std::size_t degree() const { return static_cast<std::size_t>(poly.degree()); }
};

inline DistinguishedPoly make_distinguished(unsigned long ell, const IntPoly &p) {
  require_odd_prime(ell);
  if (!p.is_monic()) fail(ErrorCode::InvalidArgument, "'" + p.str() + "' is not monic");
  for (long i = 0; i < p.degree(); ++i)
    if (mpz_divisible_ui_p(p.coeffs()[static_cast<std::size_t>(i)].get_mpz_t(), ell) == 0)
      fail(ErrorCode::InvalidArgument, "'" + p.str() + "' is not distinguished at " + std::to_string(ell));
  return {ell, p};
}

/// omega_n = (1 + T)^(ell^n) - 1.
inline LambdaElem omega(unsigned long ell, unsigned precision, std::size_t degree_bound, unsigned n) {
  require_odd_prime(ell);
  if (n > 40 || ipow(ell, n) + 1 > degree_bound)
    fail(ErrorCode::DegreeOverflow, "omega_" + std::to_string(n) + " needs degree bound at least " +
                                        std::to_string(ell) + "^" + std::to_string(n) + " + 1");
  return LambdaElem::from_poly(omega_poly(ell, n), ell, precision, degree_bound);
}

/// omega_n / omega_d for n >= d, by exact division over Z.
inline LambdaElem omega_quotient(unsigned long ell, unsigned precision, std::size_t degree_bound, unsigned n,
                                 unsigned d) {
  if (d > n) fail(ErrorCode::InvalidArgument, "omega quotient needs n >= d");
  omega(ell, precision, degree_bound, n); // degree check
  auto [q, r] = divmod_monic(omega_poly(ell, n), omega_poly(ell, d));
  if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "omega_n / omega_d left a remainder");
  return LambdaElem::from_poly(q, ell, precision, degree_bound);
}

struct WeierstrassFactorization {
  unsigned mu = 0;
  DistinguishedPoly P;
  LambdaElem U;

  std::size_t lambda() const { return P.degree(); }
};

/// f = ell^mu * P * U with P distinguished and U a unit.
///
/// The stored coefficients of f are read as a polynomial of degree < M, and
/// the factorisation mod ell is lifted one ell-adic digit at a time, so U is
/// again a polynomial and the round trip is exact mod (ell^N, T^M). P and U
/// carry N - mu significant digits.
inline WeierstrassFactorization weierstrass(const LambdaElem &f) {
  if (f.is_zero()) fail(ErrorCode::ZeroSeries, "cannot prepare the zero series");
  const unsigned long ell = f.ell();
  const unsigned mu = f.min_valuation();
  if (mu >= f.precision()) fail(ErrorCode::PrecisionExhausted, "mu reaches the working precision");
  const unsigned digits = f.precision() - mu;
  const Integer mod_g = ipow(ell, digits);
  const Integer ell_z(ell);
  const Integer scale = ipow(ell, mu);

  std::vector<Integer> gc(f.raw().size());
  for (std::size_t i = 0; i < gc.size(); ++i) gc[i] = mod(Integer(f.raw()[i] / scale), mod_g);
  const IntPoly g(gc);
  std::size_t lambda = 0;
  while (mpz_divisible_ui_p(g.coeffs()[lambda].get_mpz_t(), ell)) ++lambda;

  // g = T^lambda * bbar (mod ell), bbar(0) a unit.
  std::vector<Integer> bc;
  for (std::size_t i = lambda; i < g.coeffs().size(); ++i) bc.push_back(mod(g.coeffs()[i], ell_z));
  const IntPoly bbar(bc);

  // bbar^{-1} mod (ell, T^lambda), used to split each correction.
  std::vector<Integer> binv(lambda, 0);
  if (lambda > 0) {
    const Integer b0inv = inverse_mod(bbar.coeff(0), ell_z);
    binv[0] = b0inv;
    for (std::size_t k = 1; k < lambda; ++k) {
      Integer s = 0;
      for (std::size_t j = 1; j <= k; ++j) s += bbar.coeff(j) * binv[k - j];
      binv[k] = mod(-s * b0inv, ell_z);
    }
  }

  IntPoly P = IntPoly::monomial(lambda);
  IntPoly Q = bbar;
  Integer step = ell_z;
  for (unsigned k = 1; k < digits; ++k, step *= ell) {
    const IntPoly err = (g - P * Q).reduced(mod_g);
    std::vector<Integer> e(err.coeffs().size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!mpz_divisible_p(err.coeffs()[i].get_mpz_t(), step.get_mpz_t()))
        fail(ErrorCode::PrecisionExhausted, "Weierstrass lifting diverged at digit " + std::to_string(k));
      e[i] = mod(Integer(err.coeffs()[i] / step), ell_z);
    }
    const IntPoly ebar(e);
    std::vector<Integer> dp(lambda, 0);
    for (std::size_t i = 0; i < lambda; ++i)
      for (std::size_t j = 0; j <= i; ++j) dp[i] += ebar.coeff(j) * binv[i - j];
    const IntPoly dP = IntPoly(dp).reduced(ell_z);
    const IntPoly rest = (ebar - bbar * dP).reduced(ell_z);
    for (std::size_t i = 0; i < lambda; ++i)
      if (rest.coeff(i) != 0) fail(ErrorCode::PrecisionExhausted, "Weierstrass correction is not divisible by T^lambda");
    std::vector<Integer> dq;
    for (std::size_t i = lambda; i < rest.coeffs().size(); ++i) dq.push_back(rest.coeffs()[i]);
    P = P + step * dP;
    Q = Q + step * IntPoly(dq);
  }
  if (!(g - P * Q).reduced(mod_g).is_zero())
    fail(ErrorCode::PrecisionExhausted, "Weierstrass lifting did not converge");

  return {mu, {ell, P.reduced_signed(mod_g)}, LambdaElem::from_poly(Q, ell, f.precision(), f.degree_bound())};
}

using LambdaMatrix = std::vector<std::vector<LambdaElem>>;

/// Determinant of a square presentation matrix by Berkowitz's algorithm, which
/// never divides and so works over the non-domain Lambda / (ell^N, T^M).
inline LambdaElem char_poly(const LambdaMatrix &a) {
  const std::size_t n = a.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty presentation matrix");
  for (const auto &row : a)
    if (row.size() != n) fail(ErrorCode::InvalidArgument, "presentation matrix must be square");
  const LambdaElem zero = a[0][0].like({});
  const LambdaElem one = a[0][0].like({Integer(1)});

  // v holds det(x I - A_r) coefficients, highest degree first.
  std::vector<LambdaElem> v{one, -a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<LambdaElem> c{one, -a[r][r]};
    std::vector<LambdaElem> x(r, zero);
    for (std::size_t i = 0; i < r; ++i) x[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      LambdaElem dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot = dot + a[r][i] * x[i];
      c.push_back(-dot);
      if (k + 1 < r) {
        std::vector<LambdaElem> y(r, zero);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) y[i] = y[i] + a[i][j] * x[j];
        x = std::move(y);
      }
    }
    std::vector<LambdaElem> next(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] = next[i] + c[i - j] * v[j];
    v = std::move(next);
  }
  LambdaElem det = (n % 2 == 0) ? v[n] : -v[n];
  if (det.is_zero())
    fail(ErrorCode::SingularPresentation, "determinant vanishes mod (ell^N, T^M); the module is not torsion");
  return det;
}

/// (mu, lambda) of the Weierstrass factorisation of a characteristic series.
inline std::pair<unsigned, std::size_t> invariants_from_charpoly(const LambdaElem &chi) {
  WeierstrassFactorization w = weierstrass(chi);
  return {w.mu, w.lambda()};
}

} // namespace logiw
