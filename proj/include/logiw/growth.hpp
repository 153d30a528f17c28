#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "lambda.hpp"
#include "polynomial.hpp"
#include "residue.hpp"

// Orders of the quotients M / omega_n M for elementary torsion Lambda-modules
// and for the codescent quotients C / Y_n, each by two independent routes.
namespace logiw {

/// Direct sum of Lambda/(ell^m_i) and Lambda/(P_j).
struct ElementaryModule {
  unsigned long ell = 3;
  std::vector<unsigned> ell_parts;
  std::vector<DistinguishedPoly> poly_parts;

  long mu() const {
    long s = 0;
    for (auto m : ell_parts) s += m;
    return s;
  }
  long lambda() const {
    long s = 0;
    for (const auto &p : poly_parts) s += static_cast<long>(p.degree());
    return s;
  }
};

inline ElementaryModule make_elementary_module(unsigned long ell, std::vector<unsigned> ell_parts,
                                               const std::vector<IntPoly> &polys) {
  require_odd_prime(ell);
  for (auto m : ell_parts)
    if (m == 0) fail(ErrorCode::InvalidArgument, "ell-power exponents must be positive");
  ElementaryModule e{ell, std::move(ell_parts), {}};
  for (const auto &p : polys) e.poly_parts.push_back(make_distinguished(ell, p));
  return e;
}

/// omega_n / omega_(n-1) for n >= 1, and T for n = 0; irreducible over Q.
inline IntPoly cyclotomic_factor(unsigned long ell, unsigned n) {
  if (n == 0) return IntPoly{0, 1};
  return divmod_monic(omega_poly(ell, n), omega_poly(ell, n - 1)).first;
}

namespace detail {

/// Determinant over Z by fraction-free Gaussian elimination.
inline Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// x^e mod a monic p, exact over Z.
inline IntPoly powmod_monic(IntPoly x, unsigned long e, const IntPoly &p) {
  IntPoly r = divmod_monic(IntPoly{1}, p).second;
  x = divmod_monic(x, p).second;
  while (e > 0) {
    if (e & 1) r = divmod_monic(r * x, p).second;
    e >>= 1;
    if (e) x = divmod_monic(x * x, p).second;
  }
  return r;
}

/// Index of the first cyclotomic factor (T, then omega_k/omega_(k-1), k <= n)
/// dividing p exactly, or -1.
inline int shared_cyclotomic_factor(const IntPoly &p, unsigned long ell, unsigned n) {
  for (unsigned k = 0; k <= n; ++k) {
    IntPoly phi = cyclotomic_factor(ell, k);
    if (phi.degree() > p.degree()) break;
    if (divmod_monic(p, phi).second.is_zero()) return static_cast<int>(k);
  }
  return -1;
}

inline void check_layer(unsigned long ell, unsigned n) {
  if (n > 12 || ipow(ell, n) > 200000)
    fail(ErrorCode::SizeLimit, "layer " + std::to_string(n) + " is too large for exact computation");
}

} // namespace detail

/// Res(P, omega_n) for monic P, as the norm of omega_n mod P.
inline Integer resultant_with_omega(const IntPoly &p, unsigned n, unsigned long ell) {
  if (!p.is_monic()) fail(ErrorCode::InvalidArgument, "resultant needs a monic polynomial");
  detail::check_layer(ell, n);
  const std::size_t d = static_cast<std::size_t>(p.degree());
  if (d == 0) return 1;
  IntPoly r = detail::powmod_monic(IntPoly{1, 1}, ipow(ell, n).get_ui(), p) - IntPoly{1};
  // column k holds r * T^k mod p
  std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d, 0));
  IntPoly col = divmod_monic(r, p).second;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) m[i][k] = col.coeff(i);
    col = divmod_monic(col * IntPoly{0, 1}, p).second;
  }
  return detail::bareiss_det(std::move(m));
}

/// Exponent of |E / omega_n E| from exact integer resultants.
inline long quotient_order_exponent(const ElementaryModule &e, unsigned n) {
  detail::check_layer(e.ell, n);
  Integer total = Integer(e.mu()) * ipow(e.ell, n);
  for (const auto &p : e.poly_parts) {
    Integer res = resultant_with_omega(p.poly, n, e.ell);
    if (res == 0)
      fail(ErrorCode::InfiniteQuotient, "'" + p.poly.str() + "' shares a factor with omega_" + std::to_string(n));
    total += valuation(res, e.ell);
  }
  return total.get_si();
}

namespace detail {

inline constexpr unsigned kPrecisionGuard = 4;

inline long guarded_sum(const ResidueRing &R, const std::vector<unsigned> &vals) {
  long s = 0;
  for (auto v : vals) {
    if (v + kPrecisionGuard > R.precision())
      fail(ErrorCode::PrecisionSaturated, "elementary divisor of valuation " + std::to_string(v) +
                                              " is within " + std::to_string(kPrecisionGuard) +
                                              " digits of the working precision " + std::to_string(R.precision()));
    s += v;
  }
  return s;
}

/// Matrix of multiplication by T on Z[T]/(f) in the basis 1, T, ..., T^(d-1).
inline WordMatrix companion(const ResidueRing &R, const IntPoly &f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  WordMatrix c(d, std::vector<ResidueRing::word>(d, 0));
  for (std::size_t i = 1; i < d; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < d; ++i) c[i][d - 1] = R.reduce(-f.coeff(i));
  return c;
}

inline WordMatrix one_plus(const ResidueRing &R, const WordMatrix &c) {
  return mat_add(R, identity_matrix(c.size()), c);
}

} // namespace detail

/// Exponent of |E / omega_n E| by diagonalising an explicit presentation over
/// Z/ell^N: ell^m I on the basis 1..T^(ell^n - 1) of Z[T]/(omega_n) for each
/// ell-part, and (1 + C)^(ell^n) - I with C the companion matrix of P_j.
inline long quotient_order_snf(const ElementaryModule &e, unsigned n, unsigned precision = 0) {
  detail::check_layer(e.ell, n);
  for (const auto &p : e.poly_parts) {
    int k = detail::shared_cyclotomic_factor(p.poly, e.ell, n);
    if (k >= 0)
      fail(ErrorCode::InfiniteQuotient, "'" + p.poly.str() + "' is divisible by the cyclotomic factor of index " +
                                            std::to_string(k));
  }
  const ResidueRing R(e.ell, precision);
  const unsigned long width = ipow(e.ell, n).get_ui();
  long total = 0;
  for (auto m : e.ell_parts) {
    if (m >= R.precision()) fail(ErrorCode::PrecisionSaturated, "ell-part exceeds the working precision");
    std::vector<SparseColumn> cols(width);
    for (std::uint32_t i = 0; i < width; ++i) cols[i].emplace_back(i, R.ell_power(m));
    total += detail::guarded_sum(R, elementary_divisor_valuations(R, width, cols));
  }
  for (const auto &p : e.poly_parts) {
    if (p.degree() == 0) continue;
    WordMatrix w = detail::one_plus(R, detail::companion(R, p.poly));
    for (unsigned k = 0; k < n; ++k) w = mat_pow(R, w, e.ell);
    for (std::size_t i = 0; i < w.size(); ++i) w[i][i] = R.sub(w[i][i], 1);
    total += detail::guarded_sum(R, elementary_divisor_valuations(R, p.degree(), dense_columns(w)));
  }
  return total;
}

/// C = Lambda/(f) together with the elements a_i of the codescent presentation;
/// Y_0 is the Lambda-submodule generated by the a_i and T.
struct CodescentData {
  DistinguishedPoly f;
  std::vector<IntPoly> aux_generators;
};

/// Exponent of |C / Y_n| with Y_n = (omega_n/omega_0) Y_0. When from_layer = d
/// is positive, Y_d is built first and Y_n = (omega_n/omega_d) Y_d.
inline long codescent_quotient(const CodescentData &data, unsigned n, unsigned from_layer = 0,
                               unsigned precision = 0) {
  const unsigned long ell = data.f.ell;
  detail::check_layer(ell, n);
  if (from_layer > n) fail(ErrorCode::InvalidArgument, "starting layer beyond target layer");
  const IntPoly &f = data.f.poly;
  const std::size_t d = data.f.degree();
  if (d == 0) return 0;

  std::vector<IntPoly> gens{divmod_monic(IntPoly{0, 1}, f).second};
  for (const auto &a : data.aux_generators) gens.push_back(divmod_monic(a, f).second);

  // Finiteness over Q: Y_n has finite index iff gcd(f, nu_n * gcd(T, a_i)) = 1.
  bool common_zero = f.coeff(0) == 0;
  for (std::size_t i = 1; i < gens.size() && common_zero; ++i)
    if (gens[i].coeff(0) != 0) common_zero = false;
  if (common_zero) fail(ErrorCode::InfiniteQuotient, "f, T and every generator vanish at 0");
  for (unsigned k = 1; k <= n; ++k)
    if (divmod_monic(f, cyclotomic_factor(ell, k)).second.is_zero())
      fail(ErrorCode::InfiniteQuotient, "f is divisible by omega_" + std::to_string(k) + "/omega_" +
                                            std::to_string(k - 1));

  const ResidueRing R(ell, precision);
  const WordMatrix c = detail::companion(R, f);
  const WordMatrix shift = detail::one_plus(R, c);
  WordMatrix nu = geometric_sum(R, shift, ipow(ell, from_layer).get_ui());
  if (n > from_layer) {
    WordMatrix g = mat_pow(R, shift, ipow(ell, from_layer).get_ui());
    nu = mat_mul(R, geometric_sum(R, g, ipow(ell, n - from_layer).get_ui()), nu);
  }

  WordMatrix columns(d);
  for (const auto &x : gens) {
    WordMatrix v(d, std::vector<ResidueRing::word>(1, 0));
    for (std::size_t i = 0; i < d; ++i) v[i][0] = R.reduce(x.coeff(i));
    for (std::size_t k = 0; k < d; ++k) {
      WordMatrix y = mat_mul(R, nu, v);
      for (std::size_t i = 0; i < d; ++i) columns[i].push_back(y[i][0]);
      v = mat_mul(R, c, v);
    }
  }
  return detail::guarded_sum(R, elementary_divisor_valuations(R, d, dense_columns(columns)));
}

} // namespace logiw
