#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

// Small helpers over GMP integers shared by every module.
namespace logiw {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer &base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer ipow(unsigned long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

/// v_p(x) for x != 0.
inline long valuation(const Integer &x, const Integer &p) {
  if (x == 0) fail(ErrorCode::ZeroArgument, "valuation of zero");
  Integer t = x;
  return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t()));
}

inline long valuation(const Integer &x, unsigned long p) { return valuation(x, Integer(p)); }

inline bool is_prime(const Integer &n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline bool is_prime(long long n) { return n >= 2 && is_prime(Integer(std::to_string(n))); }

/// Canonical residue of x modulo m (m > 0), in [0, m).
inline Integer mod(const Integer &x, const Integer &m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer inverse_mod(const Integer &x, const Integer &m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::NonUnit, x.get_str() + " is not invertible mod " + m.get_str());
  return r;
}

inline Integer gcd(const Integer &a, const Integer &b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace detail {

inline Integer pollard_brent(const Integer &n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const Integer &v) { return mod(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = mod(q * abs(diff), n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(Integer n, std::map<Integer, int> &out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace detail

/// Prime factorisation of |n| (n != 0), primes ascending.
inline std::vector<std::pair<Integer, int>> factorize(const Integer &n) {
  if (n == 0) fail(ErrorCode::ZeroArgument, "factorize(0)");
  std::map<Integer, int> acc;
  Integer m = abs(n);
  for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++acc[Integer(p)];
    }
  }
  detail::factor_into(m, acc);
  return {acc.begin(), acc.end()};
}

/// Parses "NUM/DEN" or "NUM" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0)
    fail(ErrorCode::ParseError, "not a rational number: '" + s + "'");
  if (q.get_den() == 0) fail(ErrorCode::ZeroArgument, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_squarefree(long long n) {
  if (n == 0) return false;
  for (const auto &[p, e] : factorize(Integer(std::to_string(n))))
    if (e > 1) return false;
  return true;
}

/// Euler phi of ell^n for a prime ell.
inline Integer phi_prime_power(unsigned long ell, unsigned long n) {
  if (n == 0) return 1;
  return ipow(ell, n - 1) * (ell - 1);
}

} // namespace logiw
