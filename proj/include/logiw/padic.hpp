#pragma once

#include <map>
#include <string>
#include <utility>

#include "error.hpp"
#include "integer.hpp"

namespace logiw {

inline constexpr unsigned kDefaultPrecision = 32;

inline void require_odd_prime(unsigned long ell) {
  if (ell == 2) fail(ErrorCode::EvenPrime, "the prime 2 is not supported");
  if (ell < 3 || !is_prime(Integer(ell)))
    fail(ErrorCode::InvalidArgument, std::to_string(ell) + " is not an odd prime");
}

/// An element of Z_ell known modulo ell^precision, stored as its canonical
/// residue in [0, ell^precision).
class PadicInt {
public:
  PadicInt(unsigned long ell, unsigned precision, const Integer &value = 0)
      : ell_(ell), precision_(precision) {
    require_odd_prime(ell);
    if (precision == 0) fail(ErrorCode::InvalidArgument, "precision must be positive");
    modulus_ = ipow(ell, precision);
    value_ = mod(value, modulus_);
  }

  unsigned long ell() const { return ell_; }
  unsigned precision() const { return precision_; }
  const Integer &value() const { return value_; }
  const Integer &modulus() const { return modulus_; }

  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return mpz_divisible_ui_p(value_.get_mpz_t(), ell_) == 0; }

  /// ell-adic valuation of the residue; returns precision() for zero.
  unsigned valuation() const {
    if (is_zero()) return precision_;
    return static_cast<unsigned>(logiw::valuation(value_, ell_));
  }

  /// Residue as a signed integer in (-m/2, m/2].
  Integer signed_value() const {
    Integer half = modulus_ / 2;
    return value_ > half ? Integer(value_ - modulus_) : value_;
  }

  PadicInt with_precision(unsigned precision) const { return PadicInt(ell_, precision, value_); }

  PadicInt inverse() const {
    if (!is_unit()) fail(ErrorCode::NonUnit, value_.get_str() + " is divisible by " + std::to_string(ell_));
    return PadicInt(ell_, precision_, inverse_mod(value_, modulus_));
  }

  PadicInt pow(const Integer &e) const {
    Integer r;
    mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(), modulus_.get_mpz_t());
    return PadicInt(ell_, precision_, r);
  }

  PadicInt operator-() const { return PadicInt(ell_, precision_, -value_); }

  friend PadicInt operator+(const PadicInt &a, const PadicInt &b) {
    a.check_compatible(b);
    return PadicInt(a.ell_, a.precision_, a.value_ + b.value_);
  }
  friend PadicInt operator-(const PadicInt &a, const PadicInt &b) {
    a.check_compatible(b);
    return PadicInt(a.ell_, a.precision_, a.value_ - b.value_);
  }
  friend PadicInt operator*(const PadicInt &a, const PadicInt &b) {
    a.check_compatible(b);
    return PadicInt(a.ell_, a.precision_, a.value_ * b.value_);
  }
  friend bool operator==(const PadicInt &a, const PadicInt &b) {
    return a.ell_ == b.ell_ && a.precision_ == b.precision_ && a.value_ == b.value_;
  }

  std::string str() const {
    return value_.get_str() + " (mod " + std::to_string(ell_) + "^" + std::to_string(precision_) + ")";
  }

private:
  void check_compatible(const PadicInt &o) const {
    if (ell_ != o.ell_ || precision_ != o.precision_)
      fail(ErrorCode::InvalidArgument, "mixing ell-adic integers of different prime or precision");
  }

  unsigned long ell_;
  unsigned precision_;
  Integer modulus_;
  Integer value_;
};

/// ell^valuation * unit, an element of Q_ell^x.
struct PadicValue {
  long valuation = 0;
  PadicInt unit;
};

inline PadicValue to_padic_value(const Rational &x, unsigned long ell, unsigned precision) {
  if (x == 0) fail(ErrorCode::ZeroArgument, "zero has no ell-adic unit part");
  Integer num = x.get_num(), den = x.get_den();
  Integer p(ell);
  long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
  PadicInt n(ell, precision, num), d(ell, precision, den);
  return {vn - vd, n * d.inverse()};
}

/// Teichmuller representative: the (ell-1)-th root of unity congruent to u mod ell.
inline PadicInt teichmuller(const PadicInt &u) {
  if (!u.is_unit()) fail(ErrorCode::NonUnit, "teichmuller of a non-unit " + u.str());
  // u -> u^ell contracts toward the root of unity; N-1 steps suffice, one more confirms.
  PadicInt x = u;
  Integer e(u.ell());
  for (unsigned k = 0; k < u.precision(); ++k) x = x.pow(e);
  if (!(x.pow(e) == x)) fail(ErrorCode::PrecisionExhausted, "teichmuller iteration did not stabilise");
  return x;
}

namespace detail {

inline unsigned floor_log(unsigned long base, unsigned long n) {
  unsigned k = 0;
  for (unsigned long b = base; b <= n; b *= base) ++k;
  return k;
}

/// log(1 + y) mod ell^precision for y in ell Z_ell given as an integer lift.
inline Integer log_one_plus(const Integer &y, unsigned long ell, unsigned precision) {
  // Terms y^n / n with n - v(n) >= precision vanish; the first such n bounds the sum.
  unsigned long last = 1;
  while (last - floor_log(ell, last) < precision) ++last;
  const unsigned working = precision + floor_log(ell, last) + 1;
  const Integer wmod = ipow(ell, working);
  const Integer target = ipow(ell, precision);
  Integer sum = 0, power = 1;
  for (unsigned long n = 1; n < last; ++n) {
    power = mod(power * y, wmod);
    Integer nn(n);
    unsigned long vn = 0;
    while (mpz_divisible_ui_p(nn.get_mpz_t(), ell)) {
      nn /= ell;
      ++vn;
    }
    Integer term = power / ipow(ell, vn);
    term = mod(term * inverse_mod(nn, wmod), wmod);
    if (n % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return mod(sum, target);
}

} // namespace detail

/// Iwasawa logarithm of an element of Q_ell^x: Log(ell) = 0, Log(root of unity) = 0.
inline PadicInt iwasawa_log(const PadicValue &x) {
  const unsigned long ell = x.unit.ell();
  const unsigned n = x.unit.precision();
  if (!x.unit.is_unit()) fail(ErrorCode::NonUnit, "unit part is divisible by ell");
  const unsigned working = n + detail::floor_log(ell, n + 64) + 2;
  PadicInt u = x.unit.with_precision(working);
  PadicInt one_unit = u * teichmuller(u).inverse();
  Integer y = one_unit.value() - 1;
  return PadicInt(ell, n, detail::log_one_plus(y, ell, n));
}

inline PadicInt iwasawa_log(const Rational &x, unsigned long ell, unsigned precision = kDefaultPrecision) {
  require_odd_prime(ell);
  if (x == 0) fail(ErrorCode::ZeroArgument, "Log of zero");
  return iwasawa_log(to_padic_value(x, ell, precision));
}

/// deg p = Log(p) for p != ell, Log(1 + ell) for p = ell.
inline PadicInt deg_prime(const Integer &p, unsigned long ell, unsigned precision = kDefaultPrecision) {
  require_odd_prime(ell);
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.get_str() + " is not prime");
  PadicInt d = (p == ell) ? iwasawa_log(Rational(Integer(ell) + 1), ell, precision)
                          : iwasawa_log(Rational(p), ell, precision);
  if (d.is_zero())
    fail(ErrorCode::DegenerateAtPrecision, "deg " + p.get_str() + " vanishes mod " + std::to_string(ell) +
                                               "^" + std::to_string(precision));
  return d;
}

/// h_ell(x) = Log(x)/deg(ell) on Q_ell^x; h_ell(1 + ell) = 1.
inline PadicInt h_ell(const Rational &x, unsigned long ell, unsigned precision = kDefaultPrecision) {
  require_odd_prime(ell);
  if (x == 0) fail(ErrorCode::ZeroArgument, "h_ell of zero");
  // Both logarithms lie in ell Z_ell and deg(ell) has valuation exactly one,
  // so one extra digit recovers the quotient to full precision.
  PadicInt lx = iwasawa_log(x, ell, precision + 1);
  PadicInt dl = deg_prime(Integer(ell), ell, precision + 1);
  if (dl.valuation() != 1) fail(ErrorCode::DegenerateAtPrecision, "deg(ell) is not exactly divisible by ell");
  PadicInt num(ell, precision, lx.value() / ell);
  PadicInt den(ell, precision, dl.value() / ell);
  return num * den.inverse();
}

/// Logarithmic valuation at the rational prime p. At p = ell this is
/// -h_ell(x), the sign for which principal divisors have degree zero.
inline PadicInt log_valuation(const Integer &p, const Rational &x, unsigned long ell,
                              unsigned precision = kDefaultPrecision) {
  require_odd_prime(ell);
  if (x == 0) fail(ErrorCode::ZeroArgument, "logarithmic valuation of zero");
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, p.get_str() + " is not prime");
  if (p != ell) {
    long v = 0;
    if (mpz_divisible_p(x.get_num_mpz_t(), p.get_mpz_t())) v = valuation(x.get_num(), p);
    if (mpz_divisible_p(x.get_den_mpz_t(), p.get_mpz_t())) v = -valuation(x.get_den(), p);
    return PadicInt(ell, precision, Integer(std::to_string(v)));
  }
  return -h_ell(x, ell, precision);
}

/// Finitely supported formal sum of primes with Z_ell coefficients.
struct LogDivisor {
  unsigned long ell = 3;
  unsigned precision = kDefaultPrecision;
  std::map<Integer, PadicInt> entries;

  bool empty() const { return entries.empty(); }
};

inline LogDivisor principal_divisor(const Rational &x, unsigned long ell, unsigned precision = kDefaultPrecision) {
  require_odd_prime(ell);
  if (x == 0) fail(ErrorCode::ZeroArgument, "principal divisor of zero");
  LogDivisor d{ell, precision, {}};
  auto add_support = [&](const Integer &n) {
    if (n == 1) return;
    for (const auto &[p, e] : factorize(n)) {
      (void)e;
      if (p == ell) continue;
      PadicInt a = log_valuation(p, x, ell, precision);
      if (!a.is_zero()) d.entries.emplace(p, a);
    }
  };
  add_support(x.get_num());
  add_support(x.get_den());
  PadicInt at_ell = log_valuation(Integer(ell), x, ell, precision);
  if (!at_ell.is_zero()) d.entries.emplace(Integer(ell), at_ell);
  return d;
}

inline PadicInt divisor_degree(const LogDivisor &d) {
  PadicInt total(d.ell, d.precision, 0);
  for (const auto &[p, a] : d.entries) total = total + a * deg_prime(p, d.ell, d.precision);
  return total;
}

} // namespace logiw
