#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "padic.hpp"

// Class groups of imaginary quadratic fields through reduced binary quadratic
// forms, and their ell-parts.
namespace logiw {

/// Finite abelian ell-group as its invariant factors ell^k, k descending.
struct AbelianLGroup {
  unsigned long ell = 3;
  std::vector<unsigned> exponents;

  long exponent_sum() const {
    long s = 0;
    for (auto k : exponents) s += k;
    return s;
  }
  bool trivial() const { return exponents.empty(); }

  std::vector<Integer> factors() const {
    std::vector<Integer> out;
    for (auto k : exponents) out.push_back(ipow(ell, k));
    return out;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (i) s += ", ";
      s += ipow(ell, exponents[i]).get_str();
    }
    return s + "]";
  }

  friend bool operator==(const AbelianLGroup &a, const AbelianLGroup &b) {
    return a.ell == b.ell && a.exponents == b.exponents;
  }
};

inline AbelianLGroup make_group(unsigned long ell, const std::vector<Integer> &factors) {
  AbelianLGroup g{ell, {}};
  for (const auto &f : factors) {
    if (f <= 1) fail(ErrorCode::InvalidGroupShape, "factor " + f.get_str() + " is not a positive power of " + std::to_string(ell));
    Integer t = f;
    unsigned k = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), ell)) {
      t /= ell;
      ++k;
    }
    if (t != 1) fail(ErrorCode::InvalidGroupShape, f.get_str() + " is not a power of " + std::to_string(ell));
    g.exponents.push_back(k);
  }
  std::sort(g.exponents.rbegin(), g.exponents.rend());
  return g;
}

/// Parses "[9, 3]" or "9;3" (also "[]" and "") into a group.
inline AbelianLGroup parse_group(std::string_view text, unsigned long ell) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') fail(ErrorCode::ParseError, "unbalanced brackets in group '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Integer> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find_first_of(",;", pos);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(pos, end - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::ParseError, "bad group factor '" + tok + "' in '" + std::string(text) + "'");
    factors.emplace_back(tok, 10);
    pos = end + 1;
    if (end == s.size() - 1) fail(ErrorCode::ParseError, "trailing separator in '" + std::string(text) + "'");
  }
  return make_group(ell, factors);
}

struct QuadForm {
  long long a = 1, b = 1, c = 1;

  long long discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const QuadForm &, const QuadForm &) = default;
  friend auto operator<=>(const QuadForm &, const QuadForm &) = default;
  std::string str() const {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
  }
};

inline constexpr long long kMaxAbsDiscriminant = 1000000;

namespace detail {

inline long long floor_div(long long x, long long y) {
  long long q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

inline long long ext_gcd(long long a, long long b, long long &x, long long &y) {
  long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long long q = floor_div(a, b);
    std::tie(a, b) = std::make_tuple(b, a - q * b);
    std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

} // namespace detail

/// Reduction of a positive definite form: |b| <= a <= c, b >= 0 if |b| = a or a = c.
inline QuadForm reduce(QuadForm f) {
  const long long D = f.discriminant();
  if (f.a <= 0 || D >= 0) fail(ErrorCode::InvalidArgument, "reduce needs a positive definite form");
  for (;;) {
    if (!(-f.a < f.b && f.b <= f.a)) {
      // b -> b + 2ka with b landing in (-a, a]
      long long k = detail::floor_div(f.a - f.b, 2 * f.a);
      f.b += 2 * k * f.a;
      f.c = (f.b * f.b - D) / (4 * f.a);
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

/// Gauss composition of two forms of the same discriminant, reduced.
inline QuadForm compose(QuadForm f1, QuadForm f2) {
  const long long D = f1.discriminant();
  if (f2.discriminant() != D) fail(ErrorCode::InvalidArgument, "composing forms of different discriminants");
  if (f1.a > f2.a) std::swap(f1, f2);
  const long long s = (f1.b + f2.b) / 2;
  const long long n = f2.b - s;
  long long y1, d;
  if (f2.a % f1.a == 0) {
    y1 = 0;
    d = f1.a;
  } else {
    long long u, v;
    d = detail::ext_gcd(f2.a, f1.a, u, v);
    y1 = u;
  }
  long long x2, y2, d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    d1 = detail::ext_gcd(s, d, x2, y2);
    y2 = -y2;
  }
  const long long v1 = f1.a / d1, v2 = f2.a / d1;
  __int128 r128 = static_cast<__int128>(y1) * y2 * n - static_cast<__int128>(x2) * f2.c;
  r128 %= v1;
  if (r128 < 0) r128 += v1;
  const long long r = static_cast<long long>(r128);
  QuadForm out;
  out.b = f2.b + 2 * v2 * r;
  out.a = v1 * v2;
  out.c = (out.b * out.b - D) / (4 * out.a);
  return reduce(out);
}

inline QuadForm inverse(const QuadForm &f) { return reduce({f.a, -f.b, f.c}); }

inline QuadForm principal_form(long long D) {
  const long long b = (D % 2 == 0) ? 0 : 1;
  return {1, b, (b * b - D) / 4};
}

inline QuadForm power(QuadForm f, Integer e) {
  QuadForm r = principal_form(f.discriminant());
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = compose(r, f);
    e >>= 1;
    if (e > 0) f = compose(f, f);
  }
  return r;
}

/// Fundamental discriminant of Q(sqrt d) for squarefree d < 0.
inline long long fundamental_discriminant(long long d) {
  if (d >= 0) fail(ErrorCode::PositiveD, "only imaginary quadratic fields (d < 0) are supported");
  if (!is_squarefree(d)) fail(ErrorCode::NotSquarefree, std::to_string(d) + " is not squarefree");
  const long long D = ((d % 4) + 4) % 4 == 1 ? d : 4 * d;
  if (-D > kMaxAbsDiscriminant) fail(ErrorCode::SizeLimit, "|D| exceeds " + std::to_string(kMaxAbsDiscriminant));
  return D;
}

/// All primitive reduced forms of discriminant D < 0, principal form first.
inline std::vector<QuadForm> reduced_forms(long long D) {
  std::vector<QuadForm> out;
  for (long long a = 1; 3 * a * a <= -D; ++a) {
    for (long long b = -a + 1; b <= a; ++b) {
      if (((b - D) % 2 + 2) % 2 != 0) continue;
      long long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (a == c)) continue;
      if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

struct ClassGroup {
  long long d = -1;
  long long discriminant = -4;
  std::vector<QuadForm> forms;

  std::size_t order() const { return forms.size(); }
};

inline ClassGroup class_group(long long d) {
  const long long D = fundamental_discriminant(d);
  return {d, D, reduced_forms(D)};
}

namespace detail {

/// Invariant factors of a finite abelian ell-group from the sizes |G[ell^j]|.
inline AbelianLGroup from_torsion_counts(unsigned long ell, const std::vector<std::size_t> &counts) {
  // counts[j] = |G[ell^j]|, counts[0] = 1. ranks[j] = #factors with exponent >= j.
  std::vector<unsigned> ranks;
  for (std::size_t j = 1; j < counts.size(); ++j) {
    std::size_t ratio = counts[j] / counts[j - 1];
    unsigned r = 0;
    while (ratio > 1) {
      ratio /= ell;
      ++r;
    }
    ranks.push_back(r);
  }
  AbelianLGroup g{ell, {}};
  for (std::size_t j = 0; j < ranks.size(); ++j) {
    unsigned next = j + 1 < ranks.size() ? ranks[j + 1] : 0;
    for (unsigned t = 0; t < ranks[j] - next; ++t) g.exponents.push_back(static_cast<unsigned>(j + 1));
  }
  std::sort(g.exponents.rbegin(), g.exponents.rend());
  return g;
}

struct SylowData {
  std::vector<QuadForm> elements;
  unsigned long ell_part_order = 1;
  unsigned long cofactor = 1;
  unsigned k = 0;
};

inline SylowData sylow(const ClassGroup &g, unsigned long ell) {
  SylowData s;
  unsigned long h = g.order();
  s.cofactor = h;
  while (s.cofactor % ell == 0) {
    s.cofactor /= ell;
    s.ell_part_order *= ell;
    ++s.k;
  }
  const QuadForm one = principal_form(g.discriminant);
  for (const auto &f : g.forms)
    if (power(f, s.ell_part_order) == one) s.elements.push_back(f);
  return s;
}

} // namespace detail

inline AbelianLGroup ell_part(const ClassGroup &g, unsigned long ell) {
  require_odd_prime(ell);
  const auto s = detail::sylow(g, ell);
  const QuadForm one = principal_form(g.discriminant);
  std::vector<std::size_t> counts{1};
  Integer step = 1;
  for (unsigned j = 1; j <= s.k; ++j) {
    step *= ell;
    std::size_t c = 0;
    for (const auto &f : s.elements)
      if (power(f, step) == one) ++c;
    counts.push_back(c);
  }
  return detail::from_torsion_counts(ell, counts);
}

/// Reduced forms (ell, b, c) for the primes above ell: two when ell splits,
/// one when it ramifies, none when it is inert.
inline std::vector<QuadForm> primes_above_ell_classes(long long d, unsigned long ell) {
  require_odd_prime(ell);
  const long long D = fundamental_discriminant(d);
  const long long L = static_cast<long long>(ell);
  std::vector<QuadForm> out;
  for (long long b = -L + 1; b <= L; ++b) {
    long long num = b * b - D;
    if (num % (4 * L) != 0) continue;
    out.push_back(reduce({L, b, num / (4 * L)}));
  }
  return out;
}

/// ell-part of the class group modulo the classes of the primes above ell.
inline AbelianLGroup cl_prime(long long d, unsigned long ell) {
  require_odd_prime(ell);
  const ClassGroup g = class_group(d);
  const auto s = detail::sylow(g, ell);
  const QuadForm one = principal_form(g.discriminant);

  // Subgroup of the Sylow generated by the ell-components of the prime classes.
  std::vector<QuadForm> sub{one};
  for (const auto &p : primes_above_ell_classes(d, ell)) {
    const QuadForm gen = power(p, s.cofactor);
    for (std::size_t i = 0; i < sub.size(); ++i) {
      QuadForm x = compose(sub[i], gen);
      if (std::find(sub.begin(), sub.end(), x) == sub.end()) sub.push_back(x);
    }
  }
  std::sort(sub.begin(), sub.end());
  auto in_sub = [&](const QuadForm &x) { return std::binary_search(sub.begin(), sub.end(), x); };

  std::vector<std::size_t> counts{1};
  Integer step = 1;
  for (unsigned j = 1; j <= s.k; ++j) {
    step *= ell;
    std::size_t c = 0;
    for (const auto &f : s.elements)
      if (in_sub(power(f, step))) ++c;
    counts.push_back(c / sub.size());
  }
  return detail::from_torsion_counts(ell, counts);
}

} // namespace logiw
