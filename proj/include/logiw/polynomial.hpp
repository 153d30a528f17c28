#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace logiw {

/// Dense polynomial in T with exact integer coefficients; c[i] multiplies T^i.
/// The zero polynomial has no coefficients.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long x : coeffs) c_.emplace_back(x);
    trim();
  }

  static IntPoly monomial(std::size_t k, const Integer &a = 1) {
    std::vector<Integer> c(k + 1, 0);
    c[k] = a;
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Integer> &coeffs() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer &leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend IntPoly operator+(const IntPoly &a, const IntPoly &b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly &a, const IntPoly &b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const Integer &s, const IntPoly &a) {
    std::vector<Integer> r(a.c_);
    for (auto &x : r) x *= s;
    return IntPoly(std::move(r));
  }
  friend bool operator==(const IntPoly &a, const IntPoly &b) { return a.c_ == b.c_; }

  /// Coefficients reduced into [0, m).
  IntPoly reduced(const Integer &m) const {
    std::vector<Integer> r(c_);
    for (auto &x : r) x = mod(x, m);
    return IntPoly(std::move(r));
  }

  /// Coefficients reduced into (-m/2, m/2].
  IntPoly reduced_signed(const Integer &m) const {
    std::vector<Integer> r(c_);
    const Integer half = m / 2;
    for (auto &x : r) {
      x = mod(x, m);
      if (x > half) x -= m;
    }
    return IntPoly(std::move(r));
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Integer &a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Integer mag = abs(a);
      if (out.empty()) {
        if (a < 0) out += "-";
      } else {
        out += a < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.get_str();
      if (i >= 1) out += "T";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

/// Quotient and remainder of a by a monic b, exact over Z.
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly &a, const IntPoly &b) {
  if (!b.is_monic()) fail(ErrorCode::InvalidArgument, "divisor must be monic");
  if (a.degree() < b.degree()) return {IntPoly(), a};
  std::vector<Integer> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Integer> quo(rem.size() - db, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Integer q = rem[k + db];
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

/// (1 + T)^(ell^n) - 1 with exact binomial coefficients.
inline IntPoly omega_poly(unsigned long ell, unsigned n) {
  const unsigned long deg = ipow(ell, n).get_ui();
  std::vector<Integer> c(deg + 1);
  c[0] = 0;
  Integer b = 1;
  for (unsigned long k = 1; k <= deg; ++k) {
    b = b * (deg - k + 1) / k;
    c[k] = b;
  }
  return IntPoly(std::move(c));
}

/// Parses sums of terms like "T^2 + 3T + 3", "-2*T^3", "T - 3". The variable
/// may be written T or t; '*' between coefficient and variable is optional.
inline IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");
  auto bad = [&](const std::string &why) { fail(ErrorCode::ParseError, "polynomial '" + s + "': " + why); };
  std::vector<Integer> c;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad("expected '+' or '-' at position " + std::to_string(i));
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer coef = 1;
    bool has_coef = i > start;
    if (has_coef) coef = Integer(s.substr(start, i - start), 10);
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) bad("'*' without coefficient");
      ++i;
      if (i >= s.size() || (s[i] != 'T' && s[i] != 't')) bad("expected T after '*'");
    }
    std::size_t power = 0;
    if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ps) bad("missing exponent");
        if (i - ps > 6) bad("exponent too large");
        power = std::stoul(s.substr(ps, i - ps));
        if (power > 100000) bad("exponent too large");
      }
    } else if (!has_coef) {
      bad("empty term");
    }
    if (c.size() <= power) c.resize(power + 1, 0);
    c[power] += sign * coef;
  }
  return IntPoly(std::move(c));
}

} // namespace logiw
