#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "growth.hpp"
#include "integer.hpp"
#include "lambda.hpp"

// Fitting e_n = mu ell^n + lambda n + nu to exponent sequences, Gold's
// criterion, relations between invariant families, and comparison of
// characteristic series up to cyclotomic factors.
namespace logiw {

struct InvariantTriple {
  long mu = 0;
  long lambda = 0;
  long nu = 0;
  long n0 = 0;

  friend bool operator==(const InvariantTriple &, const InvariantTriple &) = default;
};

namespace detail {

inline Integer model_value(const InvariantTriple &t, unsigned long ell, std::size_t n) {
  return Integer(t.mu) * ipow(ell, n) + Integer(t.lambda) * Integer(static_cast<unsigned long>(n)) + t.nu;
}

/// Smallest n0 such that every point from n0 on matches the model.
inline long first_consistent_layer(const std::vector<long> &e, unsigned long ell, const InvariantTriple &t) {
  long n0 = static_cast<long>(e.size());
  for (std::size_t n = e.size(); n-- > 0;) {
    if (model_value(t, ell, n) != e[n]) break;
    n0 = static_cast<long>(n);
  }
  return n0;
}

inline long to_long(const Integer &x) {
  if (!x.fits_slong_p()) fail(ErrorCode::InvalidArgument, "invariant does not fit in a machine integer");
  return x.get_si();
}

} // namespace detail

/// (mu, lambda, nu) from the last three points, with n0 the first layer from
/// which the whole tail follows the formula.
inline InvariantTriple fit_invariants(const std::vector<long> &e, unsigned long ell) {
  require_odd_prime(ell);
  if (e.size() < 3) fail(ErrorCode::InvalidArgument, "need at least three layers to fit mu, lambda and nu");
  const std::size_t k = e.size() - 3;
  const Integer d0 = Integer(e[k + 1]) - e[k];
  const Integer d1 = Integer(e[k + 2]) - e[k + 1];
  // Delta_n = mu ell^n (ell - 1) + lambda, so the second difference is mu ell^k (ell - 1)^2.
  const Integer denom = ipow(ell, k) * (ell - 1) * (ell - 1);
  const Integer second = d1 - d0;
  if (second < 0 || !mpz_divisible_p(second.get_mpz_t(), denom.get_mpz_t()))
    fail(ErrorCode::InconsistentSequence, "second difference " + second.get_str() + " is not a nonnegative multiple of " +
                                              denom.get_str());
  const Integer mu = second / denom;
  const Integer lambda = d0 - mu * ipow(ell, k) * (ell - 1);
  if (lambda < 0) fail(ErrorCode::InconsistentSequence, "fitted lambda is negative");
  const Integer nu = Integer(e[k]) - mu * ipow(ell, k) - lambda * Integer(static_cast<unsigned long>(k));
  InvariantTriple t{detail::to_long(mu), detail::to_long(lambda), detail::to_long(nu), 0};
  t.n0 = detail::first_consistent_layer(e, ell, t);
  return t;
}

/// lambda and nu from the last difference when mu is known. With
/// assume_stable_from_zero, every point from n = 0 must fit.
inline InvariantTriple fit_with_known_mu(const std::vector<long> &e, unsigned long ell, long mu,
                                         bool assume_stable_from_zero = false) {
  require_odd_prime(ell);
  if (e.size() < 2) fail(ErrorCode::InvalidArgument, "need at least two layers");
  if (mu < 0) fail(ErrorCode::InvalidArgument, "mu must be nonnegative");
  const std::size_t k = e.size() - 2;
  const Integer lambda = Integer(e[k + 1]) - e[k] - Integer(mu) * ipow(ell, k) * (ell - 1);
  if (lambda < 0) fail(ErrorCode::NegativeLambda, "lambda = " + lambda.get_str() + " < 0");
  const Integer nu = Integer(e[k + 1]) - Integer(mu) * ipow(ell, k + 1) - lambda * Integer(static_cast<unsigned long>(k + 1));
  InvariantTriple t{mu, detail::to_long(lambda), detail::to_long(nu), 0};
  t.n0 = detail::first_consistent_layer(e, ell, t);
  if (assume_stable_from_zero && t.n0 != 0)
    fail(ErrorCode::InconsistentSequence, "the sequence does not follow the formula from layer 0");
  return t;
}

/// Gold's criterion: the first n >= 1 with e'_n - e'_(n-1) < phi(ell^n) gives lambda'.
inline std::optional<long> gold_lambda(const std::vector<long> &e_prime, unsigned long ell) {
  require_odd_prime(ell);
  for (std::size_t n = 1; n < e_prime.size(); ++n) {
    const long diff = e_prime[n] - e_prime[n - 1];
    if (Integer(diff) < phi_prime_power(ell, n)) return diff;
  }
  return std::nullopt;
}

/// Invariants of the related families: C* (starred), C (classical, no
/// prefix), C' (prime), the subgroups generated by primes above ell (_ell)
/// and the logarithmic family (tilde).
struct InvariantRelations {
  std::optional<long> mu_star, lambda_star;
  std::optional<long> mu, lambda;
  std::optional<long> mu_prime, lambda_prime;
  std::optional<long> mu_ell, lambda_ell;
  std::optional<long> mu_tilde, lambda_tilde, lambda_tilde_ell;
  std::optional<long> mu_star_ell, lambda_star_ell;

  std::optional<long> *field(const std::string &name) {
    static const std::map<std::string, std::optional<long> InvariantRelations::*> table{
        {"mu_star", &InvariantRelations::mu_star},
        {"lambda_star", &InvariantRelations::lambda_star},
        {"mu", &InvariantRelations::mu},
        {"lambda", &InvariantRelations::lambda},
        {"mu_prime", &InvariantRelations::mu_prime},
        {"lambda_prime", &InvariantRelations::lambda_prime},
        {"mu_ell", &InvariantRelations::mu_ell},
        {"lambda_ell", &InvariantRelations::lambda_ell},
        {"mu_tilde", &InvariantRelations::mu_tilde},
        {"lambda_tilde", &InvariantRelations::lambda_tilde},
        {"lambda_tilde_ell", &InvariantRelations::lambda_tilde_ell},
        {"mu_star_ell", &InvariantRelations::mu_star_ell},
        {"lambda_star_ell", &InvariantRelations::lambda_star_ell},
    };
    auto it = table.find(name);
    return it == table.end() ? nullptr : &(this->*(it->second));
  }
  const std::optional<long> *field(const std::string &name) const {
    return const_cast<InvariantRelations *>(this)->field(name);
  }
};

/// lhs = sum(rhs) + offset.
struct RelationDef {
  std::string name;
  std::string lhs;
  std::vector<std::string> rhs;
  long offset = 0;
};

inline const std::vector<RelationDef> &invariant_relations() {
  static const std::vector<RelationDef> defs{
      {"mu_star = mu_tilde", "mu_star", {"mu_tilde"}, 0},
      {"lambda_star = lambda_tilde + 1", "lambda_star", {"lambda_tilde"}, 1},
      {"mu_star = mu_prime + mu_star_ell", "mu_star", {"mu_prime", "mu_star_ell"}, 0},
      {"lambda_star = lambda_prime + lambda_star_ell", "lambda_star", {"lambda_prime", "lambda_star_ell"}, 0},
      {"mu = mu_prime + mu_ell", "mu", {"mu_prime", "mu_ell"}, 0},
      {"lambda = lambda_prime + lambda_ell", "lambda", {"lambda_prime", "lambda_ell"}, 0},
      {"mu = mu_tilde", "mu", {"mu_tilde"}, 0},
      {"mu = mu_prime", "mu", {"mu_prime"}, 0},
      {"mu_tilde = mu_prime", "mu_tilde", {"mu_prime"}, 0},
      {"lambda_tilde = lambda_prime + lambda_tilde_ell", "lambda_tilde", {"lambda_prime", "lambda_tilde_ell"}, 0},
      {"lambda_star_ell = lambda_tilde_ell + 1", "lambda_star_ell", {"lambda_tilde_ell"}, 1},
  };
  return defs;
}

struct RelationResult {
  std::string relation;
  std::vector<std::pair<std::string, long>> operands;
  long expected = 0;
  long actual = 0;
  bool pass = false;
};

/// Evaluates every relation whose operands are all present.
inline std::vector<RelationResult> check_relations(const InvariantRelations &r) {
  std::vector<RelationResult> out;
  for (const auto &def : invariant_relations()) {
    const auto *lhs = r.field(def.lhs);
    if (!lhs->has_value()) continue;
    bool complete = true;
    long expected = def.offset;
    std::vector<std::pair<std::string, long>> operands{{def.lhs, **lhs}};
    for (const auto &name : def.rhs) {
      const auto *v = r.field(name);
      if (!v->has_value()) {
        complete = false;
        break;
      }
      expected += **v;
      operands.emplace_back(name, **v);
    }
    if (!complete) continue;
    out.push_back({def.name, std::move(operands), expected, **lhs, expected == **lhs});
  }
  return out;
}

struct CyclotomicDifference {
  /// true when chi1 = chi2 * factors, false when chi2 = chi1 * factors.
  bool first_is_multiple = true;
  /// (n, multiplicity): n = 0 stands for omega_0 = T, n >= 1 for omega_n/omega_(n-1).
  std::vector<std::pair<unsigned, unsigned>> factors;
};

namespace detail {

/// Splits q (monic, coefficients mod ell^digits) into cyclotomic factors; nullopt if it does not.
inline std::optional<std::vector<std::pair<unsigned, unsigned>>> split_cyclotomic(IntPoly q, unsigned long ell,
                                                                                 const Integer &modulus) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned k = 0; q.degree() > 0; ++k) {
    IntPoly phi = cyclotomic_factor(ell, k);
    if (phi.degree() > q.degree()) return std::nullopt;
    unsigned mult = 0;
    while (q.degree() >= phi.degree()) {
      auto [quo, rem] = divmod_monic(q, phi);
      if (!rem.reduced(modulus).is_zero()) break;
      q = quo.reduced(modulus);
      ++mult;
    }
    if (mult > 0) out.emplace_back(k, mult);
  }
  if (!(q.reduced(modulus) == IntPoly{1})) return std::nullopt;
  return out;
}

inline std::optional<IntPoly> exact_quotient(const IntPoly &a, const IntPoly &b, const Integer &modulus) {
  if (a.degree() < b.degree()) return std::nullopt;
  auto [q, r] = divmod_monic(a, b);
  if (!r.reduced(modulus).is_zero()) return std::nullopt;
  return q.reduced(modulus);
}

} // namespace detail

/// Whether chi1 and chi2 agree up to units and cyclotomic factors.
inline std::optional<CyclotomicDifference> cyclotomic_factor_difference(const LambdaElem &chi1,
                                                                        const LambdaElem &chi2) {
  auto w1 = weierstrass(chi1);
  auto w2 = weierstrass(chi2);
  if (w1.mu != w2.mu) return std::nullopt;
  const unsigned long ell = chi1.ell();
  const Integer modulus = ipow(ell, chi1.precision() - w1.mu);
  const IntPoly p1 = w1.P.poly.reduced(modulus), p2 = w2.P.poly.reduced(modulus);
  if (auto q = detail::exact_quotient(p1, p2, modulus)) {
    if (auto f = detail::split_cyclotomic(*q, ell, modulus)) return CyclotomicDifference{true, *f};
  }
  if (auto q = detail::exact_quotient(p2, p1, modulus)) {
    if (auto f = detail::split_cyclotomic(*q, ell, modulus)) return CyclotomicDifference{false, *f};
  }
  return std::nullopt;
}

} // namespace logiw
