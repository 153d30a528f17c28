#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

// Abelian extensions of Q_p inside Q_p(mu_m), described by subgroups of
// (Z/m)^x, and their classical and logarithmic ramification indices.
namespace logiw {

inline constexpr std::uint32_t kMaxLocalModulus = 10000;

/// A subgroup of (Z/m)^x held as an explicit, sorted element list.
class UnitSubgroup {
public:
  UnitSubgroup() = default;

  UnitSubgroup(std::uint32_t modulus, std::vector<std::uint32_t> elements) : modulus_(modulus) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    elements_ = std::move(elements);
    mask_.assign(modulus_, 0);
    for (auto x : elements_) mask_[x] = 1;
  }

  std::uint32_t modulus() const { return modulus_; }
  const std::vector<std::uint32_t> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::uint32_t x) const { return x < modulus_ && mask_[x]; }

  bool is_subgroup_of(const UnitSubgroup &other) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](auto x) { return other.contains(x); });
  }

  friend bool operator==(const UnitSubgroup &a, const UnitSubgroup &b) {
    return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
  }

private:
  std::uint32_t modulus_ = 1;
  std::vector<std::uint32_t> elements_;
  std::vector<char> mask_;
};

namespace detail {

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % m);
}

inline void check_modulus(std::uint32_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (m > kMaxLocalModulus)
    fail(ErrorCode::SizeLimit, "modulus " + std::to_string(m) + " exceeds " + std::to_string(kMaxLocalModulus));
}

inline void check_local_prime(std::uint32_t p) {
  if (p == 2) fail(ErrorCode::EvenPrime, "p = 2 is not supported");
  if (!is_prime(static_cast<long long>(p))) fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

/// m = p^k * rest with p not dividing rest.
struct Split {
  std::uint32_t p_power = 1;
  std::uint32_t rest = 1;
  unsigned k = 0;
};

inline Split split_modulus(std::uint32_t p, std::uint32_t m) {
  Split s{1, m, 0};
  while (s.rest % p == 0) {
    s.rest /= p;
    s.p_power *= p;
    ++s.k;
  }
  return s;
}

template <class Pred> UnitSubgroup units_where(std::uint32_t m, Pred pred) {
  std::vector<std::uint32_t> xs;
  for (std::uint32_t x = 0; x < m; ++x)
    if (std::gcd(x, m) == 1 && pred(x)) xs.push_back(x);
  return UnitSubgroup(m, std::move(xs));
}

} // namespace detail

inline UnitSubgroup full_unit_group(std::uint32_t m) {
  detail::check_modulus(m);
  return detail::units_where(m, [](std::uint32_t) { return true; });
}

/// Closure of the given generators under multiplication mod m.
inline UnitSubgroup generate_subgroup(std::uint32_t m, const std::vector<std::uint32_t> &generators) {
  detail::check_modulus(m);
  std::vector<char> seen(m, 0);
  const std::uint32_t one = 1 % m;
  std::vector<std::uint32_t> elems{one};
  seen[one] = 1;
  std::vector<std::uint32_t> gens;
  for (auto g : generators) {
    std::uint32_t r = g % m;
    if (std::gcd(r, m) != 1)
      fail(ErrorCode::InvalidArgument, std::to_string(g) + " is not a unit mod " + std::to_string(m));
    gens.push_back(r);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (auto g : gens) {
      std::uint32_t y = detail::mulmod(elems[i], g, m);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return UnitSubgroup(m, std::move(elems));
}

inline UnitSubgroup intersect(const UnitSubgroup &a, const UnitSubgroup &b) {
  std::vector<std::uint32_t> xs;
  for (auto x : a.elements())
    if (b.contains(x)) xs.push_back(x);
  return UnitSubgroup(a.modulus(), std::move(xs));
}

/// AB, itself a subgroup since the ambient group is abelian.
inline UnitSubgroup product(const UnitSubgroup &a, const UnitSubgroup &b) {
  const auto m = a.modulus();
  std::vector<std::uint32_t> xs;
  xs.reserve(a.order() * b.order());
  for (auto x : a.elements())
    for (auto y : b.elements()) xs.push_back(detail::mulmod(x, y, m));
  return UnitSubgroup(m, std::move(xs));
}

/// Local Galois group of Q_p(mu_m)/Q_p: <p mod m'> x (Z/p^k)^x, glued by CRT.
inline UnitSubgroup decomposition_group(std::uint32_t p, std::uint32_t m) {
  detail::check_local_prime(p);
  detail::check_modulus(m);
  const auto s = detail::split_modulus(p, m);
  std::vector<char> frob(s.rest, 0);
  std::uint32_t x = 1 % s.rest;
  do {
    frob[x] = 1;
    x = detail::mulmod(x, p % s.rest, s.rest);
  } while (!frob[x]);
  return detail::units_where(m, [&](std::uint32_t y) { return frob[y % s.rest] != 0; });
}

/// Inertia factor (Z/p^k)^x: the elements that are 1 mod m'.
inline UnitSubgroup inertia_group(std::uint32_t p, std::uint32_t m) {
  detail::check_local_prime(p);
  detail::check_modulus(m);
  const auto s = detail::split_modulus(p, m);
  return detail::units_where(m, [&](std::uint32_t y) { return y % s.rest == 1 % s.rest; });
}

/// Torsion mu_{p-1} of the inertia factor; its fixed field is the part of
/// Q_p(mu_m) inside the cyclotomic Zhat-extension of Q_p (p odd).
inline UnitSubgroup inertia_torsion(std::uint32_t p, std::uint32_t m) {
  UnitSubgroup inertia = inertia_group(p, m);
  std::vector<std::uint32_t> xs;
  for (auto x : inertia.elements()) {
    std::uint32_t y = 1 % m;
    for (std::uint32_t i = 0; i + 1 < p; ++i) y = detail::mulmod(y, x, m);
    if (y == 1 % m) xs.push_back(x);
  }
  return UnitSubgroup(m, std::move(xs));
}

/// K_p as the fixed field of H inside Q_p(mu_m).
struct AbelianLocalField {
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  UnitSubgroup fixing;
};

inline AbelianLocalField make_local_field(std::uint32_t p, std::uint32_t m,
                                          const std::vector<std::uint32_t> &generators) {
  UnitSubgroup d = decomposition_group(p, m);
  UnitSubgroup h = generate_subgroup(m, generators);
  if (!h.is_subgroup_of(d))
    fail(ErrorCode::InvalidArgument, "subgroup is not contained in the decomposition group of " +
                                         std::to_string(p) + " mod " + std::to_string(m));
  return {p, m, std::move(h)};
}

struct IndexQuadruple {
  std::size_t e = 1;
  std::size_t f = 1;
  std::size_t e_log = 1;
  std::size_t f_log = 1;

  std::size_t degree() const { return e * f; }
  friend bool operator==(const IndexQuadruple &, const IndexQuadruple &) = default;
};

inline IndexQuadruple indices(const AbelianLocalField &field) {
  detail::check_local_prime(field.p);
  const UnitSubgroup d = decomposition_group(field.p, field.m);
  if (!field.fixing.is_subgroup_of(d)) fail(ErrorCode::InvalidArgument, "H is not a subgroup of D");
  const UnitSubgroup inertia = inertia_group(field.p, field.m);
  const UnitSubgroup torsion = inertia_torsion(field.p, field.m);
  const UnitSubgroup h_torsion = product(field.fixing, torsion);
  const std::size_t degree = d.order() / field.fixing.order();
  IndexQuadruple q;
  q.e = inertia.order() / intersect(inertia, field.fixing).order();
  q.f = degree / q.e;
  q.e_log = h_torsion.order() / field.fixing.order();
  q.f_log = d.order() / h_torsion.order();
  return q;
}

/// Indices of K2/K1 where K1, K2 are fixed by lower, upper with upper inside lower.
inline IndexQuadruple relative_indices(const AbelianLocalField &base, const UnitSubgroup &upper) {
  if (!upper.is_subgroup_of(base.fixing))
    fail(ErrorCode::InvalidArgument, "the top field's group must lie in the base field's group");
  const UnitSubgroup inertia = inertia_group(base.p, base.m);
  const UnitSubgroup torsion = inertia_torsion(base.p, base.m);
  // K2 meets the cyclotomic Zhat-extension of K1 in the fixed field of H2 (H1 cap Delta).
  const UnitSubgroup meet = product(upper, intersect(base.fixing, torsion));
  const std::size_t degree = base.fixing.order() / upper.order();
  IndexQuadruple q;
  q.e = intersect(inertia, base.fixing).order() / intersect(inertia, upper).order();
  q.f = degree / q.e;
  q.e_log = meet.order() / upper.order();
  q.f_log = base.fixing.order() / meet.order();
  return q;
}

/// Every subgroup of the given finite abelian group, trivial group first.
inline std::vector<UnitSubgroup> all_subgroups(const UnitSubgroup &group) {
  const auto m = group.modulus();
  std::vector<UnitSubgroup> found{generate_subgroup(m, {})};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto g : group.elements()) {
      if (found[i].contains(g)) continue;
      UnitSubgroup next = product(found[i], generate_subgroup(m, {g}));
      if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(std::move(next));
    }
  }
  return found;
}

} // namespace logiw
