#include <gtest/gtest.h>

#include <logiw/localfields.hpp>

#include <numeric>

using namespace logiw;

namespace {

unsigned order_mod(unsigned a, unsigned m) {
  unsigned k = 1;
  for (unsigned x = a % m; x != 1; x = x * a % m) ++k;
  return k;
}

long vq(std::size_t n, long q) {
  long v = 0;
  while (n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

void expect_code(ErrorCode code, auto &&fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), code);
  }
}

} // namespace

TEST(DecompositionGroup, FiveModSeven) {
  UnitSubgroup d = decomposition_group(5, 7);
  EXPECT_EQ(d.order(), order_mod(5, 7));
  EXPECT_EQ(d.order(), 6u);
  EXPECT_EQ(d, generate_subgroup(7, {5}));
}

TEST(DecompositionGroup, PureInertia) {
  EXPECT_EQ(decomposition_group(3, 9), full_unit_group(9));
  EXPECT_EQ(decomposition_group(3, 9).order(), 6u);
}

TEST(DecompositionGroup, TrivialModulus) { EXPECT_EQ(decomposition_group(3, 1).order(), 1u); }

TEST(DecompositionGroup, MixedModulusOrderIsFrobeniusTimesInertia) {
  // m = 63 = 9 * 7, p = 3: <3 mod 7> has order 6, (Z/9)^x has order 6.
  UnitSubgroup d = decomposition_group(3, 63);
  EXPECT_EQ(d.order(), 36u);
  for (auto x : d.elements()) EXPECT_EQ(std::gcd(x, 63u), 1u);
}

TEST(DecompositionGroup, Errors) {
  expect_code(ErrorCode::EvenPrime, [] { decomposition_group(2, 7); });
  expect_code(ErrorCode::InvalidArgument, [] { decomposition_group(9, 7); });
  expect_code(ErrorCode::SizeLimit, [] { decomposition_group(3, 20000); });
}

TEST(Indices, UnramifiedDegreeSix) {
  auto f = make_local_field(3, 7, {});
  EXPECT_EQ(indices(f), (IndexQuadruple{1, 6, 1, 6}));
}

TEST(Indices, FullNinthRootsOfUnity) {
  auto f = make_local_field(3, 9, {});
  EXPECT_EQ(indices(f), (IndexQuadruple{6, 1, 2, 3}));
}

TEST(Indices, FirstCyclotomicLayerIsLogUnramified) {
  auto f = make_local_field(3, 9, {8});
  EXPECT_EQ(f.fixing, inertia_torsion(3, 9));
  EXPECT_EQ(indices(f), (IndexQuadruple{3, 1, 1, 3}));
}

TEST(Indices, RejectsGroupOutsideDecompositionGroup) {
  // 5 has order 5 mod 11, so 2 (a generator) lies outside D.
  expect_code(ErrorCode::InvalidArgument, [] { make_local_field(5, 11, {2}); });
  expect_code(ErrorCode::InvalidArgument, [] { make_local_field(5, 11, {11}); });
}

TEST(Indices, PropertiesOverAllSubgroups) {
  for (unsigned p : {3u, 5u, 7u}) {
    for (unsigned m = 1; m <= 120; ++m) {
      UnitSubgroup d = decomposition_group(p, m);
      for (const auto &h : all_subgroups(d)) {
        IndexQuadruple q = indices({p, m, h});
        const std::size_t n = d.order() / h.order();
        ASSERT_EQ(q.e * q.f, n);
        ASSERT_EQ(q.e_log * q.f_log, n);
        for (long r : {2L, 3L, 5L, 7L, 11L, 13L})
          if (r != static_cast<long>(p)) {
            ASSERT_EQ(vq(q.e, r), vq(q.e_log, r)) << p << " " << m;
          }
        if (q.e == 1) {
          ASSERT_EQ(q.e_log, 1u);
        }
      }
    }
  }
}

TEST(Indices, TowersAreMultiplicative) {
  for (unsigned p : {3u, 5u}) {
    for (unsigned m : {9u, 21u, 27u, 45u, 63u, 75u, 99u}) {
      UnitSubgroup d = decomposition_group(p, m);
      auto subs = all_subgroups(d);
      for (const auto &h1 : subs) {
        AbelianLocalField lower{p, m, h1};
        IndexQuadruple q1 = indices(lower);
        for (const auto &h2 : subs) {
          if (!h2.is_subgroup_of(h1)) continue;
          IndexQuadruple q2 = indices({p, m, h2});
          IndexQuadruple rel = relative_indices(lower, h2);
          ASSERT_EQ(q2.e, rel.e * q1.e);
          ASSERT_EQ(q2.f, rel.f * q1.f);
          ASSERT_EQ(q2.e_log, rel.e_log * q1.e_log);
          ASSERT_EQ(q2.f_log, rel.f_log * q1.f_log);
        }
      }
    }
  }
}

TEST(Subgroups, CyclicGroupOfOrderSixHasFour) {
  EXPECT_EQ(all_subgroups(full_unit_group(7)).size(), 4u);
  // (Z/8)^x = C2 x C2 has five subgroups.
  EXPECT_EQ(all_subgroups(full_unit_group(8)).size(), 5u);
}
