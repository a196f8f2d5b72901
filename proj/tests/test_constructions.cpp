#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbdiam/constructions.hpp"
#include "orbdiam/diameter.hpp"
#include "orbdiam/errors.hpp"

using namespace orbdiam;

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Prime factors by plain trial division; fine below 10^12.
std::set<std::uint64_t> factor(std::uint64_t n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= n; ++r)
    while (n % r == 0) {
      out.insert(r);
      n /= r;
    }
  if (n > 1) out.insert(n);
  return out;
}

// Alt(r) on sum-zero vectors, derived directly from the permutation action
// on ambient coordinates: a sum-zero w equals sum_{i<r} w_i (v_i - v_r).
FpMatrix sum_zero_action(const Permutation& perm, std::uint32_t p) {
  const std::size_t r = perm.size(), d = r - 1;
  FpMatrix m(p, d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<long> ambient(r, 0);
    ambient[perm[i]] += 1;
    ambient[perm[r - 1]] -= 1;
    for (std::size_t row = 0; row < d; ++row) m(row, i) = static_cast<Residue>(oracle::md(ambient[row], p));
  }
  return m;
}

}  // namespace

TEST_CASE("permutations") {
  CHECK(cycle_permutation(4, 0, 3) == Permutation{1, 2, 3, 0});
  CHECK(cycle_permutation(4, 1, 3) == Permutation{0, 2, 3, 1});
  CHECK(is_transitive(3, {cycle_permutation(3, 0, 2)}));
  CHECK_FALSE(is_transitive(3, {Permutation{1, 0, 2}}));
  CHECK(top_group_generators(TopGroup::Symmetric, 2).size() == 1);
  CHECK(top_group_generators(TopGroup::Symmetric, 3).size() == 2);
}

TEST_CASE("wreath products") {
  const auto g = build_wreath({5, 4, top_group_generators(TopGroup::Symmetric, 2)});
  CHECK(group_order(g, 1000).order == 32);
  CHECK(is_irreducible(g));
  const auto c3 = build_wreath({3, 2, top_group_generators(TopGroup::Cyclic, 3)});
  CHECK(group_order(c3, 1000).order == 24);
  const auto s3 = build_wreath({7, 3, top_group_generators(TopGroup::Symmetric, 3)});
  CHECK(group_order(s3, 10000).order == 27 * 6);
  CHECK_THROWS_AS(build_wreath({2, 1, top_group_generators(TopGroup::Cyclic, 2)}), InvalidInput);
  CHECK_THROWS_AS(build_wreath({5, 1, top_group_generators(TopGroup::Cyclic, 2)}), InvalidInput);
  CHECK_THROWS_AS(build_wreath({5, 3, top_group_generators(TopGroup::Cyclic, 2)}), InvalidInput);  // 3 does not divide 4
  CHECK_THROWS_AS(build_wreath({5, 2, {Permutation{1, 0, 2}}}), InvalidInput);
  for (std::uint32_t p : {3u, 5u, 7u, 11u})
    for (auto k : divisors(p - 1)) {
      if (k == 1) continue;
      for (auto kind : {TopGroup::Cyclic, TopGroup::Symmetric}) {
        const auto w = build_wreath({p, k, top_group_generators(kind, 2)});
        CHECK(is_irreducible(w));
        CHECK(scalar_intersection(w, 1'000'000).order == k);
      }
    }
}

TEST_CASE("alternating modules") {
  const auto a57 = build_alt_module({5, 7});
  CHECK(a57.d == 4);
  CHECK(a57.space().size() == 2401);
  CHECK(is_irreducible(a57));
  CHECK_THROWS_AS(build_alt_module({5, 5}), InvalidInput);
  CHECK_THROWS_AS(build_alt_module({4, 7}), InvalidInput);
  CHECK_THROWS_AS(build_alt_module({5, 2}), InvalidInput);
  const auto a65 = build_alt_module({6, 5});
  CHECK(a65.d == 5);
  CHECK(is_irreducible(a65));
  CHECK(group_order(a65, 1000).order == 360);
  CHECK(alternating_generators(5) == std::vector<Permutation>{{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
  CHECK(alternating_generators(6) == std::vector<Permutation>{{1, 2, 0, 3, 4, 5}, {0, 2, 3, 4, 5, 1}});

  // The generated matrix group matches the one read off the ambient action.
  for (auto [r, p] : {std::pair<std::size_t, std::uint32_t>{5, 3}, {5, 7}, {6, 5}, {7, 3}}) {
    const auto g = build_alt_module({r, p});
    std::vector<FpMatrix> independent;
    for (const auto& perm : alternating_generators(r)) independent.push_back(sum_zero_action(perm, p));
    const GroupElements built(g, 10'000), derived(GroupSpec(p, r - 1, independent), 10'000);
    REQUIRE(built.size() == derived.size());
    for (const auto& e : built.elements()) REQUIRE(derived.contains(e));
  }
}

TEST_CASE("cyclic examples of order d+1") {
  const auto z4 = find_zsigmondy_p(4, 20);
  CHECK(std::find(z4.begin(), z4.end(), 3u) != z4.end());
  CHECK(std::find(z4.begin(), z4.end(), 11u) == z4.end());
  for (auto p : z4) CHECK(oracle::order_mod(p, 5) == 4);
  const auto z2 = find_zsigmondy_p(2, 20);
  CHECK(std::find(z2.begin(), z2.end(), 5u) != z2.end());
  CHECK_THROWS_AS(find_zsigmondy_p(3, 20), InvalidInput);

  const auto g25 = build_zsigmondy_cyclic({2, 5});
  CHECK(group_order(g25, 100).order == 6);
  const auto o25 = orbits_on_V(g25);
  for (std::size_t i = 1; i < o25.count(); ++i) CHECK(o25.sizes[i] == 6);
  const auto g43 = build_zsigmondy_cyclic({4, 3});
  CHECK(g43.space().size() == 81);
  CHECK(group_order(g43, 100).order == 10);
  CHECK(is_irreducible(g43));
  CHECK_THROWS_AS(build_zsigmondy_cyclic({4, 11}), InvalidInput);

  // h has order d+1 and sum_j h^j v = 0 for every v.
  for (auto [d, p] : {std::pair<std::size_t, std::uint32_t>{2, 5}, {2, 11}, {4, 3}, {4, 7}, {6, 3}}) {
    const auto h = zsigmondy_element({d, p});
    CHECK(mat_order(h) == d + 1);
    FpMatrix sum(p, d);
    FpMatrix power = FpMatrix::identity(p, d);
    for (std::size_t j = 0; j <= d; ++j) {
      sum = sum + power;
      power = power * h;
    }
    CHECK(sum.rank() == 0);
  }
}

TEST_CASE("cyclic example diameters match the distance-sum formula") {
  for (auto [d, p] : {std::pair<std::size_t, std::uint32_t>{2, 5}, {2, 11}, {4, 3}, {2, 17}, {4, 7}}) {
    const auto g = build_zsigmondy_cyclic({d, p});
    const auto r = group_diameters(g);
    CHECK(r.diam == static_cast<std::uint64_t>(oracle::cyclic_example_diameter(p, d)));
  }
}

TEST_CASE("field modules") {
  const auto f7 = build_field_module({7, 1, 3});
  CHECK(group_diameters(f7.group).diamd == 2);
  const auto f9 = build_field_module({3, 2, 8});
  CHECK(group_diameters(f9.group).diamd == 1);
  CHECK(mat_order(f9.gamma) == 8);
  const auto f16 = build_field_module({2, 4, 3});
  CHECK_THROWS_AS(group_diameters(f16.group), Stagnation);
  CHECK_THROWS_AS(build_field_module({2, 4, 7}), InvalidInput);
  CHECK_THROWS_AS(build_field_module({3, 2, 1}), InvalidInput);

  SUBCASE("multiplication matrices form a field") {
    std::mt19937 rng(8);
    for (auto [p, f] : {std::pair<std::uint32_t, int>{2, 4}, {3, 3}, {5, 2}, {7, 3}}) {
      const auto fm = build_field_module({p, f, ipow(p, f) - 1});
      const auto q = fm.field.order();
      CHECK(mat_order(fm.gamma) == q - 1);
      CHECK(fm.m_generator == fm.gamma);
      const VectorSpace space(PrimeField(p), static_cast<std::size_t>(f));
      for (int t = 0; t < 30; ++t) {
        const auto a = space.decode(static_cast<VecIndex>(rng() % q));
        const auto b = space.decode(static_cast<VecIndex>(rng() % q));
        const auto ma = multiplication_matrix(fm.field, a), mb = multiplication_matrix(fm.field, b);
        REQUIRE(ma * mb == mb * ma);
        // (a b) as a vector is ma applied to b.
        REQUIRE(multiplication_matrix(fm.field, ma.apply(b)) == ma * mb);
      }
    }
  }
}

TEST_CASE("Zsigmondy primes") {
  CHECK(find_zsigmondy_primes(2, 6).empty());
  CHECK(find_zsigmondy_primes(2, 4) == std::vector<std::uint64_t>{5});
  CHECK(find_zsigmondy_primes(3, 3) == std::vector<std::uint64_t>{13});
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 10u, 11u}) {
    for (std::uint64_t d = 3; ipow(q, d) < 2'000'000'000'000ull; ++d) {
      std::set<std::uint64_t> want = factor(ipow(q, d) - 1);
      for (std::uint64_t i = 1; i < d; ++i)
        for (auto r : factor(ipow(q, i) - 1)) want.erase(r);
      const auto got = find_zsigmondy_primes(q, d);
      REQUIRE(std::set<std::uint64_t>(got.begin(), got.end()) == want);
      for (auto r : got) REQUIRE(r % d == 1);
    }
  }
  // Large: 2^127 - 1 is prime, so it is its own primitive part.
  CHECK_THROWS_AS(find_zsigmondy_primes(2, 127, 1000), CapExceeded);
}
