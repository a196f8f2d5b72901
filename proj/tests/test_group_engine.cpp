#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbdiam/constructions.hpp"
#include "orbdiam/decomposition.hpp"
#include "orbdiam/errors.hpp"
#include "orbdiam/group.hpp"

using namespace orbdiam;

namespace {

GroupSpec scalar_group(std::uint32_t p, std::size_t d, Residue lambda) {
  return GroupSpec(p, d, {FpMatrix::scalar(p, d, lambda)});
}

std::vector<std::vector<VecIndex>> orbit_lists(const OrbitPartition& o) {
  std::vector<std::vector<VecIndex>> out;
  for (std::uint32_t i = 0; i < o.count(); ++i) out.push_back(o.members(i));
  return out;
}

oracle::Mat to_oracle(const FpMatrix& m) {
  oracle::Mat out(m.size(), std::vector<long>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out[r][c] = m(r, c);
  return out;
}

bool invariant_under(const Subspace& s, const GroupSpec& g) {
  for (const auto& gen : g.generators)
    for (const auto& b : s.basis())
      if (!s.contains(gen.apply(b))) return false;
  return true;
}

}  // namespace

TEST_CASE("group spec validation") {
  CHECK_THROWS_AS(GroupSpec(4, 1, {FpMatrix::identity(4, 1)}), InvalidInput);
  CHECK_THROWS_AS(GroupSpec(5, 2, {}), InvalidInput);
  CHECK_THROWS_AS(GroupSpec(5, 2, {FpMatrix::identity(5, 3)}), InvalidInput);
  CHECK_THROWS_AS(GroupSpec(5, 2, {FpMatrix(5, {{1, 2}, {2, 4}})}), InvalidInput);
  CHECK(scalar_group(5, 2, 2).with_minus_one().generators.size() == 2);
  CHECK(GroupSpec(2, 2, {FpMatrix::identity(2, 2)}).with_minus_one().generators.size() == 1);
}

TEST_CASE("orbits on V") {
  const auto trivial = orbit_lists(orbits_on_V(GroupSpec(3, 1, {FpMatrix::identity(3, 1)})));
  CHECK(trivial == std::vector<std::vector<VecIndex>>{{0}, {1}, {2}});

  const auto neg = orbit_lists(orbits_on_V(scalar_group(5, 1, 4)));
  CHECK(neg == std::vector<std::vector<VecIndex>>{{0}, {1, 4}, {2, 3}});

  const auto pow2 = orbits_on_V(scalar_group(7, 1, 2));
  CHECK(orbit_lists(pow2) == std::vector<std::vector<VecIndex>>{{0}, {1, 2, 4}, {3, 5, 6}});
  CHECK(pow2.smallest_nonzero() == 3);

  Caps tight;
  tight.max_v = 100;
  CHECK_THROWS_AS(orbits_on_V(scalar_group(5, 3, 2), tight), CapExceeded);

  SUBCASE("partition properties against brute-force orbits") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint32_t p = trial % 2 ? 3 : 5;
      const std::size_t d = 2 + trial % 2;
      std::vector<FpMatrix> gens;
      while (gens.size() < 2) {
        FpMatrix m(p, d);
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) m(r, c) = rng() % p;
        if (m.is_invertible()) gens.push_back(m);
      }
      const GroupSpec g(p, d, gens);
      const auto orbits = orbits_on_V(g);
      const auto order = group_order(g, 1'000'000);
      REQUIRE_FALSE(order.exceeded);
      REQUIRE(order.order == oracle::group_order({to_oracle(gens[0]), to_oracle(gens[1])}, p));
      std::uint64_t total = 0;
      for (std::uint32_t i = 0; i < orbits.count(); ++i) {
        total += orbits.sizes[i];
        REQUIRE(order.order % orbits.sizes[i] == 0);
        const auto t = oracle::tuple_of(orbits.reps[i], p, d);
        REQUIRE(oracle::orbit({to_oracle(gens[0]), to_oracle(gens[1])}, t, p).size() == orbits.sizes[i]);
      }
      REQUIRE(total == orbits.orbit_id.size());
      REQUIRE(orbits.sizes[0] == 1);
      REQUIRE(orbits.reps[0] == 0);

      // Spin dimension is constant along orbits.
      const auto space = g.space();
      for (std::uint32_t i = 1; i < orbits.count(); ++i) {
        const auto members = orbits.members(i);
        const auto a = members[rng() % members.size()], b = members[rng() % members.size()];
        REQUIRE(spin(g.field(), g.generators, {space.decode(a)}).dim() ==
                spin(g.field(), g.generators, {space.decode(b)}).dim());
      }
    }
  }
}

TEST_CASE("group order") {
  CHECK(group_order(scalar_group(7, 3, 6), 100).order == 2);
  const auto wreath2 = build_wreath({5, 2, top_group_generators(TopGroup::Symmetric, 2)});
  CHECK(group_order(wreath2, 1000).order == 8);
  const auto alt5 = build_alt_module({5, 7});
  CHECK(group_order(alt5, 1000).order == 60);
  const auto capped = group_order(alt5, 10);
  CHECK(capped.exceeded);
  CHECK(capped.order >= 10);
  CHECK_THROWS_AS(GroupElements(alt5, 10), CapExceeded);
}

TEST_CASE("irreducibility") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) CHECK(is_irreducible(scalar_group(p, 1, PrimeField(p).primitive_root())));
  CHECK(is_irreducible(GroupSpec(5, 1, {FpMatrix::identity(5, 1)})));
  CHECK_FALSE(is_irreducible(GroupSpec(5, 2, {FpMatrix::diagonal(5, std::vector<Residue>{2, 1})})));
  CHECK_FALSE(is_irreducible(scalar_group(5, 2, 4)));
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::size_t d : {2u, 3u})
      CHECK(is_irreducible(build_wreath({p, 2, top_group_generators(TopGroup::Cyclic, d)})));
}

TEST_CASE("scalar intersection") {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (std::uint64_t k : divisors(p - 1)) {
      if (k == 1) continue;
      const auto g = build_wreath({p, k, top_group_generators(TopGroup::Symmetric, 3)});
      const auto s = scalar_intersection(g, 1'000'000);
      CHECK(s.order == k);
    }
  }
  CHECK(scalar_intersection(build_alt_module({5, 7}), 1000).order == 1);
  const auto neg = scalar_intersection(scalar_group(7, 2, 6), 100);
  CHECK(neg.order == 2);
  CHECK(neg.contains_minus_one());
  CHECK(neg.elements() == std::vector<Residue>{1, 6});
  CHECK_THROWS_AS(scalar_intersection(build_alt_module({5, 7}), 10), CapExceeded);

  const auto facts = compute_facts(scalar_group(7, 1, 2), orbits_on_V(scalar_group(7, 1, 2)));
  REQUIRE(facts.order);
  CHECK(*facts.order == 3);
  CHECK(facts.irreducible);
  REQUIRE(facts.contains_minus_one);
  CHECK_FALSE(*facts.contains_minus_one);
  const auto facts2 = compute_facts(GroupSpec(2, 2, {FpMatrix::identity(2, 2)}),
                                    orbits_on_V(GroupSpec(2, 2, {FpMatrix::identity(2, 2)})));
  CHECK(*facts2.contains_minus_one);
}

TEST_CASE("normality") {
  const auto h = build_wreath({5, 2, top_group_generators(TopGroup::Symmetric, 2)});
  const GroupSpec centre(5, 2, {FpMatrix::scalar(5, 2, 4)});
  CHECK(is_normal_in(centre, h, 1000));
  const GroupSpec corner(5, 2, {FpMatrix::diagonal(5, std::vector<Residue>{4, 1})});
  CHECK_FALSE(is_normal_in(corner, h, 1000));
  CHECK(is_normal_in(h, h, 1000));
}

TEST_CASE("Maschke complement") {
  const PrimeField f5(5);
  const GroupSpec a(5, 2, {FpMatrix::diagonal(5, std::vector<Residue>{2, 4})});
  const GroupElements elems(a, 100);
  const auto whole = Subspace::whole(f5, 2);
  CHECK(maschke_complement(whole, whole, elems).dim() == 0);
  const auto c = maschke_complement(whole, Subspace::span_of(f5, 2, {{1, 0}}), elems);
  CHECK(c == Subspace::span_of(f5, 2, {{0, 1}}));

  SUBCASE("random invariant pairs") {
    std::mt19937 rng(17);
    int checked = 0;
    while (checked < 30) {
      // A = <diag(l1, l2, l3, l4)> conjugated by a random invertible matrix.
      const std::uint32_t p = 7;
      FpMatrix t(p, 4);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t col = 0; col < 4; ++col) t(r, col) = rng() % p;
      if (!t.is_invertible()) continue;
      std::vector<Residue> eig(4);
      for (auto& e : eig) e = 1 + rng() % (p - 1);
      const auto gen = t * FpMatrix::diagonal(p, eig) * t.inverse();
      const GroupSpec grp(p, 4, {gen});
      const GroupElements el(grp, 1000);
      const PrimeField f(p);
      // W: spin of two random vectors; U: spin of one vector of W.
      Coords v1(4), v2(4);
      for (auto& x : v1) x = rng() % p;
      for (auto& x : v2) x = rng() % p;
      const auto w = spin(f, grp.generators, {v1, v2});
      if (w.dim() < 2) continue;
      const auto u = spin(f, grp.generators, {w.basis().front()});
      const auto comp = maschke_complement(w, u, el);
      REQUIRE(comp.dim() + u.dim() == w.dim());
      REQUIRE(w.contains(comp));
      REQUIRE(invariant_under(comp, grp));
      auto sum = u;
      for (const auto& b : comp.basis()) sum.insert(b);
      REQUIRE(sum.dim() == w.dim());
      ++checked;
    }
  }
}

TEST_CASE("summand count") {
  for (std::size_t d : {1u, 2u, 3u}) {
    const auto dec = summand_count(scalar_group(7, d, 6));
    CHECK(dec.k == d);
    REQUIRE(dec.cyclic_cross_check);
    CHECK(*dec.cyclic_cross_check == d);
  }
  CHECK(summand_count(GroupSpec(5, 2, {FpMatrix::diagonal(5, std::vector<Residue>{2, 4})})).k == 2);
  const auto irreducible = summand_count(GroupSpec(3, 2, {FpMatrix::companion(3, std::vector<Residue>{1, 0, 1})}));
  CHECK(irreducible.k == 1);
  CHECK(irreducible.a_order == 4);

  CHECK_THROWS_AS(summand_count(GroupSpec(5, 2, {FpMatrix::identity(5, 2)})), InvalidInput);
  CHECK_THROWS_AS(summand_count(GroupSpec(5, 2, {FpMatrix(5, {{1, 1}, {0, 1}})})), InvalidInput);  // order 5
  CHECK_THROWS_AS(summand_count(GroupSpec(5, 2, {FpMatrix::diagonal(5, std::vector<Residue>{2, 1}),
                                                 FpMatrix::permutation(5, Permutation{1, 0})})),
                  InvalidInput);  // non-commuting
  const auto h = build_wreath({5, 2, top_group_generators(TopGroup::Cyclic, 2)});
  CHECK_THROWS_AS(summand_count(GroupSpec(5, 2, {FpMatrix::scalar(5, 2, 2)}), &h), InvalidInput);
  CHECK(summand_count(GroupSpec(5, 2, {FpMatrix::scalar(5, 2, 4)}), &h).k == 2);

  SUBCASE("decomposition properties on random abelian groups") {
    std::mt19937 rng(23);
    int checked = 0;
    while (checked < 40) {
      const std::uint32_t p = checked % 2 ? 5 : 7;
      const std::size_t d = 2 + checked % 4;
      FpMatrix t(p, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) t(r, c) = rng() % p;
      if (!t.is_invertible()) continue;
      // Block-diagonal with companion blocks of random irreducible-or-not
      // polynomials coprime to x, then conjugated. Two commuting generators:
      // a matrix and its square plus a scalar.
      std::vector<std::int64_t> coeffs(d + 1);
      for (auto& c : coeffs) c = rng() % p;
      coeffs.back() = 1;
      if (coeffs[0] == 0) coeffs[0] = 1;
      const FpPolynomial poly(PrimeField(p), coeffs);
      if (!is_squarefree(poly)) continue;
      std::vector<Residue> cr(coeffs.begin(), coeffs.end());
      const auto comp = FpMatrix::companion(p, cr);
      const auto gen = t * comp * t.inverse();
      const auto order = mat_order(gen, 1'000'000);
      if (order % p == 0) continue;
      const GroupSpec a(p, d, {gen, FpMatrix::scalar(p, d, p - 1)});
      const auto dec = summand_count(a);
      std::size_t dims = 0;
      for (const auto& s : dec.summands) {
        dims += s.dim();
        REQUIRE(invariant_under(s, a));
        // Irreducible: the spin of every nonzero vector fills the summand.
        s.for_each_vector([&](const Coords& v) {
          if (std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; })) return;
          REQUIRE(spin(a.field(), a.generators, {v}).dim() == s.dim());
        });
      }
      REQUIRE(dims == d);
      REQUIRE(dec.k <= d);
      // Minimal-polynomial formula for the single generator.
      REQUIRE(cyclic_summand_count(gen) == dec.k);
      // Number of summands equals the number of irreducible factors.
      std::size_t factors = 0;
      for (const auto& [e, n] : distinct_degree_factor_counts(poly)) factors += static_cast<std::size_t>(n);
      REQUIRE(dec.k == factors);
      ++checked;
    }
  }
}
