#include <array>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "orbdiam/constructions.hpp"
#include "orbdiam/diameter.hpp"
#include "orbdiam/errors.hpp"

using namespace orbdiam;

namespace {

std::set<oracle::Tuple> to_tuples(const std::vector<VecIndex>& v, long p, std::size_t d) {
  std::set<oracle::Tuple> out;
  for (auto x : v) out.insert(oracle::tuple_of(x, p, d));
  return out;
}

VectorSet from_tuples(const std::set<oracle::Tuple>& s, long p, std::uint64_t universe) {
  VectorSet out(universe);
  for (const auto& t : s) out.set(static_cast<VecIndex>(oracle::index_of(t, p)));
  return out;
}

std::vector<VecIndex> random_subset(std::mt19937& rng, std::uint64_t universe, std::size_t size, bool allow_zero) {
  size = static_cast<std::size_t>(std::min<std::uint64_t>(size, allow_zero ? universe : universe - 1));
  std::set<VecIndex> s;
  while (s.size() < size) {
    const auto x = static_cast<VecIndex>(rng() % universe);
    if (x != 0 || allow_zero) s.insert(x);
  }
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("connection sets") {
  const VectorSpace f7(PrimeField(7), 1);
  CHECK_THROWS_AS(ConnectionSet::from(f7, {}), InvalidInput);
  CHECK_THROWS_AS(ConnectionSet::from(f7, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(ConnectionSet::from(f7, {7}), InvalidInput);
  const auto c = ConnectionSet::from(f7, {4, 1, 2, 1});
  CHECK(c.elements == std::vector<VecIndex>{1, 2, 4});
  CHECK_FALSE(c.symmetric);
  const auto sym = c.symmetrized(f7);
  CHECK(sym.elements == std::vector<VecIndex>{1, 2, 3, 4, 5, 6});
  CHECK(sym.symmetric);
}

TEST_CASE("sumset step") {
  const VectorSpace f7(PrimeField(7), 1);
  Translator tr(f7);
  const auto delta = ConnectionSet::from(f7, {1, 2, 4});
  CHECK(sumset_step(tr, VectorSet::of(7, {0}), delta).members() == delta.elements);
  auto s = VectorSet::of(7, {0, 1, 2, 4});
  auto next = sumset_step(tr, s, delta);
  next |= s;
  CHECK(next.is_full());

  // A subgroup W of F_3^2 is closed: W + W = W.
  const VectorSpace v(PrimeField(3), 2);
  Translator tv(v);
  const std::vector<VecIndex> line{0, v.encode(Coords{1, 2}), v.encode(Coords{2, 1})};
  const auto w = VectorSet::of(9, line);
  auto wsum = VectorSet(9);
  for (auto x : line) tv.translate_or(w, x, wsum);
  CHECK(wsum == w);

  SUBCASE("translation matches brute-force sums") {
    std::mt19937 rng(101);
    for (auto [p, d] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}, {7u, 2u}, {11u, 2u}, {13u, 1u}, {3u, 6u}}) {
      const VectorSpace space(PrimeField(p), d);
      Translator t(space);
      for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_subset(rng, space.size(), 1 + rng() % 20, true);
        const auto b = random_subset(rng, space.size(), 1 + rng() % 5, false);
        const auto got = sumset_step(t, VectorSet::of(space.size(), a), ConnectionSet::from(space, b));
        const auto want = oracle::sumset(to_tuples(a, p, d), to_tuples(b, p, d), p);
        REQUIRE(got == from_tuples(want, p, space.size()));
      }
    }
  }
}

TEST_CASE("orbit diameters in one dimension") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const VectorSpace f(PrimeField(p), 1);
    std::vector<VecIndex> all;
    for (VecIndex x = 1; x < p; ++x) all.push_back(x);
    CHECK(orbit_diameter_directed(f, ConnectionSet::from(f, all)).diameter == 1);
    CHECK(orbit_diameter_directed(f, ConnectionSet::from(f, {1})).diameter == p - 1);
    CHECK(orbit_diameter_undirected(f, ConnectionSet::from(f, {1})).diameter == std::max(1u, (p - 1) / 2));
  }
  const VectorSpace f7(PrimeField(7), 1);
  const auto quad = ConnectionSet::from(f7, {1, 2, 4});
  const auto directed = orbit_diameter_directed(f7, quad);
  CHECK(directed.diameter == 2);
  CHECK(directed.layer_sizes == std::vector<std::uint64_t>{1, 4, 7});
  // {1,2,4} u -{1,2,4} is all of F_7^x.
  CHECK(orbit_diameter_undirected(f7, quad).diameter == 1);
  CHECK(naive_diameter_oracle(f7, quad.symmetrized(f7)) == 1);
  CHECK(naive_diameter_oracle(VectorSpace(PrimeField(5), 1), ConnectionSet::from(VectorSpace(PrimeField(5), 1), {1})) == 4);
  CHECK(naive_diameter_oracle(f7, quad) == 2);
}

TEST_CASE("stagnation on reducible input") {
  const VectorSpace v(PrimeField(5), 2);
  const auto axis = ConnectionSet::from(v, {1, 2, 3, 4});
  CHECK_THROWS_AS(orbit_diameter_directed(v, axis), Stagnation);
  CHECK_THROWS_AS(naive_diameter_oracle(v, axis), Stagnation);
  const GroupSpec reducible(5, 2, {FpMatrix::diagonal(5, std::vector<Residue>{2, 1})});
  CHECK_FALSE(check_higman_connectivity(reducible));
  CHECK_THROWS_AS(group_diameters(reducible), Stagnation);
  CHECK(check_higman_connectivity(GroupSpec(3, 1, {FpMatrix::identity(3, 1)})));
}

TEST_CASE("group diameters") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const GroupSpec full(p, 1, {FpMatrix::scalar(p, 1, PrimeField(p).primitive_root())});
    const auto r = group_diameters(full);
    CHECK(r.diamd == 1);
    CHECK(r.diam == 1);
  }
  const auto wreath = build_wreath({5, 2, top_group_generators(TopGroup::Symmetric, 2)});
  const auto wr = group_diameters(wreath);
  CHECK(wr.diamd == 4);
  CHECK(wr.diam == 4);

  const auto alt = build_alt_module({5, 7});
  const auto orbits = orbits_on_V(alt);
  const auto ar = group_diameters(alt, orbits);
  CHECK(ar.diamd == 12);
  CHECK(ar.diam == 8);
  const auto space = alt.space();
  for (const auto& e : ar.per_orbit) {
    const auto members = orbits.members(orbits.orbit_id[e.rep]);
    const auto delta = ConnectionSet::from(space, members);
    CHECK(naive_diameter_oracle(space, delta) == e.directed);
    CHECK(naive_diameter_oracle(space, delta.symmetrized(space)) == e.undirected);
    CHECK(e.undirected <= e.directed);
    CHECK(e.directed_layers.size() == e.directed + 1);
  }

  SUBCASE("undirected diameter equals directed diameter with -1 adjoined") {
    for (const auto& g : {build_alt_module({5, 3}), build_alt_module({5, 7}),
                          build_wreath({7, 3, top_group_generators(TopGroup::Cyclic, 2)}),
                          build_zsigmondy_cyclic({4, 3})}) {
      const auto plain = group_diameters(g);
      const auto with_neg = group_diameters(g.with_minus_one());
      CHECK(plain.diam == with_neg.diamd);
      CHECK(plain.diam <= plain.diamd);
    }
  }
  SUBCASE("report does not depend on worker count") {
    const auto one = group_diameters(alt, orbits, 1);
    const auto many = group_diameters(alt, orbits, 8);
    REQUIRE(one.per_orbit.size() == many.per_orbit.size());
    for (std::size_t i = 0; i < one.per_orbit.size(); ++i) {
      CHECK(one.per_orbit[i].rep == many.per_orbit[i].rep);
      CHECK(one.per_orbit[i].directed_layers == many.per_orbit[i].directed_layers);
      CHECK(one.per_orbit[i].undirected_layers == many.per_orbit[i].undirected_layers);
    }
  }
}

TEST_CASE("bit-vector engine agrees with the breadth-first oracle") {
  std::mt19937 rng(2024);
  for (auto [p, d] : {std::pair{3u, 4u}, {5u, 3u}, {7u, 2u}}) {
    const VectorSpace space(PrimeField(p), d);
    Translator tr(space);
    int generating = 0, stagnant = 0;
    while (generating < 50) {
      const auto elems = random_subset(rng, space.size(), 1 + rng() % (2 * d + 2), false);
      const auto delta = ConnectionSet::from(space, elems);
      std::uint64_t oracle_value = 0;
      try {
        oracle_value = naive_diameter_oracle(space, delta);
      } catch (const Stagnation&) {
        CHECK_THROWS_AS(orbit_diameter_directed(tr, delta), Stagnation);
        ++stagnant;
        continue;
      }
      const auto engine = orbit_diameter_directed(tr, delta);
      REQUIRE(engine.diameter == oracle_value);
      REQUIRE(engine.diameter == oracle::directed_diameter(to_tuples(elems, p, d), p, d));
      REQUIRE(orbit_diameter_undirected(tr, delta).diameter ==
              naive_diameter_oracle(space, delta.symmetrized(space)));
      // Vertex transitivity: any start vertex has the same eccentricity.
      const auto start = static_cast<VecIndex>(1 + rng() % (space.size() - 1));
      REQUIRE(naive_eccentricity(space, delta, start) == oracle_value);
      ++generating;
    }
    MESSAGE("p=" << p << " d=" << d << ": 50 generating sets, " << stagnant << " non-generating");
  }
  Caps tight;
  tight.oracle_max_v = 100;
  const VectorSpace big(PrimeField(11), 2);
  CHECK_THROWS_AS(naive_diameter_oracle(big, ConnectionSet::from(big, {1, 11}), tight), CapExceeded);
}

TEST_CASE("sumset laws on random subsets") {
  std::mt19937 rng(77);
  int cases = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::uint32_t p = std::array<std::uint32_t, 4>{2, 3, 5, 7}[trial % 4];
    const std::size_t d = 1 + trial % 3;
    const VectorSpace space(PrimeField(p), d);
    Translator tr(space);
    const bool with_zero = trial % 2 == 0;
    const auto base = random_subset(rng, space.size(), 1 + rng() % std::min<std::uint64_t>(space.size() - 1, 6), false);
    auto members = base;
    if (with_zero) members.push_back(0);
    const auto first = VectorSet::of(space.size(), members);
    const auto delta = ConnectionSet::from(space, base);

    // n-fold sumsets of members; adding 0 as a summand is explicit.
    std::vector<VectorSet> layers{first};
    for (int n = 2; n <= 5; ++n) {
      auto next = sumset_step(tr, layers.back(), delta);
      if (with_zero) next |= layers.back();
      layers.push_back(std::move(next));
    }
    for (std::size_t n = 1; n < layers.size(); ++n) {
      REQUIRE(layers[n - 1].count() <= layers[n].count());
      if (with_zero) REQUIRE(layers[n - 1].is_subset_of(layers[n]));
      if (layers[n - 1].is_full()) REQUIRE(layers[n].is_full());
      // A stable layer with 0 in the summands is closed under addition.
      if (with_zero && layers[n - 1] == layers[n]) {
        auto closure = VectorSet(space.size());
        for (auto x : layers[n].members()) tr.translate_or(layers[n], x, closure);
        REQUIRE(closure == layers[n]);
        const auto span = Subspace::span_of(space.field(), d, [&] {
          std::vector<Coords> c;
          for (auto x : layers[n].members()) c.push_back(space.decode(x));
          return c;
        }());
        std::uint64_t span_size = 1;
        for (std::size_t i = 0; i < span.dim(); ++i) span_size *= p;
        REQUIRE(layers[n].count() == span_size);
      }
    }
    ++cases;
  }
  CHECK(cases >= 1000);
}
