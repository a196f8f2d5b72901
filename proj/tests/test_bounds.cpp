#include <random>

#include "doctest.h"
#include "orbdiam/big_real.hpp"
#include "orbdiam/bounds.hpp"
#include "orbdiam/errors.hpp"

using namespace orbdiam;

namespace {

const BoundEntry& entry(const std::vector<BoundEntry>& es, const std::string& name) {
  for (const auto& e : es)
    if (e.name == name) return e;
  FAIL("missing bound entry " << name);
  throw std::logic_error("unreachable");
}

bool has_entry(const std::vector<BoundEntry>& es, const std::string& name) {
  for (const auto& e : es)
    if (e.name == name) return true;
  return false;
}

}  // namespace

TEST_CASE("BigReal agrees with integer comparison") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20000; ++i) {
    const int bits_a = 1 + static_cast<int>(rng() % 63), bits_b = 1 + static_cast<int>(rng() % 63);
    std::uint64_t a = rng() >> (64 - bits_a), b = rng() >> (64 - bits_b);
    if (i % 5 == 0) b = a + (rng() % 3) - 1;  // neighbours, where doubles collide
    const auto ra = BigReal::from_integer(a), rb = BigReal::from_integer(b);
    REQUIRE((ra < rb) == (a < b));
    REQUIRE((ra == rb) == (a == b));
    REQUIRE((ra > rb) == (a > b));
  }
  // Transitivity across mixed exact and log-only values.
  for (int i = 0; i < 5000; ++i) {
    std::vector<BigReal> v;
    for (int j = 0; j < 3; ++j) {
      const std::uint64_t n = 1 + rng() % 1000;
      v.push_back(j % 2 ? BigReal::from_integer(n) : BigReal::from_log2(std::log2(static_cast<double>(n)) + 1e-3));
    }
    if (v[0] <= v[1] && v[1] <= v[2]) REQUIRE(v[0] <= v[2]);
    if (v[0] < v[1] && v[1] < v[2]) REQUIRE(v[0] < v[2]);
  }
  CHECK(BigReal::from_integer(0).is_zero());
  CHECK(BigReal::from_integer(0) < BigReal::from_integer(1));
  CHECK(BigReal::infinity() > BigReal::from_log2(1e9));
  CHECK(BigReal::from_integer(6) * BigReal::from_integer(7) == BigReal::from_integer(42));
  CHECK(BigReal::from_log2(176).decimal_digits() == 53);  // 2^176 ~ 9.58e52
  CHECK(BigReal::from_integer(999).decimal_digits() == 3);
}

TEST_CASE("power_at_least") {
  CHECK(power_at_least(3, 4, 81));
  CHECK_FALSE(power_at_least(3, 3, 81));
  CHECK(power_at_least(2, 64, std::numeric_limits<std::uint64_t>::max()));
  CHECK_FALSE(power_at_least(2, 63, std::numeric_limits<std::uint64_t>::max()));
  CHECK(power_at_least(7, 0, 1));
  CHECK_FALSE(power_at_least(1, 100, 2));
}

TEST_CASE("smallest-orbit lower bounds") {
  const auto b = lower_bounds_orbit(1, 7, 2);
  CHECK(b.log_over_log_2s1.value() == doctest::Approx(1.77124374916).epsilon(1e-10));
  CHECK(b.power_form.value() == doctest::Approx(3.0));
  CHECK(lower_bounds_orbit(2, 81, 10).power_form.value() == doctest::Approx(4.0));
  CHECK(lower_bounds_orbit(6, 7, 6).log_over_log_2s1.value() < 1.0);
  CHECK_FALSE(lower_bounds_orbit(1, 7, 1).log_over_3log_h);
  CHECK_THROWS_AS(lower_bounds_orbit(0, 7, 2), InvalidInput);

  // Exact checks agree with the real values: the power form is exactly 3
  // for s=1, |V|=7, so n=3 passes and n=2 fails.
  const auto es = lower_bound_entries(1, 7, 2);
  CHECK(entry(es, "orbit_power_lower").holds(3));
  CHECK_FALSE(entry(es, "orbit_power_lower").holds(2));
  CHECK(entry(es, "orbit_log_2s1_lower").holds(2));
  CHECK_FALSE(entry(es, "orbit_log_2s1_lower").holds(1));
  CHECK(entry(es, "orbit_log_h_lower").holds(1));  // 2^3 >= 7
  // Boundary: s=2, |V|=81 gives exactly 4.
  CHECK(entry(lower_bound_entries(2, 81, 10), "orbit_power_lower").holds(4));
  CHECK_FALSE(entry(lower_bound_entries(2, 81, 10), "orbit_power_lower").holds(3));

  SUBCASE("exact checks match real comparisons away from ties") {
    std::mt19937 rng(4);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t v = 2 + rng() % 100000, s = 1 + rng() % 50, h = 2 + rng() % 1000, n = 1 + rng() % 40;
      for (const auto& e : lower_bound_entries(s, v, h)) {
        const double real = e.value.value();
        if (std::abs(real - static_cast<double>(n)) < 1e-9) continue;
        REQUIRE(e.holds(n) == (real <= static_cast<double>(n)));
      }
    }
  }
}

TEST_CASE("center upper bounds") {
  const auto full = center_upper_bound(7, 3, ScalarSubgroup::of_order(7, 6));
  CHECK(full.directed == 3u);
  CHECK(full.undirected == 3u);
  const auto trivial = center_upper_bound(5, 2, ScalarSubgroup::of_order(5, 1));
  CHECK(trivial.directed == 8u);
  CHECK(trivial.undirected == 4u);
  CHECK(trivial.coarse_directed == 8u);
  CHECK(*trivial.coarse_undirected == doctest::Approx(4.0));
  const auto even = center_upper_bound(2, 4, ScalarSubgroup::of_order(2, 1));
  CHECK(even.directed == 4u);
  CHECK_FALSE(even.undirected);
  CHECK_FALSE(even.coarse_undirected);
  CHECK_FALSE(has_entry(center_entries(2, 4, even), "center_undirected_upper"));
  CHECK_FALSE(has_entry(center_entries(2, 4, even), "center_coarse_undirected_upper"));
  const auto unknown = center_upper_bound(11, 2, std::nullopt);
  CHECK_FALSE(unknown.directed);
  CHECK(unknown.coarse_directed == 20u);
  // K = {1, -1} in F_5: directed diameter 2.
  CHECK(scalar_directed_diameter(ScalarSubgroup::of_order(5, 2)) == 2);
  CHECK(scalar_directed_diameter(ScalarSubgroup::of_order(13, 1)) == 12);
}

TEST_CASE("Cochrane-Cipra bound") {
  CHECK(cochrane_cipra_real(7, 3).value() == doctest::Approx(3640.14626).epsilon(1e-8));
  CHECK(cochrane_cipra_bound(7, 3).value() == 3641.0);
  CHECK(cochrane_cipra_real(64, 9).value() == doctest::Approx(3346.03).epsilon(1e-5));
  for (std::uint64_t q : {3u, 4u, 5u, 8u, 9u, 1999u}) CHECK(cochrane_cipra_bound(q, q - 1) >= BigReal::from_integer(1));
  CHECK_THROWS_AS(cochrane_cipra_real(7, 1), InvalidInput);
  CHECK_THROWS_AS(cochrane_cipra_real(7, 4), InvalidInput);
}

TEST_CASE("abelian subgroup bounds") {
  const auto both = abelian_subgroup_bounds(2, 25, 4, 2, true);
  CHECK(entry(both, "abelian_undirected_upper").value.log2() == doctest::Approx(80.2136040254).epsilon(1e-10));
  CHECK(entry(both, "abelian_normal_directed_upper").value.log2() ==
        doctest::Approx(82.9170698380).epsilon(1e-10));
  const auto one = abelian_subgroup_bounds(1, 7, 6, 1, false);
  REQUIRE(one.size() == 1);
  CHECK(one[0].value.log2() == doctest::Approx(27.014899411).epsilon(1e-9));
  CHECK(one[0].strict);
  CHECK(one[0].holds(1));
  CHECK_THROWS_AS(abelian_subgroup_bounds(2, 25, 4, 3, true), InvalidInput);
  CHECK_THROWS_AS(abelian_subgroup_bounds(2, 25, 4, 0, true), InvalidInput);
  CHECK_THROWS_AS(abelian_subgroup_bounds(2, 25, 1, 1, true), InvalidInput);
}

TEST_CASE("large-group bounds are gated") {
  const auto lie = large_group_bounds(2, 25, 24, true, std::nullopt);
  CHECK(entry(lie, "lie_type_upper").value.log2() == doctest::Approx(176.0));
  CHECK(entry(lie, "lie_type_upper").assertable);
  CHECK_FALSE(entry(lie, "large_group_directed_upper").assertable);

  const auto no_j = large_group_bounds(2, 25, 24, false, std::nullopt);
  CHECK_FALSE(entry(no_j, "lie_type_upper").assertable);
  const auto& large = entry(no_j, "large_group_directed_upper");
  CHECK(large.value.log2() == doctest::Approx(84.1541395962).epsilon(1e-10));
  CHECK(large.target == Quantity::Diamd);
  CHECK_FALSE(large.assertable);
  CHECK_FALSE(large.condition.empty());

  CHECK(entry(large_group_bounds(2, 25, 24, false, 4), "large_group_directed_upper").assertable);   // 24 >= 16
  CHECK_FALSE(entry(large_group_bounds(2, 25, 24, false, 5), "large_group_directed_upper").assertable);  // 24 < 25

  BoundReport report;
  report.diam = 3;
  report.diamd = 5;
  report.append(large_group_bounds(2, 25, 24, false, 4));
  CHECK(report.violations().empty());
}

TEST_CASE("ratio bounds") {
  CHECK(ratio_base_log2(1, 1) == doctest::Approx(24.0));
  CHECK(ratio_base_log2(1, std::nullopt) == doctest::Approx(24.0));
  double previous = 0;
  for (std::uint64_t j = 1; j < (1ull << 40); j *= 3) {
    const double f = ratio_base_log2(2, j);
    CHECK(f >= previous);
    previous = f;
  }
  const auto es = ratio_bounds(4, 81, 24, std::nullopt);
  CHECK(entry(es, "ratio_lower").value.value() == doctest::Approx(0.46091616539).epsilon(1e-10));
  CHECK(entry(es, "ratio_lower").assertable);
  CHECK_FALSE(entry(es, "ratio_upper").assertable);
  CHECK(entry(ratio_bounds(4, 81, 24, 7), "ratio_upper").assertable);
  CHECK_THROWS_AS(ratio_bounds(4, 81, 1, std::nullopt), InvalidInput);
}

TEST_CASE("family formulas") {
  CHECK(quarter_lower(7, 4) == doctest::Approx(6.0));
  CHECK(quarter_upper(3, 4) == doctest::Approx(2.5));
  CHECK(quarter_lower(3, 4) == doctest::Approx(2.0));
}

TEST_CASE("report violations") {
  BoundReport r;
  r.diam = 5;
  r.diamd = 9;
  r.append(lower_bound_entries(1, 7, 2));
  r.append(center_entries(7, 1, center_upper_bound(7, 1, ScalarSubgroup::of_order(7, 1))));
  const auto v = r.violations();
  // center directed upper is 6 < 9, coarse undirected is 3 < 5.
  CHECK(v == std::vector<std::string>{"center_directed_upper", "center_coarse_directed_upper",
                                      "center_undirected_upper", "center_coarse_undirected_upper"});
  BoundReport empty;
  empty.append(lower_bound_entries(1, 7, 2));
  CHECK(empty.violations().empty());
}
