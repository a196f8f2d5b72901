#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbdiam/big_real.hpp"
#include "orbdiam/caps.hpp"
#include "orbdiam/group.hpp"

namespace orbdiam {

enum class BoundSide { Lower, Upper };
// The exact quantity a bound is compared against.
enum class Quantity { Diam, Diamd, Waring };

const char* to_string(BoundSide side);
const char* to_string(Quantity q);

struct BoundEntry {
  std::string name;
  BigReal value;
  BoundSide side = BoundSide::Upper;
  Quantity target = Quantity::Diam;
  bool strict = false;      // upper bounds: exact < value rather than <=
  bool assertable = true;   // hypotheses affirmed; otherwise report only
  std::string condition;    // why the entry is not assertable, if it is not
  std::vector<std::pair<std::string, double>> inputs;
  // Exact-arithmetic check, when the real-valued comparison could be
  // decided wrongly by rounding. Empty means compare `value` directly.
  std::function<bool(std::uint64_t)> exact_check;

  bool holds(std::uint64_t exact) const;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  std::optional<std::uint64_t> diam;
  std::optional<std::uint64_t> diamd;
  std::optional<std::uint64_t> waring;

  std::optional<std::uint64_t> exact(Quantity q) const;
  // Names of assertable entries that fail against the exact values present.
  std::vector<std::string> violations() const;
  void append(std::vector<BoundEntry> more);
};

// base^exponent >= value, decided exactly when the logarithms are too close.
bool power_at_least(std::uint64_t base, std::uint64_t exponent, std::uint64_t value);

// The three smallest-orbit lower bounds on diam(V, H):
// log|V| / (3 log|H|) (only for |H| > 1), log|V| / log(2s+1), (|V|^{1/s} - 1)/2.
struct OrbitLowerBounds {
  std::optional<BigReal> log_over_3log_h;
  BigReal log_over_log_2s1;
  BigReal power_form;
};
OrbitLowerBounds lower_bounds_orbit(std::uint64_t s, std::uint64_t v_size, std::uint64_t h_size);
std::vector<BoundEntry> lower_bound_entries(std::uint64_t s, std::uint64_t v_size, std::uint64_t h_size);

// Upper bounds through the scalar subgroup F_p^x cap H.
struct CenterBounds {
  std::optional<std::uint64_t> directed;    // diamd(F_p, S) d
  std::optional<std::uint64_t> undirected;  // diam(F_p, S<-1>) d, odd p only
  std::uint64_t coarse_directed = 0;        // (p-1) d
  std::optional<double> coarse_undirected;  // (p-1) d / 2, odd p only
};
// `scalars` empty means the intersection is unknown: coarse forms only.
CenterBounds center_upper_bound(std::uint32_t p, std::size_t d, const std::optional<ScalarSubgroup>& scalars);
CenterBounds center_upper_bound(const GroupSpec& g, const Caps& caps = {});
std::vector<BoundEntry> center_entries(std::uint32_t p, std::size_t d, const CenterBounds& b);

// diamd(F_p, S) for a subgroup S of F_p^x, by the diameter engine in dimension 1.
std::uint64_t scalar_directed_diameter(const ScalarSubgroup& s);

// 633 (2(q-1)/|M|)^{log 4 / log |M|} as a real, and its ceiling.
BigReal cochrane_cipra_real(std::uint64_t q, std::uint64_t m_size);
BigReal cochrane_cipra_bound(std::uint64_t q, std::uint64_t m_size);

// Summand-count bounds for an abelian p'-subgroup A with k summands.
std::vector<BoundEntry> abelian_subgroup_bounds(std::size_t d, std::uint64_t v_size, std::uint64_t a_size, std::size_t k,
                                             bool normal);

// diam < 2^{22 d^3} under a Lie-type composition factor; and
// diamd < 2^{18 d^2} |V|^{d log 64 / log |H|} when |H| >= J(d)^2.
std::vector<BoundEntry> large_group_bounds(std::size_t d, std::uint64_t v_size, std::uint64_t h_size, bool lie_type,
                                        std::optional<std::uint64_t> j);

// log2 f(d) = max(4 log2 J, d max(22 d^3, 18 d^2 + 6 d)).
double ratio_base_log2(std::size_t d, std::optional<std::uint64_t> j);
std::vector<BoundEntry> ratio_bounds(std::size_t d, std::uint64_t v_size, std::uint64_t h_size,
                                  std::optional<std::uint64_t> j);

// Family formulas for the extremal constructions.
// (p-1) d / 4: lower bound for the alternating and cyclic examples.
double quarter_lower(std::uint32_t p, std::size_t d);
// (p-1)(d+1) / 4: upper bound for the cyclic example.
double quarter_upper(std::uint32_t p, std::size_t d);

}  // namespace orbdiam
