#include "orbdiam/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "orbdiam/diameter.hpp"
#include "orbdiam/errors.hpp"

namespace orbdiam {

const char* to_string(BoundSide side) { return side == BoundSide::Lower ? "lower" : "upper"; }

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::Diam:
      return "diam";
    case Quantity::Diamd:
      return "diamd";
    case Quantity::Waring:
      return "waring";
  }
  return "?";
}

bool BoundEntry::holds(std::uint64_t exact) const {
  if (exact_check) return exact_check(exact);
  const BigReal x = BigReal::from_integer(exact);
  if (side == BoundSide::Lower) return value <= x;
  return strict ? x < value : x <= value;
}

std::optional<std::uint64_t> BoundReport::exact(Quantity q) const {
  switch (q) {
    case Quantity::Diam:
      return diam;
    case Quantity::Diamd:
      return diamd;
    case Quantity::Waring:
      return waring;
  }
  return std::nullopt;
}

std::vector<std::string> BoundReport::violations() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    const auto x = exact(e.target);
    if (e.assertable && x && !e.holds(*x)) out.push_back(e.name);
  }
  return out;
}

void BoundReport::append(std::vector<BoundEntry> more) {
  for (auto& e : more) entries.push_back(std::move(e));
}

bool power_at_least(std::uint64_t base, std::uint64_t exponent, std::uint64_t value) {
  if (value <= 1) return true;
  if (base <= 1 || exponent == 0) return false;
  const double margin = static_cast<double>(exponent) * std::log2(static_cast<double>(base)) -
                        std::log2(static_cast<double>(value));
  if (margin > 1e-6) return true;
  if (margin < -1e-6) return false;
  using boost::multiprecision::cpp_int;
  return boost::multiprecision::pow(cpp_int(base), static_cast<unsigned>(exponent)) >= cpp_int(value);
}

OrbitLowerBounds lower_bounds_orbit(std::uint64_t s, std::uint64_t v_size, std::uint64_t h_size) {
  if (s == 0) throw InvalidInput("lower_bounds_orbit: orbit size must be >= 1");
  const double log_v = std::log(static_cast<double>(v_size));
  OrbitLowerBounds out;
  if (h_size > 1) out.log_over_3log_h = BigReal::from_value(log_v / (3 * std::log(static_cast<double>(h_size))));
  out.log_over_log_2s1 = BigReal::from_value(log_v / std::log(2.0 * static_cast<double>(s) + 1));
  out.power_form = BigReal::from_value(
      std::max(0.0, (std::pow(static_cast<double>(v_size), 1.0 / static_cast<double>(s)) - 1) / 2));
  return out;
}

std::vector<BoundEntry> lower_bound_entries(std::uint64_t s, std::uint64_t v_size, std::uint64_t h_size) {
  const auto b = lower_bounds_orbit(s, v_size, h_size);
  const std::vector<std::pair<std::string, double>> inputs = {
      {"s", static_cast<double>(s)}, {"V", static_cast<double>(v_size)}, {"H", static_cast<double>(h_size)}};
  std::vector<BoundEntry> out;
  if (b.log_over_3log_h) {
    // log|V| / (3 log|H|) <= n  <=>  |H|^{3n} >= |V|
    out.push_back({"orbit_log_h_lower", *b.log_over_3log_h, BoundSide::Lower, Quantity::Diam, false, true, {},
                   inputs, [=](std::uint64_t n) { return power_at_least(h_size, 3 * n, v_size); }});
  }
  out.push_back({"orbit_log_2s1_lower", b.log_over_log_2s1, BoundSide::Lower, Quantity::Diam, false, true, {},
                 inputs, [=](std::uint64_t n) { return power_at_least(2 * s + 1, n, v_size); }});
  out.push_back({"orbit_power_lower", b.power_form, BoundSide::Lower, Quantity::Diam, false, true, {}, inputs,
                 [=](std::uint64_t n) { return power_at_least(2 * n + 1, s, v_size); }});
  return out;
}

std::uint64_t scalar_directed_diameter(const ScalarSubgroup& s) {
  const VectorSpace line(PrimeField(s.p), 1);
  const auto elements = s.elements();
  const std::vector<VecIndex> members(elements.begin(), elements.end());
  return orbit_diameter_directed(line, ConnectionSet::from(line, members)).diameter;
}

CenterBounds center_upper_bound(std::uint32_t p, std::size_t d, const std::optional<ScalarSubgroup>& scalars) {
  CenterBounds out;
  out.coarse_directed = static_cast<std::uint64_t>(p - 1) * d;
  if (p % 2 == 1) out.coarse_undirected = static_cast<double>(p - 1) * static_cast<double>(d) / 2;
  if (scalars) {
    out.directed = scalar_directed_diameter(*scalars) * d;
    if (p % 2 == 1) out.undirected = scalar_directed_diameter(scalars->with_minus_one()) * d;
  }
  return out;
}

CenterBounds center_upper_bound(const GroupSpec& g, const Caps& caps) {
  std::optional<ScalarSubgroup> scalars;
  try {
    scalars = scalar_intersection(g, caps.max_group);
  } catch (const CapExceeded&) {
  }
  return center_upper_bound(g.p, g.d, scalars);
}

std::vector<BoundEntry> center_entries(std::uint32_t p, std::size_t d, const CenterBounds& b) {
  const std::vector<std::pair<std::string, double>> inputs = {{"p", static_cast<double>(p)},
                                                              {"d", static_cast<double>(d)}};
  std::vector<BoundEntry> out;
  if (b.directed) {
    out.push_back({"center_directed_upper", BigReal::from_integer(*b.directed), BoundSide::Upper, Quantity::Diamd,
                   false, true, {}, inputs, {}});
  }
  out.push_back({"center_coarse_directed_upper", BigReal::from_integer(b.coarse_directed), BoundSide::Upper,
                 Quantity::Diamd, false, true, {}, inputs, {}});
  if (b.undirected) {
    out.push_back({"center_undirected_upper", BigReal::from_integer(*b.undirected), BoundSide::Upper,
                   Quantity::Diam, false, true, {}, inputs, {}});
  }
  if (b.coarse_undirected) {
    const double bound = *b.coarse_undirected;
    out.push_back({"center_coarse_undirected_upper", BigReal::from_value(bound), BoundSide::Upper, Quantity::Diam,
                   false, true, {}, inputs,
                   // 2n <= (p-1) d
                   [=](std::uint64_t n) { return 2 * n <= static_cast<std::uint64_t>(p - 1) * d; }});
  }
  return out;
}

BigReal cochrane_cipra_real(std::uint64_t q, std::uint64_t m_size) {
  if (m_size <= 1) throw InvalidInput("cochrane_cipra_bound: |M| must be > 1");
  if (q < 2 || (q - 1) % m_size != 0) throw InvalidInput("cochrane_cipra_bound: |M| must divide q-1");
  const double ratio = 2.0 * static_cast<double>(q - 1) / static_cast<double>(m_size);
  const double exponent = 2.0 / std::log2(static_cast<double>(m_size));  // log 4 / log |M|
  return BigReal::from_log2(std::log2(633.0) + exponent * std::log2(ratio));
}

BigReal cochrane_cipra_bound(std::uint64_t q, std::uint64_t m_size) {
  const BigReal real = cochrane_cipra_real(q, m_size);
  if (real.log2() < 62) return BigReal::from_value(std::ceil(real.value()));
  return real;
}

std::vector<BoundEntry> abelian_subgroup_bounds(std::size_t d, std::uint64_t v_size, std::uint64_t a_size, std::size_t k,
                                             bool normal) {
  if (k < 1 || k > d) throw InvalidInput("abelian_subgroup_bounds: summand count out of range");
  if (a_size <= 1) throw InvalidInput("abelian_subgroup_bounds: A must be nontrivial");
  const double kk1 = static_cast<double>(k) * static_cast<double>(k + 1);
  const double log_v = std::log2(static_cast<double>(v_size));
  const double per_log_a = 2.0 / std::log2(static_cast<double>(a_size));  // log 4 / log |A|
  const std::vector<std::pair<std::string, double>> inputs = {{"d", static_cast<double>(d)},
                                                              {"V", static_cast<double>(v_size)},
                                                              {"A", static_cast<double>(a_size)},
                                                              {"k", static_cast<double>(k)}};
  std::vector<BoundEntry> out;
  // 322 d 144^{k(k+1)} |V|^{k(k+1) log 4 / log |A|}
  const double undirected = std::log2(322.0 * static_cast<double>(d)) + kk1 * std::log2(144.0) +
                            kk1 * per_log_a * log_v;
  out.push_back({"abelian_undirected_upper", BigReal::from_log2(undirected), BoundSide::Upper, Quantity::Diam, true,
                 true, {}, inputs, {}});
  if (normal) {
    // d 2576^{k(k+1)} |V|^{(k+1) log 4 / log |A|}
    const double directed = std::log2(static_cast<double>(d)) + kk1 * std::log2(2576.0) +
                            static_cast<double>(k + 1) * per_log_a * log_v;
    out.push_back({"abelian_normal_directed_upper", BigReal::from_log2(directed), BoundSide::Upper, Quantity::Diamd,
                   true, true, {}, inputs, {}});
  }
  return out;
}

std::vector<BoundEntry> large_group_bounds(std::size_t d, std::uint64_t v_size, std::uint64_t h_size, bool lie_type,
                                        std::optional<std::uint64_t> j) {
  const double dd = static_cast<double>(d);
  std::vector<std::pair<std::string, double>> inputs = {
      {"d", dd}, {"V", static_cast<double>(v_size)}, {"H", static_cast<double>(h_size)}};
  if (j) inputs.emplace_back("J", static_cast<double>(*j));
  std::vector<BoundEntry> out;
  BoundEntry lie{"lie_type_upper", BigReal::from_log2(22 * dd * dd * dd), BoundSide::Upper, Quantity::Diam, true,
                 lie_type, lie_type ? "" : "requires a declared Lie-type composition factor", inputs, {}};
  out.push_back(std::move(lie));

  if (h_size > 1) {
    const double log2_bound =
        18 * dd * dd + dd * 6.0 / std::log2(static_cast<double>(h_size)) * std::log2(static_cast<double>(v_size));
    BoundEntry large{"large_group_directed_upper", BigReal::from_log2(log2_bound), BoundSide::Upper,
                     Quantity::Diamd, true, false, {}, inputs, {}};
    if (lie_type) {
      large.condition = "requires no Lie-type composition factor";
    } else if (!j) {
      large.condition = "conditional on |H| >= J(d)^2; J(d) not supplied";
    } else if (!power_at_least(h_size, 1, *j * *j)) {
      large.condition = "conditional on |H| >= J(d)^2; not satisfied";
    } else {
      large.assertable = true;
    }
    out.push_back(std::move(large));
  }
  return out;
}

double ratio_base_log2(std::size_t d, std::optional<std::uint64_t> j) {
  const double dd = static_cast<double>(d);
  const double generic = dd * std::max(22 * dd * dd * dd, 18 * dd * dd + 6 * dd);
  if (!j) return generic;
  return std::max(4 * std::log2(static_cast<double>(std::max<std::uint64_t>(*j, 1))), generic);
}

std::vector<BoundEntry> ratio_bounds(std::size_t d, std::uint64_t v_size, std::uint64_t h_size,
                                  std::optional<std::uint64_t> j) {
  if (h_size <= 1) throw InvalidInput("ratio_bounds: H must be nontrivial");
  const double ratio = std::log(static_cast<double>(v_size)) / std::log(static_cast<double>(h_size));
  std::vector<std::pair<std::string, double>> inputs = {
      {"d", static_cast<double>(d)}, {"V", static_cast<double>(v_size)}, {"H", static_cast<double>(h_size)}};
  if (j) inputs.emplace_back("J", static_cast<double>(*j));
  std::vector<BoundEntry> out;
  out.push_back({"ratio_lower", BigReal::from_value(ratio / 3), BoundSide::Lower, Quantity::Diam, false, true, {},
                 inputs, [=](std::uint64_t n) { return power_at_least(h_size, 3 * n, v_size); }});
  BoundEntry upper{"ratio_upper", BigReal::from_log2(ratio_base_log2(d, j) * ratio), BoundSide::Upper,
                   Quantity::Diam, false, j.has_value(), {}, inputs, {}};
  if (!j) upper.condition = "f(d) depends on J(d); J(d) not supplied";
  out.push_back(std::move(upper));
  return out;
}

double quarter_lower(std::uint32_t p, std::size_t d) { return static_cast<double>(p - 1) * d / 4.0; }

double quarter_upper(std::uint32_t p, std::size_t d) { return static_cast<double>(p - 1) * (d + 1) / 4.0; }

}  // namespace orbdiam
