#include "orbdiam/harness.hpp"

#include <array>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "orbdiam/constructions.hpp"
#include "orbdiam/decomposition.hpp"
#include "orbdiam/errors.hpp"
#include "orbdiam/parallel.hpp"
#include "orbdiam/spec_io.hpp"

namespace orbdiam {

const char* engine_version() { return ORBDIAM_VERSION; }

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<Family, const char*>, 6> kFamilies{{{Family::Line, "line"},
                                                                  {Family::Wreath, "wreath"},
                                                                  {Family::Alternating, "alternating"},
                                                                  {Family::Cyclic, "cyclic"},
                                                                  {Family::Field, "field"},
                                                                  {Family::Reducible, "reducible"}}};

constexpr std::array<std::pair<InstanceStatus, const char*>, 6> kStatuses{
    {{InstanceStatus::Verified, "verified"},
     {InstanceStatus::Failed, "failed"},
     {InstanceStatus::Rejected, "rejected"},
     {InstanceStatus::NotGenerating, "not_generating"},
     {InstanceStatus::Reducible, "reducible"},
     {InstanceStatus::Skipped, "skipped"}}};

InstanceStatus status_from_string(const std::string& s) {
  for (const auto& [st, name] : kStatuses)
    if (s == name) return st;
  throw InvalidInput("unknown instance status: " + s);
}

// Parameter order within keys.
const std::vector<std::string>& param_order(Family f) {
  static const std::map<Family, std::vector<std::string>> order{
      {Family::Line, {"p", "k"}},      {Family::Wreath, {"p", "k", "d", "top"}},
      {Family::Alternating, {"r", "p"}}, {Family::Cyclic, {"d", "p"}},
      {Family::Field, {"p", "f", "m"}}, {Family::Reducible, {"p"}}};
  return order.at(f);
}

std::uint32_t as_prime_param(std::int64_t v) {
  if (v < 2 || v > 0xffffffffLL) throw InvalidInput("parameter out of range: " + std::to_string(v));
  return static_cast<std::uint32_t>(v);
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void add_check(InstanceRecord& rec, std::string name, bool passed, std::string detail = {}) {
  rec.checks.push_back({std::move(name), passed, std::move(detail)});
}

std::string fmt(std::uint64_t a, const char* op, std::uint64_t b) {
  return std::to_string(a) + " " + op + " " + std::to_string(b);
}

struct Built {
  GroupSpec group;
  std::optional<FpMatrix> designated;  // cyclic A for the order-(d+1) family
};

Built build_instance(const InstanceSpec& s) {
  switch (s.family) {
    case Family::Line: {
      const PrimeField f(as_prime_param(s.param("p")));
      const auto k = static_cast<std::uint64_t>(s.param("k"));
      if (k < 1 || (f.p() - 1) % k != 0) throw InvalidInput("line: k must divide p-1");
      return {GroupSpec(f.p(), 1, {FpMatrix::scalar(f.p(), 1, f.subgroup_generator(k))},
                        "line(p=" + std::to_string(f.p()) + ",k=" + std::to_string(k) + ")"),
              std::nullopt};
    }
    case Family::Wreath: {
      const auto d = s.param("d");
      if (d < 2) throw InvalidInput("wreath: d must be >= 2");
      const auto kind = s.param("top") == 0 ? TopGroup::Cyclic : TopGroup::Symmetric;
      const auto k = s.param("k");
      if (k < 1) throw InvalidInput("wreath: k must be >= 1");
      return {build_wreath({as_prime_param(s.param("p")), static_cast<std::uint64_t>(k),
                            top_group_generators(kind, static_cast<std::size_t>(d))}),
              std::nullopt};
    }
    case Family::Alternating: {
      const auto r = s.param("r");
      if (r < 1) throw InvalidInput("alternating: r must be positive");
      return {build_alt_module({static_cast<std::size_t>(r), as_prime_param(s.param("p"))}), std::nullopt};
    }
    case Family::Cyclic: {
      const auto d = s.param("d");
      if (d < 1) throw InvalidInput("cyclic: d must be positive");
      const ZsigmondyCyclicSpec spec{static_cast<std::size_t>(d), as_prime_param(s.param("p"))};
      auto g = build_zsigmondy_cyclic(spec);
      return {std::move(g), zsigmondy_element(spec)};
    }
    case Family::Field: {
      const auto f = s.param("f"), m = s.param("m");
      if (f < 1 || f > 32 || m < 1) throw InvalidInput("field: f and m must be positive");
      return {build_field_module({as_prime_param(s.param("p")), static_cast<int>(f), static_cast<std::uint64_t>(m)})
                  .group,
              std::nullopt};
    }
    case Family::Reducible: {
      const PrimeField f(as_prime_param(s.param("p")));
      return {GroupSpec(f.p(), 2, {FpMatrix::diagonal(f.p(), std::vector<Residue>{f.primitive_root(), 1})},
                        "reducible(p=" + std::to_string(f.p()) + ")"),
              std::nullopt};
    }
  }
  throw InvalidInput("unknown family");
}

// Exact comparisons for the family-specific inequalities.
void family_checks(InstanceRecord& rec, const DiameterReport& dr) {
  const auto& s = rec.spec;
  const std::uint64_t p = rec.group->p, d = rec.group->d;
  switch (s.family) {
    case Family::Line: {
      const auto k = static_cast<std::uint64_t>(s.param("k"));
      if (k == 1) add_check(rec, "line_trivial_identity", dr.diamd == p - 1, fmt(dr.diamd, "==", p - 1));
      if (k == 2 && p % 2 == 1) {
        add_check(rec, "line_minus_one_identity", dr.diam == (p - 1) / 2, fmt(dr.diam, "==", (p - 1) / 2));
      }
      break;
    }
    case Family::Wreath: {
      const auto k = static_cast<std::uint64_t>(s.param("k"));
      const auto base = scalar_directed_diameter(ScalarSubgroup::of_order(rec.group->p, k));
      add_check(rec, "wreath_equality", dr.diamd == base * d, fmt(dr.diamd, "==", base * d));
      const bool scalars_match = rec.facts.scalar_subgroup && rec.facts.scalar_subgroup->order == k;
      add_check(rec, "wreath_scalar_intersection", scalars_match);
      break;
    }
    case Family::Alternating:
      // diam >= (p-1) d / 4
      add_check(rec, "alternating_lower", 4 * dr.diam >= (p - 1) * d, fmt(4 * dr.diam, ">=", (p - 1) * d));
      break;
    case Family::Cyclic:
      // (p-1) d / 4 <= diam <= (p-1)(d+1) / 4, each side checked on its own
      add_check(rec, "cyclic_lower", (p - 1) * d <= 4 * dr.diam, fmt((p - 1) * d, "<=", 4 * dr.diam));
      add_check(rec, "cyclic_upper", 4 * dr.diam <= (p - 1) * (d + 1), fmt(4 * dr.diam, "<=", (p - 1) * (d + 1)));
      break;
    case Family::Field:
    case Family::Reducible:
      break;
  }
}

void oracle_checks(InstanceRecord& rec, const OrbitPartition& orbits, const Caps& caps) {
  const auto space = rec.group->space();
  if (space.size() > caps.oracle_max_v) return;
  bool ok = true;
  std::string detail;
  for (const auto& e : rec.diameters->per_orbit) {
    const auto delta = ConnectionSet::from(space, orbits.members(orbits.orbit_id[e.rep]));
    const auto directed = naive_diameter_oracle(space, delta, caps);
    const auto undirected = naive_diameter_oracle(space, delta.symmetrized(space), caps);
    if (directed != e.directed || undirected != e.undirected) {
      ok = false;
      detail = "orbit " + std::to_string(e.rep) + ": oracle " + std::to_string(directed) + "/" +
               std::to_string(undirected) + " engine " + std::to_string(e.directed) + "/" +
               std::to_string(e.undirected);
      break;
    }
  }
  add_check(rec, "oracle_agreement", ok, detail);
}

void add_subgroup_bounds(InstanceRecord& rec, const std::string& label, const GroupSpec& a, const Caps& caps) {
  const auto& g = *rec.group;
  const auto dec = summand_count(a, &g, caps);
  const bool normal = is_normal_in(a, g, caps.max_group);
  rec.subgroups.push_back({label, dec.a_order, dec.k, normal});
  auto entries = abelian_subgroup_bounds(g.d, rec.v_size, dec.a_order, dec.k, normal);
  for (auto& e : entries) e.name += "/" + label;
  rec.bounds.append(std::move(entries));
}

void add_bounds(InstanceRecord& rec, const SweepConfig& config, const std::optional<FpMatrix>& designated) {
  const auto& g = *rec.group;
  const std::uint64_t h_size = rec.facts.order.value_or(1);
  rec.bounds.append(lower_bound_entries(rec.smallest_orbit, rec.v_size, h_size));
  rec.bounds.append(center_entries(g.p, g.d, center_upper_bound(g.p, g.d, rec.facts.scalar_subgroup)));

  if (rec.facts.scalar_subgroup && rec.facts.scalar_subgroup->order > 1) {
    const auto& s = *rec.facts.scalar_subgroup;
    add_subgroup_bounds(rec, "scalar", GroupSpec(g.p, g.d, {FpMatrix::scalar(g.p, g.d, s.generator)}), config.caps);
  }
  if (designated) add_subgroup_bounds(rec, "cyclic", GroupSpec(g.p, g.d, {*designated}), config.caps);

  if (rec.facts.order) {
    std::optional<std::uint64_t> j;
    if (auto it = config.j_table.find(g.d); it != config.j_table.end()) j = it->second;
    rec.bounds.append(large_group_bounds(g.d, rec.v_size, *rec.facts.order, config.lie_type, j));
    if (*rec.facts.order > 1) rec.bounds.append(ratio_bounds(g.d, rec.v_size, *rec.facts.order, j));
  }
  if (rec.spec.family == Family::Field) {
    const auto m = static_cast<std::uint64_t>(rec.spec.param("m"));
    rec.bounds.entries.push_back({"cochrane_cipra_upper", cochrane_cipra_real(rec.v_size, m), BoundSide::Upper,
                                  Quantity::Waring, false, true, {},
                                  {{"q", static_cast<double>(rec.v_size)}, {"M", static_cast<double>(m)}}, {}});
  }
  for (const auto& e : rec.bounds.entries) {
    const auto exact = rec.bounds.exact(e.target);
    if (!e.assertable || !exact) continue;
    add_check(rec, "bound:" + e.name, e.holds(*exact),
              std::to_string(*exact) + (e.side == BoundSide::Lower ? " vs lower " : " vs upper ") +
                  e.value.to_string());
  }
}

// M lies in a proper subfield F_{p^e} iff |M| divides p^e - 1, e | f, e < f.
bool in_proper_subfield(std::uint64_t p, std::uint64_t f, std::uint64_t m) {
  for (std::uint64_t e = 1; e < f; ++e)
    if (f % e == 0 && (ipow(p, e) - 1) % m == 0) return true;
  return false;
}

void verify_field(InstanceRecord& rec, const OrbitPartition& orbits, const SweepConfig& config) {
  const auto space = rec.group->space();
  const auto members = orbits.members(orbits.orbit_id[1]);
  const auto delta = ConnectionSet::from(space, members);
  const bool subfield = in_proper_subfield(rec.group->p, rec.group->d, static_cast<std::uint64_t>(rec.spec.param("m")));
  OrbitDiameter directed, undirected;
  try {
    Translator tr(space);
    directed = orbit_diameter_directed(tr, delta);
    undirected = orbit_diameter_undirected(tr, delta);
  } catch (const Stagnation&) {
    rec.status = InstanceStatus::NotGenerating;
    add_check(rec, "subfield_consistency", subfield && !rec.facts.irreducible);
    return;
  }
  add_check(rec, "subfield_consistency", !subfield && rec.facts.irreducible);
  // Multiplication by c maps M onto the orbit cM additively, so every
  // nonzero orbit has the diameters of M itself.
  DiameterReport dr;
  dr.per_orbit.push_back({1, members.size(), directed.diameter, undirected.diameter, directed.layer_sizes,
                          undirected.layer_sizes});
  dr.diamd = directed.diameter;
  dr.diam = undirected.diameter;
  rec.diameters = dr;
  rec.waring = directed.diameter;
  rec.bounds.diamd = dr.diamd;
  rec.bounds.diam = dr.diam;
  rec.bounds.waring = rec.waring;
  add_check(rec, "undirected_le_directed", dr.diam <= dr.diamd);
  oracle_checks(rec, orbits, config.caps);
  add_bounds(rec, config, std::nullopt);
}

void verify_group(InstanceRecord& rec, const OrbitPartition& orbits, const SweepConfig& config,
                  const std::optional<FpMatrix>& designated) {
  const auto& g = *rec.group;
  DiameterReport dr;
  try {
    dr = group_diameters(g, orbits, 1);
  } catch (const Stagnation& e) {
    if (rec.spec.family == Family::Reducible) {
      rec.status = InstanceStatus::Reducible;
      add_check(rec, "stagnation_detected", true, e.what());
      add_check(rec, "reducibility_consistency", !rec.facts.irreducible && !check_higman_connectivity(g, orbits));
    } else {
      add_check(rec, "higman_connectivity", false, e.what());
    }
    return;
  }
  if (rec.spec.family == Family::Reducible) {
    add_check(rec, "stagnation_detected", false, "every orbit generated V");
    return;
  }
  add_check(rec, "irreducible", rec.facts.irreducible);
  add_check(rec, "higman_connectivity", rec.facts.irreducible);
  rec.diameters = dr;
  rec.bounds.diamd = dr.diamd;
  rec.bounds.diam = dr.diam;

  bool nested = true;
  for (const auto& e : dr.per_orbit) nested = nested && e.undirected <= e.directed;
  add_check(rec, "undirected_le_directed", nested);
  const auto with_minus = group_diameters(g.with_minus_one(), config.caps, 1);
  add_check(rec, "minus_one_identity", with_minus.diamd == dr.diam, fmt(dr.diam, "==", with_minus.diamd));
  oracle_checks(rec, orbits, config.caps);
  family_checks(rec, dr);
  add_bounds(rec, config, designated);
}

Json bound_to_json(const BoundEntry& e, const BoundReport& report) {
  Json j;
  j["name"] = e.name;
  j["side"] = to_string(e.side);
  j["target"] = to_string(e.target);
  j["strict"] = e.strict;
  j["log2"] = e.value.log2();
  j["value"] = e.value.to_string();
  j["decimal_digits"] = e.value.decimal_digits();
  j["assertable"] = e.assertable;
  if (!e.condition.empty()) j["condition"] = e.condition;
  const auto exact = report.exact(e.target);
  if (exact && e.assertable) {
    j["holds"] = e.holds(*exact);
  } else {
    j["holds"] = nullptr;
  }
  Json inputs;
  for (const auto& [k, v] : e.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  return j;
}

std::string cache_settings(const SweepConfig& c) {
  std::ostringstream s;
  s << engine_version() << ";V=" << c.caps.max_v << ";H=" << c.caps.max_group << ";oracle=" << c.caps.oracle_max_v
    << ";lie=" << c.lie_type;
  for (const auto& [d, j] : c.j_table) s << ";J" << d << "=" << j;
  return s.str();
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const InstanceSpec& s) {
  std::string name = s.key();
  for (char& ch : name)
    if (ch == '/' || ch == '=') ch = '_';
  return dir / (name + ".json");
}

std::optional<Json> read_cached(const std::filesystem::path& file, const std::string& settings) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    auto doc = Json::parse(in);
    if (doc.at("settings").get<std::string>() != settings) return std::nullopt;
    return doc.at("record");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void write_cached(const std::filesystem::path& file, const std::string& settings, const Json& record) {
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    Json doc;
    doc["settings"] = settings;
    doc["record"] = record;
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

InstanceRecord record_from_cache(const Json& j, const InstanceSpec& spec, std::size_t index) {
  InstanceRecord rec;
  rec.index = index;
  rec.spec = spec;
  rec.status = status_from_string(j.at("status").get<std::string>());
  rec.message = j.value("message", std::string{});
  for (const auto& c : j.at("checks")) {
    rec.checks.push_back(
        {c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.value("detail", std::string{})});
  }
  rec.cached = j;
  return rec;
}

std::string csv_field(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return "";
  if (j[key].is_string()) return j[key].get<std::string>();
  return j[key].dump();
}

// Values in config files may be a number, a list of numbers, or "all".
std::vector<std::int64_t> values_of(const nlohmann::json& v) {
  if (v.is_array()) return v.get<std::vector<std::int64_t>>();
  return {v.get<std::int64_t>()};
}

void expand_entry(const nlohmann::json& entry, std::vector<InstanceSpec>& out) {
  const Family fam = family_from_string(entry.at("family").get<std::string>());
  if (fam == Family::Field && entry.contains("q_max")) {
    const auto q_max = entry.at("q_max").get<std::int64_t>();
    for (std::int64_t p = 2; p <= q_max; ++p) {
      if (!is_prime(static_cast<std::uint64_t>(p))) continue;
      std::int64_t q = p;
      for (std::int64_t f = 1; q <= q_max; ++f, q *= p) {
        for (auto m : divisors(static_cast<std::uint64_t>(q - 1))) {
          if (m > 1) out.push_back({Family::Field, {{"p", p}, {"f", f}, {"m", static_cast<std::int64_t>(m)}}});
        }
      }
    }
    return;
  }
  // Cartesian product over the family's parameters; "all" for k or m means
  // every nontrivial divisor of the relevant group order.
  std::vector<std::map<std::string, std::int64_t>> partial{{}};
  for (const auto& name : param_order(fam)) {
    if (!entry.contains(name)) throw InvalidInput(std::string(to_string(fam)) + ": missing parameter " + name);
    const auto& v = entry.at(name);
    std::vector<std::map<std::string, std::int64_t>> next;
    for (const auto& base : partial) {
      std::vector<std::int64_t> choices;
      if (v.is_string() && name == "top") {
        for (const auto& t : v.get<std::string>() == "both" ? std::vector<std::string>{"cyclic", "sym"}
                                                             : std::vector<std::string>{v.get<std::string>()}) {
          if (t != "cyclic" && t != "sym") throw InvalidInput("top must be cyclic, sym or both");
          choices.push_back(t == "sym");
        }
      } else if (v.is_array() && name == "top") {
        for (const auto& t : v) {
          const auto str = t.get<std::string>();
          if (str != "cyclic" && str != "sym") throw InvalidInput("top must be cyclic or sym");
          choices.push_back(str == "sym");
        }
      } else if (v.is_string() && v.get<std::string>() == "all" && (name == "k" || name == "m")) {
        std::uint64_t group = 0;
        if (name == "k") group = static_cast<std::uint64_t>(base.at("p")) - 1;
        if (name == "m") group = ipow(static_cast<std::uint64_t>(base.at("p")), static_cast<std::uint64_t>(base.at("f"))) - 1;
        for (auto dv : divisors(group))
          if (dv > 1) choices.push_back(static_cast<std::int64_t>(dv));
      } else {
        choices = values_of(v);
      }
      for (auto c : choices) {
        auto m = base;
        m[name] = c;
        next.push_back(std::move(m));
      }
    }
    partial = std::move(next);
  }
  for (auto& params : partial) out.push_back({fam, std::move(params)});
}

}  // namespace

const char* to_string(Family f) {
  for (const auto& [fam, name] : kFamilies)
    if (fam == f) return name;
  return "?";
}

Family family_from_string(const std::string& s) {
  for (const auto& [fam, name] : kFamilies)
    if (s == name) return fam;
  throw InvalidInput("unknown family: " + s);
}

const char* to_string(InstanceStatus s) {
  for (const auto& [st, name] : kStatuses)
    if (st == s) return name;
  return "?";
}

std::int64_t InstanceSpec::param(const std::string& name) const {
  const auto it = params.find(name);
  if (it == params.end()) throw InvalidInput(std::string(to_string(family)) + ": missing parameter " + name);
  return it->second;
}

std::string InstanceSpec::key() const {
  std::string k = to_string(family);
  for (const auto& name : param_order(family)) {
    const auto it = params.find(name);
    if (it == params.end()) continue;
    k += "/" + name + "=";
    k += name == "top" ? (it->second == 0 ? "cyclic" : "sym") : std::to_string(it->second);
  }
  return k;
}

bool InstanceRecord::failed() const { return status == InstanceStatus::Failed; }

const CheckResult* InstanceRecord::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

InstanceRecord verify_instance(const InstanceSpec& spec, const SweepConfig& config, std::size_t index) {
  InstanceRecord rec;
  rec.index = index;
  rec.spec = spec;
  const auto start = std::chrono::steady_clock::now();
  std::optional<FpMatrix> designated;
  try {
    auto built = build_instance(spec);
    rec.group = std::move(built.group);
    designated = std::move(built.designated);
  } catch (const InvalidInput& e) {
    rec.status = InstanceStatus::Rejected;
    rec.message = e.what();
    return rec;
  }
  try {
    const auto& g = *rec.group;
    const auto space = g.space();
    rec.v_size = space.size();
    const auto orbits = orbits_on_V(g, config.caps);
    rec.facts = compute_facts(g, orbits, config.caps);
    rec.orbit_count = orbits.count();
    rec.smallest_orbit = orbits.smallest_nonzero();
    if (spec.family == Family::Field) {
      verify_field(rec, orbits, config);
    } else {
      verify_group(rec, orbits, config, designated);
    }
    if (rec.status == InstanceStatus::Verified || rec.status == InstanceStatus::Reducible ||
        rec.status == InstanceStatus::NotGenerating) {
      for (const auto& c : rec.checks)
        if (!c.passed) rec.status = InstanceStatus::Failed;
    }
  } catch (const CapExceeded& e) {
    rec.status = InstanceStatus::Skipped;
    rec.message = e.what();
  } catch (const std::exception& e) {
    rec.status = InstanceStatus::Failed;
    rec.message = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

SweepConfig default_suite() {
  SweepConfig c;
  c.caps = Caps::from_environment();
  auto add = [&](Family f, std::map<std::string, std::int64_t> params) { c.instances.push_back({f, std::move(params)}); };
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17}) {
    add(Family::Line, {{"p", p}, {"k", 1}});
    if (p > 2) add(Family::Line, {{"p", p}, {"k", 2}});
  }
  // The largest instance first, so it overlaps with the many small ones.
  for (std::int64_t p : {11, 7, 3}) add(Family::Alternating, {{"r", 5}, {"p", p}});
  for (std::int64_t p : {3, 5, 7, 11})
    for (auto k : divisors(static_cast<std::uint64_t>(p - 1))) {
      if (k == 1) continue;
      for (std::int64_t d : {2, 3})
        for (std::int64_t top : {0, 1})
          add(Family::Wreath, {{"p", p}, {"k", static_cast<std::int64_t>(k)}, {"d", d}, {"top", top}});
    }
  add(Family::Wreath, {{"p", 2}, {"k", 1}, {"d", 2}, {"top", 0}});  // rejected: p must be odd
  // Order-(d+1) examples; a pair failing ord(p mod d+1) = d is replaced by
  // the next admissible prime.
  std::set<std::pair<std::int64_t, std::int64_t>> used;
  for (auto [d, p] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 5}, {2, 11}, {4, 3}, {4, 7}}) {
    if (multiplicative_order(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(d + 1)) !=
            static_cast<std::uint64_t>(d) ||
        used.contains({d, p})) {
      for (auto cand : find_zsigmondy_p(static_cast<std::size_t>(d), 1000)) {
        if (cand > p && !used.contains({d, cand})) {
          p = cand;
          break;
        }
      }
    }
    used.insert({d, p});
    add(Family::Cyclic, {{"d", d}, {"p", p}});
  }
  add(Family::Reducible, {{"p", 5}});
  std::vector<InstanceSpec> fields;
  expand_entry(nlohmann::json{{"family", "field"}, {"q_max", 2000}}, fields);
  for (auto& f : fields) c.instances.push_back(std::move(f));
  return c;
}

SweepConfig config_from_json(const nlohmann::json& doc) {
  SweepConfig c;
  c.caps = Caps::from_environment();
  try {
    if (doc.contains("max_v") && !std::getenv("ORBDIAM_MAX_V")) c.caps.max_v = doc.at("max_v").get<std::uint64_t>();
    if (doc.contains("max_group")) c.caps.max_group = doc.at("max_group").get<std::uint64_t>();
    if (doc.contains("oracle_max_v")) c.caps.oracle_max_v = doc.at("oracle_max_v").get<std::uint64_t>();
    if (c.caps.max_v == 0 || c.caps.max_group == 0) throw InvalidInput("caps must be positive");
    c.lie_type = doc.value("lie_type", false);
    c.workers = doc.value("workers", 0u);
    if (doc.contains("J")) {
      for (const auto& [d, j] : doc.at("J").items()) c.j_table[std::stoul(d)] = j.get<std::uint64_t>();
    }
    if (doc.contains("instances")) {
      for (const auto& entry : doc.at("instances")) expand_entry(entry, c.instances);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("suite config: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InvalidInput(std::string("suite config: ") + e.what());
  }
  return c;
}

SweepConfig load_config(const std::filesystem::path& path) { return config_from_json(read_json_file(path)); }

SweepConfig suite_by_name(const std::string& name) {
  if (name == "default") return default_suite();
  if (name == "smoke") {
    return config_from_json(nlohmann::json::parse(R"({"instances": [
      {"family": "line", "p": [5, 7], "k": [1, 2]},
      {"family": "wreath", "p": 5, "k": "all", "d": 2, "top": "both"},
      {"family": "wreath", "p": 2, "k": 1, "d": 2, "top": "cyclic"},
      {"family": "alternating", "r": 5, "p": 3},
      {"family": "cyclic", "d": 4, "p": 3},
      {"family": "field", "p": [7, 2], "f": [1, 4], "m": 3},
      {"family": "reducible", "p": 5}]})"));
  }
  return load_config(name);
}

std::vector<InstanceRecord> run_verification_suite(const SweepConfig& config, const SuiteOptions& options) {
  std::vector<InstanceRecord> out(config.instances.size());
  const std::string settings = cache_settings(config);
  if (options.cache_dir) std::filesystem::create_directories(*options.cache_dir);
  parallel_for(config.instances.size(), config.workers, [&](unsigned, std::size_t i) {
    const auto& spec = config.instances[i];
    if (options.cache_dir) {
      const auto file = cache_file(*options.cache_dir, spec);
      if (auto cached = read_cached(file, settings)) {
        if (options.spot_check_stride != 0 && i % options.spot_check_stride == 0) {
          auto fresh = verify_instance(spec, config, i);
          if (record_to_json(fresh, config.caps) != *cached) {
            throw ConsistencyError("cached record differs from recomputation: " + spec.key());
          }
          out[i] = std::move(fresh);
        } else {
          out[i] = record_from_cache(*cached, spec, i);
        }
        return;
      }
      out[i] = verify_instance(spec, config, i);
      write_cached(file, settings, record_to_json(out[i], config.caps));
      return;
    }
    out[i] = verify_instance(spec, config, i);
  });
  return out;
}

bool suite_passed(const std::vector<InstanceRecord>& records) {
  return std::none_of(records.begin(), records.end(), [](const InstanceRecord& r) { return r.failed(); });
}

nlohmann::ordered_json record_to_json(const InstanceRecord& r, const Caps& caps) {
  if (r.cached) return *r.cached;
  Json j;
  j["key"] = r.spec.key();
  j["family"] = to_string(r.spec.family);
  Json params;
  for (const auto& name : param_order(r.spec.family))
    if (auto it = r.spec.params.find(name); it != r.spec.params.end()) params[name] = it->second;
  j["params"] = params;
  j["status"] = to_string(r.status);
  if (!r.message.empty()) j["message"] = r.message;
  j["engine"] = engine_version();
  j["caps"] = Json{{"max_v", caps.max_v}, {"max_group", caps.max_group}, {"oracle_max_v", caps.oracle_max_v}};
  if (r.group) {
    j["group"] = group_to_json(*r.group);
    j["V"] = r.v_size;
    Json facts;
    facts["order"] = r.facts.order ? Json(*r.facts.order) : Json(nullptr);
    facts["order_lower_bound"] = r.facts.order_lower_bound;
    facts["irreducible"] = r.facts.irreducible;
    facts["scalar_order"] = r.facts.scalar_subgroup ? Json(r.facts.scalar_subgroup->order) : Json(nullptr);
    facts["contains_minus_one"] = r.facts.contains_minus_one ? Json(*r.facts.contains_minus_one) : Json(nullptr);
    facts["orbits"] = r.orbit_count;
    facts["smallest_orbit"] = r.smallest_orbit;
    j["facts"] = facts;
  }
  if (r.diameters) {
    Json d;
    d["diamd"] = r.diameters->diamd;
    d["diam"] = r.diameters->diam;
    auto per = Json::array();
    for (const auto& e : r.diameters->per_orbit) {
      per.push_back(Json{{"rep", e.rep},
                         {"size", e.size},
                         {"directed", e.directed},
                         {"undirected", e.undirected},
                         {"directed_layers", e.directed_layers},
                         {"undirected_layers", e.undirected_layers}});
    }
    d["per_orbit"] = per;
    j["diameters"] = d;
  }
  if (r.waring) j["waring"] = *r.waring;
  if (!r.subgroups.empty()) {
    auto subs = Json::array();
    for (const auto& s : r.subgroups)
      subs.push_back(Json{{"label", s.label}, {"order", s.order}, {"k", s.k}, {"normal", s.normal}});
    j["subgroups"] = subs;
  }
  if (!r.bounds.entries.empty()) {
    auto bounds = Json::array();
    for (const auto& e : r.bounds.entries) bounds.push_back(bound_to_json(e, r.bounds));
    j["bounds"] = bounds;
  }
  auto checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  return j;
}

std::string summary_header() { return "index,key,family,status,p,d,V,H,orbits,diamd,diam,waring,checks,failed_checks"; }

std::string summary_row(const InstanceRecord& r) {
  const Json j = record_to_json(r, Caps{});
  std::ostringstream row;
  std::string p, d, v, h, orbits, diamd, diam;
  if (j.contains("group")) {
    p = j["group"]["p"].dump();
    d = j["group"]["d"].dump();
    v = csv_field(j, "V");
    h = csv_field(j["facts"], "order");
    orbits = csv_field(j["facts"], "orbits");
  }
  if (j.contains("diameters")) {
    diamd = csv_field(j["diameters"], "diamd");
    diam = csv_field(j["diameters"], "diam");
  }
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
  row << r.index << ',' << r.spec.key() << ',' << to_string(r.spec.family) << ',' << to_string(r.status) << ','
      << p << ',' << d << ',' << v << ',' << h << ',' << orbits << ',' << diamd << ',' << diam << ','
      << csv_field(j, "waring") << ',' << r.checks.size() << ',' << failed;
  return row.str();
}

void emit_results(const std::vector<InstanceRecord>& records, const Caps& caps, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto open = [&](const char* name) {
    std::ofstream out(out_dir / name);
    if (!out) throw std::runtime_error("cannot write " + (out_dir / name).string());
    return out;
  };
  auto results = open("results.jsonl");
  auto summary = open("summary.csv");
  auto timings = open("timings.csv");
  summary << summary_header() << '\n';
  timings << "index,key,seconds,cached\n";
  for (const auto& r : records) {
    results << record_to_json(r, caps).dump() << '\n';
    summary << summary_row(r) << '\n';
    timings << r.index << ',' << r.spec.key() << ',' << r.seconds << ',' << (r.cached ? 1 : 0) << '\n';
  }
  if (!results || !summary || !timings) throw std::runtime_error("write failure in " + out_dir.string());
}

}  // namespace orbdiam
