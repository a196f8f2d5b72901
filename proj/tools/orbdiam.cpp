// orbdiam: orbital diameters of affine primitive groups.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>

#include "orbdiam/bounds.hpp"
#include "orbdiam/constructions.hpp"
#include "orbdiam/decomposition.hpp"
#include "orbdiam/diameter.hpp"
#include "orbdiam/errors.hpp"
#include "orbdiam/harness.hpp"
#include "orbdiam/spec_io.hpp"

using namespace orbdiam;

namespace {

enum Exit { kOk = 0, kAssertion = 1, kInvalid = 2, kCap = 3 };

// Assertion failures found while running a subcommand.
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_group(const GroupSpec& g, const std::string& out) {
  if (out.empty()) {
    std::cout << group_to_json(g).dump(2) << '\n';
  } else {
    write_group_spec(g, out);
    std::cerr << "wrote " << out << '\n';
  }
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void run_diameter(const std::string& path, bool directed, bool undirected, bool per_orbit, bool oracle) {
  const auto caps = Caps::from_environment();
  const auto g = read_group_spec(path);
  const auto orbits = orbits_on_V(g, caps);
  const auto report = group_diameters(g, orbits);
  if (!directed && !undirected) directed = undirected = true;
  std::cout << "group " << g.name << " p=" << g.p << " d=" << g.d << " |V|=" << g.space().size()
            << " orbits=" << orbits.count() << '\n';
  if (directed) std::cout << "diamd " << report.diamd << '\n';
  if (undirected) std::cout << "diam " << report.diam << '\n';
  if (per_orbit) {
    for (const auto& e : report.per_orbit) {
      std::cout << "orbit rep=" << e.rep << " size=" << e.size;
      if (directed) std::cout << " directed=" << e.directed << " layers=[" << join(e.directed_layers) << "]";
      if (undirected) std::cout << " undirected=" << e.undirected << " layers=[" << join(e.undirected_layers) << "]";
      std::cout << '\n';
    }
  }
  if (oracle) {
    const auto space = g.space();
    bool agree = true;
    for (const auto& e : report.per_orbit) {
      const auto delta = ConnectionSet::from(space, orbits.members(orbits.orbit_id[e.rep]));
      const auto od = naive_diameter_oracle(space, delta, caps);
      const auto ou = naive_diameter_oracle(space, delta.symmetrized(space), caps);
      if (od != e.directed || ou != e.undirected) {
        std::cout << "oracle MISMATCH at orbit " << e.rep << ": " << od << "/" << ou << '\n';
        agree = false;
      }
    }
    if (!agree) throw AssertionFailure("oracle disagreement");
    std::cout << "oracle agrees on " << report.per_orbit.size() << " orbits\n";
  }
}

void run_orbits(const std::string& path) {
  const auto g = read_group_spec(path);
  const auto orbits = orbits_on_V(g, Caps::from_environment());
  const auto space = g.space();
  std::cout << "orbits " << orbits.count() << " smallest_nonzero " << orbits.smallest_nonzero() << '\n';
  for (std::size_t i = 0; i < orbits.count(); ++i) {
    const auto c = space.decode(orbits.reps[i]);
    std::cout << "rep=" << orbits.reps[i] << " (";
    for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? "," : "") << c[k];
    std::cout << ") size=" << orbits.sizes[i] << '\n';
  }
}

void print_entries(const BoundReport& r) {
  for (const auto& e : r.entries) {
    const auto exact = r.exact(e.target);
    std::string verdict = "reported";
    if (e.assertable && exact) verdict = e.holds(*exact) ? "holds" : "VIOLATED";
    std::printf("%-40s %-5s %-6s %-24s %s", e.name.c_str(), to_string(e.side), to_string(e.target),
                e.value.to_string().c_str(), verdict.c_str());
    if (!e.condition.empty()) std::printf(" (%s)", e.condition.c_str());
    std::printf("\n");
  }
}

void run_bounds(const std::string& path, const std::string& a_path, bool a_scalar, std::optional<std::uint64_t> j,
                bool lie_type) {
  const auto caps = Caps::from_environment();
  const auto g = read_group_spec(path);
  const auto orbits = orbits_on_V(g, caps);
  const auto facts = compute_facts(g, orbits, caps);
  const auto v_size = g.space().size();
  BoundReport r;
  try {
    const auto d = group_diameters(g, orbits);
    r.diamd = d.diamd;
    r.diam = d.diam;
  } catch (const Stagnation&) {
    std::cout << "group is reducible: diameters undefined, bounds reported only\n";
  }
  std::cout << "p=" << g.p << " d=" << g.d << " |V|=" << v_size << " |H|="
            << (facts.order ? std::to_string(*facts.order) : ">=" + std::to_string(facts.order_lower_bound))
            << " smallest_orbit=" << orbits.smallest_nonzero();
  if (r.diamd) std::cout << " diamd=" << *r.diamd << " diam=" << *r.diam;
  std::cout << '\n';
  r.append(lower_bound_entries(orbits.smallest_nonzero(), v_size, facts.order.value_or(1)));
  r.append(center_entries(g.p, g.d, center_upper_bound(g.p, g.d, facts.scalar_subgroup)));

  std::optional<GroupSpec> a;
  if (!a_path.empty()) a = read_group_spec(a_path);
  if (a_scalar) {
    if (!facts.scalar_subgroup || facts.scalar_subgroup->order <= 1) {
      throw InvalidInput("--A-scalar: the scalar subgroup is trivial or unknown");
    }
    a = GroupSpec(g.p, g.d, {FpMatrix::scalar(g.p, g.d, facts.scalar_subgroup->generator)});
  }
  if (a) {
    const auto dec = summand_count(*a, &g, caps);
    const bool normal = is_normal_in(*a, g, caps.max_group);
    std::cout << "A: |A|=" << dec.a_order << " k=" << dec.k << " normal=" << (normal ? "yes" : "no") << '\n';
    r.append(abelian_subgroup_bounds(g.d, v_size, dec.a_order, dec.k, normal));
  }
  if (facts.order) {
    r.append(large_group_bounds(g.d, v_size, *facts.order, lie_type, j));
    if (*facts.order > 1) r.append(ratio_bounds(g.d, v_size, *facts.order, j));
  }
  print_entries(r);
  if (!r.violations().empty()) throw AssertionFailure("bound violated");
}

void run_waring(std::uint32_t p, int f, std::uint64_t m) {
  const auto fm = build_field_module({p, f, m});
  const auto space = fm.group.space();
  std::vector<VecIndex> members;
  {
    // The orbit of 1 is M itself.
    Coords one(static_cast<std::size_t>(f), 0);
    one[0] = 1;
    Coords x = one;
    do {
      members.push_back(space.encode(x));
      x = fm.m_generator.apply(x);
    } while (x != one);
  }
  const auto q = fm.field.order();
  std::uint64_t waring = 0;
  try {
    waring = orbit_diameter_directed(space, ConnectionSet::from(space, members)).diameter;
  } catch (const Stagnation&) {
    throw InvalidInput("M does not generate F_q additively (it lies in a proper subfield)");
  }
  const auto real = cochrane_cipra_real(q, m);
  std::cout << "q=" << q << " |M|=" << m << " modulus=" << fm.field.modulus.to_string() << '\n';
  std::cout << "waring " << waring << '\n';
  std::cout << "cochrane_cipra " << real.to_string() << " (ceiling " << cochrane_cipra_bound(q, m).to_string()
            << ")\n";
  if (!(BigReal::from_integer(waring) <= real)) throw AssertionFailure("Waring number exceeds the bound");
}

std::uint64_t parse_j(const std::string& s, std::map<std::size_t, std::uint64_t>& table) {
  const auto eq = s.find('=');
  if (eq == std::string::npos) throw InvalidInput("--J expects d=value, got " + s);
  try {
    const auto d = std::stoul(s.substr(0, eq));
    const auto v = std::stoull(s.substr(eq + 1));
    table[d] = v;
    return v;
  } catch (const std::logic_error&) {
    throw InvalidInput("--J expects d=value, got " + s);
  }
}

int run_verify(const std::string& suite, const std::string& out, const std::string& cache, unsigned workers,
               const std::vector<std::string>& js, bool lie_type) {
  auto config = suite_by_name(suite);
  if (workers) config.workers = workers;
  for (const auto& s : js) parse_j(s, config.j_table);
  if (lie_type) config.lie_type = true;
  SuiteOptions options;
  if (!cache.empty()) options.cache_dir = cache;
  const auto records = run_verification_suite(config, options);
  emit_results(records, config.caps, out);
  std::map<std::string, std::size_t> by_status;
  for (const auto& r : records) ++by_status[to_string(r.status)];
  std::cout << records.size() << " instances:";
  for (const auto& [s, n] : by_status) std::cout << ' ' << s << '=' << n;
  std::cout << '\n';
  for (const auto& r : records) {
    if (r.status == InstanceStatus::Failed) {
      std::cout << "FAILED " << r.spec.key() << (r.message.empty() ? "" : ": " + r.message) << '\n';
      for (const auto& c : r.checks)
        if (!c.passed) std::cout << "  " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    } else if (r.status == InstanceStatus::Skipped) {
      std::cout << "skipped " << r.spec.key() << ": " << r.message << '\n';
    }
  }
  std::cout << "results in " << out << '\n';
  if (!suite_passed(records)) return kAssertion;
  if (by_status.contains("skipped")) return kCap;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbital diameters of affine primitive permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", engine_version());

  // diameter
  auto* diameter = app.add_subcommand("diameter", "Exact directed and undirected orbital diameters");
  std::string group_path;
  bool directed = false, undirected = false, both = false, per_orbit = false, oracle = false;
  diameter->add_option("--group", group_path, "Group-spec file")->required();
  diameter->add_flag("--directed", directed, "Report diamd");
  diameter->add_flag("--undirected", undirected, "Report diam");
  diameter->add_flag("--both", both, "Report both (default)");
  diameter->add_flag("--per-orbit", per_orbit, "Per-orbit diameters and layer sizes");
  diameter->add_flag("--oracle", oracle, "Cross-check with breadth-first search");

  // orbits
  auto* orbits = app.add_subcommand("orbits", "Orbit partition of V");
  orbits->add_option("--group", group_path, "Group-spec file")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Every applicable bound against the exact diameters");
  std::string a_path;
  bool a_scalar = false, lie_type = false;
  std::optional<std::uint64_t> j_value;
  bounds->add_option("--group", group_path, "Group-spec file")->required();
  auto* a_opt = bounds->add_option("--A", a_path, "Abelian p'-subgroup spec file");
  bounds->add_flag("--A-scalar", a_scalar, "Use the scalar subgroup as A")->excludes(a_opt);
  bounds->add_option("--J", j_value, "J(d) for the conditional bounds");
  bounds->add_flag("--lie-type", lie_type, "Declare a Lie-type composition factor in characteristic p");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a group-spec document");
  construct->require_subcommand(1);
  std::string out_path;
  std::uint32_t p = 0;
  std::size_t d = 0, r = 0;
  std::uint64_t k_order = 0, m_order = 0;
  int f = 0;
  std::string top;
  auto* wreath = construct->add_subcommand("wreath", "K wr S acting imprimitively");
  wreath->add_option("--p", p)->required();
  wreath->add_option("--k-order", k_order)->required();
  wreath->add_option("--top", top, "cyclic, sym, or a permutations file")->required();
  wreath->add_option("--d", d, "Degree (ignored for a permutations file)");
  auto* alt = construct->add_subcommand("alt", "Alt(r) on the sum-zero module");
  alt->add_option("--r", r)->required();
  alt->add_option("--p", p)->required();
  auto* zcyc = construct->add_subcommand("zsigmondy-cyclic", "<h, -1> with h of order d+1");
  zcyc->add_option("--d", d)->required();
  zcyc->add_option("--p", p)->required();
  auto* field = construct->add_subcommand("field-module", "M <= F_q^x acting on F_q");
  field->add_option("--p", p)->required();
  field->add_option("--f", f)->required();
  field->add_option("--m-order", m_order)->required();
  for (auto* sub : {wreath, alt, zcyc, field}) sub->add_option("--out", out_path, "Output file (default stdout)");

  // waring
  auto* waring = app.add_subcommand("waring", "Waring number of M <= F_q^x against the Cochrane-Cipra bound");
  waring->add_option("--p", p)->required();
  waring->add_option("--f", f)->required();
  waring->add_option("--m-order", m_order)->required();

  // zsigmondy
  std::uint64_t q = 0, zd = 0;
  std::uint32_t limit = 0;
  auto* zsig = app.add_subcommand("zsigmondy", "Primitive prime divisors of q^d - 1");
  zsig->add_option("--q", q)->required();
  zsig->add_option("--d", zd)->required();
  auto* zsigp = app.add_subcommand("zsigmondy-p", "Primes p <= limit with ord(p mod d+1) = d");
  zsigp->add_option("--d", d)->required();
  zsigp->add_option("--limit", limit)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write result files");
  std::string suite = "default", out_dir, cache_dir;
  unsigned workers = 0;
  std::vector<std::string> js;
  verify->add_option("--suite", suite, "default, smoke, or a JSON config file");
  verify->add_option("--out", out_dir, "Output directory")->required();
  verify->add_option("--cache", cache_dir, "Record cache directory");
  verify->add_option("--workers", workers, "Worker threads (0: all cores)");
  verify->add_option("--J", js, "J(d) values as d=value");
  verify->add_flag("--lie-type", lie_type, "Declare a Lie-type composition factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*diameter) {
      run_diameter(group_path, directed || both, undirected || both, per_orbit, oracle);
    } else if (*orbits) {
      run_orbits(group_path);
    } else if (*bounds) {
      run_bounds(group_path, a_path, a_scalar, j_value, lie_type);
    } else if (*wreath) {
      std::vector<Permutation> gens;
      if (top == "cyclic" || top == "sym") {
        if (d < 2) throw InvalidInput("--d must be >= 2");
        gens = top_group_generators(top == "cyclic" ? TopGroup::Cyclic : TopGroup::Symmetric, d);
      } else {
        gens = read_permutations(top);
      }
      emit_group(build_wreath({p, k_order, gens}), out_path);
    } else if (*alt) {
      emit_group(build_alt_module({r, p}), out_path);
    } else if (*zcyc) {
      emit_group(build_zsigmondy_cyclic({d, p}), out_path);
    } else if (*field) {
      emit_group(build_field_module({p, f, m_order}).group, out_path);
    } else if (*waring) {
      run_waring(p, f, m_order);
    } else if (*zsig) {
      const auto primes = find_zsigmondy_primes(q, zd);
      std::cout << (primes.empty() ? "none" : join(primes)) << '\n';
    } else if (*zsigp) {
      const auto primes = find_zsigmondy_p(d, limit);
      std::vector<std::uint64_t> wide(primes.begin(), primes.end());
      std::cout << (wide.empty() ? "none" : join(wide)) << '\n';
    } else if (*verify) {
      return run_verify(suite, out_dir, cache_dir, workers, js, lie_type);
    }
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kAssertion;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const Stagnation& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAssertion;
  }
  return kOk;
}
