#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbdiam/bounds.hpp"
#include "orbdiam/caps.hpp"
#include "orbdiam/diameter.hpp"
#include "orbdiam/group.hpp"

namespace orbdiam {

const char* engine_version();

enum class Family { Line, Wreath, Alternating, Cyclic, Field, Reducible };
const char* to_string(Family f);
Family family_from_string(const std::string& s);

// One instance to build and verify. Parameter names per family:
//   line:        p, k            (the order-k subgroup of F_p^x acting on F_p)
//   wreath:      p, k, d, top    (top: 0 cyclic, 1 symmetric)
//   alternating: r, p
//   cyclic:      d, p            (the order-(d+1) example with -1 adjoined)
//   field:       p, f, m
//   reducible:   p               (<diag(2,1)> or the least non-unit primitive root)
struct InstanceSpec {
  Family family = Family::Line;
  std::map<std::string, std::int64_t> params;
  std::int64_t param(const std::string& name) const;
  // Readable and unique, e.g. "wreath/p=5/k=2/d=3/top=sym".
  std::string key() const;
};

struct SweepConfig {
  std::vector<InstanceSpec> instances;
  Caps caps;
  std::map<std::size_t, std::uint64_t> j_table;  // d -> J(d), user supplied
  bool lie_type = false;                         // user-declared hypothesis
  unsigned workers = 0;                          // 0: hardware concurrency
};

// The suite exercising every acceptance family.
SweepConfig default_suite();
// Named suites: "default", "smoke"; anything else is read as a config file.
SweepConfig suite_by_name(const std::string& name);
SweepConfig config_from_json(const nlohmann::json& doc);
SweepConfig load_config(const std::filesystem::path& path);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Summand count and abelian-subgroup bounds for one choice of A.
struct SubgroupChoice {
  std::string label;  // "scalar" or "cyclic"
  std::uint64_t order = 0;
  std::size_t k = 0;
  bool normal = false;
};

// Rejected: construction refused its hypotheses. NotGenerating: M lies in a
// proper subfield. Reducible: stagnation detected as expected. Skipped: a
// cap was exceeded.
enum class InstanceStatus { Verified, Failed, Rejected, NotGenerating, Reducible, Skipped };
const char* to_string(InstanceStatus s);

struct InstanceRecord {
  std::size_t index = 0;  // position in the config; output order
  InstanceSpec spec;
  InstanceStatus status = InstanceStatus::Verified;
  std::string message;
  std::optional<GroupSpec> group;
  std::uint64_t v_size = 0;
  GroupFacts facts;
  std::uint64_t orbit_count = 0;
  std::uint64_t smallest_orbit = 0;
  std::optional<DiameterReport> diameters;
  std::optional<std::uint64_t> waring;
  BoundReport bounds;
  std::vector<SubgroupChoice> subgroups;
  std::vector<CheckResult> checks;
  double seconds = 0;  // wall clock; not serialized into results
  // Set for records loaded from the cache; only index, spec, status,
  // message and checks are filled in besides.
  std::optional<nlohmann::ordered_json> cached;

  bool failed() const;
  const CheckResult* check(const std::string& name) const;
};

// Builds and verifies one instance. Never throws for mathematical outcomes:
// rejections, stagnation and check failures are recorded in the result.
InstanceRecord verify_instance(const InstanceSpec& spec, const SweepConfig& config, std::size_t index = 0);

struct SuiteOptions {
  std::optional<std::filesystem::path> cache_dir;
  // Cached records at positions i with i % spot_check_stride == 0 are
  // recomputed and compared.
  std::size_t spot_check_stride = 8;
};

// All instances, processed by a work pool and returned in config order.
std::vector<InstanceRecord> run_verification_suite(const SweepConfig& config, const SuiteOptions& options = {});

bool suite_passed(const std::vector<InstanceRecord>& records);

nlohmann::ordered_json record_to_json(const InstanceRecord& r, const Caps& caps);
std::string summary_header();
std::string summary_row(const InstanceRecord& r);

// results.jsonl and summary.csv (byte-stable), timings.csv (wall clock).
void emit_results(const std::vector<InstanceRecord>& records, const Caps& caps, const std::filesystem::path& out_dir);

}  // namespace orbdiam
