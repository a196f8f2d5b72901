#pragma once

#include <cstdint>

namespace orbdiam {

// Size limits shared by the engines. Defaults are desk-scale.
struct Caps {
  std::uint64_t max_v = 5'000'000;          // |V| for orbit / diameter work
  std::uint64_t max_group = 1'000'000;      // |H| for closure enumeration
  std::uint64_t oracle_max_v = 10'000;      // |V| for the naive BFS oracle
  std::uint64_t max_matrix_order = 10'000'000;

  // Defaults, with ORBDIAM_MAX_V applied when set.
  static Caps from_environment();
};

}  // namespace orbdiam
