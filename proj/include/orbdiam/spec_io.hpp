#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbdiam/constructions.hpp"
#include "orbdiam/group.hpp"

namespace orbdiam {

// Group-spec documents: {"p": 5, "d": 2, "name": "...", "generators":
// [[[r00, r01], [r10, r11]], ...]} with row-major integer matrices.
nlohmann::ordered_json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const nlohmann::json& doc);
GroupSpec read_group_spec(const std::filesystem::path& path);
void write_group_spec(const GroupSpec& g, const std::filesystem::path& path);

// A list of permutations as 0-based image lists, [[1, 2, 0], ...].
std::vector<Permutation> read_permutations(const std::filesystem::path& path);

// Parses a whole file as JSON, reporting the path on failure.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace orbdiam
