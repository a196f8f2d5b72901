#include "orbdiam/spec_io.hpp"

#include <fstream>

#include "orbdiam/errors.hpp"

namespace orbdiam {

nlohmann::ordered_json group_to_json(const GroupSpec& g) {
  nlohmann::ordered_json doc;
  doc["p"] = g.p;
  doc["d"] = g.d;
  doc["name"] = g.name;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& m : g.generators) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  doc["generators"] = std::move(gens);
  return doc;
}

GroupSpec group_from_json(const nlohmann::json& doc) {
  try {
    const auto p = doc.at("p").get<std::int64_t>();
    const auto d = doc.at("d").get<std::int64_t>();
    if (p < 2 || p > 0xffffffffLL) throw InvalidInput("group spec: p out of range");
    if (d < 1) throw InvalidInput("group spec: d must be >= 1");
    std::vector<FpMatrix> gens;
    for (const auto& rows : doc.at("generators")) {
      std::vector<std::vector<std::int64_t>> entries = rows.get<std::vector<std::vector<std::int64_t>>>();
      if (entries.size() != static_cast<std::size_t>(d)) throw InvalidInput("group spec: generator has wrong size");
      for (const auto& row : entries)
        if (row.size() != static_cast<std::size_t>(d)) throw InvalidInput("group spec: generator row has wrong size");
      gens.emplace_back(static_cast<std::uint32_t>(p), entries);
    }
    return GroupSpec(static_cast<std::uint32_t>(p), static_cast<std::size_t>(d), std::move(gens),
                     doc.value("name", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("group spec: ") + e.what());
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

GroupSpec read_group_spec(const std::filesystem::path& path) { return group_from_json(read_json_file(path)); }

void write_group_spec(const GroupSpec& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << group_to_json(g).dump(2) << '\n';
}

std::vector<Permutation> read_permutations(const std::filesystem::path& path) {
  const auto doc = read_json_file(path);
  try {
    std::vector<Permutation> out;
    for (const auto& images : doc) out.push_back(images.get<Permutation>());
    if (out.empty()) throw InvalidInput(path.string() + ": no permutations");
    for (const auto& perm : out) {
      if (perm.size() != out.front().size()) throw InvalidInput(path.string() + ": permutations of mixed degree");
      std::vector<bool> seen(perm.size(), false);
      for (auto x : perm) {
        if (x >= perm.size() || seen[x]) throw InvalidInput(path.string() + ": not a permutation");
        seen[x] = true;
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

}  // namespace orbdiam
