#include "orbdiam/diameter.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <string>

#include "orbdiam/errors.hpp"
#include "orbdiam/parallel.hpp"

namespace orbdiam {

ConnectionSet ConnectionSet::from(const VectorSpace& space, std::vector<VecIndex> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw InvalidInput("ConnectionSet: empty connection set");
  if (elements.front() == 0) throw InvalidInput("ConnectionSet: 0 is not allowed");
  if (elements.back() >= space.size()) throw InvalidInput("ConnectionSet: vector index out of range");
  ConnectionSet out;
  out.symmetric = std::all_of(elements.begin(), elements.end(), [&](VecIndex v) {
    return std::binary_search(elements.begin(), elements.end(), space.neg(v));
  });
  out.elements = std::move(elements);
  return out;
}

ConnectionSet ConnectionSet::symmetrized(const VectorSpace& space) const {
  if (symmetric) return *this;
  auto all = elements;
  for (auto v : elements) all.push_back(space.neg(v));
  return from(space, std::move(all));
}

VectorSet sumset_step(Translator& tr, const VectorSet& s, const ConnectionSet& delta) {
  VectorSet out(s.universe());
  for (auto v : delta.elements) tr.translate_or(s, v, out);
  return out;
}

OrbitDiameter orbit_diameter_directed(Translator& tr, const ConnectionSet& delta) {
  const std::uint64_t universe = tr.space().size();
  OrbitDiameter out;
  VectorSet current(universe);
  current.set(0);
  out.layer_sizes.push_back(1);
  while (out.layer_sizes.back() < universe) {
    VectorSet next = sumset_step(tr, current, delta);
    next |= current;  // 0 in Delta u {0}
    const std::uint64_t size = next.count();
    if (!current.is_subset_of(next) || size < out.layer_sizes.back()) {
      throw ConsistencyError("sumset iteration violated nesting");
    }
    if (size == out.layer_sizes.back()) {
      throw Stagnation("iterated sumsets stagnate at " + std::to_string(size) + " of " +
                       std::to_string(universe) + " vectors: connection set does not generate V");
    }
    out.layer_sizes.push_back(size);
    current = std::move(next);
  }
  out.diameter = out.layer_sizes.size() - 1;
  return out;
}

OrbitDiameter orbit_diameter_undirected(Translator& tr, const ConnectionSet& delta) {
  return orbit_diameter_directed(tr, delta.symmetrized(tr.space()));
}

OrbitDiameter orbit_diameter_directed(const VectorSpace& space, const ConnectionSet& delta) {
  Translator tr(space);
  return orbit_diameter_directed(tr, delta);
}

OrbitDiameter orbit_diameter_undirected(const VectorSpace& space, const ConnectionSet& delta) {
  Translator tr(space);
  return orbit_diameter_undirected(tr, delta);
}

namespace {

std::vector<std::vector<VecIndex>> orbit_members(const OrbitPartition& orbits) {
  std::vector<std::vector<VecIndex>> members(orbits.count());
  for (std::size_t i = 0; i < orbits.count(); ++i) members[i].reserve(orbits.sizes[i]);
  for (std::size_t v = 0; v < orbits.orbit_id.size(); ++v) {
    members[orbits.orbit_id[v]].push_back(static_cast<VecIndex>(v));
  }
  return members;
}

}  // namespace

DiameterReport group_diameters(const GroupSpec& g, const OrbitPartition& orbits, unsigned workers) {
  const VectorSpace space = g.space();
  const auto members = orbit_members(orbits);
  DiameterReport report;
  if (orbits.count() <= 1) return report;
  report.per_orbit.resize(orbits.count() - 1);
  workers = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(orbits.count() - 1));
  std::vector<std::unique_ptr<Translator>> translators(workers);
  parallel_for(orbits.count() - 1, workers, [&](unsigned worker, std::size_t i) {
    if (!translators[worker]) translators[worker] = std::make_unique<Translator>(space);
    const auto delta = ConnectionSet::from(space, members[i + 1]);
    auto directed = orbit_diameter_directed(*translators[worker], delta);
    auto undirected = orbit_diameter_undirected(*translators[worker], delta);
    auto& entry = report.per_orbit[i];
    entry.rep = orbits.reps[i + 1];
    entry.size = orbits.sizes[i + 1];
    entry.directed = directed.diameter;
    entry.undirected = undirected.diameter;
    entry.directed_layers = std::move(directed.layer_sizes);
    entry.undirected_layers = std::move(undirected.layer_sizes);
  });
  for (const auto& e : report.per_orbit) {
    report.diamd = std::max(report.diamd, e.directed);
    report.diam = std::max(report.diam, e.undirected);
  }
  return report;
}

DiameterReport group_diameters(const GroupSpec& g, const Caps& caps, unsigned workers) {
  return group_diameters(g, orbits_on_V(g, caps), workers);
}

bool check_higman_connectivity(const GroupSpec& g, const OrbitPartition& orbits) {
  const VectorSpace space = g.space();
  const auto members = orbit_members(orbits);
  Translator tr(space);
  for (std::size_t i = 1; i < orbits.count(); ++i) {
    try {
      orbit_diameter_directed(tr, ConnectionSet::from(space, members[i]));
    } catch (const Stagnation&) {
      return false;
    }
  }
  return true;
}

bool check_higman_connectivity(const GroupSpec& g, const Caps& caps) {
  return check_higman_connectivity(g, orbits_on_V(g, caps));
}

std::uint64_t naive_eccentricity(const VectorSpace& space, const ConnectionSet& delta, VecIndex start,
                                 const Caps& caps) {
  if (space.size() > caps.oracle_max_v) {
    throw CapExceeded("naive oracle: |V| = " + std::to_string(space.size()) + " exceeds cap " +
                      std::to_string(caps.oracle_max_v));
  }
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(space.size(), kUnseen);
  std::vector<VecIndex> queue;
  queue.reserve(space.size());
  dist[start] = 0;
  queue.push_back(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VecIndex x = queue[head];
    for (auto d : delta.elements) {
      const VecIndex y = space.add(x, d);
      if (dist[y] == kUnseen) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != space.size()) throw Stagnation("naive oracle: Cayley digraph is not strongly connected");
  return dist[queue.back()];
}

std::uint64_t naive_diameter_oracle(const VectorSpace& space, const ConnectionSet& delta, const Caps& caps) {
  return naive_eccentricity(space, delta, 0, caps);
}

}  // namespace orbdiam
