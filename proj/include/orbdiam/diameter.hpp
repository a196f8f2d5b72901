#pragma once

#include <cstdint>
#include <vector>

#include "orbdiam/caps.hpp"
#include "orbdiam/group.hpp"
#include "orbdiam/vector_set.hpp"

namespace orbdiam {

// Connection set of a Cayley digraph on V: nonzero vectors, sorted.
struct ConnectionSet {
  std::vector<VecIndex> elements;
  bool symmetric = false;

  // Sorts, drops duplicates, rejects 0, and detects symmetry.
  static ConnectionSet from(const VectorSpace& space, std::vector<VecIndex> elements);
  // Delta u -Delta.
  ConnectionSet symmetrized(const VectorSpace& space) const;
};

// S + Delta.
VectorSet sumset_step(Translator& tr, const VectorSet& s, const ConnectionSet& delta);

struct OrbitDiameter {
  std::uint64_t diameter = 0;
  // |n (Delta u {0})| for n = 0, 1, ..., diameter.
  std::vector<std::uint64_t> layer_sizes;
};

// Least n >= 1 with n (Delta u {0}) = V. Throws Stagnation if the iterated
// sumsets stop growing short of V.
OrbitDiameter orbit_diameter_directed(Translator& tr, const ConnectionSet& delta);
// The same for Delta u -Delta.
OrbitDiameter orbit_diameter_undirected(Translator& tr, const ConnectionSet& delta);

// Convenience overloads building a private Translator.
OrbitDiameter orbit_diameter_directed(const VectorSpace& space, const ConnectionSet& delta);
OrbitDiameter orbit_diameter_undirected(const VectorSpace& space, const ConnectionSet& delta);

struct OrbitDiameterEntry {
  VecIndex rep = 0;
  std::uint64_t size = 0;
  std::uint64_t directed = 0;
  std::uint64_t undirected = 0;
  std::vector<std::uint64_t> directed_layers;
  std::vector<std::uint64_t> undirected_layers;
};

struct DiameterReport {
  std::vector<OrbitDiameterEntry> per_orbit;  // nonzero orbits, by representative
  std::uint64_t diamd = 0;
  std::uint64_t diam = 0;
};

// Per-orbit and group diameters. Orbits are spread over `workers` threads
// (0 = hardware concurrency); the report does not depend on scheduling.
DiameterReport group_diameters(const GroupSpec& g, const OrbitPartition& orbits, unsigned workers = 0);
DiameterReport group_diameters(const GroupSpec& g, const Caps& caps = {}, unsigned workers = 0);

// Every nonzero orbital digraph strongly connected.
bool check_higman_connectivity(const GroupSpec& g, const OrbitPartition& orbits);
bool check_higman_connectivity(const GroupSpec& g, const Caps& caps = {});

// Breadth-first search over arcs x -> x + delta from `start`; returns the
// eccentricity of `start`, or throws Stagnation if some vertex is
// unreachable. Throws CapExceeded above caps.oracle_max_v.
std::uint64_t naive_eccentricity(const VectorSpace& space, const ConnectionSet& delta, VecIndex start,
                                 const Caps& caps = {});
// Diameter of the Cayley digraph as the eccentricity of 0.
std::uint64_t naive_diameter_oracle(const VectorSpace& space, const ConnectionSet& delta, const Caps& caps = {});

}  // namespace orbdiam
