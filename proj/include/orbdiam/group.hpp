#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "orbdiam/caps.hpp"
#include "orbdiam/linear_algebra.hpp"

namespace orbdiam {

// A matrix group H = <generators> <= GL(d, p).
struct GroupSpec {
  std::uint32_t p = 0;
  std::size_t d = 0;
  std::vector<FpMatrix> generators;
  std::string name;

  // Validates primality, shapes and invertibility.
  GroupSpec(std::uint32_t p, std::size_t d, std::vector<FpMatrix> generators, std::string name = {});

  PrimeField field() const { return PrimeField(p); }
  VectorSpace space() const { return VectorSpace(PrimeField(p), d); }
  // H<-1>: the same generators with -I appended (unchanged when p = 2).
  GroupSpec with_minus_one() const;
};

// Partition of V into H-orbits.
struct OrbitPartition {
  std::vector<std::uint32_t> orbit_id;  // per vector index
  std::vector<VecIndex> reps;           // least index in each orbit, ascending
  std::vector<std::uint64_t> sizes;

  std::size_t count() const { return reps.size(); }
  std::vector<VecIndex> members(std::uint32_t orbit) const;
  // Size of the smallest nonzero orbit (0 when V = {0}).
  std::uint64_t smallest_nonzero() const;
};

// Exact orbits by breadth-first closure. Throws CapExceeded when p^d > caps.max_v.
OrbitPartition orbits_on_V(const GroupSpec& g, const Caps& caps = {});

// Every element of a group, enumerated by closure.
class GroupElements {
 public:
  GroupElements(const GroupSpec& g, std::uint64_t cap);

  std::uint64_t size() const { return elements_.size(); }
  const std::vector<FpMatrix>& elements() const { return elements_; }
  bool contains(const FpMatrix& m) const { return index_.contains(m); }

 private:
  std::vector<FpMatrix> elements_;
  std::unordered_set<FpMatrix, FpMatrixHash> index_;
};

struct OrderResult {
  std::uint64_t order = 0;  // exact, or a lower bound when exceeded
  bool exceeded = false;
};

OrderResult group_order(const GroupSpec& g, std::uint64_t cap);

// True iff the spin of every nonzero orbit representative is all of V.
bool is_irreducible(const GroupSpec& g, const OrbitPartition& orbits);
bool is_irreducible(const GroupSpec& g, const Caps& caps = {});

// A subgroup of F_p^x, necessarily cyclic.
struct ScalarSubgroup {
  std::uint32_t p = 0;
  std::uint64_t order = 1;
  Residue generator = 1;

  std::vector<Residue> elements() const;
  bool contains(Residue lambda) const;
  bool contains_minus_one() const { return p == 2 || contains(p - 1); }
  // This subgroup with -1 adjoined.
  ScalarSubgroup with_minus_one() const;
  static ScalarSubgroup of_order(std::uint32_t p, std::uint64_t order);
};

// F_p^x \cap H. Throws CapExceeded rather than guessing when |H| > cap.
ScalarSubgroup scalar_intersection(const GroupSpec& g, std::uint64_t cap);
ScalarSubgroup scalar_intersection(const GroupSpec& g, const GroupElements& elements);

struct GroupFacts {
  std::optional<std::uint64_t> order;  // empty when above the cap
  std::uint64_t order_lower_bound = 0;
  bool irreducible = false;
  std::optional<ScalarSubgroup> scalar_subgroup;
  std::optional<bool> contains_minus_one;
};

GroupFacts compute_facts(const GroupSpec& g, const OrbitPartition& orbits, const Caps& caps = {});

// A normal in H: h^{-1} a h in A for every pair of generators.
bool is_normal_in(const GroupSpec& a, const GroupSpec& h, std::uint64_t cap);

}  // namespace orbdiam
