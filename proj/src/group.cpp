#include "orbdiam/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "orbdiam/errors.hpp"

namespace orbdiam {

GroupSpec::GroupSpec(std::uint32_t p_, std::size_t d_, std::vector<FpMatrix> gens, std::string name_)
    : p(p_), d(d_), generators(std::move(gens)), name(std::move(name_)) {
  PrimeField check(p);  // throws on non-prime
  if (d == 0) throw InvalidInput("GroupSpec: dimension must be >= 1");
  if (generators.empty()) throw InvalidInput("GroupSpec: generator list is empty");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.p() != p || g.size() != d) {
      throw InvalidInput("GroupSpec: generator " + std::to_string(i) + " has the wrong shape or modulus");
    }
    if (!g.is_invertible()) throw InvalidInput("GroupSpec: generator " + std::to_string(i) + " is singular");
  }
}

GroupSpec GroupSpec::with_minus_one() const {
  auto gens = generators;
  if (p != 2) gens.push_back(FpMatrix::scalar(p, d, p - 1));
  return GroupSpec(p, d, std::move(gens), name.empty() ? "<-1>" : name + "<-1>");
}

namespace {

// Applies a fixed matrix to encoded vectors without allocation.
class IndexAction {
 public:
  IndexAction(const VectorSpace& space, const FpMatrix& m) : space_(space), m_(m), in_(space.dim()) {}

  VecIndex operator()(VecIndex v) {
    const std::size_t d = space_.dim();
    const std::uint32_t p = space_.p();
    space_.decode_into(v, in_);
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < d; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < d; ++c) acc += static_cast<std::uint64_t>(m_(r, c)) * in_[c];
      out += (acc % p) * space_.radix(r);
    }
    return static_cast<VecIndex>(out);
  }

 private:
  const VectorSpace& space_;
  const FpMatrix& m_;
  Coords in_;
};

}  // namespace

std::vector<VecIndex> OrbitPartition::members(std::uint32_t orbit) const {
  std::vector<VecIndex> out;
  out.reserve(sizes.at(orbit));
  for (std::size_t v = reps[orbit]; v < orbit_id.size(); ++v) {
    if (orbit_id[v] == orbit) out.push_back(static_cast<VecIndex>(v));
  }
  return out;
}

std::uint64_t OrbitPartition::smallest_nonzero() const {
  if (sizes.size() <= 1) return 0;
  return *std::min_element(sizes.begin() + 1, sizes.end());
}

OrbitPartition orbits_on_V(const GroupSpec& g, const Caps& caps) {
  const VectorSpace space = g.space();
  if (space.size() > caps.max_v) {
    throw CapExceeded("orbits_on_V: |V| = " + std::to_string(space.size()) + " exceeds cap " +
                      std::to_string(caps.max_v));
  }
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  OrbitPartition part;
  part.orbit_id.assign(space.size(), kUnseen);
  std::vector<IndexAction> actions;
  for (const auto& m : g.generators) actions.emplace_back(space, m);

  std::vector<VecIndex> frontier;
  for (std::uint64_t start = 0; start < space.size(); ++start) {
    if (part.orbit_id[start] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(part.reps.size());
    part.reps.push_back(static_cast<VecIndex>(start));
    std::uint64_t size = 1;
    part.orbit_id[start] = id;
    frontier.assign(1, static_cast<VecIndex>(start));
    while (!frontier.empty()) {
      const VecIndex v = frontier.back();
      frontier.pop_back();
      for (auto& act : actions) {
        const VecIndex w = act(v);
        if (part.orbit_id[w] == kUnseen) {
          part.orbit_id[w] = id;
          ++size;
          frontier.push_back(w);
        }
      }
    }
    part.sizes.push_back(size);
  }
  return part;
}

GroupElements::GroupElements(const GroupSpec& g, std::uint64_t cap) {
  const auto identity = FpMatrix::identity(g.p, g.d);
  elements_.push_back(identity);
  index_.insert(identity);
  // Finite group: closure under right multiplication by generators
  // reaches every element.
  for (std::size_t next = 0; next < elements_.size(); ++next) {
    for (const auto& gen : g.generators) {
      FpMatrix prod = elements_[next] * gen;
      if (index_.contains(prod)) continue;
      if (elements_.size() >= cap) {
        throw CapExceeded("group enumeration exceeds cap " + std::to_string(cap));
      }
      index_.insert(prod);
      elements_.push_back(std::move(prod));
    }
  }
}

OrderResult group_order(const GroupSpec& g, std::uint64_t cap) {
  try {
    return {GroupElements(g, cap).size(), false};
  } catch (const CapExceeded&) {
    return {cap, true};
  }
}

bool is_irreducible(const GroupSpec& g, const OrbitPartition& orbits) {
  const VectorSpace space = g.space();
  for (std::size_t i = 1; i < orbits.reps.size(); ++i) {
    if (spin(g.field(), g.generators, {space.decode(orbits.reps[i])}).dim() != g.d) return false;
  }
  return true;
}

bool is_irreducible(const GroupSpec& g, const Caps& caps) { return is_irreducible(g, orbits_on_V(g, caps)); }

std::vector<Residue> ScalarSubgroup::elements() const {
  const PrimeField f(p);
  std::vector<Residue> out;
  Residue x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    out.push_back(x);
    x = f.mul(x, generator);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ScalarSubgroup::contains(Residue lambda) const {
  lambda %= p;
  if (lambda == 0) return false;
  // lambda lies in the order-m subgroup iff lambda^m = 1.
  return PrimeField(p).pow(lambda, order) == 1;
}

ScalarSubgroup ScalarSubgroup::of_order(std::uint32_t p, std::uint64_t order) {
  const PrimeField f(p);
  return {p, order, f.subgroup_generator(order)};
}

ScalarSubgroup ScalarSubgroup::with_minus_one() const {
  if (contains_minus_one()) return *this;
  return of_order(p, std::lcm(order, std::uint64_t{2}));
}

ScalarSubgroup scalar_intersection(const GroupSpec& g, const GroupElements& elements) {
  std::uint64_t count = 0;
  for (Residue lambda = 1; lambda < g.p; ++lambda) {
    if (elements.contains(FpMatrix::scalar(g.p, g.d, lambda))) ++count;
  }
  return ScalarSubgroup::of_order(g.p, count);
}

ScalarSubgroup scalar_intersection(const GroupSpec& g, std::uint64_t cap) {
  return scalar_intersection(g, GroupElements(g, cap));
}

GroupFacts compute_facts(const GroupSpec& g, const OrbitPartition& orbits, const Caps& caps) {
  GroupFacts facts;
  facts.irreducible = is_irreducible(g, orbits);
  try {
    GroupElements elements(g, caps.max_group);
    facts.order = elements.size();
    facts.order_lower_bound = elements.size();
    facts.scalar_subgroup = scalar_intersection(g, elements);
    facts.contains_minus_one = facts.scalar_subgroup->contains_minus_one();
  } catch (const CapExceeded&) {
    facts.order_lower_bound = caps.max_group;
    if (g.p == 2) facts.contains_minus_one = true;
  }
  return facts;
}

bool is_normal_in(const GroupSpec& a, const GroupSpec& h, std::uint64_t cap) {
  if (a.p != h.p || a.d != h.d) throw InvalidInput("is_normal_in: groups act on different spaces");
  const GroupElements elements(a, cap);
  for (const auto& hg : h.generators) {
    const FpMatrix hinv = hg.inverse();
    for (const auto& ag : a.generators) {
      if (!elements.contains(hinv * ag * hg)) return false;
    }
  }
  return true;
}

}  // namespace orbdiam
