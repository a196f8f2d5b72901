#pragma once

#include <cstdint>
#include <vector>

#include "orbdiam/group.hpp"
#include "orbdiam/polynomial.hpp"

namespace orbdiam {

// Permutations act on {0, ..., degree-1}; perm[i] is the image of i.
using Permutation = std::vector<std::size_t>;

Permutation cycle_permutation(std::size_t degree, std::size_t first, std::size_t last);
// Orbit check of the generated permutation group on {0, ..., degree-1}.
bool is_transitive(std::size_t degree, const std::vector<Permutation>& gens);

// K wr S acting imprimitively on F_p^d, K <= F_p^x of order k_order.
struct WreathSpec {
  std::uint32_t p = 0;
  std::uint64_t k_order = 0;
  std::vector<Permutation> top_generators;  // all of degree d
  std::size_t degree() const { return top_generators.empty() ? 0 : top_generators.front().size(); }
};

enum class TopGroup { Cyclic, Symmetric };
std::vector<Permutation> top_group_generators(TopGroup kind, std::size_t degree);

// diag(g, 1, ..., 1) with g of order k_order, plus the top permutation
// matrices. Rejects p = 2, trivial K, or intransitive S.
GroupSpec build_wreath(const WreathSpec& spec);

// Alt(r) on the sum-zero submodule of F_p^r, in the basis e_i = v_i - v_r.
struct AltModuleSpec {
  std::size_t r = 0;
  std::uint32_t p = 0;
};
GroupSpec build_alt_module(const AltModuleSpec& spec);
// Standard generating pair: (1 2 3) with (1 2 ... r) for odd r, (2 3 ... r) for even r.
std::vector<Permutation> alternating_generators(std::size_t r);

// Odd primes p <= limit whose multiplicative order mod d+1 is d.
std::vector<std::uint32_t> find_zsigmondy_p(std::size_t d, std::uint32_t limit);

// H = <h, -1> with h the companion matrix of 1 + x + ... + x^d.
struct ZsigmondyCyclicSpec {
  std::size_t d = 0;
  std::uint32_t p = 0;
};
GroupSpec build_zsigmondy_cyclic(const ZsigmondyCyclicSpec& spec);
// The order-(d+1) element h alone.
FpMatrix zsigmondy_element(const ZsigmondyCyclicSpec& spec);

// F_q with q = p^f realized as F_p^f; M <= F_q^x of order m_order acting
// by multiplication.
struct FieldModuleSpec {
  std::uint32_t p = 0;
  int f = 0;
  std::uint64_t m_order = 0;
};
struct FieldModule {
  ExtensionFieldSpec field;
  FpMatrix gamma;        // multiplication by a generator of F_q^x
  FpMatrix m_generator;  // gamma^{(q-1)/|M|}
  GroupSpec group;       // <m_generator>
};
FieldModule build_field_module(const FieldModuleSpec& spec);

// Matrix of multiplication by the field element with coefficient vector
// `element` (ascending powers of x) in F_p[x]/(modulus).
FpMatrix multiplication_matrix(const ExtensionFieldSpec& field, const Coords& element);

// All primes r dividing q^d - 1 but no q^i - 1 with i < d. Throws
// CapExceeded if the primitive part cannot be fully factored within
// `trial_limit` trial divisions.
std::vector<std::uint64_t> find_zsigmondy_primes(std::uint64_t q, std::uint64_t d,
                                                 std::uint64_t trial_limit = 100'000'000);

}  // namespace orbdiam
