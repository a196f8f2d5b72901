#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbdiam/caps.hpp"
#include "orbdiam/group.hpp"
#include "orbdiam/linear_algebra.hpp"

namespace orbdiam {

// V = V_1 + ... + V_k as a direct sum of irreducible modules for an abelian
// p'-group A.
struct SummandDecomposition {
  std::vector<Subspace> summands;
  std::size_t k = 0;
  std::uint64_t a_order = 0;
  // Summand count from the minimal-polynomial formula; set for cyclic A.
  std::optional<std::size_t> cyclic_cross_check;
};

// An A-invariant complement of U inside W, the kernel of the averaged
// projection |A|^{-1} sum_a a pi_0 a^{-1}. Requires p not dividing |A|.
Subspace maschke_complement(const Subspace& w, const Subspace& u, const GroupElements& a);

// The smallest nonzero A-invariant subspace inside the spin of `seed`.
Subspace minimal_submodule(const GroupSpec& a, const std::vector<Coords>& seed);

// k for an abelian p'-subgroup A. When `ambient` is given, A's generators
// must lie in it (checked by enumeration under caps.max_group).
SummandDecomposition summand_count(const GroupSpec& a, const GroupSpec* ambient = nullptr,
                                   const Caps& caps = {});

// sum_e dim ker m_e(a) / e, with m_e the product of degree-e irreducible
// factors of the minimal polynomial of a.
std::size_t cyclic_summand_count(const FpMatrix& a);

}  // namespace orbdiam
