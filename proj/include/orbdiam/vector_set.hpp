#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "orbdiam/linear_algebra.hpp"

namespace orbdiam {

// A subset of V as a bit vector indexed by VecIndex.
class VectorSet {
 public:
  VectorSet() = default;
  explicit VectorSet(std::uint64_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VectorSet full(std::uint64_t universe);
  static VectorSet of(std::uint64_t universe, const std::vector<VecIndex>& members);

  std::uint64_t universe() const { return universe_; }
  bool test(VecIndex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(VecIndex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VecIndex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  std::uint64_t count() const;
  bool is_full() const { return count() == universe_; }
  bool is_subset_of(const VectorSet& other) const;
  std::vector<VecIndex> members() const;

  VectorSet& operator|=(const VectorSet& other);
  friend bool operator==(const VectorSet&, const VectorSet&) = default;

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  // Zeroes the padding bits past the universe in the last word.
  void clear_tail();

 private:
  std::uint64_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Translation x -> x + delta on bit vectors. Translating along coordinate i
// by c is a cyclic shift inside each block of p^{i+1} bits: the bits with
// x_i >= c arrive by a left shift of c p^i, the rest by a right shift of
// (p - c) p^i. Masks {x : x_i >= c} are built lazily. Holds scratch
// buffers, so use one Translator per thread.
class Translator {
 public:
  explicit Translator(const VectorSpace& space);

  const VectorSpace& space() const { return space_; }
  // out = s + delta. `out` must not alias `s`.
  void translate(const VectorSet& s, VecIndex delta, VectorSet& out);
  // acc |= s + delta.
  void translate_or(const VectorSet& s, VecIndex delta, VectorSet& acc);

 private:
  const VectorSet& mask(std::size_t coord, Residue shift);
  void shift_coordinate(const VectorSet& src, std::size_t coord, Residue shift, VectorSet& dst);

  VectorSpace space_;
  std::vector<std::vector<VectorSet>> masks_;  // [coord][shift], empty until built
  VectorSet down_, pingpong_, shifted_;
  Coords coords_;
};

}  // namespace orbdiam
