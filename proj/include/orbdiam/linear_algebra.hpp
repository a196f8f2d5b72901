#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "orbdiam/prime_field.hpp"

namespace orbdiam {

// Coordinates (x_0, ..., x_{d-1}) of a vector in F_p^d.
using Coords = std::vector<Residue>;

// Index of a vector of F_p^d in mixed radix base p, least significant
// coordinate first: index = x_0 + x_1 p + ... + x_{d-1} p^{d-1}.
using VecIndex = std::uint32_t;

// V = F_p^d with the canonical index encoding.
class VectorSpace {
 public:
  VectorSpace(PrimeField field, std::size_t dim);

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.p(); }
  std::size_t dim() const { return dim_; }
  std::uint64_t size() const { return size_; }
  // p^i for i in [0, d].
  std::uint64_t radix(std::size_t i) const { return radix_[i]; }

  VecIndex encode(std::span<const Residue> coords) const;
  Coords decode(VecIndex index) const;
  void decode_into(VecIndex index, std::span<Residue> out) const;

  VecIndex add(VecIndex a, VecIndex b) const;
  VecIndex neg(VecIndex a) const;
  VecIndex scale(Residue c, VecIndex a) const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::uint64_t size_;
  std::vector<std::uint64_t> radix_;
};

// Square matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t n);
  // rows[r][c], each entry reduced mod p.
  FpMatrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix scalar(std::uint32_t p, std::size_t n, Residue lambda);
  static FpMatrix diagonal(std::uint32_t p, std::span<const Residue> diag);
  // Matrix sending e_i to e_{perm[i]} (0-based images).
  static FpMatrix permutation(std::uint32_t p, std::span<const std::size_t> perm);
  // Companion of the monic polynomial with ascending coefficients `coeffs`
  // (leading 1 included): e_i -> e_{i+1}, e_{n-1} -> -sum c_i e_i.
  static FpMatrix companion(std::uint32_t p, std::span<const Residue> coeffs);

  std::uint32_t p() const { return p_; }
  std::size_t size() const { return n_; }
  Residue operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const std::vector<Residue>& entries() const { return a_; }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix scaled(Residue c) const;
  FpMatrix pow(std::uint64_t e) const;
  Coords apply(std::span<const Residue> v) const;

  Residue determinant() const;
  bool is_invertible() const { return determinant() != 0; }
  // Throws InvalidInput when singular.
  FpMatrix inverse() const;
  std::size_t rank() const;
  bool is_identity() const;
  // Scalar lambda if this is lambda * I, else 0.
  Residue scalar_value() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<Residue> a_;
};

struct FpMatrixHash {
  std::size_t operator()(const FpMatrix& m) const noexcept;
};

// M . v on encoded vectors.
VecIndex mat_apply(const VectorSpace& space, const FpMatrix& m, VecIndex v);

// Least n >= 1 with M^n = I. Throws CapExceeded past `cap` multiplications.
std::uint64_t mat_order(const FpMatrix& m, std::uint64_t cap = 10'000'000);

// Basis of the null space {x : M x = 0} of a rows x cols matrix.
std::vector<Coords> null_space(const PrimeField& field, std::vector<Coords> rows, std::size_t cols);

// A subspace of F_p^d held as a reduced row-echelon basis.
class Subspace {
 public:
  Subspace(PrimeField field, std::size_t ambient_dim);
  static Subspace whole(PrimeField field, std::size_t ambient_dim);
  static Subspace span_of(PrimeField field, std::size_t ambient_dim, const std::vector<Coords>& vs);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Coords>& basis() const { return basis_; }

  // v minus its reduction against the basis; zero iff v is in the subspace.
  Coords reduce(Coords v) const;
  bool contains(std::span<const Residue> v) const;
  // Adds v; returns false if v was already in the subspace.
  bool insert(std::span<const Residue> v);
  // Coefficients of v in terms of basis(); v must lie in the subspace.
  Coords coordinates(std::span<const Residue> v) const;
  bool contains(const Subspace& other) const;
  // Calls fn(coords) for every vector of the subspace (p^dim of them).
  void for_each_vector(const std::function<void(const Coords&)>& fn) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Coords> basis_;        // RREF rows
  std::vector<std::size_t> pivots_;  // pivot column of each row
};

// Smallest subspace containing every seed vector and closed under the
// given matrices.
Subspace spin(const PrimeField& field, std::span<const FpMatrix> generators,
              const std::vector<Coords>& seeds);

}  // namespace orbdiam
