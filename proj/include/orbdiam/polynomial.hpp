#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbdiam/linear_algebra.hpp"
#include "orbdiam/prime_field.hpp"

namespace orbdiam {

// Polynomial over F_p, ascending coefficients, no trailing zeros.
// The zero polynomial has an empty coefficient list and degree -1.
class FpPolynomial {
 public:
  FpPolynomial(PrimeField field, std::vector<std::int64_t> coeffs = {});
  static FpPolynomial monomial(PrimeField field, std::size_t degree, Residue c = 1);
  static FpPolynomial x_minus(PrimeField field, Residue root);

  const PrimeField& field() const { return field_; }
  const std::vector<Residue>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Residue lead() const { return c_.empty() ? 0 : c_.back(); }
  Residue operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  FpPolynomial operator+(const FpPolynomial& o) const;
  FpPolynomial operator-(const FpPolynomial& o) const;
  FpPolynomial operator*(const FpPolynomial& o) const;
  FpPolynomial operator%(const FpPolynomial& o) const { return divmod(o).second; }
  FpPolynomial operator/(const FpPolynomial& o) const { return divmod(o).first; }
  std::pair<FpPolynomial, FpPolynomial> divmod(const FpPolynomial& divisor) const;

  FpPolynomial monic() const;
  FpPolynomial derivative() const;
  // this^e mod m.
  FpPolynomial pow_mod(std::uint64_t e, const FpPolynomial& m) const;
  Residue evaluate(Residue x) const;
  FpMatrix evaluate(const FpMatrix& m) const;

  std::string to_string() const;

  friend bool operator==(const FpPolynomial& a, const FpPolynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim();
  PrimeField field_;
  std::vector<Residue> c_;
};

// Monic gcd (zero if both inputs are zero).
FpPolynomial gcd(FpPolynomial a, FpPolynomial b);
FpPolynomial lcm(const FpPolynomial& a, const FpPolynomial& b);

// Monic minimal polynomial of M, as the lcm of the local minimal
// polynomials of the standard basis vectors (Krylov dependencies).
FpPolynomial min_poly(const FpMatrix& m);
// Monic characteristic polynomial det(xI - M), via Hessenberg reduction.
FpPolynomial char_poly(const FpMatrix& m);

bool is_squarefree(const FpPolynomial& f);

// Distinct-degree factorization of a squarefree monic polynomial: for each
// e, the product of all monic irreducible factors of degree e (only
// nontrivial products are returned). Throws InvalidInput if f is not
// squarefree or not monic.
std::map<int, FpPolynomial> distinct_degree_factorization(const FpPolynomial& f);
// e -> number of degree-e irreducible factors.
std::map<int, int> distinct_degree_factor_counts(const FpPolynomial& f);

bool is_irreducible(const FpPolynomial& f);

// F_q, q = p^f, as F_p[x] / (modulus).
struct ExtensionFieldSpec {
  std::uint32_t p;
  int degree;
  FpPolynomial modulus;

  // Validates that the modulus is monic, of the right degree, irreducible.
  ExtensionFieldSpec(std::uint32_t p, int degree, FpPolynomial modulus);
  // The least monic irreducible of the given degree, comparing the
  // non-leading coefficients (c_{f-1}, ..., c_0) lexicographically.
  static ExtensionFieldSpec least(std::uint32_t p, int degree);

  std::uint64_t order() const;
};

}  // namespace orbdiam
