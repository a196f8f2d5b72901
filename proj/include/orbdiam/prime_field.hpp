#pragma once

#include <cstdint>
#include <vector>

namespace orbdiam {

using Residue = std::uint32_t;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Prime factorization by trial division (ascending, with multiplicity collapsed).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Least k >= 1 with a^k = 1 mod n; requires gcd(a, n) = 1 and n >= 2.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

// F_p for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Residue reduce(std::int64_t x) const {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const {
    return static_cast<Residue>(pow_mod(a, e, p_));
  }
  // Throws InvalidInput on zero.
  Residue inv(Residue a) const;

  // Smallest generator of F_p^x.
  Residue primitive_root() const;
  // Multiplicative order of a nonzero residue.
  std::uint64_t order(Residue a) const;
  // Generator of the unique subgroup of F_p^x of the given order.
  Residue subgroup_generator(std::uint64_t order) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace orbdiam
