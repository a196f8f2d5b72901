#include "orbdiam/prime_field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "orbdiam/errors.hpp"

namespace orbdiam {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      small.push_back(f);
      if (f != n / f) large.push_back(n / f);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n < 2) throw InvalidInput("multiplicative_order: modulus must be >= 2");
  a %= n;
  if (std::gcd(a, n) != 1) throw InvalidInput("multiplicative_order: element not a unit");
  // Order divides the exponent of (Z/n)^x, which divides phi(n).
  std::uint64_t phi = n;
  for (auto q : prime_divisors(n)) phi = phi / q * (q - 1);
  std::uint64_t order = phi;
  for (auto q : prime_divisors(phi)) {
    while (order % q == 0 && pow_mod(a, order / q, n) == 1) order /= q;
  }
  return order;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidInput("PrimeField: " + std::to_string(p) + " is not a supported prime");
  }
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvalidInput("PrimeField::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::order(Residue a) const {
  if (a % p_ == 0) throw InvalidInput("PrimeField::order: zero has no order");
  if (p_ == 2) return 1;
  return multiplicative_order(a, p_);
}

Residue PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  const auto qs = prime_divisors(p_ - 1);
  for (Residue g = 2; g < p_; ++g) {
    if (std::all_of(qs.begin(), qs.end(),
                    [&](std::uint64_t q) { return pow(g, (p_ - 1) / q) != 1; })) {
      return g;
    }
  }
  throw ConsistencyError("PrimeField: no primitive root found");
}

Residue PrimeField::subgroup_generator(std::uint64_t order) const {
  if (order == 0 || (p_ - 1) % order != 0) {
    throw InvalidInput("PrimeField: " + std::to_string(order) + " does not divide p-1");
  }
  return pow(primitive_root(), (p_ - 1) / order);
}

}  // namespace orbdiam
