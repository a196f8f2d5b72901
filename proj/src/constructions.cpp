#include "orbdiam/constructions.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <string>

#include "orbdiam/errors.hpp"

namespace orbdiam {

Permutation cycle_permutation(std::size_t degree, std::size_t first, std::size_t last) {
  if (first > last || last >= degree) throw InvalidInput("cycle_permutation: bad cycle bounds");
  Permutation perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = i;
  for (std::size_t i = first; i < last; ++i) perm[i] = i + 1;
  perm[last] = first;
  return perm;
}

bool is_transitive(std::size_t degree, const std::vector<Permutation>& gens) {
  if (degree == 0) return false;
  std::vector<bool> seen(degree, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      if (g.size() != degree) throw InvalidInput("is_transitive: permutation degree mismatch");
      if (!seen[g[x]]) {
        seen[g[x]] = true;
        ++reached;
        stack.push_back(g[x]);
      }
    }
  }
  return reached == degree;
}

std::vector<Permutation> top_group_generators(TopGroup kind, std::size_t degree) {
  if (degree == 0) throw InvalidInput("top group degree must be >= 1");
  if (degree == 1) return {Permutation{0}};
  std::vector<Permutation> gens{cycle_permutation(degree, 0, degree - 1)};
  if (kind == TopGroup::Symmetric && degree > 2) gens.push_back(cycle_permutation(degree, 0, 1));
  return gens;
}

GroupSpec build_wreath(const WreathSpec& spec) {
  if (spec.p == 2) throw InvalidInput("build_wreath: p must be odd");
  const PrimeField field(spec.p);
  if (spec.k_order <= 1) throw InvalidInput("build_wreath: K must be nontrivial");
  const std::size_t d = spec.degree();
  if (d == 0) throw InvalidInput("build_wreath: no top generators");
  if (!is_transitive(d, spec.top_generators)) throw InvalidInput("build_wreath: top group is not transitive");

  std::vector<Residue> diag(d, 1);
  diag[0] = field.subgroup_generator(spec.k_order);
  std::vector<FpMatrix> gens{FpMatrix::diagonal(spec.p, diag)};
  for (const auto& perm : spec.top_generators) gens.push_back(FpMatrix::permutation(spec.p, perm));
  return GroupSpec(spec.p, d, std::move(gens),
                   "wreath(p=" + std::to_string(spec.p) + ",K=" + std::to_string(spec.k_order) +
                       ",d=" + std::to_string(d) + ")");
}

std::vector<Permutation> alternating_generators(std::size_t r) {
  if (r < 3) throw InvalidInput("alternating_generators: degree must be >= 3");
  std::vector<Permutation> gens{cycle_permutation(r, 0, 2)};
  gens.push_back(r % 2 == 1 ? cycle_permutation(r, 0, r - 1) : cycle_permutation(r, 1, r - 1));
  return gens;
}

GroupSpec build_alt_module(const AltModuleSpec& spec) {
  if (spec.r < 5) throw InvalidInput("build_alt_module: r must be >= 5");
  if (spec.p == 2) throw InvalidInput("build_alt_module: p must be odd");
  const PrimeField field(spec.p);
  if (spec.r % spec.p == 0) throw InvalidInput("build_alt_module: p divides r");
  const std::size_t r = spec.r;
  const std::size_t d = r - 1;
  std::vector<FpMatrix> gens;
  for (const auto& perm : alternating_generators(r)) {
    FpMatrix m(spec.p, d);
    // e_i = v_i - v_r maps to v_{perm(i)} - v_{perm(r)}; v_r contributes nothing.
    for (std::size_t i = 0; i < d; ++i) {
      if (perm[i] != r - 1) m(perm[i], i) = field.add(m(perm[i], i), 1);
      if (perm[r - 1] != r - 1) m(perm[r - 1], i) = field.sub(m(perm[r - 1], i), 1);
    }
    gens.push_back(std::move(m));
  }
  return GroupSpec(spec.p, d, std::move(gens),
                   "alt(r=" + std::to_string(r) + ",p=" + std::to_string(spec.p) + ")");
}

std::vector<std::uint32_t> find_zsigmondy_p(std::size_t d, std::uint32_t limit) {
  if (!is_prime(d + 1)) throw InvalidInput("find_zsigmondy_p: d+1 must be prime");
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 3; p <= limit; p += 2) {
    if (p == d + 1 || !is_prime(p)) continue;
    if (multiplicative_order(p, d + 1) == d) out.push_back(p);
  }
  return out;
}

FpMatrix zsigmondy_element(const ZsigmondyCyclicSpec& spec) {
  if (spec.d < 2 || !is_prime(spec.d + 1)) throw InvalidInput("zsigmondy: d+1 must be an odd prime");
  if (spec.p == 2) throw InvalidInput("zsigmondy: p must be odd");
  PrimeField check(spec.p);
  if (spec.p == spec.d + 1 || multiplicative_order(spec.p, spec.d + 1) != spec.d) {
    throw InvalidInput("zsigmondy: order of " + std::to_string(spec.p) + " mod " + std::to_string(spec.d + 1) +
                       " is not " + std::to_string(spec.d));
  }
  const std::vector<Residue> all_ones(spec.d + 1, 1);
  return FpMatrix::companion(spec.p, all_ones);
}

GroupSpec build_zsigmondy_cyclic(const ZsigmondyCyclicSpec& spec) {
  FpMatrix h = zsigmondy_element(spec);
  const std::size_t d = spec.d;
  GroupSpec g(spec.p, d, {h, FpMatrix::scalar(spec.p, d, spec.p - 1)},
              "zsigmondy(d=" + std::to_string(d) + ",p=" + std::to_string(spec.p) + ")");

  // Orbit shape: {+-v_1, ..., +-v_d, +-(v_1 + ... + v_d)} with v_i a basis.
  const VectorSpace space = g.space();
  if (space.size() <= Caps{}.max_v) {
    const auto orbits = orbits_on_V(g);
    const PrimeField f(spec.p);
    for (std::size_t o = 1; o < orbits.count(); ++o) {
      if (orbits.sizes[o] != 2 * (d + 1)) throw ConsistencyError("zsigmondy: nonzero orbit of unexpected size");
      Coords v = space.decode(orbits.reps[o]);
      Coords sum(d, 0);
      Subspace span(f, d);
      for (std::size_t i = 0; i <= d; ++i) {
        if (i < d && !span.insert(v)) throw ConsistencyError("zsigmondy: orbit does not contain a basis");
        for (std::size_t c = 0; c < d; ++c) sum[c] = f.add(sum[c], v[c]);
        v = h.apply(v);
      }
      if (std::any_of(sum.begin(), sum.end(), [](Residue x) { return x != 0; })) {
        throw ConsistencyError("zsigmondy: orbit sum is nonzero");
      }
    }
  }
  return g;
}

FpMatrix multiplication_matrix(const ExtensionFieldSpec& field, const Coords& element) {
  const PrimeField f(field.p);
  const auto n = static_cast<std::size_t>(field.degree);
  std::vector<std::int64_t> coeffs(element.begin(), element.end());
  const FpPolynomial beta(f, coeffs);
  FpMatrix m(field.p, n);
  for (std::size_t j = 0; j < n; ++j) {
    const FpPolynomial column = (beta * FpPolynomial::monomial(f, j)) % field.modulus;
    for (std::size_t r = 0; r < n; ++r) m(r, j) = column[r];
  }
  return m;
}

namespace {

bool is_multiplicative_generator(const FpMatrix& m, std::uint64_t q) {
  if (!m.is_invertible()) return false;
  for (auto r : prime_divisors(q - 1)) {
    if (m.pow((q - 1) / r).is_identity()) return false;
  }
  return m.pow(q - 1).is_identity();
}

}  // namespace

FieldModule build_field_module(const FieldModuleSpec& spec) {
  if (spec.f < 1) throw InvalidInput("build_field_module: degree must be >= 1");
  ExtensionFieldSpec field = ExtensionFieldSpec::least(spec.p, spec.f);
  const std::uint64_t q = field.order();
  if (spec.m_order <= 1 || (q - 1) % spec.m_order != 0) {
    throw InvalidInput("build_field_module: |M| = " + std::to_string(spec.m_order) + " must be > 1 and divide " +
                       std::to_string(q - 1));
  }
  const VectorSpace space(PrimeField(spec.p), static_cast<std::size_t>(spec.f));

  // The class of x first, then elements in index order.
  std::optional<FpMatrix> gamma;
  Coords x_coords(static_cast<std::size_t>(spec.f), 0);
  if (spec.f > 1) x_coords[1] = 1;
  if (spec.f > 1) {
    auto m = multiplication_matrix(field, x_coords);
    if (is_multiplicative_generator(m, q)) gamma = std::move(m);
  }
  for (std::uint64_t idx = 1; !gamma && idx < q; ++idx) {
    auto m = multiplication_matrix(field, space.decode(static_cast<VecIndex>(idx)));
    if (is_multiplicative_generator(m, q)) gamma = std::move(m);
  }
  if (!gamma) throw ConsistencyError("build_field_module: no multiplicative generator found");
  FpMatrix mgen = gamma->pow((q - 1) / spec.m_order);
  GroupSpec group(spec.p, static_cast<std::size_t>(spec.f), {mgen},
                  "field(p=" + std::to_string(spec.p) + ",f=" + std::to_string(spec.f) +
                      ",M=" + std::to_string(spec.m_order) + ")");
  return {std::move(field), std::move(*gamma), std::move(mgen), std::move(group)};
}

std::vector<std::uint64_t> find_zsigmondy_primes(std::uint64_t q, std::uint64_t d, std::uint64_t trial_limit) {
  using boost::multiprecision::cpp_int;
  if (q < 2 || d < 1) throw InvalidInput("find_zsigmondy_primes: need q >= 2 and d >= 1");
  auto power_minus_one = [&](std::uint64_t e) {
    return cpp_int(boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(e))) - 1;
  };
  // Strip every prime that divides some q^i - 1 with i a proper divisor of
  // d; primes dividing q^i - 1 for other i < d divide q^{gcd(i,d)} - 1.
  cpp_int rest = power_minus_one(d);
  for (std::uint64_t i = 1; i < d; ++i) {
    if (d % i != 0) continue;
    const cpp_int other = power_minus_one(i);
    for (cpp_int g = gcd(rest, other); g > 1; g = gcd(rest, g)) rest /= g;
  }
  // Every remaining prime factor is 1 mod d.
  std::vector<std::uint64_t> out;
  std::uint64_t trials = 0;
  for (std::uint64_t r = d + 1; rest > 1; r += d) {
    if (r < 2) continue;
    if (cpp_int(r) * r > rest) {
      if (rest > std::numeric_limits<std::uint64_t>::max()) {
        throw CapExceeded("find_zsigmondy_primes: prime factor exceeds 64 bits");
      }
      out.push_back(static_cast<std::uint64_t>(rest));
      rest = 1;
      break;
    }
    if (++trials > trial_limit) {
      if (boost::multiprecision::miller_rabin_test(rest, 25) && rest <= std::numeric_limits<std::uint64_t>::max()) {
        out.push_back(static_cast<std::uint64_t>(rest));
        rest = 1;
        break;
      }
      throw CapExceeded("find_zsigmondy_primes: trial division limit reached");
    }
    if (rest % r == 0) {
      out.push_back(r);
      while (rest % r == 0) rest /= r;
    }
  }
  std::sort(out.begin(), out.end());
  for (auto r : out) {
    if (r % d != 1 % d) throw ConsistencyError("find_zsigmondy_primes: prime not congruent to 1 mod d");
  }
  return out;
}

}  // namespace orbdiam
