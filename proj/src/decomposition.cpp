#include "orbdiam/decomposition.hpp"

#include <string>

#include "orbdiam/errors.hpp"
#include "orbdiam/polynomial.hpp"

namespace orbdiam {

namespace {

// Coefficients of x in the (independent) basis.
Coords solve_in_basis(const PrimeField& f, const std::vector<Coords>& basis, const Coords& x) {
  const std::size_t n = x.size();
  const std::size_t m = basis.size();
  std::vector<Coords> rows(n, Coords(m + 1, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) rows[r][c] = basis[c][r];
    rows[r][m] = x[r];
  }
  for (const auto& k : null_space(f, rows, m + 1)) {
    if (k[m] == 0) continue;
    const Residue scale = f.neg(f.inv(k[m]));
    Coords out(m);
    for (std::size_t c = 0; c < m; ++c) out[c] = f.mul(k[c], scale);
    return out;
  }
  throw ConsistencyError("solve_in_basis: vector outside the span");
}

bool is_invariant(const Subspace& s, const std::vector<FpMatrix>& gens) {
  for (const auto& v : s.basis()) {
    for (const auto& g : gens) {
      if (!s.contains(g.apply(v))) return false;
    }
  }
  return true;
}

}  // namespace

Subspace maschke_complement(const Subspace& w, const Subspace& u, const GroupElements& a) {
  const PrimeField& f = w.field();
  const std::size_t n = w.ambient_dim();
  if (a.size() % f.p() == 0) throw InvalidInput("maschke_complement: p divides |A|");
  if (!w.contains(u)) throw InvalidInput("maschke_complement: U is not inside W");

  // Basis of W beginning with a basis of U.
  std::vector<Coords> basis = u.basis();
  Subspace grow = u;
  for (const auto& v : w.basis()) {
    if (grow.insert(v)) basis.push_back(v);
  }
  const std::size_t r = u.dim();
  auto project0 = [&](const Coords& x) {
    const Coords c = solve_in_basis(f, basis, x);
    Coords out(n, 0);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[j] = f.add(out[j], f.mul(c[i], basis[i][j]));
    }
    return out;
  };

  std::vector<FpMatrix> inverses;
  inverses.reserve(a.size());
  for (const auto& g : a.elements()) inverses.push_back(g.inverse());
  const Residue order_inv = f.inv(static_cast<Residue>(a.size() % f.p()));

  // Columns pi(w_j) for the basis of W.
  const auto& wb = w.basis();
  std::vector<Coords> rows(n, Coords(wb.size(), 0));
  for (std::size_t j = 0; j < wb.size(); ++j) {
    Coords acc(n, 0);
    for (std::size_t e = 0; e < a.size(); ++e) {
      const Coords img = a.elements()[e].apply(project0(inverses[e].apply(wb[j])));
      for (std::size_t t = 0; t < n; ++t) acc[t] = f.add(acc[t], img[t]);
    }
    for (std::size_t t = 0; t < n; ++t) rows[t][j] = f.mul(acc[t], order_inv);
  }
  Subspace complement(f, n);
  for (const auto& coeff : null_space(f, rows, wb.size())) {
    Coords v(n, 0);
    for (std::size_t j = 0; j < wb.size(); ++j) {
      for (std::size_t t = 0; t < n; ++t) v[t] = f.add(v[t], f.mul(coeff[j], wb[j][t]));
    }
    complement.insert(v);
  }
  if (complement.dim() + u.dim() != w.dim()) {
    throw ConsistencyError("maschke_complement: dimensions do not add up");
  }
  return complement;
}

Subspace minimal_submodule(const GroupSpec& a, const std::vector<Coords>& seed) {
  const PrimeField f = a.field();
  Subspace current = spin(f, a.generators, seed);
  // Shrink while some vector spins to a proper subspace; dimension strictly
  // decreases each round.
  bool shrunk = true;
  while (shrunk && current.dim() > 1) {
    shrunk = false;
    std::optional<Subspace> smaller;
    current.for_each_vector([&](const Coords& v) {
      if (smaller) return;
      bool zero = true;
      for (auto x : v) zero = zero && x == 0;
      if (zero) return;
      auto s = spin(f, a.generators, {v});
      if (s.dim() < current.dim()) smaller = std::move(s);
    });
    if (smaller) {
      current = std::move(*smaller);
      shrunk = true;
    }
  }
  return current;
}

std::size_t cyclic_summand_count(const FpMatrix& a) {
  const FpPolynomial m = min_poly(a);
  std::size_t k = 0;
  for (const auto& [e, product] : distinct_degree_factorization(m)) {
    const std::size_t kernel = a.size() - product.evaluate(a).rank();
    if (kernel % static_cast<std::size_t>(e) != 0) {
      throw ConsistencyError("cyclic_summand_count: kernel dimension not divisible by factor degree");
    }
    k += kernel / static_cast<std::size_t>(e);
  }
  return k;
}

SummandDecomposition summand_count(const GroupSpec& a, const GroupSpec* ambient, const Caps& caps) {
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < a.generators.size(); ++j) {
      if (!(a.generators[i] * a.generators[j] == a.generators[j] * a.generators[i])) {
        throw InvalidInput("summand_count: generators of A do not commute");
      }
    }
  }
  const GroupElements elements(a, caps.max_group);
  if (elements.size() == 1) throw InvalidInput("summand_count: A is trivial");
  if (elements.size() % a.p == 0) {
    throw InvalidInput("summand_count: |A| = " + std::to_string(elements.size()) + " is divisible by p");
  }
  if (ambient) {
    if (ambient->p != a.p || ambient->d != a.d) throw InvalidInput("summand_count: A and H act on different spaces");
    const GroupElements h(*ambient, caps.max_group);
    for (const auto& g : a.generators) {
      if (!h.contains(g)) throw InvalidInput("summand_count: A is not a subgroup of H");
    }
  }

  const PrimeField f = a.field();
  SummandDecomposition out;
  out.a_order = elements.size();
  Subspace block = Subspace::whole(f, a.d);
  while (block.dim() > 0) {
    Subspace piece = minimal_submodule(a, {block.basis().front()});
    if (!is_invariant(piece, a.generators)) throw ConsistencyError("summand_count: summand not A-invariant");
    Subspace rest = maschke_complement(block, piece, elements);
    out.summands.push_back(std::move(piece));
    block = std::move(rest);
  }
  out.k = out.summands.size();

  // Direct-sum check.
  Subspace total(f, a.d);
  for (const auto& s : out.summands) {
    for (const auto& v : s.basis()) total.insert(v);
  }
  if (total.dim() != a.d) throw ConsistencyError("summand_count: summands do not span V");

  if (a.generators.size() == 1) {
    out.cyclic_cross_check = cyclic_summand_count(a.generators.front());
    if (*out.cyclic_cross_check != out.k) {
      throw ConsistencyError("summand_count: recursive count " + std::to_string(out.k) +
                             " disagrees with minimal-polynomial count " +
                             std::to_string(*out.cyclic_cross_check));
    }
  }
  return out;
}

}  // namespace orbdiam
