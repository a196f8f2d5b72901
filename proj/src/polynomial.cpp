#include "orbdiam/polynomial.hpp"

#include <sstream>

#include "orbdiam/errors.hpp"

namespace orbdiam {

FpPolynomial::FpPolynomial(PrimeField field, std::vector<std::int64_t> coeffs) : field_(field) {
  c_.reserve(coeffs.size());
  for (auto x : coeffs) c_.push_back(field_.reduce(x));
  trim();
}

FpPolynomial FpPolynomial::monomial(PrimeField field, std::size_t degree, Residue c) {
  FpPolynomial out(field);
  out.c_.assign(degree + 1, 0);
  out.c_[degree] = c % field.p();
  out.trim();
  return out;
}

FpPolynomial FpPolynomial::x_minus(PrimeField field, Residue root) {
  return FpPolynomial(field, {static_cast<std::int64_t>(field.neg(root % field.p())), 1});
}

void FpPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPolynomial FpPolynomial::operator+(const FpPolynomial& o) const {
  FpPolynomial out(field_);
  out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = field_.add((*this)[i], o[i]);
  out.trim();
  return out;
}

FpPolynomial FpPolynomial::operator-(const FpPolynomial& o) const {
  FpPolynomial out(field_);
  out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = field_.sub((*this)[i], o[i]);
  out.trim();
  return out;
}

FpPolynomial FpPolynomial::operator*(const FpPolynomial& o) const {
  FpPolynomial out(field_);
  if (is_zero() || o.is_zero()) return out;
  out.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      out.c_[i + j] = field_.add(out.c_[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  out.trim();
  return out;
}

std::pair<FpPolynomial, FpPolynomial> FpPolynomial::divmod(const FpPolynomial& divisor) const {
  if (divisor.is_zero()) throw InvalidInput("FpPolynomial: division by zero polynomial");
  FpPolynomial rem = *this;
  FpPolynomial quot(field_);
  if (degree() < divisor.degree()) return {quot, rem};
  quot.c_.assign(c_.size() - divisor.c_.size() + 1, 0);
  const Residue linv = field_.inv(divisor.lead());
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t i = rem.c_.size(); i-- > dd;) {
    const Residue factor = field_.mul(rem.c_[i], linv);
    if (factor == 0) continue;
    quot.c_[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem.c_[i - dd + j] = field_.sub(rem.c_[i - dd + j], field_.mul(factor, divisor.c_[j]));
    }
  }
  rem.trim();
  quot.trim();
  return {quot, rem};
}

FpPolynomial FpPolynomial::monic() const {
  if (is_zero()) return *this;
  FpPolynomial out = *this;
  const Residue linv = field_.inv(lead());
  for (auto& x : out.c_) x = field_.mul(x, linv);
  return out;
}

FpPolynomial FpPolynomial::derivative() const {
  FpPolynomial out(field_);
  if (c_.size() <= 1) return out;
  out.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.c_[i - 1] = field_.mul(c_[i], static_cast<Residue>(i % field_.p()));
  }
  out.trim();
  return out;
}

FpPolynomial FpPolynomial::pow_mod(std::uint64_t e, const FpPolynomial& m) const {
  FpPolynomial result = FpPolynomial(field_, {1}) % m;
  FpPolynomial base = *this % m;
  while (e > 0) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

Residue FpPolynomial::evaluate(Residue x) const {
  Residue acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

FpMatrix FpPolynomial::evaluate(const FpMatrix& m) const {
  FpMatrix acc(m.p(), m.size());
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * m + FpMatrix::scalar(m.p(), m.size(), c_[i]);
  }
  return acc;
}

std::string FpPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FpPolynomial gcd(FpPolynomial a, FpPolynomial b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPolynomial lcm(const FpPolynomial& a, const FpPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return FpPolynomial(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

FpPolynomial min_poly(const FpMatrix& m) {
  const PrimeField f(m.p());
  const std::size_t n = m.size();
  FpPolynomial result(f, {1});
  for (std::size_t i = 0; i < n; ++i) {
    Coords v(n, 0);
    v[i] = 1;
    // Krylov vectors v, Mv, M^2 v, ... until the first dependency.
    std::vector<Coords> krylov;
    Subspace span(f, n);
    while (span.insert(v)) {
      krylov.push_back(v);
      v = m.apply(v);
    }
    krylov.push_back(v);
    // Columns are Krylov vectors; the one-dimensional kernel gives the
    // local minimal polynomial.
    std::vector<Coords> rows(n, Coords(krylov.size()));
    for (std::size_t c = 0; c < krylov.size(); ++c) {
      for (std::size_t r = 0; r < n; ++r) rows[r][c] = krylov[c][r];
    }
    auto kernel = null_space(f, rows, krylov.size());
    if (kernel.size() != 1) throw ConsistencyError("min_poly: Krylov kernel is not one-dimensional");
    std::vector<std::int64_t> coeffs(kernel[0].begin(), kernel[0].end());
    result = lcm(result, FpPolynomial(f, coeffs).monic());
  }
  return result;
}

FpPolynomial char_poly(const FpMatrix& m) {
  const PrimeField f(m.p());
  const std::size_t n = m.size();
  FpMatrix h = m;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t col = 1; col + 1 <= n; ++col) {
    std::size_t piv = col;
    while (piv < n && h(piv, col - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(col, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, col));
    }
    const Residue tinv = f.inv(h(col, col - 1));
    for (std::size_t i = col + 1; i < n; ++i) {
      const Residue u = f.mul(h(i, col - 1), tinv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(i, c) = f.sub(h(i, c), f.mul(u, h(col, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, col) = f.add(h(r, col), f.mul(u, h(r, i)));
    }
  }
  // Recurrence on leading principal minors of xI - H.
  std::vector<FpPolynomial> chain;
  chain.emplace_back(f, std::vector<std::int64_t>{1});
  for (std::size_t k = 1; k <= n; ++k) {
    FpPolynomial next = FpPolynomial::x_minus(f, h(k - 1, k - 1)) * chain[k - 1];
    Residue t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      const Residue coeff = f.mul(t, h(k - i - 1, k - 1));
      next = next - chain[k - i - 1] * FpPolynomial(f, {coeff});
    }
    chain.push_back(std::move(next));
  }
  return chain[n];
}

bool is_squarefree(const FpPolynomial& f) {
  if (f.degree() <= 0) return true;
  auto fp = f.derivative();
  if (fp.is_zero()) return false;  // f is a p-th power
  return gcd(f, fp).degree() == 0;
}

std::map<int, FpPolynomial> distinct_degree_factorization(const FpPolynomial& f) {
  if (!f.is_monic()) throw InvalidInput("distinct_degree_factorization: polynomial must be monic");
  if (!is_squarefree(f)) {
    throw InvalidInput("distinct_degree_factorization: polynomial " + f.to_string() + " is not squarefree");
  }
  const PrimeField& field = f.field();
  const FpPolynomial x = FpPolynomial::monomial(field, 1);
  std::map<int, FpPolynomial> out;
  FpPolynomial g = f;
  FpPolynomial h = x % g;
  for (int e = 1; g.degree() >= 2 * e; ++e) {
    h = h.pow_mod(field.p(), g);  // x^(p^e) mod g
    FpPolynomial factor = gcd(g, h - x);
    if (factor.degree() > 0) {
      out.emplace(e, factor);
      g = g / factor;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace(g.degree(), g);
  return out;
}

std::map<int, int> distinct_degree_factor_counts(const FpPolynomial& f) {
  std::map<int, int> counts;
  for (const auto& [e, product] : distinct_degree_factorization(f)) counts[e] = product.degree() / e;
  return counts;
}

bool is_irreducible(const FpPolynomial& f) {
  if (f.degree() < 1) return false;
  const auto g = f.monic();
  if (!is_squarefree(g)) return false;
  const auto counts = distinct_degree_factor_counts(g);
  return counts.size() == 1 && counts.begin()->first == g.degree();
}

ExtensionFieldSpec::ExtensionFieldSpec(std::uint32_t p_, int degree_, FpPolynomial modulus_)
    : p(p_), degree(degree_), modulus(std::move(modulus_)) {
  if (degree < 1) throw InvalidInput("ExtensionFieldSpec: degree must be >= 1");
  if (modulus.field().p() != p || modulus.degree() != degree || !modulus.is_monic()) {
    throw InvalidInput("ExtensionFieldSpec: modulus must be monic of the stated degree");
  }
  if (!is_irreducible(modulus)) {
    throw InvalidInput("ExtensionFieldSpec: modulus " + modulus.to_string() + " is reducible");
  }
}

ExtensionFieldSpec ExtensionFieldSpec::least(std::uint32_t p, int degree) {
  const PrimeField field(p);
  if (degree < 1) throw InvalidInput("ExtensionFieldSpec: degree must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> coeffs(degree + 1);
    std::uint64_t x = idx;
    for (int i = 0; i < degree; ++i) {
      coeffs[i] = static_cast<std::int64_t>(x % p);
      x /= p;
    }
    coeffs[degree] = 1;
    FpPolynomial candidate(field, coeffs);
    if (is_irreducible(candidate)) return ExtensionFieldSpec(p, degree, candidate);
  }
  throw ConsistencyError("ExtensionFieldSpec: no irreducible polynomial found");
}

std::uint64_t ExtensionFieldSpec::order() const {
  std::uint64_t q = 1;
  for (int i = 0; i < degree; ++i) q *= p;
  return q;
}

}  // namespace orbdiam
