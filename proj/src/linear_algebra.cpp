#include "orbdiam/linear_algebra.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "orbdiam/errors.hpp"

namespace orbdiam {

// ---------------------------------------------------------------- VectorSpace

VectorSpace::VectorSpace(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {
  if (dim == 0) throw InvalidInput("VectorSpace: dimension must be >= 1");
  radix_.resize(dim + 1);
  radix_[0] = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    radix_[i + 1] = radix_[i] * field.p();
    if (radix_[i + 1] > (std::uint64_t{1} << 32)) {
      throw CapExceeded("VectorSpace: p^d does not fit a 32-bit index");
    }
  }
  size_ = radix_[dim];
}

VecIndex VectorSpace::encode(std::span<const Residue> coords) const {
  if (coords.size() != dim_) throw InvalidInput("encode: coordinate count differs from dimension");
  std::uint64_t index = 0;
  for (std::size_t i = dim_; i-- > 0;) {
    if (coords[i] >= p()) {
      throw InvalidInput("encode: coordinate " + std::to_string(coords[i]) + " out of range");
    }
    index = index * p() + coords[i];
  }
  return static_cast<VecIndex>(index);
}

void VectorSpace::decode_into(VecIndex index, std::span<Residue> out) const {
  std::uint64_t x = index;
  for (std::size_t i = 0; i < dim_; ++i) {
    out[i] = static_cast<Residue>(x % p());
    x /= p();
  }
}

Coords VectorSpace::decode(VecIndex index) const {
  if (index >= size_) throw InvalidInput("decode: index out of range");
  Coords out(dim_);
  decode_into(index, out);
  return out;
}

VecIndex VectorSpace::add(VecIndex a, VecIndex b) const {
  std::uint64_t x = a, y = b, out = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    auto s = field_.add(static_cast<Residue>(x % p()), static_cast<Residue>(y % p()));
    out += s * radix_[i];
    x /= p();
    y /= p();
  }
  return static_cast<VecIndex>(out);
}

VecIndex VectorSpace::neg(VecIndex a) const {
  std::uint64_t x = a, out = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += field_.neg(static_cast<Residue>(x % p())) * radix_[i];
    x /= p();
  }
  return static_cast<VecIndex>(out);
}

VecIndex VectorSpace::scale(Residue c, VecIndex a) const {
  std::uint64_t x = a, out = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += field_.mul(c, static_cast<Residue>(x % p())) * radix_[i];
    x /= p();
  }
  return static_cast<VecIndex>(out);
}

// ------------------------------------------------------------------- FpMatrix

FpMatrix::FpMatrix(std::uint32_t p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {}

FpMatrix::FpMatrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
    : FpMatrix(p, rows.size()) {
  PrimeField f(p);
  for (std::size_t r = 0; r < n_; ++r) {
    if (rows[r].size() != n_) throw InvalidInput("FpMatrix: rows must form a square matrix");
    for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = f.reduce(rows[r][c]);
  }
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) { return scalar(p, n, 1); }

FpMatrix FpMatrix::scalar(std::uint32_t p, std::size_t n, Residue lambda) {
  FpMatrix m(p, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda % p;
  return m;
}

FpMatrix FpMatrix::diagonal(std::uint32_t p, std::span<const Residue> diag) {
  FpMatrix m(p, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i] % p;
  return m;
}

FpMatrix FpMatrix::permutation(std::uint32_t p, std::span<const std::size_t> perm) {
  FpMatrix m(p, perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || seen[perm[i]]) throw InvalidInput("permutation: not a bijection");
    seen[perm[i]] = true;
    m(perm[i], i) = 1;
  }
  return m;
}

FpMatrix FpMatrix::companion(std::uint32_t p, std::span<const Residue> coeffs) {
  if (coeffs.size() < 2 || coeffs.back() != 1) {
    throw InvalidInput("companion: polynomial must be monic of degree >= 1");
  }
  PrimeField f(p);
  const std::size_t n = coeffs.size() - 1;
  FpMatrix m(p, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = f.neg(coeffs[i] % p);
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (n_ != rhs.n_ || p_ != rhs.p_) throw InvalidInput("FpMatrix: dimension mismatch");
  FpMatrix out(p_, n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        acc += static_cast<std::uint64_t>((*this)(r, k)) * rhs(k, c);
        if ((k & 7) == 7) acc %= p_;
      }
      out(r, c) = static_cast<Residue>(acc % p_);
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  if (n_ != rhs.n_ || p_ != rhs.p_) throw InvalidInput("FpMatrix: dimension mismatch");
  FpMatrix out(p_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + rhs.a_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::scaled(Residue c) const {
  FpMatrix out(p_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    out.a_[i] = static_cast<Residue>(static_cast<std::uint64_t>(a_[i]) * c % p_);
  }
  return out;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
  FpMatrix result = identity(p_, n_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Coords FpMatrix::apply(std::span<const Residue> v) const {
  if (v.size() != n_) throw InvalidInput("mat_apply: dimension mismatch");
  Coords out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      acc += static_cast<std::uint64_t>((*this)(r, c)) * v[c];
      if ((c & 7) == 7) acc %= p_;
    }
    out[r] = static_cast<Residue>(acc % p_);
  }
  return out;
}

namespace {

// Gaussian elimination in place; returns rank and (optionally) determinant.
std::size_t eliminate(const PrimeField& f, std::vector<Residue>& a, std::size_t n, Residue* det) {
  Residue d = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[rank * n + c]);
      d = f.neg(d);
    }
    const Residue pv = a[rank * n + col];
    d = f.mul(d, pv);
    const Residue pinv = f.inv(pv);
    for (std::size_t r = rank + 1; r < n; ++r) {
      const Residue factor = f.mul(a[r * n + col], pinv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) {
        a[r * n + c] = f.sub(a[r * n + c], f.mul(factor, a[rank * n + c]));
      }
    }
    ++rank;
  }
  if (det) *det = rank == n ? d : 0;
  return rank;
}

}  // namespace

Residue FpMatrix::determinant() const {
  auto a = a_;
  Residue det = 0;
  eliminate(PrimeField(p_), a, n_, &det);
  return det;
}

std::size_t FpMatrix::rank() const {
  auto a = a_;
  return eliminate(PrimeField(p_), a, n_, nullptr);
}

FpMatrix FpMatrix::inverse() const {
  const PrimeField f(p_);
  const std::size_t w = 2 * n_;
  std::vector<Residue> aug(n_ * w, 0);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) aug[r * w + c] = (*this)(r, c);
    aug[r * w + n_ + r] = 1;
  }
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && aug[piv * w + col] == 0) ++piv;
    if (piv == n_) throw InvalidInput("FpMatrix::inverse: matrix is singular");
    if (piv != col) {
      for (std::size_t c = 0; c < w; ++c) std::swap(aug[piv * w + c], aug[col * w + c]);
    }
    const Residue pinv = f.inv(aug[col * w + col]);
    for (std::size_t c = 0; c < w; ++c) aug[col * w + c] = f.mul(aug[col * w + c], pinv);
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || aug[r * w + col] == 0) continue;
      const Residue factor = aug[r * w + col];
      for (std::size_t c = 0; c < w; ++c) {
        aug[r * w + c] = f.sub(aug[r * w + c], f.mul(factor, aug[col * w + c]));
      }
    }
  }
  FpMatrix out(p_, n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out(r, c) = aug[r * w + n_ + c];
  }
  return out;
}

bool FpMatrix::is_identity() const { return scalar_value() == 1; }

Residue FpMatrix::scalar_value() const {
  const Residue lambda = n_ ? (*this)(0, 0) : 0;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if ((*this)(r, c) != (r == c ? lambda : 0)) return 0;
    }
  }
  return lambda;
}

std::size_t FpMatrixHash::operator()(const FpMatrix& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : m.entries()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

VecIndex mat_apply(const VectorSpace& space, const FpMatrix& m, VecIndex v) {
  if (m.size() != space.dim() || m.p() != space.p()) {
    throw InvalidInput("mat_apply: matrix does not act on this space");
  }
  return space.encode(m.apply(space.decode(v)));
}

std::uint64_t mat_order(const FpMatrix& m, std::uint64_t cap) {
  if (!m.is_invertible()) throw InvalidInput("mat_order: matrix is singular");
  FpMatrix power = m;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (power.is_identity()) return n;
    power = power * m;
  }
  throw CapExceeded("mat_order: order exceeds cap " + std::to_string(cap));
}

std::vector<Coords> null_space(const PrimeField& f, std::vector<Coords> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Residue pinv = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, pinv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Residue factor = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<Coords> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    Coords v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = f.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ------------------------------------------------------------------- Subspace

Subspace::Subspace(PrimeField field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::whole(PrimeField field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Coords e(ambient_dim, 0);
    e[i] = 1;
    s.insert(e);
  }
  return s;
}

Subspace Subspace::span_of(PrimeField field, std::size_t ambient_dim, const std::vector<Coords>& vs) {
  Subspace s(field, ambient_dim);
  for (const auto& v : vs) s.insert(v);
  return s;
}

Coords Subspace::reduce(Coords v) const {
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Residue factor = v[pivots_[r]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) v[c] = field_.sub(v[c], field_.mul(factor, basis_[r][c]));
  }
  return v;
}

bool Subspace::contains(std::span<const Residue> v) const {
  auto rest = reduce(Coords(v.begin(), v.end()));
  return std::all_of(rest.begin(), rest.end(), [](Residue x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Coords& v) { return contains(v); });
}

bool Subspace::insert(std::span<const Residue> v) {
  if (v.size() != ambient_) throw InvalidInput("Subspace::insert: dimension mismatch");
  Coords rest = reduce(Coords(v.begin(), v.end()));
  std::size_t piv = 0;
  while (piv < ambient_ && rest[piv] == 0) ++piv;
  if (piv == ambient_) return false;
  const Residue pinv = field_.inv(rest[piv]);
  for (auto& x : rest) x = field_.mul(x, pinv);
  // Keep the basis fully reduced against the new pivot.
  for (auto& row : basis_) {
    const Residue factor = row[piv];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) row[c] = field_.sub(row[c], field_.mul(factor, rest[c]));
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  basis_.insert(basis_.begin() + pos, std::move(rest));
  return true;
}

Coords Subspace::coordinates(std::span<const Residue> v) const {
  if (!contains(v)) throw InvalidInput("Subspace::coordinates: vector not in subspace");
  Coords out(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) out[r] = v[pivots_[r]];
  return out;
}

void Subspace::for_each_vector(const std::function<void(const Coords&)>& fn) const {
  Coords coeff(basis_.size(), 0);
  Coords v(ambient_, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    // Odometer increment of the coefficient vector, updating v incrementally.
    while (i < coeff.size()) {
      for (std::size_t c = 0; c < ambient_; ++c) v[c] = field_.add(v[c], basis_[i][c]);
      if (++coeff[i] < field_.p()) break;
      coeff[i] = 0;  // v has wrapped back by p * basis_[i] = 0
      ++i;
    }
    if (i == coeff.size()) return;
  }
}

Subspace spin(const PrimeField& field, std::span<const FpMatrix> generators,
              const std::vector<Coords>& seeds) {
  const std::size_t n = seeds.empty() ? (generators.empty() ? 0 : generators[0].size()) : seeds[0].size();
  Subspace s(field, n);
  std::deque<Coords> queue;
  for (const auto& v : seeds) {
    if (s.insert(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Coords v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Coords w = g.apply(v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

}  // namespace orbdiam
