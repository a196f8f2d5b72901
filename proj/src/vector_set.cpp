#include "orbdiam/vector_set.hpp"

#include <algorithm>

namespace orbdiam {

VectorSet VectorSet::full(std::uint64_t universe) {
  VectorSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.clear_tail();
  return s;
}

VectorSet VectorSet::of(std::uint64_t universe, const std::vector<VecIndex>& members) {
  VectorSet s(universe);
  for (auto v : members) s.set(v);
  return s;
}

void VectorSet::clear_tail() {
  if (const auto rem = universe_ & 63; rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

std::uint64_t VectorSet::count() const {
  std::uint64_t n = 0;
  for (auto w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

bool VectorSet::is_subset_of(const VectorSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<VecIndex> VectorSet::members() const {
  std::vector<VecIndex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w; w &= w - 1) {
      out.push_back(static_cast<VecIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

VectorSet& VectorSet::operator|=(const VectorSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

namespace {

// dst = src << k (towards higher indices), truncated to src's length.
void shift_up(const std::vector<std::uint64_t>& src, std::uint64_t k, std::vector<std::uint64_t>& dst) {
  const std::size_t n = src.size();
  const std::size_t ws = k / 64;
  const unsigned bs = k % 64;
  for (std::size_t i = n; i-- > 0;) {
    if (i < ws) {
      dst[i] = 0;
      continue;
    }
    std::uint64_t w = src[i - ws] << bs;
    if (bs && i >= ws + 1) w |= src[i - ws - 1] >> (64 - bs);
    dst[i] = w;
  }
}

// dst = src >> k (towards lower indices).
void shift_down(const std::vector<std::uint64_t>& src, std::uint64_t k, std::vector<std::uint64_t>& dst) {
  const std::size_t n = src.size();
  const std::size_t ws = k / 64;
  const unsigned bs = k % 64;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + ws >= n) {
      dst[i] = 0;
      continue;
    }
    std::uint64_t w = src[i + ws] >> bs;
    if (bs && i + ws + 1 < n) w |= src[i + ws + 1] << (64 - bs);
    dst[i] = w;
  }
}

}  // namespace

Translator::Translator(const VectorSpace& space)
    : space_(space),
      masks_(space.dim(), std::vector<VectorSet>(space.p())),
      down_(space.size()),
      pingpong_(space.size()),
      shifted_(space.size()),
      coords_(space.dim()) {}

const VectorSet& Translator::mask(std::size_t coord, Residue shift) {
  auto& m = masks_[coord][shift];
  if (m.universe() == 0) {
    m = VectorSet(space_.size());
    const std::uint64_t stride = space_.radix(coord);
    const std::uint64_t block = space_.radix(coord + 1);
    // Bits whose coordinate `coord` is >= shift: in each block, the run
    // [shift * stride, block).
    for (std::uint64_t base = 0; base < space_.size(); base += block) {
      for (std::uint64_t v = base + shift * stride; v < base + block; ++v) m.set(static_cast<VecIndex>(v));
    }
  }
  return m;
}

void Translator::shift_coordinate(const VectorSet& src, std::size_t coord, Residue shift, VectorSet& dst) {
  const std::uint64_t stride = space_.radix(coord);
  const auto& m = mask(coord, shift).words();
  auto& up = dst.words();
  auto& down = down_.words();
  shift_up(src.words(), shift * stride, up);
  shift_down(src.words(), (space_.p() - shift) * stride, down);
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = (up[i] & m[i]) | (down[i] & ~m[i]);
  dst.clear_tail();
}

void Translator::translate(const VectorSet& s, VecIndex delta, VectorSet& out) {
  space_.decode_into(delta, coords_);
  const VectorSet* cur = &s;
  VectorSet* bufs[2] = {&out, &pingpong_};
  int next = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    shift_coordinate(*cur, i, coords_[i], *bufs[next]);
    cur = bufs[next];
    next ^= 1;
  }
  if (cur != &out) out.words() = cur->words();
}

void Translator::translate_or(const VectorSet& s, VecIndex delta, VectorSet& acc) {
  translate(s, delta, shifted_);
  acc |= shifted_;
}

}  // namespace orbdiam
