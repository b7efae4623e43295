#include "qcg/f2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace qcg::f2 {

namespace {
constexpr std::size_t kWordBits = 64;
}

Bits::Bits(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

Bits Bits::unit(std::size_t size, std::size_t index) {
  Bits b(size);
  b.set(index);
  return b;
}

bool Bits::test(std::size_t i) const {
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void Bits::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void Bits::flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

bool Bits::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bits::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> Bits::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return std::nullopt;
}

std::vector<std::size_t> Bits::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

Bits& Bits::operator^=(const Bits& other) {
  if (other.size_ != size_) throw std::invalid_argument("f2::Bits: width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& other) {
  if (other.size_ != size_) throw std::invalid_argument("f2::Bits: width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::strong_ordering Bits::operator<=>(const Bits& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    return (words_[i] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Bits::hash() const {
  std::size_t h = size_;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

EliminationBasis::EliminationBasis(std::size_t width) : width_(width) {}

bool EliminationBasis::insert(const Bits& v) {
  Bits row = v;
  Bits combo(width_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (row.test(pivots_[r])) {
      row ^= rows_[r];
      combo ^= combos_[r];
    }
  }
  const auto pivot = row.lowest();
  if (!pivot) return false;
  combo.set(rows_.size());
  // Keep the form reduced: clear the new pivot from existing rows.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].test(*pivot)) {
      rows_[r] ^= row;
      combos_[r] ^= combo;
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(*pivot);
  combos_.push_back(std::move(combo));
  return true;
}

bool EliminationBasis::contains(const Bits& v) const { return express(v).has_value(); }

std::optional<Bits> EliminationBasis::express(const Bits& v) const {
  Bits row = v;
  Bits combo(width_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (row.test(pivots_[r])) {
      row ^= rows_[r];
      combo ^= combos_[r];
    }
  }
  if (row.any()) return std::nullopt;
  return combo;
}

std::vector<Bits> EliminationBasis::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
  std::vector<Bits> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(rows_[i]);
  return out;
}

std::vector<Bits> kernel(const std::vector<Bits>& images, std::size_t target_width) {
  const std::size_t n = images.size();
  EliminationBasis basis(std::max(target_width, n));
  std::vector<std::size_t> independent;  // insertion slot -> column index
  std::vector<Bits> generators;
  for (std::size_t i = 0; i < n; ++i) {
    Bits img = images[i];
    if (img.size() != target_width) throw std::invalid_argument("f2::kernel: width mismatch");
    if (target_width < basis.width()) {
      Bits padded(basis.width());
      for (auto b : img.ones()) padded.set(b);
      img = padded;
    }
    if (auto combo = basis.express(img)) {
      Bits k(n);
      k.set(i);
      for (auto slot : combo->ones()) k.flip(independent[slot]);
      generators.push_back(std::move(k));
    } else {
      basis.insert(img);
      independent.push_back(i);
    }
  }
  return reduced_basis(generators, n);
}

std::vector<Bits> reduced_basis(const std::vector<Bits>& vectors, std::size_t width) {
  EliminationBasis basis(width);
  for (const auto& v : vectors) basis.insert(v);
  return basis.reduced_rows();
}

}  // namespace qcg::f2
