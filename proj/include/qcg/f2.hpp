#ifndef QCG_F2_HPP
#define QCG_F2_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qcg::f2 {

/// Fixed-width vector over F2.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size);

  static Bits unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);

  bool none() const;
  bool any() const { return !none(); }
  std::size_t count() const;
  std::optional<std::size_t> lowest() const;
  std::vector<std::size_t> ones() const;

  Bits& operator^=(const Bits& other);
  friend Bits operator^(Bits lhs, const Bits& rhs) { return lhs ^= rhs; }
  Bits& operator&=(const Bits& other);
  friend Bits operator&(Bits lhs, const Bits& rhs) { return lhs &= rhs; }

  bool operator==(const Bits& other) const = default;
  /// Lexicographic on bit index: the vector whose lowest differing bit is set sorts first.
  std::strong_ordering operator<=>(const Bits& other) const;

  std::size_t hash() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental Gaussian elimination. Rows are kept in reduced row echelon
/// form with the pivot of each row at its lowest set bit.
class EliminationBasis {
 public:
  explicit EliminationBasis(std::size_t width);

  /// Inserts v; returns true when v was independent of the rows so far.
  bool insert(const Bits& v);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  bool contains(const Bits& v) const;

  /// Coefficients of v over the independent vectors in insertion order, or
  /// nullopt when v is outside the span.
  std::optional<Bits> express(const Bits& v) const;

  /// The reduced rows, sorted by pivot.
  std::vector<Bits> reduced_rows() const;

 private:
  std::size_t width_;
  std::vector<Bits> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Bits> combos_;
};

/// Basis of {x in F2^n : sum x_i images[i] = 0}, in reduced row echelon form.
std::vector<Bits> kernel(const std::vector<Bits>& images, std::size_t target_width);

/// Reduced row echelon basis of the span of vectors.
std::vector<Bits> reduced_basis(const std::vector<Bits>& vectors, std::size_t width);

}  // namespace qcg::f2

#endif  // QCG_F2_HPP
