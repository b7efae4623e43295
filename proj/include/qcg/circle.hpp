#ifndef QCG_CIRCLE_HPP
#define QCG_CIRCLE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qcg {

/// Element of Q/Z, read as the root of unity exp(2 pi i p/q). The group law
/// is written multiplicatively to match C^x; the identity is 0/1.
class CircleValue {
 public:
  constexpr CircleValue() = default;
  /// exp(2 pi i num/den); the fraction is reduced mod 1.
  CircleValue(std::int64_t num, std::int64_t den);

  static CircleValue one() { return {}; }
  static CircleValue minus_one() { return {1, 2}; }
  /// (-1)^n.
  static CircleValue sign(std::int64_t n) { return {n, 2}; }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_one() const { return num_ == 0; }
  /// True for +1 and -1.
  bool is_sign() const { return den_ <= 2; }
  std::int64_t order() const { return den_; }

  CircleValue operator*(const CircleValue& other) const;
  CircleValue& operator*=(const CircleValue& other) { return *this = *this * other; }
  CircleValue inverse() const;
  CircleValue operator/(const CircleValue& other) const { return *this * other.inverse(); }

  bool operator==(const CircleValue&) const = default;
  auto operator<=>(const CircleValue&) const = default;

  /// "p/q", with the identity written "0/1".
  std::string to_string() const;
  /// Parses "p/q" or "p". Throws InputError.
  static CircleValue parse(const std::string& text);

 private:
  struct Reduced {};
  constexpr CircleValue(std::int64_t num, std::int64_t den, Reduced) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& out, const CircleValue& v);

}  // namespace qcg

#endif  // QCG_CIRCLE_HPP
