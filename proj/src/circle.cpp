#include "qcg/circle.hpp"

#include <charconv>
#include <cstdint>
#include <utility>
#include <ostream>

#include "qcg/errors.hpp"

namespace qcg {

namespace {

/// Binary gcd; both arguments nonnegative.
std::int64_t gcd(std::int64_t x, std::int64_t y) {
  auto a = static_cast<std::uint64_t>(x);
  auto b = static_cast<std::uint64_t>(y);
  if (a == 0) return static_cast<std::int64_t>(b);
  if (b == 0) return static_cast<std::int64_t>(a);
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return static_cast<std::int64_t>(a << shift);
}

}  // namespace

CircleValue::CircleValue(std::int64_t num, std::int64_t den) {
  if (den == 0) throw RangeError("circle value with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const auto g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

CircleValue CircleValue::operator*(const CircleValue& other) const {
  if (other.num_ == 0) return *this;
  if (num_ == 0) return other;
  std::int64_t den = den_;
  std::int64_t num = 0;
  if (den_ == other.den_) {
    num = num_ + other.num_;
    if (num >= den) num -= den;
  } else {
    const auto g = gcd(den_, other.den_);
    const auto a = den_ / g;
    const auto b = other.den_ / g;
    den = a * other.den_;
    num = (num_ * b + other.num_ * a) % den;
  }
  if (num == 0) return {};
  const auto g = gcd(num, den);
  return {num / g, den / g, Reduced{}};
}

CircleValue CircleValue::inverse() const { return num_ == 0 ? *this : CircleValue(den_ - num_, den_, Reduced{}); }

std::string CircleValue::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

CircleValue CircleValue::parse(const std::string& text) {
  auto read = [&](std::string_view part, std::int64_t& out) {
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, out);
    if (ec != std::errc() || ptr != end || part.empty()) {
      throw InputError("malformed circle value '" + text + "'");
    }
  };
  std::string_view view(text);
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = view.find('/'); slash != std::string_view::npos) {
    read(view.substr(0, slash), num);
    read(view.substr(slash + 1), den);
  } else {
    read(view, num);
  }
  if (den <= 0) throw InputError("circle value needs a positive denominator: '" + text + "'");
  return {num, den};
}

std::ostream& operator<<(std::ostream& out, const CircleValue& v) { return out << v.to_string(); }

}  // namespace qcg
