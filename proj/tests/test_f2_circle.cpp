#include <doctest.h>

#include <random>

#include "qcg/circle.hpp"
#include "qcg/errors.hpp"
#include "qcg/f2.hpp"

using qcg::CircleValue;
namespace f2 = qcg::f2;

namespace {

f2::Bits bits(std::size_t width, std::initializer_list<std::size_t> ones) {
  f2::Bits b(width);
  for (auto i : ones) b.set(i);
  return b;
}

}  // namespace

TEST_CASE("bits spanning several words") {
  f2::Bits b(130);
  CHECK(b.none());
  b.set(0);
  b.set(129);
  CHECK(b.count() == 2);
  CHECK(b.lowest() == 0U);
  CHECK(b.ones() == std::vector<std::size_t>{0, 129});
  b.flip(0);
  CHECK(b.lowest() == 129U);
  CHECK((b ^ b).none());
}

TEST_CASE("elimination basis rank and expression") {
  f2::EliminationBasis basis(4);
  CHECK(basis.insert(bits(4, {0, 1})));
  CHECK(basis.insert(bits(4, {1, 2})));
  CHECK_FALSE(basis.insert(bits(4, {0, 2})));
  CHECK(basis.rank() == 2);
  CHECK(basis.contains(bits(4, {0, 2})));
  CHECK_FALSE(basis.contains(bits(4, {3})));
  const auto coeffs = basis.express(bits(4, {0, 2}));
  REQUIRE(coeffs.has_value());
  CHECK(coeffs->test(0));
  CHECK(coeffs->test(1));
  CHECK_FALSE(basis.express(bits(4, {3})).has_value());
}

TEST_CASE("kernel of a linear map") {
  // Map Z2^3 -> Z2^2 with images of the unit vectors (1,0), (1,0), (0,1).
  const auto ker = f2::kernel({bits(2, {0}), bits(2, {0}), bits(2, {1})}, 2);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == bits(3, {0, 1}));
}

TEST_CASE("random kernels are annihilated and have the right dimension") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t m = 1 + rng() % 6;
    std::vector<f2::Bits> images;
    f2::EliminationBasis image_span(m);
    for (std::size_t i = 0; i < n; ++i) {
      f2::Bits b(m);
      for (std::size_t j = 0; j < m; ++j) b.set(j, (rng() & 1U) != 0);
      images.push_back(b);
      image_span.insert(b);
    }
    const auto ker = f2::kernel(images, m);
    CHECK(ker.size() + image_span.rank() == n);
    for (const auto& v : ker) {
      f2::Bits sum(m);
      for (auto i : v.ones()) sum ^= images[i];
      CHECK(sum.none());
    }
  }
}

TEST_CASE("circle values reduce mod 1") {
  CHECK(CircleValue(3, 2) == CircleValue::minus_one());
  CHECK(CircleValue(-1, 4) == CircleValue(3, 4));
  CHECK(CircleValue(4, 8).to_string() == "1/2");
  CHECK(CircleValue(5, 5).is_one());
  CHECK(CircleValue::sign(3) == CircleValue::minus_one());
  CHECK(CircleValue::sign(-2).is_one());
  CHECK((CircleValue(1, 4) * CircleValue(1, 4)) == CircleValue::minus_one());
  CHECK(CircleValue(1, 3).inverse() == CircleValue(2, 3));
  CHECK(CircleValue(1, 6).order() == 6);
  CHECK(CircleValue::parse("2/4") == CircleValue::minus_one());
  CHECK(CircleValue::parse("0").is_one());
  CHECK_THROWS_AS(CircleValue::parse("x/2"), qcg::InputError);
  CHECK_THROWS_AS(CircleValue::parse("1/0"), qcg::InputError);
}

TEST_CASE("circle values form a group") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const CircleValue a(static_cast<std::int64_t>(rng() % 50) - 25, 1 + rng() % 24);
    const CircleValue b(static_cast<std::int64_t>(rng() % 50) - 25, 1 + rng() % 24);
    const CircleValue c(static_cast<std::int64_t>(rng() % 50) - 25, 1 + rng() % 24);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a * a.inverse()).is_one());
    CHECK(CircleValue::parse(a.to_string()) == a);
  }
}
