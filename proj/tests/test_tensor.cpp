#include <doctest.h>

#include "sscurv/error.hpp"
#include "sscurv/rat.hpp"
#include "sscurv/tensor.hpp"
#include "support.hpp"

using namespace sscurv;

TEST_CASE("rationals parse, normalize and print") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-1/2").str() == "-1/2");
  CHECK(Rat::parse("7").is_integer());
  CHECK(Rat(4, -8).str() == "-1/2");
  CHECK_THROWS_AS(Rat::parse("1.5"), InputError);
  CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rat::parse(""), InputError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
}

TEST_CASE("rational arithmetic is exact") {
  Rat third(1, 3);
  CHECK(third + third + third == Rat(1));
  CHECK((Rat(1, 2) - Rat(1, 3)) * Rat(6) == Rat(1));
  CHECK(Rat(-3, 4).abs() == Rat(3, 4));
  CHECK(Rat(-3, 4) < Rat(-1, 2));
  CHECK(Rat(-5).sign() == -1);
}

TEST_CASE("scalar tensors") {
  auto s = Tensor::scalar(Rat(5, 2));
  CHECK(s.rank() == 0);
  CHECK(s.value() == Rat(5, 2));
  CHECK(Tensor(0, 0, 3) == Tensor::scalar(Rat(0)));
}

TEST_CASE("outer and contract") {
  const auto v = Tensor::from_components(1, 0, 2, {Rat(1), Rat(2)});
  const auto w = Tensor::from_components(0, 1, 2, {Rat(3), Rat(-1)});
  const auto vw = outer(v, w);
  CHECK(vw.upper() == 1);
  CHECK(vw.lower() == 1);
  CHECK(vw(1, 0) == Rat(6));
  CHECK(contract(vw, 0, 0).value() == Rat(1));
  CHECK(contract(Tensor::identity(3), 0, 0).value() == Rat(3));
}

TEST_CASE("shape mismatches throw") {
  Tensor a(0, 2, 3);
  Tensor b(1, 1, 3);
  CHECK_THROWS_AS(a += b, ValenceError);
  CHECK_THROWS_AS(contract(a, 0, 0), ValenceError);
}

TEST_CASE("matrix inverse") {
  const auto g = Tensor::from_components(0, 2, 2, {Rat(2), Rat(1), Rat(1), Rat(1)});
  const auto gi = invert(g);
  CHECK(gi(0, 0) == Rat(1));
  CHECK(gi(0, 1) == Rat(-1));
  CHECK(gi(1, 1) == Rat(2));
  CHECK_THROWS_AS(invert(Tensor::from_components(0, 2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)})), DegenerateMetricError);
  CHECK(leading_minor(g, 2) == Rat(1));
}

TEST_CASE("raise then lower restores a (0,2) tensor") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Tensor g(0, 2, 3);
    // A + A^T + 6 I with small entries is diagonally dominant, hence SPD.
    const auto a = testing::random_tensor(rng, 0, 2, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g(i, j) = a(i, j) + a(j, i) + (i == j ? Rat(12) : Rat(0));
    }
    const auto gi = invert(g);
    const auto t = testing::random_tensor(rng, 0, 2, 3);
    for (int slot = 0; slot < 2; ++slot) {
      const auto up = raise_index(t, gi, slot, 0);
      CHECK(lower_index(up, g, 0, slot) == t);
    }
  }
}

TEST_CASE("addition commutes and contraction is linear") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_tensor(rng, 1, 2, 3);
    const auto b = testing::random_tensor(rng, 1, 2, 3);
    const Rat s(static_cast<long>(rng() % 7) - 3, 2);
    CHECK(a + b == b + a);
    CHECK(contract(a + b * s, 0, 1) == contract(a, 0, 1) + contract(b, 0, 1) * s);
    const auto v = testing::random_tensor(rng, 1, 0, 3);
    CHECK(contract(outer(a + b, v), 1, 0) == contract(outer(a, v), 1, 0) + contract(outer(b, v), 1, 0));
  }
}

TEST_CASE("max abs deviation") {
  const auto a = Tensor::from_components(1, 0, 2, {Rat(1), Rat(-2)});
  const auto b = Tensor::from_components(1, 0, 2, {Rat(0), Rat(1, 2)});
  CHECK(max_abs_deviation(a, b) == Rat(5, 2));
}
