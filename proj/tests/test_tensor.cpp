#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcurv/frame.hpp"
#include "tcurv/tensor.hpp"

#include "support/fixtures.hpp"

using namespace tcurv;

TEST_CASE("contract traces the identity") {
  Tensor id = Tensor::identity(3);
  Tensor tr = contract(id, 0, 1);
  CHECK(tr.rank() == 0);
  CHECK(tr.at(std::span<const int>{}) == Rational(3));
}

TEST_CASE("contracting a zero tensor stays zero") {
  Tensor gamma(3, {Slot::Up, Slot::Down, Slot::Down});
  CHECK(contract(gamma, 0, 1).is_zero());
  CHECK(contract(gamma, 0, 2).is_zero());
}

TEST_CASE("contract validates slots") {
  Tensor t(3, {Slot::Up, Slot::Down});
  CHECK_THROWS_AS(contract(t, 1, 0), std::invalid_argument);  // kinds swapped
  CHECK_THROWS_AS(contract(t, 0, 2), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(contract(t, 0, 0), std::invalid_argument);
}

TEST_CASE("contract is linear") {
  fixtures::Rng rng(2024);
  for (int iter = 0; iter < 30; ++iter) {
    Tensor t = rng.tensor(3, {Slot::Up, Slot::Down, Slot::Down});
    Tensor s = rng.tensor(3, {Slot::Up, Slot::Down, Slot::Down});
    Rational a = rng.rational(), b = rng.rational();
    Tensor lhs = contract(a * t + b * s, 0, 1);
    Tensor rhs = a * contract(t, 0, 1) + b * contract(s, 0, 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("raise and lower round-trip exactly") {
  fixtures::Rng rng(7);
  for (const Rational& eps : {Rational(1), Rational(-1)}) {
    Tensor g(3, {Slot::Down, Slot::Down});
    g(0, 0) = Rational(1);
    g(1, 1) = Rational(1);
    g(2, 2) = eps;
    Tensor g_inv = metric_inverse(g);
    for (int iter = 0; iter < 10; ++iter) {
      Tensor t = rng.tensor(3, {Slot::Up, Slot::Down, Slot::Down});
      CHECK(raise_slot(lower_slot(t, 0, g), 0, g_inv) == t);
      Tensor low = lower_slot(t, 0, g);
      CHECK(low.valence()[0] == Slot::Down);
      CHECK(lower_slot(raise_slot(t, 1, g_inv), 1, g) == t);
    }
  }
  // non-diagonal metric
  fixtures::Rng rng2(8);
  FrameSpec f = rng2.almost_abelian_frame(3);
  Tensor g_inv = metric_inverse(f.g);
  for (int iter = 0; iter < 10; ++iter) {
    Tensor t = rng2.tensor(3, {Slot::Down, Slot::Up});
    CHECK(lower_slot(raise_slot(t, 0, g_inv), 0, f.g) == t);
    CHECK(raise_slot(lower_slot(t, 1, f.g), 1, g_inv) == t);
  }
}

TEST_CASE("lowering xi against diag(1,1,eps) gives the eta candidate") {
  for (const Rational& eps : {Rational(1), Rational(-1)}) {
    Tensor g(3, {Slot::Down, Slot::Down});
    g(0, 0) = Rational(1);
    g(1, 1) = Rational(1);
    g(2, 2) = eps;
    Tensor xi(3, {Slot::Up});
    xi(2) = Rational(1);
    Tensor low = lower_slot(xi, 0, g);
    CHECK(low(0) == Rational(0));
    CHECK(low(1) == Rational(0));
    CHECK(low(2) == eps);
    Tensor eta = eps * low;  // eps * g-dual of xi
    CHECK(eta(2) == Rational(1));
  }
}

TEST_CASE("tensor product and permute") {
  Tensor a(2, {Slot::Up});
  a(0) = Rational(2);
  a(1) = Rational(3);
  Tensor b(2, {Slot::Down});
  b(0) = Rational(5);
  b(1) = Rational(7);
  Tensor p = tensor_product(a, b);
  CHECK(p.valence() == std::vector<Slot>{Slot::Up, Slot::Down});
  CHECK(p(0, 0) == Rational(10));
  CHECK(p(1, 0) == Rational(15));
  CHECK(p(0, 1) == Rational(14));

  const int perm[] = {1, 0};
  Tensor q = permute(p, perm);
  CHECK(q.valence() == std::vector<Slot>{Slot::Down, Slot::Up});
  CHECK(q(0, 1) == Rational(15));
  CHECK(q(1, 0) == Rational(14));

  const int bad[] = {0, 0};
  CHECK_THROWS_AS(permute(p, bad), std::invalid_argument);
}

TEST_CASE("mismatch and max-entry helpers are deterministic") {
  Tensor a(2, {Slot::Down, Slot::Down});
  Tensor b = a;
  CHECK(!first_mismatch(a, b).has_value());
  b(1, 0) = Rational(1, 2);
  b(1, 1) = Rational(-1, 2);
  auto idx = first_mismatch(a, b);
  REQUIRE(idx.has_value());
  CHECK(*idx == std::vector<int>{1, 0});

  auto [mi, mv] = b.max_abs_entry();
  CHECK(mi == std::vector<int>{1, 0});  // first among equal magnitudes
  CHECK(mv == Rational(1, 2));
}

TEST_CASE("shape mismatches are usage errors") {
  Tensor a(2, {Slot::Down});
  Tensor b(3, {Slot::Down});
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(tensor_product(a, b), std::invalid_argument);
  CHECK_THROWS_AS(first_mismatch(a, b), std::invalid_argument);
}
