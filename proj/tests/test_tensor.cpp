#include "emogru/tensor.hpp"

#include <doctest.h>

#include <cmath>

using namespace emogru;

TEST_CASE("matmul identity is exact") {
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  CHECK(matmul(identity(2), a) == a);
  CHECK(matmul(a, identity(2)) == a);
}

TEST_CASE("matmul hand-computed product") {
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  Matrix b(2, 2);
  b(0, 1) = 1;
  b(1, 0) = 1;
  const Matrix c = matmul(a, b);
  // row i of c = [a(i,1), a(i,0)] by hand
  CHECK(c(0, 0) == 2.0);
  CHECK(c(0, 1) == 1.0);
  CHECK(c(1, 0) == 4.0);
  CHECK(c(1, 1) == 3.0);
}

TEST_CASE("matmul rejects mismatched inner dimensions") {
  Matrix a(2, 3);
  Matrix b(2, 2);
  CHECK_THROWS_WITH_AS(matmul(a, b),
                       "matmul: inner dimensions differ, lhs 2x3 vs rhs 2x2",
                       ShapeError);
}

TEST_CASE("matmul associativity with identity on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 1 + rng.below(5);
    const std::size_t c = 1 + rng.below(5);
    Matrix a(r, c);
    for (double& x : a.data) x = rng.uniform(-10.0, 10.0);
    CHECK(matmul(identity(r), a) == a);
    CHECK(matmul(a, identity(c)) == a);
  }
}

TEST_CASE("elementwise fixed points") {
  CHECK(sigmoid(0.0) == 0.5);
  CHECK(std::tanh(0.0) == 0.0);
  CHECK(tanh(Vector{0.0})[0] == 0.0);
}

TEST_CASE("sigmoid is stable at extreme inputs") {
  const double hi = sigmoid(500.0);
  CHECK(std::isfinite(hi));
  CHECK(hi > 0.0);
  CHECK(hi <= 1.0);
  // reference formula with the overflow-free branch applied by hand:
  // for x >= 0, 1 / (1 + exp(-x))
  CHECK(hi == doctest::Approx(1.0 / (1.0 + std::exp(-500.0))).epsilon(1e-15));

  const double lo = sigmoid(-500.0);
  CHECK(std::isfinite(lo));
  CHECK(lo >= 0.0);
  CHECK(lo < 1e-100);
}

TEST_CASE("sigmoid/tanh stay in their open ranges over moderate inputs") {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform(-30.0, 30.0);
    const double s = sigmoid(x);
    CHECK(s > 0.0);
    CHECK(s < 1.0);
    const double t = std::tanh(rng.uniform(-17.0, 17.0));
    CHECK(t > -1.0);
    CHECK(t < 1.0);
  }
  // no NaN anywhere on the finite line
  for (double x : {1e308, -1e308, 1e-308, 0.0}) {
    CHECK(std::isfinite(sigmoid(x)));
    CHECK(std::isfinite(std::tanh(x)));
  }
}

TEST_CASE("elementwise binary ops check shapes") {
  CHECK_THROWS_AS(add(Vector{1.0, 2.0}, Vector{1.0}), ShapeError);
  CHECK_THROWS_AS(mul(Matrix(2, 2), Matrix(2, 3)), ShapeError);
  CHECK(add(Vector{1.0, 2.0}, Vector{3.0, 4.0}) == Vector{4.0, 6.0});
  CHECK(mul(Vector{2.0, 3.0}, Vector{4.0, 5.0}) == Vector{8.0, 15.0});
}

TEST_CASE("softmax of equal logits is uniform") {
  const Vector p = softmax(Vector{0.0, 0.0, 0.0, 0.0});
  for (double x : p) CHECK(x == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("softmax survives large logits") {
  const Vector p = softmax(Vector{1000.0, 0.0});
  CHECK(std::isfinite(p[0]));
  CHECK(std::isfinite(p[1]));
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(p[1]) <= 1e-12);
}

TEST_CASE("softmax matches direct evaluation") {
  const Vector p = softmax(Vector{1.0, 2.0, 3.0});
  const double z = std::exp(1.0) + std::exp(2.0) + std::exp(3.0);
  CHECK(p[0] == doctest::Approx(std::exp(1.0) / z).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(std::exp(2.0) / z).epsilon(1e-14));
  CHECK(p[2] == doctest::Approx(std::exp(3.0) / z).epsilon(1e-14));
}

TEST_CASE("softmax rejects empty input") {
  CHECK_THROWS_AS(softmax(Vector{}), ShapeError);
}

TEST_CASE("softmax sums to one and is shift invariant (property)") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(16);
    Vector v(n);
    for (double& x : v) x = rng.uniform(-1e3, 1e3);
    const Vector p = softmax(v);
    double sum = 0.0;
    for (double x : p) {
      CHECK(x >= 0.0);  // entries >2000 nats below the max underflow to exactly 0
      CHECK(std::isfinite(x));
      sum += x;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);

    const double c = rng.uniform(-1e3, 1e3);
    Vector shifted = v;
    for (double& x : shifted) x += c;
    const Vector q = softmax(shifted);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(p[i] - q[i]) <= 1e-12);
  }
}

TEST_CASE("softmax entries are strictly positive at moderate spreads") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Vector v(1 + rng.below(8));
    for (double& x : v) x = rng.uniform(-100.0, 100.0);
    for (double x : softmax(v)) CHECK(x > 0.0);
  }
}

TEST_CASE("finite_diff_grad on theta squared") {
  const auto f = [](const Vector& v) { return v[0] * v[0]; };
  const Vector g = finite_diff_grad(f, Vector{3.0}, 1e-5);
  CHECK(g[0] == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("finite_diff_grad of a constant is zero") {
  const auto f = [](const Vector&) { return 42.0; };
  const Vector g = finite_diff_grad(f, Vector{1.0, -2.0, 0.5});
  for (double x : g) CHECK(x == 0.0);
}

TEST_CASE("finite_diff_grad matches analytic gradient of sin(a)*b") {
  const auto f = [](const Vector& v) { return std::sin(v[0]) * v[1]; };
  const Vector g = finite_diff_grad(f, Vector{0.0, 2.0});
  // d/da = cos(a)*b = 2, d/db = sin(a) = 0
  CHECK(g[0] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(g[1]) <= 1e-9);
}

TEST_CASE("finite_diff_grad reports non-finite function values") {
  const auto f = [](const Vector& v) { return std::log(v[0]); };
  CHECK_THROWS_AS(finite_diff_grad(f, Vector{0.0}), NumericError);
}

TEST_CASE("rng streams are bit-identical for equal seeds") {
  Rng a(123456789);
  Rng b(123456789);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

  Rng c(123456789);
  Rng d(987654321);
  bool differs = false;
  for (int i = 0; i < 8; ++i) differs |= (c.next_u64() != d.next_u64());
  CHECK(differs);
}

TEST_CASE("rng uniform stays in range and below is unbiased enough") {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  std::array<int, 3> counts{};
  for (int i = 0; i < 30000; ++i) counts[rng.below(3)]++;
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
}

TEST_CASE("check_finite names the offending buffer") {
  Vector v{1.0, std::nan(""), 2.0};
  CHECK_THROWS_WITH_AS(check_finite(v, "gru.b_r"),
                       "non-finite value in gru.b_r at index 1", NumericError);
}
