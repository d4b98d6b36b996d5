#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "emogru/error.hpp"

namespace emogru {

using Vector = std::vector<double>;

// Dense row-major matrix of 64-bit floats. All math in this project is double
// precision so that analytic gradients can be checked against finite
// differences at ~1e-4 relative accuracy.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // rows * cols, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * cols, cols};
  }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
  bool operator==(const Matrix& o) const = default;
};

Matrix identity(std::size_t n);

// Deterministic random source. Backed by std::mt19937_64, whose output stream
// is fully specified by the C++ standard, combined with an explicit 53-bit
// uniform mapping; the same seed therefore produces the same values on every
// platform and build.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n) without modulo bias (rejection sampling).
  std::uint64_t below(std::uint64_t n);

  // Derives a stream seed from a base seed and a stream index (splitmix64
  // finalizer). Used to give runs/epochs/components independent streams.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 gen_;
};

// Fisher-Yates with the deterministic Rng.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.below(i)]);
  }
}

// ---- linear algebra ----
// Reductions accumulate in fixed ascending-index order so reruns are
// bit-identical.

Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& m, const Vector& v);             // m * v
Vector matvec_transposed(const Matrix& m, const Vector& v);  // m^T * v
void add_outer(Matrix& m, std::span<const double> a, std::span<const double> b);
void axpy(Vector& y, double a, std::span<const double> x);  // y += a * x

// ---- elementwise ----

double sigmoid(double x);  // numerically stable, branches on sign
Vector sigmoid(Vector v);
Matrix sigmoid(Matrix m);
Vector tanh(Vector v);
Matrix tanh(Matrix m);
Vector add(const Vector& a, const Vector& b);
Vector mul(const Vector& a, const Vector& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix mul(const Matrix& a, const Matrix& b);

// ---- reductions / numerics ----

double logsumexp(const Vector& v);
Vector softmax(const Vector& v);  // max-subtracted; output sums to 1

// Central finite differences (f(x+eps*e_i) - f(x-eps*e_i)) / (2*eps).
// Verification oracle for the hand-derived backward passes.
Vector finite_diff_grad(const std::function<double(const Vector&)>& f,
                        const Vector& params, double eps = 1e-5);

// Uniform(-s, s) with s = sqrt(6 / (rows + cols)).
Matrix xavier_uniform(std::size_t rows, std::size_t cols, Rng& rng);

// Throws NumericError naming `what` if any entry is NaN or infinite.
void check_finite(std::span<const double> values, std::string_view what);

}  // namespace emogru
