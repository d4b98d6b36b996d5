#include "emogru/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace emogru {

namespace {

std::string shape_str(std::size_t r, std::size_t c) {
  std::ostringstream os;
  os << r << "x" << c;
  return os.str();
}

void require_same_len(const Vector& a, const Vector& b, const char* op) {
  if (a.size() != b.size()) {
    std::ostringstream os;
    os << op << ": length mismatch " << a.size() << " vs " << b.size();
    throw ShapeError(os.str());
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (!a.same_shape(b)) {
    std::ostringstream os;
    os << op << ": shape mismatch " << shape_str(a.rows, a.cols) << " vs "
       << shape_str(b.rows, b.cols);
    throw ShapeError(os.str());
  }
}

}  // namespace

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::uint64_t Rng::below(std::uint64_t n) {
  // Values below 2^64 mod n are rejected, then r % n is exactly uniform.
  const std::uint64_t reject = (-n) % n;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= reject) return r % n;
  }
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw ShapeError("matmul: inner dimensions differ, lhs " +
                     shape_str(a.rows, a.cols) + " vs rhs " +
                     shape_str(b.rows, b.cols));
  }
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      const double* brow = b.data.data() + k * b.cols;
      double* orow = out.data.data() + i * out.cols;
      for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

Vector matvec(const Matrix& m, const Vector& v) {
  if (m.cols != v.size()) {
    throw ShapeError("matvec: matrix " + shape_str(m.rows, m.cols) +
                     " vs vector length " + std::to_string(v.size()));
  }
  Vector out(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const double* row = m.data.data() + i * m.cols;
    double acc = 0.0;
    for (std::size_t k = 0; k < m.cols; ++k) acc += row[k] * v[k];
    out[i] = acc;
  }
  return out;
}

Vector matvec_transposed(const Matrix& m, const Vector& v) {
  if (m.rows != v.size()) {
    throw ShapeError("matvec_transposed: matrix " + shape_str(m.rows, m.cols) +
                     " vs vector length " + std::to_string(v.size()));
  }
  Vector out(m.cols, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const double* row = m.data.data() + i * m.cols;
    const double vi = v[i];
    for (std::size_t j = 0; j < m.cols; ++j) out[j] += vi * row[j];
  }
  return out;
}

void add_outer(Matrix& m, std::span<const double> a, std::span<const double> b) {
  if (m.rows != a.size() || m.cols != b.size()) {
    throw ShapeError("add_outer: matrix " + shape_str(m.rows, m.cols) +
                     " vs vectors " + std::to_string(a.size()) + "," +
                     std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < m.rows; ++i) {
    double* row = m.data.data() + i * m.cols;
    const double ai = a[i];
    for (std::size_t j = 0; j < m.cols; ++j) row[j] += ai * b[j];
  }
}

void axpy(Vector& y, double a, std::span<const double> x) {
  if (y.size() != x.size()) {
    throw ShapeError("axpy: length mismatch " + std::to_string(y.size()) +
                     " vs " + std::to_string(x.size()));
  }
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Vector sigmoid(Vector v) {
  for (double& x : v) x = sigmoid(x);
  return v;
}

Matrix sigmoid(Matrix m) {
  for (double& x : m.data) x = sigmoid(x);
  return m;
}

Vector tanh(Vector v) {
  for (double& x : v) x = std::tanh(x);
  return v;
}

Matrix tanh(Matrix m) {
  for (double& x : m.data) x = std::tanh(x);
  return m;
}

Vector add(const Vector& a, const Vector& b) {
  require_same_len(a, b, "add");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector mul(const Vector& a, const Vector& b) {
  require_same_len(a, b, "mul");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
  return out;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mul");
  Matrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] * b.data[i];
  return out;
}

double logsumexp(const Vector& v) {
  if (v.empty()) throw ShapeError("logsumexp: empty vector");
  const double m = *std::max_element(v.begin(), v.end());
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - m);
  return m + std::log(acc);
}

Vector softmax(const Vector& v) {
  if (v.empty()) throw ShapeError("softmax: empty vector");
  const double m = *std::max_element(v.begin(), v.end());
  Vector out(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::exp(v[i] - m);
    sum += out[i];
  }
  for (double& x : out) x /= sum;
  return out;
}

Vector finite_diff_grad(const std::function<double(const Vector&)>& f,
                        const Vector& params, double eps) {
  if (eps <= 0.0) throw ConfigError("finite_diff_grad: eps must be positive");
  Vector theta = params;
  Vector grad(params.size(), 0.0);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double saved = theta[i];
    theta[i] = saved + eps;
    const double fp = f(theta);
    theta[i] = saved - eps;
    const double fm = f(theta);
    theta[i] = saved;
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw NumericError("finite_diff_grad: non-finite function value at coordinate " +
                         std::to_string(i));
    }
    grad[i] = (fp - fm) / (2.0 * eps);
  }
  return grad;
}

Matrix xavier_uniform(std::size_t rows, std::size_t cols, Rng& rng) {
  const double s = std::sqrt(6.0 / static_cast<double>(rows + cols));
  Matrix m(rows, cols);
  for (double& x : m.data) x = rng.uniform(-s, s);
  return m;
}

void check_finite(std::span<const double> values, std::string_view what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NumericError("non-finite value in " + std::string(what) +
                         " at index " + std::to_string(i));
    }
  }
}

}  // namespace emogru
