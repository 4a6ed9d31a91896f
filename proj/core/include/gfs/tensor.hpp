#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gfs {

class Rng;

/// Dense row-major tensor of 64-bit floats with an explicit shape.
///
/// Values are immutable once a tensor has been handed to another thread;
/// all free functions below are pure and return fresh tensors.
class Tensor {
 public:
  Tensor() = default;

  /// Zero-filled tensor. Every extent must be positive.
  explicit Tensor(std::vector<std::size_t> shape);

  /// Takes ownership of `values`; length must equal the shape product.
  Tensor(std::vector<std::size_t> shape, std::vector<double> values);

  static Tensor full(std::vector<std::size_t> shape, double value);
  static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  std::size_t extent(std::size_t axis) const;

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  const std::vector<double>& values() const { return data_; }

  double& operator[](std::size_t flat) { return data_[flat]; }
  double operator[](std::size_t flat) const { return data_[flat]; }

  // Checked rank-2 / rank-3 element access.
  double& at(std::size_t i, std::size_t j);
  double at(std::size_t i, std::size_t j) const;
  double& at(std::size_t i, std::size_t j, std::size_t k);
  double at(std::size_t i, std::size_t j, std::size_t k) const;

  /// Same data, new shape; the element count must not change.
  Tensor reshaped(std::vector<std::size_t> new_shape) const;

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

std::string shape_string(const std::vector<std::size_t>& shape);

/// Raw matrix product kernel: out[m x n] = a[m x k] * b[k x n].
/// The accumulation over k runs in ascending order for every output
/// element, so results are bit-identical to the naive triple loop.
void matmul_into(const double* a, std::size_t m, std::size_t k,
                 const double* b, std::size_t n, double* out);

/// Matrix product of two rank-2 tensors. Throws std::invalid_argument
/// naming both shapes when the inner extents differ.
Tensor matmul(const Tensor& a, const Tensor& b);

/// Row-wise softmax of a rank-2 tensor, stabilized by subtracting the
/// row max before exponentiation.
Tensor softmax_rows(const Tensor& m);

struct MeanVar {
  Tensor mean;
  Tensor variance;  // population variance (divide by count)
};

/// Mean and population variance over `axes`; reduced axes keep extent 1
/// so the results broadcast against the input.
MeanVar mean_var(const Tensor& t, const std::vector<std::size_t>& axes);

/// I.i.d. standard-normal samples from the seeded generator.
Tensor gaussian(std::vector<std::size_t> shape, Rng& rng);

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double factor);
Tensor transpose(const Tensor& m);

double sum(const Tensor& t);
double max_abs(const Tensor& t);
double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace gfs
