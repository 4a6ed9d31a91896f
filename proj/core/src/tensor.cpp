#include "gfs/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "gfs/rng.hpp"

namespace gfs {

namespace {

std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t e : shape) {
    if (e == 0) {
      throw std::invalid_argument("Tensor: zero extent in shape " + shape_string(shape));
    }
    n *= e;
  }
  return n;
}

}  // namespace

std::string shape_string(const std::vector<std::size_t>& shape) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) out << 'x';
    out << shape[i];
  }
  out << ']';
  return out.str();
}

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
  if (data_.size() != shape_product(shape_)) {
    throw std::invalid_argument("Tensor: data length " + std::to_string(data_.size()) +
                                " does not match shape " + shape_string(shape_));
  }
}

Tensor Tensor::full(std::vector<std::size_t> shape, double value) {
  Tensor t(std::move(shape));
  std::fill(t.data_.begin(), t.data_.end(), value);
  return t;
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols, std::vector<double> values) {
  return Tensor({rows, cols}, std::move(values));
}

std::size_t Tensor::extent(std::size_t axis) const {
  if (axis >= shape_.size()) {
    throw std::invalid_argument("Tensor: axis " + std::to_string(axis) +
                                " out of range for shape " + shape_string(shape_));
  }
  return shape_[axis];
}

double& Tensor::at(std::size_t i, std::size_t j) {
  if (rank() != 2 || i >= shape_[0] || j >= shape_[1]) {
    throw std::invalid_argument("Tensor: bad rank-2 index into " + shape_string(shape_));
  }
  return data_[i * shape_[1] + j];
}

double Tensor::at(std::size_t i, std::size_t j) const {
  return const_cast<Tensor&>(*this).at(i, j);
}

double& Tensor::at(std::size_t i, std::size_t j, std::size_t k) {
  if (rank() != 3 || i >= shape_[0] || j >= shape_[1] || k >= shape_[2]) {
    throw std::invalid_argument("Tensor: bad rank-3 index into " + shape_string(shape_));
  }
  return data_[(i * shape_[1] + j) * shape_[2] + k];
}

double Tensor::at(std::size_t i, std::size_t j, std::size_t k) const {
  return const_cast<Tensor&>(*this).at(i, j, k);
}

Tensor Tensor::reshaped(std::vector<std::size_t> new_shape) const {
  if (shape_product(new_shape) != data_.size()) {
    throw std::invalid_argument("Tensor: cannot reshape " + shape_string(shape_) + " to " +
                                shape_string(new_shape));
  }
  return Tensor(std::move(new_shape), data_);
}

bool Tensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

void matmul_into(const double* a, std::size_t m, std::size_t k,
                 const double* b, std::size_t n, double* out) {
  std::memset(out, 0, m * n * sizeof(double));
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = a + i * k;
    double* orow = out + i * n;
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double aik = arow[kk];
      const double* brow = b + kk * n;
      for (std::size_t j = 0; j < n; ++j) {
        orow[j] += aik * brow[j];
      }
    }
  }
}

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.rank() != 2 || b.rank() != 2) {
    throw std::invalid_argument("matmul: expected rank-2 tensors, got " +
                                shape_string(a.shape()) + " and " + shape_string(b.shape()));
  }
  if (a.shape()[1] != b.shape()[0]) {
    throw std::invalid_argument("matmul: inner extents differ, " + shape_string(a.shape()) +
                                " vs " + shape_string(b.shape()));
  }
  Tensor out({a.shape()[0], b.shape()[1]});
  matmul_into(a.data(), a.shape()[0], a.shape()[1], b.data(), b.shape()[1], out.data());
  return out;
}

Tensor softmax_rows(const Tensor& m) {
  if (m.rank() != 2) {
    throw std::invalid_argument("softmax_rows: expected rank-2 tensor, got " +
                                shape_string(m.shape()));
  }
  const std::size_t rows = m.shape()[0];
  const std::size_t cols = m.shape()[1];
  Tensor out({rows, cols});
  for (std::size_t i = 0; i < rows; ++i) {
    const double* in = m.data() + i * cols;
    double* o = out.data() + i * cols;
    double row_max = in[0];
    for (std::size_t j = 1; j < cols; ++j) row_max = std::max(row_max, in[j]);
    double denom = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      o[j] = std::exp(in[j] - row_max);
      denom += o[j];
    }
    for (std::size_t j = 0; j < cols; ++j) o[j] /= denom;
  }
  return out;
}

MeanVar mean_var(const Tensor& t, const std::vector<std::size_t>& axes) {
  if (axes.empty()) {
    throw std::invalid_argument("mean_var: empty axis set");
  }
  std::vector<bool> reduced(t.rank(), false);
  for (std::size_t axis : axes) {
    if (axis >= t.rank()) {
      throw std::invalid_argument("mean_var: axis " + std::to_string(axis) +
                                  " out of range for shape " + shape_string(t.shape()));
    }
    reduced[axis] = true;
  }

  std::vector<std::size_t> out_shape = t.shape();
  std::size_t slice_count = 1;  // number of elements reduced per output cell
  for (std::size_t a = 0; a < t.rank(); ++a) {
    if (reduced[a]) {
      slice_count *= out_shape[a];
      out_shape[a] = 1;
    }
  }

  // Strides for mapping a flat input index to its output cell.
  std::vector<std::size_t> in_stride(t.rank(), 1), out_stride(t.rank(), 1);
  for (std::size_t a = t.rank(); a-- > 1;) {
    in_stride[a - 1] = in_stride[a] * t.shape()[a];
  }
  {
    std::size_t s = 1;
    for (std::size_t a = t.rank(); a-- > 0;) {
      out_stride[a] = reduced[a] ? 0 : s;
      if (!reduced[a]) s *= t.shape()[a];
    }
  }

  Tensor mean(out_shape);
  Tensor variance(out_shape);
  const std::size_t n = t.size();

  auto out_index = [&](std::size_t flat) {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < t.rank(); ++a) {
      const std::size_t coord = (flat / in_stride[a]) % t.shape()[a];
      idx += coord * out_stride[a];
    }
    return idx;
  };

  // Two-pass: means first, then centered second moments.
  for (std::size_t flat = 0; flat < n; ++flat) {
    mean[out_index(flat)] += t[flat];
  }
  for (std::size_t i = 0; i < mean.size(); ++i) {
    mean[i] /= static_cast<double>(slice_count);
  }
  for (std::size_t flat = 0; flat < n; ++flat) {
    const double d = t[flat] - mean[out_index(flat)];
    variance[out_index(flat)] += d * d;
  }
  for (std::size_t i = 0; i < variance.size(); ++i) {
    variance[i] /= static_cast<double>(slice_count);
  }
  return {std::move(mean), std::move(variance)};
}

Tensor gaussian(std::vector<std::size_t> shape, Rng& rng) {
  Tensor t(std::move(shape));
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = rng.next_gaussian();
  }
  return t;
}

namespace {

void require_same_shape(const Tensor& a, const Tensor& b, const char* op) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " +
                                shape_string(a.shape()) + " vs " + shape_string(b.shape()));
  }
}

}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "add");
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Tensor sub(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "sub");
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Tensor mul(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "mul");
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
  return out;
}

Tensor scale(const Tensor& a, double factor) {
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= factor;
  return out;
}

Tensor transpose(const Tensor& m) {
  if (m.rank() != 2) {
    throw std::invalid_argument("transpose: expected rank-2 tensor, got " +
                                shape_string(m.shape()));
  }
  const std::size_t rows = m.shape()[0];
  const std::size_t cols = m.shape()[1];
  Tensor out({cols, rows});
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out[j * rows + i] = m[i * cols + j];
    }
  }
  return out;
}

double sum(const Tensor& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) s += t[i];
  return s;
}

double max_abs(const Tensor& t) {
  double m = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) m = std::max(m, std::fabs(t[i]));
  return m;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace gfs
