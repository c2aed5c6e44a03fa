#include "sodforge/int_matrix.hpp"

#include "sodforge/signed_group.hpp"

namespace sodforge {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product: dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t v = a(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += v * b(k, c);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum: dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& v : out.data_) v *= s;
  return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::int64_t v = a(i, j);
      if (v == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
    }
  return out;
}

IntMatrix sylvester_hadamard(unsigned t) {
  if (t > 14) throw Error("Sylvester Hadamard order 2^t is limited to t <= 14");
  const IntMatrix h2{{1, 1}, {1, -1}};
  IntMatrix h = IntMatrix::identity(1);
  for (unsigned i = 0; i < t; ++i) h = kronecker(h, h2);
  return h;
}

bool is_hadamard(const IntMatrix& h) {
  if (h.rows() != h.cols()) return false;
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (h(r, c) != 1 && h(r, c) != -1) return false;
  return h * h.transpose() == static_cast<std::int64_t>(h.rows()) * IntMatrix::identity(h.rows());
}

}  // namespace sodforge
