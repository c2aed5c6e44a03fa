#include "sodforge/signed_perm.hpp"

#include "sodforge/signed_group.hpp"

namespace sodforge {

SignedPermMatrix::SignedPermMatrix(std::vector<std::size_t> columns, std::vector<int> signs)
    : columns_(std::move(columns)), signs_(std::move(signs)) {
  if (columns_.size() != signs_.size()) throw Error("signed permutation: size mismatch");
  std::vector<bool> seen(columns_.size(), false);
  for (std::size_t r = 0; r < columns_.size(); ++r) {
    if (columns_[r] >= columns_.size() || seen[columns_[r]])
      throw Error("signed permutation: columns do not form a permutation");
    if (signs_[r] != 1 && signs_[r] != -1) throw Error("signed permutation: signs must be +-1");
    seen[columns_[r]] = true;
  }
}

SignedPermMatrix SignedPermMatrix::identity(std::size_t order) {
  std::vector<std::size_t> cols(order);
  for (std::size_t i = 0; i < order; ++i) cols[i] = i;
  return {std::move(cols), std::vector<int>(order, 1)};
}

SignedPermMatrix SignedPermMatrix::from_dense(const IntMatrix& dense) {
  if (dense.rows() != dense.cols()) throw Error("signed permutation: matrix is not square");
  std::vector<std::size_t> cols(dense.rows());
  std::vector<int> signs(dense.rows());
  for (std::size_t r = 0; r < dense.rows(); ++r) {
    int found = 0;
    for (std::size_t c = 0; c < dense.cols(); ++c) {
      const auto v = dense(r, c);
      if (v == 0) continue;
      if ((v != 1 && v != -1) || found++) throw Error("signed permutation: not monomial");
      cols[r] = c;
      signs[r] = static_cast<int>(v);
    }
    if (!found) throw Error("signed permutation: zero row");
  }
  return {std::move(cols), std::move(signs)};
}

SignedPermMatrix SignedPermMatrix::transpose() const {
  std::vector<std::size_t> cols(order());
  std::vector<int> signs(order());
  for (std::size_t r = 0; r < order(); ++r) {
    cols[columns_[r]] = r;
    signs[columns_[r]] = signs_[r];
  }
  return {std::move(cols), std::move(signs)};
}

SignedPermMatrix SignedPermMatrix::negated() const {
  SignedPermMatrix out = *this;
  for (auto& s : out.signs_) s = -s;
  return out;
}

bool SignedPermMatrix::is_identity() const {
  for (std::size_t r = 0; r < order(); ++r)
    if (columns_[r] != r || signs_[r] != 1) return false;
  return true;
}

IntMatrix SignedPermMatrix::to_dense() const {
  IntMatrix out(order(), order());
  for (std::size_t r = 0; r < order(); ++r) out(r, columns_[r]) = signs_[r];
  return out;
}

SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.order() != b.order()) throw Error("signed permutation product: order mismatch");
  std::vector<std::size_t> cols(a.order());
  std::vector<int> signs(a.order());
  for (std::size_t r = 0; r < a.order(); ++r) {
    const std::size_t mid = a.columns_[r];
    cols[r] = b.columns_[mid];
    signs[r] = a.signs_[r] * b.signs_[mid];
  }
  return {std::move(cols), std::move(signs)};
}

SignedPermMatrix kronecker(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  const std::size_t n = b.order();
  std::vector<std::size_t> cols(a.order() * n);
  std::vector<int> signs(a.order() * n);
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      cols[i * n + k] = a.column(i) * n + b.column(k);
      signs[i * n + k] = a.sign(i) * b.sign(k);
    }
  return {std::move(cols), std::move(signs)};
}

bool disjoint(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.order() != b.order()) throw Error("disjointness test: order mismatch");
  for (std::size_t r = 0; r < a.order(); ++r)
    if (a.column(r) == b.column(r)) return false;
  return true;
}

bool amicable(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.order() != b.order()) throw Error("amicability test: order mismatch");
  return a * b.transpose() == b * a.transpose();
}

bool anti_amicable(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.order() != b.order()) throw Error("anti-amicability test: order mismatch");
  return a * b.transpose() == (b * a.transpose()).negated();
}

bool anticommute(const SignedPermMatrix& a, const SignedPermMatrix& b) {
  if (a.order() != b.order()) throw Error("anticommutation test: order mismatch");
  return a * b == (b * a).negated();
}

}  // namespace sodforge
