#pragma once

// Monomial {0,+-1} matrices (the signed group SP_m).  Row r holds its single
// nonzero entry signs[r] in column columns[r].

#include <cstdint>
#include <vector>

#include "sodforge/int_matrix.hpp"

namespace sodforge {

class SignedPermMatrix {
 public:
  SignedPermMatrix() = default;
  SignedPermMatrix(std::vector<std::size_t> columns, std::vector<int> signs);

  static SignedPermMatrix identity(std::size_t order);
  /// Throws unless `dense` is square with exactly one +-1 per row and column.
  static SignedPermMatrix from_dense(const IntMatrix& dense);

  std::size_t order() const { return columns_.size(); }
  std::size_t column(std::size_t row) const { return columns_[row]; }
  int sign(std::size_t row) const { return signs_[row]; }
  int at(std::size_t row, std::size_t col) const {
    return columns_[row] == col ? signs_[row] : 0;
  }

  SignedPermMatrix transpose() const;
  SignedPermMatrix negated() const;
  bool is_identity() const;
  bool is_symmetric() const { return *this == transpose(); }
  bool is_skew() const { return negated() == transpose(); }
  IntMatrix to_dense() const;

  friend SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b);
  friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;

 private:
  std::vector<std::size_t> columns_;
  std::vector<int> signs_;
};

SignedPermMatrix kronecker(const SignedPermMatrix& a, const SignedPermMatrix& b);

/// Entrywise product is zero.
bool disjoint(const SignedPermMatrix& a, const SignedPermMatrix& b);
/// A B^T = B A^T.
bool amicable(const SignedPermMatrix& a, const SignedPermMatrix& b);
/// A B^T = -B A^T.
bool anti_amicable(const SignedPermMatrix& a, const SignedPermMatrix& b);
bool anticommute(const SignedPermMatrix& a, const SignedPermMatrix& b);

}  // namespace sodforge
