#pragma once

#include <optional>
#include <vector>

#include "sodforge/design.hpp"
#include "sodforge/int_matrix.hpp"
#include "sodforge/signed_perm.hpp"

namespace sodforge {

/// Radon-Hurwitz number: n = 2^a * odd, a = 4c + d (0 <= d < 4)  ->  8c + 2^d.
unsigned rho(std::uint64_t n);

/// {I, A_1, ..., A_{rho(2^t)-1}}: pairwise disjoint, pairwise anti-amicable
/// signed permutation matrices of order 2^t (A_i skew, A_i A_j = -A_j A_i).
std::vector<SignedPermMatrix> hurwitz_radon_family(unsigned t);

/// The family as a design: sum_i x_i A_i, an OD(2^t; 1_(rho)).
DesignMatrix hurwitz_radon_design(unsigned t);

/// The 2^n n-fold Kronecker products of I and P = [[0,1],[1,0]].  Member w
/// takes P at factor f (0 = leftmost) when bit (n-1-f) of w is set, so
/// (B_w)_{rc} = 1 exactly when r xor c = w.
std::vector<SignedPermMatrix> ip_tensor_family(unsigned n);

/// D = sum_{i < 2^n} s_i x_i B_i over S(n), with s_0 = 1 and s_i the i-th
/// generator; an SOD(2^n; 1_(2^n), S(n)).
DesignMatrix sod_power2(unsigned n);

/// Square matrix of group elements or zeros.
struct ElementMatrix {
  std::size_t order = 0;
  std::vector<std::optional<GroupElement>> entries;

  ElementMatrix() = default;
  explicit ElementMatrix(std::size_t n) : order(n), entries(n * n) {}
  const std::optional<GroupElement>& at(std::size_t r, std::size_t c) const { return entries[r * order + c]; }
  std::optional<GroupElement>& at(std::size_t r, std::size_t c) { return entries[r * order + c]; }
};

/// Kronecker product with entries multiplied in the group (left factor on the left).
ElementMatrix kronecker(const GroupPresentation& group, const ElementMatrix& a, const ElementMatrix& b);

/// The eleven order-32 blocks B_1..B_11 over S'(4), built from I, P and
///   A = [[s1, 1], [1, s1]],  I_s = s I_2,  P_s = s P.
std::vector<ElementMatrix> order32_blocks();

/// sum_{i=1}^{11} B_i s_{i+1} x_i: an SOD(32; 1_(8), 8, 8, 8, S'(4)).
DesignMatrix sod_order32();

/// Blocks (0-based variables) that equate the order-32 design above into type
/// (1, 1, 1, 9, 9, 11).
std::vector<std::vector<VarIndex>> order32_equating_blocks();

/// Sylvester Hadamard matrix as a single-variable design over S_R.
DesignMatrix sylvester_design(unsigned t);

}  // namespace sodforge
