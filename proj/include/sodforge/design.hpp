#pragma once

// Design matrices: square matrices whose entries are 0 or (group element) * x_v,
// together with a claimed type vector (u_1, ..., u_k).  ODs, CODs, SODs, SWs
// and SHs are all carried by this type.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sodforge/ring.hpp"
#include "sodforge/signed_group.hpp"

namespace sodforge {

class Entry {
 public:
  constexpr Entry() = default;
  static constexpr Entry zero() { return {}; }
  static Entry term(const GroupElement& g, VarIndex var);

  bool is_zero() const { return sign_ == 0; }
  GroupElement element() const { return {sign_, mask_}; }
  VarIndex var() const { return var_; }

  friend bool operator==(const Entry&, const Entry&) = default;

 private:
  std::uint32_t mask_ = 0;
  std::uint16_t var_ = 0;
  std::int8_t sign_ = 0;  // 0 marks the zero entry
};

class DesignMatrix {
 public:
  DesignMatrix() = default;
  /// All-zero matrix of the given shape; fill with set().
  DesignMatrix(std::size_t order, GroupPresentation group, std::vector<std::int64_t> type);

  std::size_t order() const { return order_; }
  const GroupPresentation& group() const { return group_; }
  std::size_t var_count() const { return type_.size(); }
  const std::vector<std::int64_t>& type() const { return type_; }

  const Entry& at(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }
  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + r * order_, order_};
  }
  void set(std::size_t r, std::size_t c, Entry e);
  /// Convenience for set(r, c, Entry::term(g, var)).
  void set(std::size_t r, std::size_t c, const GroupElement& g, VarIndex var);

  void set_type(std::vector<std::int64_t> type);

  std::size_t nonzero_count() const;
  bool is_full() const { return nonzero_count() == order_ * order_; }

  friend bool operator==(const DesignMatrix&, const DesignMatrix&) = default;

 private:
  std::size_t order_ = 0;
  GroupPresentation group_;
  std::vector<std::int64_t> type_;
  std::vector<Entry> entries_;
};

/// (X*)_{ab} = conj(X_{ba}).
DesignMatrix conj_transpose(const DesignMatrix& x);

/// n x n matrix of ring elements.
struct RingMatrix {
  std::size_t order = 0;
  std::vector<RingElement> entries;
  const RingElement& at(std::size_t r, std::size_t c) const { return entries[r * order + c]; }
};

/// Entry (a, b) of X X*.
RingElement gram_entry(const DesignMatrix& x, std::size_t a, std::size_t b);
/// Exact X X* in the signed group ring.
RingMatrix gram(const DesignMatrix& x, unsigned jobs = 0);

/// (sum_i u_i x_i^2) as a ring element.
RingElement diagonal_form(const std::vector<std::int64_t>& type);

struct VerifyFailure {
  std::size_t row = 0, col = 0;
  RingElement residual;  // gram entry minus the expected value
  bool transposed_side = false;  // failure found in X* X rather than X X*
};

struct VerifyResult {
  bool ok = true;
  std::optional<VerifyFailure> failure;
  explicit operator bool() const { return ok; }
};

struct VerifyOptions {
  bool both_sides = false;  // also check X* X
  unsigned jobs = 0;        // 0 = hardware concurrency
};

/// Exact check that X X* = (sum_i u_i x_i^2) I_n; stops at the first failing entry.
VerifyResult verify_sod(const DesignMatrix& x, const VerifyOptions& options = {});

struct RandomizedOptions {
  unsigned trials = 3;
  std::uint64_t prime = 0;  // 0 = default for the group
  std::uint64_t seed = 0x5eed;
  /// Orders above this use a Freivalds projection instead of the full numeric Gram.
  std::size_t dense_limit = 1024;
};

struct RandomizedResult {
  bool ok = true;
  unsigned trials_run = 0;
  std::uint64_t prime = 0;
  std::optional<std::size_t> failed_trial;
  explicit operator bool() const { return ok; }
};

std::uint64_t default_prime(const GroupPresentation& group);
bool is_prime(std::uint64_t p);

/// Evaluates the Gram identity at random points modulo a prime.  Only designs
/// over S_R or S_C (scalar entries) are accepted; for S_C the prime must be
/// 1 mod 4 so that i has an image.
RandomizedResult verify_scalar_randomized(const DesignMatrix& x, const RandomizedOptions& options = {});

/// Merges each block of variables into one new variable (block order = new
/// variable order); the new type entry is the sum of the merged ones.
DesignMatrix equate_variables(const DesignMatrix& x, const std::vector<std::vector<VarIndex>>& blocks);

/// Y_{rc} = row_scale[r] * X_{row_perm[r], col_perm[c]} * col_scale[c].
/// Empty vectors stand for the identity permutation / unit scales.
DesignMatrix apply_equivalence(const DesignMatrix& x, std::span<const std::size_t> row_perm,
                               std::span<const std::size_t> col_perm,
                               std::span<const GroupElement> row_scale,
                               std::span<const GroupElement> col_scale);

}  // namespace sodforge
