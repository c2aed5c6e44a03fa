#pragma once

// The signed group ring Z[S] with commuting variables, restricted to variable
// monomials of degree at most two (enough for every Gram entry).  An element
// is a finite sum  c * g * m  with g a basis element (a generator mask; the
// group sign is folded into the integer coefficient c) and m a monomial.

#include <cstdint>
#include <string>
#include <vector>

#include "sodforge/signed_group.hpp"

namespace sodforge {

using VarIndex = std::uint32_t;

/// Sorted multiset of at most two variable indices.
class VarMonomial {
 public:
  static constexpr std::uint16_t kNone = 0xFFFF;
  static constexpr VarIndex kMaxVar = kNone - 1;

  constexpr VarMonomial() = default;
  static VarMonomial of(VarIndex v);
  static VarMonomial of(VarIndex v, VarIndex w);

  int degree() const { return (lo_ != kNone) + (hi_ != kNone); }
  std::uint16_t first() const { return lo_; }
  std::uint16_t second() const { return hi_; }
  std::uint32_t packed() const { return (std::uint32_t{lo_} << 16) | hi_; }
  static VarMonomial unpack(std::uint32_t packed);

  friend VarMonomial operator*(const VarMonomial& a, const VarMonomial& b);
  friend bool operator==(const VarMonomial&, const VarMonomial&) = default;
  friend auto operator<=>(const VarMonomial&, const VarMonomial&) = default;

 private:
  std::uint16_t lo_ = kNone, hi_ = kNone;
};

class RingElement {
 public:
  struct Term {
    std::uint64_t key;  // mask << 32 | monomial
    std::int64_t coeff;
    std::uint32_t mask() const { return static_cast<std::uint32_t>(key >> 32); }
    VarMonomial monomial() const { return VarMonomial::unpack(static_cast<std::uint32_t>(key)); }
    friend bool operator==(const Term&, const Term&) = default;
  };

  RingElement() = default;
  static RingElement term(const GroupElement& g, const VarMonomial& m, std::int64_t coeff = 1);
  static RingElement scalar(std::int64_t c) { return term(GroupElement::identity(), {}, c); }
  /// Sums arbitrary (possibly repeated, unsorted) terms.
  static RingElement from_terms(std::vector<Term> terms);
  static std::uint64_t make_key(std::uint32_t mask, const VarMonomial& m) {
    return (std::uint64_t{mask} << 32) | m.packed();
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t coefficient(std::uint32_t mask, const VarMonomial& m) const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other) { return *this += -other; }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(std::int64_t s, const RingElement& a);
  friend bool operator==(const RingElement&, const RingElement&) = default;

  /// Variable names are x1, x2, ... unless `names` is given.
  std::string to_string(const GroupPresentation& group,
                        const std::vector<std::string>& names = {}) const;

 private:
  std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

RingElement multiply(const GroupPresentation& group, const RingElement& a, const RingElement& b);
RingElement conjugate(const GroupPresentation& group, const RingElement& a);

}  // namespace sodforge
