#pragma once

// Presented "Clifford-like" signed groups: generators g_1..g_k that pairwise
// anticommute, each squaring to +1 or -1.  Elements are kept in the canonical
// form  sign * g_{a_1} g_{a_2} ... g_{a_r}  with a_1 < a_2 < ... < a_r, stored
// as a sign and a generator bitmask.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sodforge/error.hpp"

namespace sodforge {

/// Element of a presented signed group.
struct GroupElement {
  int sign = 1;        // +1 or -1
  std::uint32_t mask = 0;  // bit a set <=> generator g_{a+1} occurs

  static constexpr GroupElement identity() { return {1, 0}; }
  constexpr GroupElement negated() const { return {-sign, mask}; }
  constexpr bool is_identity() const { return sign == 1 && mask == 0; }

  friend constexpr bool operator==(const GroupElement&, const GroupElement&) = default;
  friend constexpr auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class GroupPresentation {
 public:
  static constexpr std::size_t kMaxGenerators = 32;
  static constexpr std::size_t kDefaultEnumerateBound = 12;

  GroupPresentation() : name_("SR") {}
  GroupPresentation(std::string name, std::vector<int> square_signs);

  // Predefined families.
  static GroupPresentation real();        // S_R = {+-1}
  static GroupPresentation complex();     // S_C = <i : i^2 = -1>
  static GroupPresentation quaternion();  // S_Q = <j, k : j^2 = k^2 = -1, jk = -kj>
  static GroupPresentation clifford(int n);        // S(n): 2^n - 1 generators, squares -1
  static GroupPresentation clifford_prime(int n);  // S'(n): s^2 = 1, then 2^n - 4 with squares -1

  /// Resolves "SR", "SC", "SQ", "S<n>", "Sprime<n>".
  static GroupPresentation by_name(std::string_view name);

  const std::string& name() const { return name_; }
  std::size_t generator_count() const { return square_signs_.size(); }
  const std::vector<int>& square_signs() const { return square_signs_; }
  int square_sign(std::size_t generator) const { return square_signs_.at(generator); }

  bool contains(const GroupElement& a) const;

  GroupElement generator(std::size_t index) const;  // 0-based
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  /// Inverse; this is the conjugation of the signed group ring on basis elements.
  GroupElement conjugate(const GroupElement& a) const;

  /// All 2^(k+1) signed elements, ordered by mask then sign (+ before -).
  std::vector<GroupElement> enumerate(std::size_t bound = kDefaultEnumerateBound) const;

  /// "+1", "-1", "+g1*g3", "-g2".
  std::string format(const GroupElement& a) const;
  /// Accepts the format() output plus the aliases i (S_C) and j, k (S_Q);
  /// '*' between generators is optional, and a missing sign means '+'.
  GroupElement parse(std::string_view text) const;

  /// Generator word without sign, e.g. "g1g2"; empty for the identity mask.
  std::string format_word(std::uint32_t mask) const;
  std::uint32_t parse_word(std::string_view text) const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  void check(const GroupElement& a) const;

  std::string name_;
  std::vector<int> square_signs_;
  std::uint32_t full_mask_ = 0;
  std::uint32_t square_minus_mask_ = 0;  // generators with square -1
};

}  // namespace sodforge
