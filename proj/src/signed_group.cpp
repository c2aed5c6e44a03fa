#include "sodforge/signed_group.hpp"

#include <bit>
#include <cctype>
#include <charconv>

namespace sodforge {

namespace {

int parity_sign(unsigned count) { return (count & 1U) ? -1 : 1; }

}  // namespace

GroupPresentation::GroupPresentation(std::string name, std::vector<int> square_signs)
    : name_(std::move(name)), square_signs_(std::move(square_signs)) {
  if (square_signs_.size() > kMaxGenerators)
    throw Error("group " + name_ + ": at most 32 generators are supported");
  for (std::size_t a = 0; a < square_signs_.size(); ++a) {
    if (square_signs_[a] != 1 && square_signs_[a] != -1)
      throw Error("group " + name_ + ": square signs must be +1 or -1");
    full_mask_ |= 1U << a;
    if (square_signs_[a] == -1) square_minus_mask_ |= 1U << a;
  }
}

GroupPresentation GroupPresentation::real() { return {"SR", {}}; }
GroupPresentation GroupPresentation::complex() { return {"SC", {-1}}; }
GroupPresentation GroupPresentation::quaternion() { return {"SQ", {-1, -1}}; }

GroupPresentation GroupPresentation::clifford(int n) {
  if (n < 1 || n > 5) throw Error("S(n) is supported for 1 <= n <= 5");
  return {"S" + std::to_string(n), std::vector<int>((1U << n) - 1, -1)};
}

GroupPresentation GroupPresentation::clifford_prime(int n) {
  if (n < 3 || n > 5) throw Error("S'(n) is supported for 3 <= n <= 5");
  std::vector<int> squares((1U << n) - 3, -1);
  squares[0] = 1;
  return {"Sprime" + std::to_string(n), std::move(squares)};
}

GroupPresentation GroupPresentation::by_name(std::string_view name) {
  if (name == "SR") return real();
  if (name == "SC") return complex();
  if (name == "SQ") return quaternion();
  auto parse_n = [&](std::string_view digits) {
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw Error("unknown group name '" + std::string(name) + "'");
    return n;
  };
  if (name.starts_with("Sprime")) return clifford_prime(parse_n(name.substr(6)));
  if (name.starts_with("S")) return clifford(parse_n(name.substr(1)));
  throw Error("unknown group name '" + std::string(name) + "'");
}

bool GroupPresentation::contains(const GroupElement& a) const {
  return (a.sign == 1 || a.sign == -1) && (a.mask & ~full_mask_) == 0;
}

void GroupPresentation::check(const GroupElement& a) const {
  if (!contains(a)) throw Error("element does not belong to group " + name_);
}

GroupElement GroupPresentation::generator(std::size_t index) const {
  if (index >= generator_count()) throw Error("generator index out of range for " + name_);
  return {1, 1U << index};
}

GroupElement GroupPresentation::multiply(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  // Moving each generator of b left past the larger generators of a costs one
  // sign flip per transposition; shared generators then collapse to their squares.
  unsigned swaps = 0;
  for (std::uint32_t rest = b.mask; rest != 0; rest &= rest - 1) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    const std::uint32_t above = (j >= 31) ? 0U : (a.mask & ~((2U << j) - 1U));
    swaps += static_cast<unsigned>(std::popcount(above));
  }
  const std::uint32_t shared = a.mask & b.mask;
  swaps += static_cast<unsigned>(std::popcount(shared & square_minus_mask_));
  return {a.sign * b.sign * parity_sign(swaps), a.mask ^ b.mask};
}

GroupElement GroupPresentation::conjugate(const GroupElement& a) const {
  check(a);
  const unsigned k = static_cast<unsigned>(std::popcount(a.mask));
  const unsigned flips =
      static_cast<unsigned>(std::popcount(a.mask & square_minus_mask_)) + k * (k - 1) / 2;
  return {a.sign * parity_sign(flips), a.mask};
}

std::vector<GroupElement> GroupPresentation::enumerate(std::size_t bound) const {
  if (generator_count() > bound)
    throw Error("group " + name_ + " has " + std::to_string(generator_count()) +
                " generators; enumeration bound is " + std::to_string(bound));
  std::vector<GroupElement> out;
  out.reserve(std::size_t{2} << generator_count());
  for (std::uint32_t mask = 0; mask <= full_mask_; ++mask) {
    out.push_back({1, mask});
    out.push_back({-1, mask});
    if (mask == full_mask_) break;
  }
  return out;
}

std::string GroupPresentation::format_word(std::uint32_t mask) const {
  std::string out;
  for (std::size_t a = 0; a < generator_count(); ++a)
    if (mask & (1U << a)) out += "g" + std::to_string(a + 1);
  return out;
}

std::string GroupPresentation::format(const GroupElement& a) const {
  check(a);
  std::string out = a.sign > 0 ? "+" : "-";
  if (a.mask == 0) return out + "1";
  bool first = true;
  for (std::size_t g = 0; g < generator_count(); ++g) {
    if (!(a.mask & (1U << g))) continue;
    if (!first) out += '*';
    out += "g" + std::to_string(g + 1);
    first = false;
  }
  return out;
}

std::uint32_t GroupPresentation::parse_word(std::string_view text) const {
  // Generators are multiplied left to right, so a non-canonical word such as
  // "g2g1" is accepted and folded into the sign via parse().
  std::uint32_t mask = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    const char c = text[pos];
    if (c == '*') {
      ++pos;
      continue;
    }
    std::size_t index = 0;
    if (c == 'g') {
      std::size_t end = pos + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos + 1) throw Error("malformed generator in '" + std::string(text) + "'");
      std::from_chars(text.data() + pos + 1, text.data() + end, index);
      if (index == 0 || index > generator_count())
        throw Error("generator g" + std::to_string(index) + " not in group " + name_);
      --index;
      pos = end;
    } else if (c == 'i' && name_ == "SC") {
      index = 0, ++pos;
    } else if ((c == 'j' || c == 'k') && name_ == "SQ") {
      index = (c == 'j') ? 0 : 1, ++pos;
    } else {
      throw Error("unexpected character in group element '" + std::string(text) + "'");
    }
    if (mask & (1U << index)) throw Error("repeated generator in '" + std::string(text) + "'");
    mask |= 1U << index;
  }
  return mask;
}

GroupElement GroupPresentation::parse(std::string_view text) const {
  int sign = 1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  if (text == "1") return {sign, 0};
  if (text.empty()) throw Error("empty group element");
  // Multiply generators in the order written so that e.g. "kj" parses to -jk.
  GroupElement acc{sign, 0};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = pos + 1;
    if (text[pos] == '*') {
      ++pos;
      continue;
    }
    if (text[pos] == 'g')
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    const std::uint32_t gen = parse_word(text.substr(pos, end - pos));
    acc = multiply(acc, {1, gen});
    pos = end;
  }
  return acc;
}

}  // namespace sodforge
