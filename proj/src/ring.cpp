#include "sodforge/ring.hpp"

#include <algorithm>
#include <sstream>

namespace sodforge {

VarMonomial VarMonomial::of(VarIndex v) {
  if (v > kMaxVar) throw Error("variable index out of range");
  VarMonomial m;
  m.lo_ = static_cast<std::uint16_t>(v);
  return m;
}

VarMonomial VarMonomial::of(VarIndex v, VarIndex w) {
  if (v > kMaxVar || w > kMaxVar) throw Error("variable index out of range");
  VarMonomial m;
  m.lo_ = static_cast<std::uint16_t>(std::min(v, w));
  m.hi_ = static_cast<std::uint16_t>(std::max(v, w));
  return m;
}

VarMonomial VarMonomial::unpack(std::uint32_t packed) {
  VarMonomial m;
  m.lo_ = static_cast<std::uint16_t>(packed >> 16);
  m.hi_ = static_cast<std::uint16_t>(packed & 0xFFFF);
  return m;
}

VarMonomial operator*(const VarMonomial& a, const VarMonomial& b) {
  if (a.degree() + b.degree() > 2) throw Error("monomial degree exceeds 2");
  if (a.degree() == 0) return b;
  if (b.degree() == 0) return a;
  return VarMonomial::of(a.lo_, b.lo_);
}

RingElement RingElement::term(const GroupElement& g, const VarMonomial& m, std::int64_t coeff) {
  RingElement out;
  if (coeff != 0) out.terms_.push_back({make_key(g.mask, m), coeff * g.sign});
  return out;
}

RingElement RingElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  RingElement out;
  for (const Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().key == t.key) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

std::int64_t RingElement::coefficient(std::uint32_t mask, const VarMonomial& m) const {
  const std::uint64_t key = make_key(mask, m);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  return (it != terms_.end() && it->key == key) ? it->coeff : 0;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.cbegin();
  auto b = other.terms_.cbegin();
  while (a != terms_.cend() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.cend() && a->key < b->key)) {
      merged.push_back(*a++);
    } else if (a == terms_.cend() || b->key < a->key) {
      merged.push_back(*b++);
    } else {
      const std::int64_t c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->key, c});
      ++a, ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RingElement operator*(std::int64_t s, const RingElement& a) {
  if (s == 0) return {};
  RingElement out = a;
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

RingElement multiply(const GroupPresentation& group, const RingElement& a, const RingElement& b) {
  std::vector<RingElement::Term> terms;
  terms.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      const GroupElement g = group.multiply({1, ta.mask()}, {1, tb.mask()});
      const VarMonomial m = ta.monomial() * tb.monomial();
      terms.push_back({RingElement::make_key(g.mask, m), g.sign * ta.coeff * tb.coeff});
    }
  return RingElement::from_terms(std::move(terms));
}

RingElement conjugate(const GroupPresentation& group, const RingElement& a) {
  std::vector<RingElement::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    const GroupElement g = group.conjugate({1, t.mask()});
    terms.push_back({t.key, g.sign * t.coeff});
  }
  return RingElement::from_terms(std::move(terms));
}

std::string RingElement::to_string(const GroupPresentation& group,
                                   const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](std::uint16_t v) {
    return v < names.size() ? names[v] : "x" + std::to_string(v + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = t.coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    first = false;
    const std::string word = group.format_word(t.mask());
    const VarMonomial m = t.monomial();
    std::string mono;
    if (m.degree() == 2 && m.first() == m.second()) {
      mono = var_name(m.first()) + "^2";
    } else if (m.degree() == 2) {
      mono = var_name(m.first()) + "*" + var_name(m.second());
    } else if (m.degree() == 1) {
      mono = var_name(m.first());
    }
    std::string body = word;
    if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;
    if (body.empty()) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << body;
    }
  }
  return os.str();
}

}  // namespace sodforge
