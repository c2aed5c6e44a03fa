#include "sodforge/constructions.hpp"

#include <bit>
#include <string_view>

namespace sodforge {

unsigned rho(std::uint64_t n) {
  if (n == 0) throw Error("rho: n must be positive");
  const unsigned a = static_cast<unsigned>(std::countr_zero(n));
  return 8 * (a / 4) + (1U << (a % 4));
}

namespace {

// 2x2 building blocks.
const SignedPermMatrix kI = SignedPermMatrix::identity(2);
const SignedPermMatrix kR({1, 0}, {1, -1});  // [[0,1],[-1,0]], skew
const SignedPermMatrix kP({1, 0}, {1, 1});   // [[0,1],[1,0]]
const SignedPermMatrix kQ({0, 1}, {1, -1});  // diag(1,-1)

SignedPermMatrix tensor_word(std::string_view word) {
  SignedPermMatrix m = SignedPermMatrix::identity(1);
  for (char c : word) {
    switch (c) {
      case 'I': m = kronecker(m, kI); break;
      case 'R': m = kronecker(m, kR); break;
      case 'P': m = kronecker(m, kP); break;
      case 'Q': m = kronecker(m, kQ); break;
      default: throw Error("bad tensor word");
    }
  }
  return m;
}

// Base families: pairwise anticommuting skew words (an odd number of R factors
// makes a word skew; two words anticommute when an odd number of positions
// hold distinct non-identity letters).
std::vector<SignedPermMatrix> base_family(unsigned t) {
  static const std::vector<std::vector<std::string_view>> words = {
      {},
      {"R"},
      {"IR", "RP", "RQ"},
      {"IIR", "IRP", "RIQ", "RPP", "RQP", "PRQ", "QRQ"},
  };
  std::vector<SignedPermMatrix> out{SignedPermMatrix::identity(std::size_t{1} << t)};
  for (auto w : words.at(t)) out.push_back(tensor_word(w));
  return out;
}

// Order m, size s  ->  order 2m, size s + 1:  {R (x) I} u {Q (x) A_i}.
std::vector<SignedPermMatrix> doubled(const std::vector<SignedPermMatrix>& family) {
  const std::size_t m = family.front().order();
  std::vector<SignedPermMatrix> out{SignedPermMatrix::identity(2 * m),
                                    kronecker(kR, SignedPermMatrix::identity(m))};
  for (std::size_t i = 1; i < family.size(); ++i) out.push_back(kronecker(kQ, family[i]));
  return out;
}

// Order m, size s  ->  order 16m, size s + 8, using the order-16 family
// {g_1..g_8} and h = g_1 g_2 ... g_8, which is symmetric, squares to I and
// anticommutes with every g_i:  {g_i (x) I_m} u {h (x) A_j}.
std::vector<SignedPermMatrix> periodic_extension(const std::vector<SignedPermMatrix>& family,
                                                 const std::vector<SignedPermMatrix>& order16) {
  const std::size_t m = family.front().order();
  SignedPermMatrix h = SignedPermMatrix::identity(16);
  for (std::size_t i = 1; i < order16.size(); ++i) h = h * order16[i];
  std::vector<SignedPermMatrix> out{SignedPermMatrix::identity(16 * m)};
  for (std::size_t i = 1; i < order16.size(); ++i)
    out.push_back(kronecker(order16[i], SignedPermMatrix::identity(m)));
  for (std::size_t j = 1; j < family.size(); ++j) out.push_back(kronecker(h, family[j]));
  return out;
}

}  // namespace

std::vector<SignedPermMatrix> hurwitz_radon_family(unsigned t) {
  if (t > 12) throw Error("hurwitz_radon_family: t > 12 is not supported");
  if (t <= 3) return base_family(t);
  if (t == 4) return doubled(base_family(3));
  return periodic_extension(hurwitz_radon_family(t - 4), hurwitz_radon_family(4));
}

DesignMatrix hurwitz_radon_design(unsigned t) {
  const auto family = hurwitz_radon_family(t);
  const std::size_t m = family.front().order();
  DesignMatrix d(m, GroupPresentation::real(), std::vector<std::int64_t>(family.size(), 1));
  for (VarIndex i = 0; i < family.size(); ++i)
    for (std::size_t r = 0; r < m; ++r) {
      if (!d.at(r, family[i].column(r)).is_zero()) throw Error("Hurwitz-Radon family is not disjoint");
      d.set(r, family[i].column(r), {family[i].sign(r), 0}, i);
    }
  return d;
}

std::vector<SignedPermMatrix> ip_tensor_family(unsigned n) {
  if (n < 1 || n > 20) throw Error("ip_tensor_family: n must be in [1, 20]");
  std::vector<SignedPermMatrix> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t w = 0; w < (std::size_t{1} << n); ++w) {
    SignedPermMatrix b = SignedPermMatrix::identity(1);
    for (unsigned f = 0; f < n; ++f) b = kronecker(b, (w >> (n - 1 - f)) & 1U ? kP : kI);
    out.push_back(std::move(b));
  }
  return out;
}

DesignMatrix sod_power2(unsigned n) {
  if (n < 3) throw Error("sod_power2: n must exceed 2");
  const auto group = GroupPresentation::clifford(static_cast<int>(n));
  const auto blocks = ip_tensor_family(n);
  const std::size_t order = std::size_t{1} << n;
  DesignMatrix d(order, group, std::vector<std::int64_t>(order, 1));
  for (VarIndex i = 0; i < blocks.size(); ++i) {
    const GroupElement s = i == 0 ? GroupElement::identity() : group.generator(i - 1);
    for (std::size_t r = 0; r < order; ++r) {
      const std::size_t c = blocks[i].column(r);
      if (!d.at(r, c).is_zero()) throw Error("sod_power2: I/P products are not disjoint");
      d.set(r, c, s, i);
    }
  }
  return d;
}

ElementMatrix kronecker(const GroupPresentation& group, const ElementMatrix& a, const ElementMatrix& b) {
  ElementMatrix out(a.order * b.order);
  for (std::size_t i = 0; i < a.order; ++i)
    for (std::size_t j = 0; j < a.order; ++j) {
      if (!a.at(i, j)) continue;
      for (std::size_t k = 0; k < b.order; ++k)
        for (std::size_t l = 0; l < b.order; ++l)
          if (b.at(k, l)) out.at(i * b.order + k, j * b.order + l) = group.multiply(*a.at(i, j), *b.at(k, l));
    }
  return out;
}

std::vector<ElementMatrix> order32_blocks() {
  const auto group = GroupPresentation::clifford_prime(4);
  const GroupElement one = GroupElement::identity();
  const GroupElement s = group.generator(0);
  const GroupElement s1 = group.generator(1);

  auto two_by_two = [](std::optional<GroupElement> a, std::optional<GroupElement> b,
                       std::optional<GroupElement> c, std::optional<GroupElement> d) {
    ElementMatrix m(2);
    m.at(0, 0) = a, m.at(0, 1) = b, m.at(1, 0) = c, m.at(1, 1) = d;
    return m;
  };
  const ElementMatrix I = two_by_two(one, std::nullopt, std::nullopt, one);
  const ElementMatrix P = two_by_two(std::nullopt, one, one, std::nullopt);
  const ElementMatrix A = two_by_two(s1, one, one, s1);
  const ElementMatrix Is = two_by_two(s, std::nullopt, std::nullopt, s);
  const ElementMatrix Ps = two_by_two(std::nullopt, s, s, std::nullopt);

  auto chain = [&](std::initializer_list<const ElementMatrix*> factors) {
    ElementMatrix m(1);
    m.at(0, 0) = one;
    for (const ElementMatrix* f : factors) m = kronecker(group, m, *f);
    return m;
  };
  return {
      chain({&I, &I, &Is, &Is, &Is}), chain({&I, &I, &Is, &Is, &Ps}), chain({&I, &I, &Is, &Ps, &Is}),
      chain({&I, &I, &Ps, &Is, &Is}), chain({&I, &I, &Is, &Ps, &Ps}), chain({&I, &I, &Ps, &Is, &Ps}),
      chain({&I, &I, &Ps, &Ps, &Is}), chain({&I, &I, &Ps, &Ps, &Ps}), chain({&P, &I, &A, &A, &A}),
      chain({&I, &P, &A, &A, &A}),    chain({&P, &P, &A, &A, &A}),
  };
}

DesignMatrix sod_order32() {
  const auto group = GroupPresentation::clifford_prime(4);
  const auto blocks = order32_blocks();
  const std::size_t order = blocks.front().order;
  DesignMatrix d(order, group, {1, 1, 1, 1, 1, 1, 1, 1, 8, 8, 8});
  for (VarIndex i = 0; i < blocks.size(); ++i) {
    // B_{i+1} s_{i+2} x_{i+1} in 1-based terms; s_alpha is generator alpha + 1 here.
    const GroupElement coefficient = group.generator(i + 2);
    for (std::size_t r = 0; r < order; ++r)
      for (std::size_t c = 0; c < order; ++c) {
        const auto& e = blocks[i].at(r, c);
        if (!e) continue;
        if (!d.at(r, c).is_zero()) throw Error("sod_order32: blocks are not disjoint");
        d.set(r, c, group.multiply(*e, coefficient), i);
      }
  }
  if (!d.is_full()) throw Error("sod_order32: blocks are not supplementary");
  return d;
}

std::vector<std::vector<VarIndex>> order32_equating_blocks() {
  return {{5}, {6}, {7}, {0, 8}, {1, 9}, {2, 3, 4, 10}};
}

DesignMatrix sylvester_design(unsigned t) {
  const IntMatrix h = sylvester_hadamard(t);
  DesignMatrix d(h.rows(), GroupPresentation::real(), {static_cast<std::int64_t>(h.rows())});
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) d.set(r, c, {static_cast<int>(h(r, c)), 0}, 0);
  return d;
}

}  // namespace sodforge
