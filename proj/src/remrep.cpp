#include "sodforge/remrep.hpp"

#include <bit>
#include <unordered_map>

#include "sodforge/constructions.hpp"

namespace sodforge {

Remrep::Remrep(GroupPresentation source, std::vector<SignedPermMatrix> generator_images)
    : source_(std::move(source)), images_(std::move(generator_images)) {
  if (images_.size() != source_.generator_count())
    throw Error("remrep: need one image per generator of " + source_.name());
  if (!images_.empty()) degree_ = images_.front().order();
  for (const auto& m : images_)
    if (m.order() != degree_) throw Error("remrep: generator images differ in order");
}

SignedPermMatrix Remrep::image(const GroupElement& g) const {
  if (!source_.contains(g)) throw Error("remrep: element not in " + source_.name());
  SignedPermMatrix out = SignedPermMatrix::identity(degree_);
  for (std::size_t a = 0; a < images_.size(); ++a)
    if (g.mask & (1U << a)) out = out * images_[a];
  return g.sign < 0 ? out.negated() : out;
}

RemrepCheck validate(const Remrep& phi) {
  const auto& images = phi.generator_images();
  const auto identity = SignedPermMatrix::identity(phi.degree());
  for (std::size_t a = 0; a < images.size(); ++a) {
    const auto expected = phi.source().square_sign(a) > 0 ? identity : identity.negated();
    if (images[a] * images[a] != expected)
      return {false, "image of g" + std::to_string(a + 1) + " does not square to " +
                         (phi.source().square_sign(a) > 0 ? "+I" : "-I")};
    for (std::size_t b = a + 1; b < images.size(); ++b)
      if (!anticommute(images[a], images[b]))
        return {false, "images of g" + std::to_string(a + 1) + " and g" + std::to_string(b + 1) +
                           " do not anticommute"};
  }
  return {};
}

namespace {

unsigned family_exponent(unsigned n) {
  if (n < 3 || n > 4) throw Error("canonical remreps are available for n = 3, 4 (degree <= 128)");
  return (1U << (n - 1)) - 1;
}

}  // namespace

Remrep canonical_remrep_S(unsigned n) {
  const auto family = hurwitz_radon_family(family_exponent(n));
  const auto group = GroupPresentation::clifford(static_cast<int>(n));
  if (family.size() != group.generator_count() + 1) throw Error("Hurwitz-Radon family has unexpected size");
  return {group, std::vector<SignedPermMatrix>(family.begin() + 1, family.end())};
}

Remrep canonical_remrep_Sprime(unsigned n) {
  const auto family = hurwitz_radon_family(family_exponent(n));
  const auto group = GroupPresentation::clifford_prime(static_cast<int>(n));
  const std::size_t top = (std::size_t{1} << n) - 1;
  std::vector<SignedPermMatrix> images{family[top - 2] * family[top - 1] * family[top]};
  for (std::size_t a = 1; a + 3 <= top; ++a) images.push_back(family[a]);
  return {group, std::move(images)};
}

Remrep complex_remrep() {
  return {GroupPresentation::complex(), {SignedPermMatrix({1, 0}, {-1, 1})}};
}

Remrep trivial_remrep() { return {GroupPresentation::real(), {}}; }

DesignMatrix expand_sod(const DesignMatrix& x, const Remrep& phi, const IntMatrix& h) {
  if (!(phi.source() == x.group()))
    throw Error("expand_sod: remrep source " + phi.source().name() + " differs from design group " +
                x.group().name());
  if (auto check = validate(phi); !check) throw Error("expand_sod: invalid remrep: " + check.failure);
  const std::size_t m = phi.degree();
  if (h.rows() != m || !is_hadamard(h)) throw Error("expand_sod: H is not a Hadamard matrix of order " + std::to_string(m));

  std::vector<std::int64_t> type = x.type();
  for (auto& u : type) u *= static_cast<std::int64_t>(m);
  DesignMatrix out(x.order() * m, GroupPresentation::real(), std::move(type));

  // phi(e) H depends only on the entry's group element.
  std::unordered_map<std::uint64_t, IntMatrix> blocks;
  auto block_for = [&](const GroupElement& g) -> const IntMatrix& {
    const std::uint64_t key = (std::uint64_t{g.mask} << 1) | (g.sign < 0);
    auto it = blocks.find(key);
    if (it == blocks.end()) it = blocks.emplace(key, phi.image(g).to_dense() * h).first;
    return it->second;
  };
  for (std::size_t r = 0; r < x.order(); ++r)
    for (std::size_t c = 0; c < x.order(); ++c) {
      const Entry& e = x.at(r, c);
      if (e.is_zero()) continue;
      const IntMatrix& block = block_for(e.element());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          out.set(r * m + i, c * m + j, {static_cast<int>(block(i, j)), 0}, e.var());
    }
  return out;
}

DesignMatrix expand_sod(const DesignMatrix& x, const Remrep& phi) {
  const std::size_t m = phi.degree();
  if (!std::has_single_bit(m)) throw Error("expand_sod: default Hadamard matrix needs a power-of-two degree");
  return expand_sod(x, phi, sylvester_hadamard(static_cast<unsigned>(std::countr_zero(m))));
}

DesignMatrix cod_to_od(const DesignMatrix& x) {
  if (!(x.group() == GroupPresentation::complex())) throw Error("cod_to_od: design is not over SC");
  const bool ok = x.order() <= 512 ? verify_sod(x).ok : verify_scalar_randomized(x).ok;
  if (!ok) throw Error("cod_to_od: input is not a COD of its claimed type");
  return expand_sod(x, complex_remrep(), sylvester_hadamard(1));
}

}  // namespace sodforge
