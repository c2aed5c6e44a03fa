#pragma once

// Real monomial representations (remreps) of presented signed groups and the
// block expansion of an SOD into an OD.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sodforge/design.hpp"
#include "sodforge/int_matrix.hpp"
#include "sodforge/signed_perm.hpp"

namespace sodforge {

class Remrep {
 public:
  Remrep(GroupPresentation source, std::vector<SignedPermMatrix> generator_images);

  const GroupPresentation& source() const { return source_; }
  std::size_t degree() const { return degree_; }
  const std::vector<SignedPermMatrix>& generator_images() const { return images_; }

  /// phi(sign * g_a g_b ...) = sign * phi(g_a) phi(g_b) ...
  SignedPermMatrix image(const GroupElement& g) const;

 private:
  GroupPresentation source_;
  std::size_t degree_ = 1;
  std::vector<SignedPermMatrix> images_;
};

struct RemrepCheck {
  bool ok = true;
  std::string failure;  // first violated relation, empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks phi(g_a)^2 = square_sign(a) I and phi(g_a) phi(g_b) = -phi(g_b) phi(g_a).
RemrepCheck validate(const Remrep& phi);

/// S(n) -> SP_m, m = 2^(2^(n-1)-1), sending s_a to the a-th Hurwitz-Radon matrix.
Remrep canonical_remrep_S(unsigned n);
/// S'(n) -> SP_m: s -> A_{2^n-3} A_{2^n-2} A_{2^n-1}, s_a -> A_a.
Remrep canonical_remrep_Sprime(unsigned n);
/// S_C -> SP_2: i -> [[0,-1],[1,0]].
Remrep complex_remrep();
/// S_R -> SP_1.
Remrep trivial_remrep();

/// Entry e * x_v  ->  block (phi(e) H) x_v, zero  ->  zero block.  The result
/// lives over S_R with order m n and type m u.
DesignMatrix expand_sod(const DesignMatrix& x, const Remrep& phi, const IntMatrix& h);
/// expand_sod with the Sylvester matrix of order degree(phi) (a power of two).
DesignMatrix expand_sod(const DesignMatrix& x, const Remrep& phi);

/// COD(n; u) -> OD(2n; 2u) through the S_C remrep; throws unless x verifies.
DesignMatrix cod_to_od(const DesignMatrix& x);

}  // namespace sodforge
