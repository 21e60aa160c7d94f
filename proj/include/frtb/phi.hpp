#pragma once

#include "frtb/weak.hpp"

namespace frtb {

// Face weights induced by a sigma family over the product quiver:
//   w((l,a),(l',b) ; (m,c),(m',d)) = delta_{l,m} sigma^{ba}_{dc}(l).
FaceWeight build_w_sigma(const BaseCtx& ctx, const SigmaFamily& s,
                         const Quiver& q);

// Image of a raw degree-m monomial under the comparison homomorphism:
// r (x) r' (x) e[p;q]  ->  (r_M @ r'_M)(d_{s(p)} @ d_{s(q)}) L_{x1 y1} ...
CPoly phi_mono(const AwContext& aw, const AsCtx& as, int degree, int monomial);

// Basis-image table of the homomorphism up to the cap.
AwConvMap build_phi(const AwContext& aw, const AsCtx& as, int cap);

// Well-definedness + homomorphism axioms of the comparison map.
std::vector<ConvCheck> verify_phi(const AwContext& aw, const AsCtx& as,
                                  const AwConvMap& phi, int cap, int bound);

// Generator-image homomorphism from the dynamical algebra into itself
// (target fixed to the dynamical algebra).
struct GenHomAs {
  std::vector<CPoly> ups;  // Upsilon on the B basis
  std::vector<CPoly> img_L, img_Li;

  CPoly apply_base(const AsCtx& as, const RVec& xi) const;
  CPoly apply(const AsCtx& as, const CPoly& p) const;
};

// F from the universal property: base part through f+, L through f+,
// inverse letters through f-.
GenHomAs build_universal_F(const AwContext& aw, const AsCtx& as,
                           const AwConvMap& fplus, const AwConvMap& fminus);

// the five generator-family well-definedness checks of F
std::vector<ConvCheck> verify_F_well_defined(const AwContext& aw,
                                             const AsCtx& as, const GenHomAs& F,
                                             int bound);

// triangle F o Phi = f+ on bases up to cap; optional identity-on-generators
// comparison; comultiplicativity/counit upgrade on generators.
std::vector<ConvCheck> verify_closure(const AwContext& aw, const AsCtx& as,
                                      const GenHomAs& F, const AwConvMap& phi,
                                      const AwConvMap& fplus, int cap,
                                      int bound, bool expect_identity);

}  // namespace frtb
