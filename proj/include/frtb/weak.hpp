#pragma once

#include <functional>

#include "frtb/face.hpp"
#include "frtb/membership.hpp"

namespace frtb {

// ---------------------------------------------------------------------------
// weak-bialgebra layer over the face-type carrier (exact, degreewise)
// ---------------------------------------------------------------------------

// eps_s(a) = 1_(1) eps(a 1_(2)),  eps_t(a) = eps(1_(1) a) 1_(2); both land in
// degree 0.  Evaluated through the zeta representation, so products of any
// degree are handled without normal forms beyond the cap.
AwElem aw_eps_s(const AwContext& aw, const AwElem& a);
AwElem aw_eps_t(const AwContext& aw, const AwElem& a);

// counit of a product chain via the representation: eps(a1 a2 ... )
Rat aw_eps_chain(const AwContext& aw, const std::vector<const AwElem*>& chain);

// tensor-square helpers over the quotient bases
using TC = AwContext::TensorCoords;
TC tc_mul(const AwContext& aw, int dl, int dr, const TC& a, const TC& b);
bool tc_equal(const TC& a, const TC& b);

struct ConvCheck {
  std::string id;
  std::string element;
  Verdict verdict;
  std::string regime;
};

// ---------------------------------------------------------------------------
// weak-bialgebra layer on the dynamical side (collected + certificates)
// ---------------------------------------------------------------------------

struct HopfData {
  SRules S;     // antipode rules: L -> Li, Li -> witness
  SRules Sinv;  // inverse antipode rules
};

// S^WHA(a) = eps_s(a^[1]) S(a^[2]) with twisted coproduct legs obtained from
// the base-projected lift of Delta(S^{-1} a).
CPoly wha_antipode_apply(const AsCtx& as, const HopfData& h, const CPoly& a);

struct RigidityWitnesses {
  std::vector<CPoly> x, y;  // indexed a*nX + b
};

// The four sum identities per index pair; inconclusive memberships are
// reported as such, not as failures.
std::vector<ConvCheck> verify_rigidity(const AsCtx& as,
                                       const RigidityWitnesses& w, int bound);

struct HopfBuild {
  bool ok = false;
  std::string error;
  HopfData data;
};

// Antipode rules from witnesses.  The inverse rules require the antipode to
// be involutive on generators; bundled witness tables are.
HopfBuild make_hopf_data(const AsCtx& as, const RigidityWitnesses& w);

// S(h_(1)) h_(2) = eps_s(h), h_(1) S(h_(2)) = eps_t(h), and the sandwich
// identity, on every alphabet generator; plus the generator images.
std::vector<ConvCheck> verify_wha_axioms(const AsCtx& as, const HopfData& h,
                                         int bound);

// ---------------------------------------------------------------------------
// convolution layer: linear maps  Aw -> A_sigma  given by basis images
// ---------------------------------------------------------------------------

struct AwConvMap {
  // img[degree][basis index]
  std::vector<std::vector<CPoly>> img;

  CPoly apply(const AwContext& aw, const AwElem& a) const;
};

AwConvMap conv_identity_like(const AwContext& aw,
                             const std::function<CPoly(int, int)>& images,
                             int cap);
// (f * g)(c) = f(c_(1)) g(c_(2)) on every graded basis element up to cap
AwConvMap convolve(const AwContext& aw, const AsCtx& as, const AwConvMap& f,
                   const AwConvMap& g, int cap);
// f o eps_s and f o eps_t as basis maps
AwConvMap comp_eps_s(const AwContext& aw, const AwConvMap& f, int cap);
AwConvMap comp_eps_t(const AwContext& aw, const AwConvMap& f, int cap);

// x^- is the (f+ o eps_s, f+ o eps_t)-generalized inverse of x^+:
//   f- * f+ = f+ o eps_s,  f+ * f- = f+ o eps_t,
//   f+ * f- * f+ = f+,     f- * f+ * f- = f-.
std::vector<ConvCheck> check_generalized_inverse(const AwContext& aw,
                                                 const AsCtx& as,
                                                 const AwConvMap& fplus,
                                                 const AwConvMap& fminus,
                                                 int cap, int bound);

// antipode-of-homomorphism package: anti-multiplicativity, unit, counit,
// op-comultiplicativity, and the three exchange identities.
std::vector<ConvCheck> verify_fminus_lemmas(const AwContext& aw, const AsCtx& as,
                                            const AwConvMap& fplus,
                                            const AwConvMap& fminus, int cap,
                                            int bound);

// ---------------------------------------------------------------------------
// finite weak bialgebra by tables (used for convolution checks on a directly
// presented carrier, e.g. the pair-groupoid algebra)
// ---------------------------------------------------------------------------

struct TableWBA {
  int dim = 0;
  std::vector<RVec> mult;          // mult[i*dim+j] = coords of e_i e_j
  RVec unit;
  std::vector<std::map<std::pair<int, int>, Rat>> delta;  // per basis elem
  RVec counit;

  RVec mul(const RVec& a, const RVec& b) const;
  static TableWBA pair_groupoid(int n);  // basis e_{ij}, grouplike coproduct
  RVec antipode_pair_groupoid(const RVec& v, int n) const;
};

// generalized-inverse verification for table carriers (exact)
std::vector<ConvCheck> table_check_generalized_inverse(
    const TableWBA& B, const std::function<RVec(const RVec&)>& fplus,
    const std::function<RVec(const RVec&)>& fminus);

}  // namespace frtb
