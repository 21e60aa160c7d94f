#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frtb/basemap.hpp"

namespace frtb {

// Idempotent Frobenius system (psi, sum_i e1_i (x) e2_i) for an algebra given
// by structure constants.
struct FrobeniusSystem {
  RVec psi;                                  // functional, one value per basis
  std::vector<std::pair<RVec, RVec>> casimir;

  Rat apply_psi(const RVec& v) const;
};

struct FrobeniusReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks, on every basis element l:
//   psi(l e1) e2 = l,   e1 psi(e2 l) = l,   e1 e2 = 1,
// and the dual-bases exchange  l e1 (x) e2 = e1 (x) e2 l  (needed by the
// tensor-square projector downstream).
FrobeniusReport verify_frobenius(const AlgebraSpec& A, const FrobeniusSystem& s);

// System for M_Lambda(R) from a system for R:
//   psi'(f) = sum_l psi(f(l)),  casimir' = sum_{i,l} e1_i d_l (x) e2_i d_l.
FrobeniusSystem lift_frobenius(const BaseCtx& ctx, const FrobeniusSystem& sysR);

}  // namespace frtb
