#pragma once

#include <map>
#include <string>
#include <vector>

#include "frtb/basemap.hpp"

namespace frtb {

// The defining family sigma^{ab}_{cd} in M_Lambda(R), sparse over X^4.
struct SigmaFamily {
  std::map<std::array<int, 4>, RVec> entries;  // (a,b,c,d) -> MVec

  // zero map when absent
  RVec at(const BaseCtx& ctx, int a, int b, int c, int d) const;
  bool present(int a, int b, int c, int d) const {
    return entries.count({a, b, c, d}) != 0;
  }
};

// One violation of the centrality or vanishing condition.
struct SigmaViolation {
  std::string check;  // "centrality" | "support"
  std::string witness;
};

std::vector<SigmaViolation> check_sigma_conditions(const BaseCtx& ctx,
                                                   const SigmaFamily& s);

}  // namespace frtb
