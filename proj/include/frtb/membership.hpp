#pragma once

#include <optional>
#include <string>

#include "frtb/collected.hpp"

namespace frtb {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_str(Verdict v);

// target = sum_i coeff_i * u_i * gens[gen_i] * v_i, exactly, in collected form
struct CertPart {
  int gen = -1;
  Rat coeff;
  RVec u_xi;
  Word u_w;
  RVec v_xi;
  Word v_w;
};

struct Certificate {
  std::vector<CertPart> parts;
};

struct MembershipResult {
  Verdict verdict = Verdict::Inconclusive;
  int bound = 0;
  std::optional<Certificate> cert;
  std::string detail;
};

struct MembershipBudget {
  size_t max_words = 20000;
  size_t max_rows = 400000;
};

// Bounded one-sided decision: Pass is sound (comes with a certificate that
// re-expands exactly); Fail is sound (the base representation separates the
// target from the ideal); Inconclusive carries the bound used.
MembershipResult membership_bounded(const AsCtx& ctx, const CPoly& target,
                                    int bound,
                                    MembershipBudget budget = {});

// Same engine against an arbitrary generator list (no collapse patterns
// unless the infos carry them, no chi refutation unless refute is set).
MembershipResult membership_bounded_gens(const AsCtx& ctx, const CPoly& target,
                                         const std::vector<CPoly>& gens,
                                         const std::vector<GenInfo>& infos,
                                         int bound, bool chi_refute,
                                         MembershipBudget budget = {});

bool check_certificate(const AsCtx& ctx, const std::vector<CPoly>& gens,
                       const CPoly& target, const Certificate& cert);

struct TensorMembershipResult {
  Verdict verdict = Verdict::Inconclusive;
  int bound = 0;
  std::string detail;
};

// target in ideal (x) A + A (x) ideal, decided through leg-wise reduction
// against the lazily saturated bounded ideal span.
TensorMembershipResult tensor_membership(const AsCtx& ctx, const CTensor& target,
                                         int bound, MembershipBudget budget = {});

}  // namespace frtb
