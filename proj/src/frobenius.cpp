#include "frtb/frobenius.hpp"

namespace frtb {

Rat FrobeniusSystem::apply_psi(const RVec& v) const {
  Rat s(0);
  for (size_t i = 0; i < v.size(); ++i) s += psi[i] * v[i];
  return s;
}

FrobeniusReport verify_frobenius(const AlgebraSpec& A, const FrobeniusSystem& s) {
  FrobeniusReport rep;
  auto fail = [&](const std::string& m) {
    rep.ok = false;
    rep.failures.push_back(m);
  };
  if (s.psi.size() != size_t(A.dim)) {
    fail("psi has wrong dimension");
    return rep;
  }
  for (const auto& [e1, e2] : s.casimir)
    if (e1.size() != size_t(A.dim) || e2.size() != size_t(A.dim)) {
      fail("casimir pair has wrong dimension");
      return rep;
    }

  for (int l = 0; l < A.dim; ++l) {
    RVec el(A.dim, Rat(0));
    el[l] = 1;
    RVec lhs1(A.dim, Rat(0)), lhs2(A.dim, Rat(0));
    for (const auto& [e1, e2] : s.casimir) {
      vec_axpy(lhs1, s.apply_psi(A.mul(el, e1)), e2);
      vec_axpy(lhs2, s.apply_psi(A.mul(e2, el)), e1);
    }
    if (lhs1 != el)
      fail("psi(l e1) e2 = l fails at basis index " + std::to_string(l));
    if (lhs2 != el)
      fail("e1 psi(e2 l) = l fails at basis index " + std::to_string(l));
  }

  RVec prod(A.dim, Rat(0));
  for (const auto& [e1, e2] : s.casimir) {
    RVec p = A.mul(e1, e2);
    for (int k = 0; k < A.dim; ++k) prod[k] += p[k];
  }
  if (prod != A.unit) fail("e1 e2 = 1 fails");

  // dual-bases exchange, as a tensor-square identity on each basis element
  for (int l = 0; l < A.dim; ++l) {
    RVec el(A.dim, Rat(0));
    el[l] = 1;
    RVec lhs(size_t(A.dim) * A.dim, Rat(0)), rhs(size_t(A.dim) * A.dim, Rat(0));
    for (const auto& [e1, e2] : s.casimir) {
      RVec le1 = A.mul(el, e1), e2l = A.mul(e2, el);
      for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
          lhs[size_t(i) * A.dim + j] += le1[i] * e2[j];
          rhs[size_t(i) * A.dim + j] += e1[i] * e2l[j];
        }
    }
    if (lhs != rhs)
      fail("casimir exchange l e = e l fails at basis index " + std::to_string(l));
  }
  return rep;
}

FrobeniusSystem lift_frobenius(const BaseCtx& ctx, const FrobeniusSystem& sysR) {
  FrobeniusSystem out;
  out.psi.assign(ctx.nM(), Rat(0));
  for (int l = 0; l < ctx.nLam(); ++l)
    for (int r = 0; r < ctx.dR(); ++r) out.psi[ctx.m_index(l, r)] = sysR.psi[r];
  for (int l = 0; l < ctx.nLam(); ++l)
    for (const auto& [e1, e2] : sysR.casimir)
      out.casimir.emplace_back(ctx.m_from_value(l, e1), ctx.m_from_value(l, e2));
  return out;
}

}  // namespace frtb
