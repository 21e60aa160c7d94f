#include "frtb/sigma.hpp"

namespace frtb {

RVec SigmaFamily::at(const BaseCtx& ctx, int a, int b, int c, int d) const {
  auto it = entries.find({a, b, c, d});
  if (it != entries.end()) return it->second;
  return RVec(ctx.nM(), Rat(0));
}

std::vector<SigmaViolation> check_sigma_conditions(const BaseCtx& ctx,
                                                   const SigmaFamily& s) {
  std::vector<SigmaViolation> out;
  auto name = [&](int a, int b, int c, int d, int l) {
    return "sigma(" + ctx.x.names[a] + ctx.x.names[b] + ";" + ctx.x.names[c] +
           ctx.x.names[d] + ")(" + ctx.lambda.names[l] + ")";
  };
  // (i) every value sigma^{ab}_{cd}(lambda) lies in Z(R)
  for (const auto& [key, f] : s.entries) {
    for (int l = 0; l < ctx.nLam(); ++l) {
      RVec v = ctx.m_value_at(f, l);
      if (vec_is_zero(v)) continue;
      if (!ctx.R.in_center(v))
        out.push_back({"centrality", name(key[0], key[1], key[2], key[3], l)});
    }
  }
  // (ii) lambda.deg(d).deg(b) != lambda.deg(c).deg(a)  =>  sigma^{bd}_{ac} = 0
  int nx = ctx.nX();
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b)
      for (int c = 0; c < nx; ++c)
        for (int d = 0; d < nx; ++d) {
          auto it = s.entries.find({b, d, a, c});
          if (it == s.entries.end()) continue;
          for (int l = 0; l < ctx.nLam(); ++l) {
            int lhs = ctx.deg.perm[b][ctx.deg.perm[d][l]];
            int rhs = ctx.deg.perm[a][ctx.deg.perm[c][l]];
            if (lhs == rhs) continue;
            if (!vec_is_zero(ctx.m_value_at(it->second, l)))
              out.push_back({"support", name(b, d, a, c, l)});
          }
        }
  return out;
}

}  // namespace frtb
