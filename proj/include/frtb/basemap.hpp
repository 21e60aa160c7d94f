#pragma once

#include <map>
#include <string>
#include <vector>

#include "frtb/algebra.hpp"
#include "frtb/rat.hpp"

namespace frtb {

struct LabelSet {
  std::vector<std::string> names;
  std::map<std::string, int> index;

  int size() const { return int(names.size()); }
  int at(const std::string& s) const;
  static LabelSet of(std::vector<std::string> names);
};

// deg : X -> Sym(Lambda), with the right action lambda.deg(x) = deg(x)(lambda).
struct DegreeMap {
  std::vector<std::vector<int>> perm;  // perm[x][l] = l . deg(x)
  std::vector<std::vector<int>> inv;   // inverse permutations

  void validate(int n_lambda) const;
  static DegreeMap from_images(const std::vector<std::vector<int>>& images,
                               int n_lambda);
};

// Shared instance context: the coefficient algebra R, the parameter set
// Lambda, the index set X, and deg.  Elements of M_Lambda(R) are dense
// vectors indexed by lambda*dimR + r ("MVec"); elements of the tensor square
// M (x) M^op are dense vectors indexed by i*nM + j ("BVec").
struct BaseCtx {
  AlgebraSpec R;
  LabelSet lambda, x;
  DegreeMap deg;

  int dR() const { return R.dim; }
  int nLam() const { return lambda.size(); }
  int nX() const { return x.size(); }
  int nM() const { return nLam() * dR(); }
  int nB() const { return nM() * nM(); }

  int m_index(int lam, int r) const { return lam * dR() + r; }

  // --- M_Lambda(R) -------------------------------------------------------
  RVec m_unit() const;
  RVec m_delta(int lam) const;              // delta_lambda (unit of R at lam)
  RVec m_const(const RVec& r) const;        // r_M: constant map
  RVec m_mul(const RVec& f, const RVec& g) const;
  RVec m_value_at(const RVec& f, int lam) const;  // f(lambda) in R
  RVec m_from_value(int lam, const RVec& r) const;

  // T_alpha for alpha = deg(x) (or its inverse): (T f)(l) = f(l . alpha).
  RVec shift(int x_label, const RVec& f, bool inverse = false) const;

  // Structure constants of M_Lambda(R) as an AlgebraSpec (diagonal blocks).
  AlgebraSpec m_algebra() const;

  // --- B = M (x) M^op ----------------------------------------------------
  RVec b_unit() const;
  RVec b_tensor(const RVec& f, const RVec& g) const;
  RVec b_mul(const RVec& a, const RVec& b) const;  // (f@g)(f'@g') = ff'@g'g
  RVec b_swap(const RVec& a) const;                // f@g -> g@f

  // lambda-index permutations applied to the two tensor legs of a BVec:
  // left leg lambda -> lperm[lambda], right leg lambda -> rperm[lambda].
  RVec b_permute(const RVec& a, const std::vector<int>& lperm,
                 const std::vector<int>& rperm) const;
};

}  // namespace frtb
