#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frtb/frobenius.hpp"
#include "frtb/linalg.hpp"
#include "frtb/quiver.hpp"

namespace frtb {

// Defining scalars w[. ; .] of the face-type quotient: one R-element per pair
// of composable arrow pairs.  Key layout: (top-right pair, left-bottom pair),
// both indices into Q^(2).  Missing entries are zero.
struct FaceWeight {
  std::vector<RVec> values;  // size |Q2|^2, each of dim dR (may be empty = 0)
  int nQ2 = 0;

  const RVec* at(int tr, int lb) const {
    const RVec& v = values[size_t(tr) * nQ2 + lb];
    return v.empty() ? nullptr : &v;
  }
  void set(int tr, int lb, RVec v) { values[size_t(tr) * nQ2 + lb] = std::move(v); }
};

struct ConditionViolation {
  std::string check;    // "centrality" | "support"
  std::string witness;  // index description
};

// Graded component H_m = R (x) R^op (x) span{ e[p;q] : p,q in Q^(m) }.
// Monomial index: pair-major, (pi*nPaths + qi)*dRR + (ri*dR + rj).
struct HDeg {
  std::vector<Path> paths;
  int dRR = 0;  // dR*dR
  int dim = 0;

  int n_paths() const { return int(paths.size()); }
  int mono(int pi, int qi, int ri, int rj, int dR) const {
    return (pi * n_paths() + qi) * dRR + (ri * dR + rj);
  }
  void split(int idx, int& pi, int& qi, int& ri, int& rj, int dR) const {
    int rr = idx % dRR;
    int pq = idx / dRR;
    ri = rr / dR;
    rj = rr % dR;
    pi = pq / n_paths();
    qi = pq % n_paths();
  }
};

// Per-degree exact quotient data: echelon of the ideal span plus the chosen
// monomial basis (non-pivot columns).
struct GradedQuotient {
  RowSpace ideal;
  std::vector<uint32_t> basis_cols;
  std::map<uint32_t, int> basis_index_of_col;

  int dim() const { return int(basis_cols.size()); }
};

// Element of the degree-m component in reduced (normal-form) coordinates.
struct AwElem {
  int degree = 0;
  SparseVec v;  // over H_m monomial columns, reduced against the ideal
};

class AwContext {
 public:
  AwContext(const BaseCtx* base, Quiver q, FaceWeight w, int degree_cap);

  const BaseCtx& base() const { return *base_; }
  const Quiver& quiver() const { return quiver_; }
  const FaceWeight& weight() const { return w_; }
  int cap() const { return cap_; }
  const HDeg& H(int m) const { return H_[m]; }
  const GradedQuotient& quotient(int m) const { return quot_[m]; }

  // Homogeneous degree-2 generators of the face ideal, zero ones dropped.
  // provenance[i] = (tr, lb) index pair of generator i.
  const std::vector<SparseVec>& generators() const { return gens_; }
  const std::vector<std::pair<int, int>>& generator_keys() const {
    return gen_keys_;
  }

  // Reduce a raw degree-m vector to quotient normal form.
  SparseVec normal_form(int m, SparseVec v) const;

  // Free product of monomials, then reduction.  Degree m+n must be <= cap.
  SparseVec mul_raw(int m, const SparseVec& a, int n, const SparseVec& b) const;
  AwElem mul(const AwElem& a, const AwElem& b) const;

  AwElem basis_element(int m, int k) const;
  AwElem aw_s(const RVec& f) const;  // MVec -> degree-0 element
  AwElem aw_t(const RVec& f) const;
  AwElem unit() const;

  // zeta matrix (endomorphism of M_Lambda(R)) of a degree-m monomial / element.
  std::vector<RVec> zeta_mono(int m, int monomial) const;  // nM columns
  std::vector<RVec> zeta(const AwElem& a) const;
  RVec pi_map(const AwElem& a) const;  // zeta(a)(1_M)

  // Comultiplication with the casimir-dressed section into the tensor square:
  // result as sparse coefficients on (basis_k1, basis_k2) index pairs.
  using TensorCoords = std::map<std::pair<int, int>, Rat>;
  const TensorCoords& delta_basis(int m, int k) const;
  TensorCoords delta(const AwElem& a) const;

  // Counit eps = psi' o pi (psi' = lifted functional).
  Rat eps(const AwElem& a) const;

  // psi'(zeta(a)(f)) for arbitrary f without materializing products.
  RVec zeta_apply(const std::vector<RVec>& zmat, const RVec& f) const;

  const FrobeniusSystem& lifted_frobenius() const { return frobM_; }
  void set_frobenius(FrobeniusSystem R_system);

  // R-level casimir used by the coproduct dressing.
  const std::vector<std::pair<RVec, RVec>>& r_casimir() const {
    return frobR_.casimir;
  }

  // Enumeration-order control for the order-independence property.
  static AwContext build_reversed(const BaseCtx* base, Quiver q, FaceWeight w,
                                  int degree_cap);

 private:
  AwContext() = default;
  void build(bool reversed);
  int concat_index(int m, int n, int pa, int pb) const;
  // monomial (degree k) times vector (degree m), on the chosen side
  SparseVec mono_vec_mul(int k, int mono, int m, const SparseVec& v,
                         bool mono_on_left) const;

  const BaseCtx* base_ = nullptr;
  Quiver quiver_;
  FaceWeight w_;
  int cap_ = 0;
  FrobeniusSystem frobR_, frobM_;
  std::vector<HDeg> H_;
  std::vector<std::map<std::vector<int>, int>> path_idx_;  // arrows -> index
  std::vector<GradedQuotient> quot_;
  std::vector<SparseVec> gens_;
  std::vector<std::pair<int, int>> gen_keys_;
  mutable std::vector<std::map<int, TensorCoords>> delta_cache_;
};

// Violations of the centrality/support condition on w.
std::vector<ConditionViolation> check_face_conditions(const BaseCtx& ctx,
                                                      const Quiver& q,
                                                      const FaceWeight& w);

}  // namespace frtb
