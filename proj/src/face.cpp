#include "frtb/face.hpp"

#include <algorithm>
#include <stdexcept>

#include "frtb/frobenius.hpp"

namespace frtb {

std::vector<ConditionViolation> check_face_conditions(const BaseCtx& ctx,
                                                      const Quiver& q,
                                                      const FaceWeight& w) {
  std::vector<ConditionViolation> out;
  auto q2 = fiber_product(q, 2);
  for (int tr = 0; tr < int(q2.size()); ++tr)
    for (int lb = 0; lb < int(q2.size()); ++lb) {
      const RVec* v = w.at(tr, lb);
      if (!v || vec_is_zero(*v)) continue;
      std::string key = "w(" + q.arrows[q2[tr].arrows[0]].id + "," +
                        q.arrows[q2[tr].arrows[1]].id + ";" +
                        q.arrows[q2[lb].arrows[0]].id + "," +
                        q.arrows[q2[lb].arrows[1]].id + ")";
      if (!ctx.R.in_center(*v)) out.push_back({"centrality", key});
      if (q2[tr].src != q2[lb].src || q2[tr].tgt != q2[lb].tgt)
        out.push_back({"support", key});
    }
  return out;
}

AwContext::AwContext(const BaseCtx* base, Quiver q, FaceWeight w, int cap) {
  base_ = base;
  quiver_ = std::move(q);
  w_ = std::move(w);
  cap_ = cap;
  build(false);
}

AwContext AwContext::build_reversed(const BaseCtx* base, Quiver q, FaceWeight w,
                                    int cap) {
  AwContext ctx;
  ctx.base_ = base;
  ctx.quiver_ = std::move(q);
  ctx.w_ = std::move(w);
  ctx.cap_ = cap;
  ctx.build(true);
  return ctx;
}

void AwContext::set_frobenius(FrobeniusSystem r_system) {
  frobR_ = std::move(r_system);
  frobM_ = lift_frobenius(*base_, frobR_);
}

int AwContext::concat_index(int m, int n, int pa, int pb) const {
  const Path& a = H_[m].paths[pa];
  const Path& b = H_[n].paths[pb];
  if (a.tgt != b.src) return -1;
  if (m + n == 0) return pa;
  Path c = path_concat(a, b);
  auto it = path_idx_[m + n].find(c.arrows);
  return it == path_idx_[m + n].end() ? -1 : it->second;
}

SparseVec AwContext::mono_vec_mul(int k, int mono, int m, const SparseVec& v,
                                  bool mono_on_left) const {
  const BaseCtx& b = *base_;
  int dR = b.dR();
  int out_deg = k + m;
  std::vector<std::pair<uint32_t, Rat>> acc;
  acc.reserve(v.e.size() * dR);
  int pa, qa, ra, sa;
  H_[k].split(mono, pa, qa, ra, sa, dR);
  for (const auto& [col, coeff] : v.e) {
    int pb, qb, rb, sb;
    H_[m].split(col, pb, qb, rb, sb, dR);
    int pp = mono_on_left ? concat_index(k, m, pa, pb) : concat_index(m, k, pb, pa);
    if (pp < 0) continue;
    int qq = mono_on_left ? concat_index(k, m, qa, qb) : concat_index(m, k, qb, qa);
    if (qq < 0) continue;
    // left tensor leg multiplies in order, right leg in the opposite order
    int li = mono_on_left ? ra : rb, lj = mono_on_left ? rb : ra;
    int ri = mono_on_left ? sb : sa, rj = mono_on_left ? sa : sb;
    for (int u = 0; u < dR; ++u) {
      const Rat& cu = b.R.c(li, lj, u);
      if (is_zero(cu)) continue;
      for (int w = 0; w < dR; ++w) {
        const Rat& cw = b.R.c(ri, rj, w);
        if (is_zero(cw)) continue;
        acc.emplace_back(uint32_t(H_[out_deg].mono(pp, qq, u, w, dR)),
                         coeff * cu * cw);
      }
    }
  }
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& c) { return a.first < c.first; });
  SparseVec out;
  for (auto& [col, val] : acc) {
    if (!out.e.empty() && out.e.back().first == col)
      out.e.back().second += val;
    else
      out.e.emplace_back(col, std::move(val));
  }
  std::erase_if(out.e, [](const auto& p) { return is_zero(p.second); });
  return out;
}

void AwContext::build(bool reversed) {
  const BaseCtx& b = *base_;
  int dR = b.dR();
  H_.resize(cap_ + 1);
  path_idx_.resize(cap_ + 1);
  for (int m = 0; m <= cap_; ++m) {
    H_[m].paths = fiber_product(quiver_, m);
    H_[m].dRR = dR * dR;
    H_[m].dim = int(H_[m].paths.size()) * int(H_[m].paths.size()) * H_[m].dRR;
    for (int i = 0; i < int(H_[m].paths.size()); ++i)
      if (m > 0) path_idx_[m][H_[m].paths[i].arrows] = i;
  }

  // degree-2 generators; identically-zero ones dropped
  if (cap_ >= 2) {
    int nQ2 = H_[2].n_paths();
    for (int tr = 0; tr < nQ2; ++tr)
      for (int lb = 0; lb < nQ2; ++lb) {
        RVec dense(H_[2].dim, Rat(0));
        for (int xy = 0; xy < nQ2; ++xy) {
          if (const RVec* wv = w_.at(xy, tr)) {
            for (int ri = 0; ri < dR; ++ri) {
              if (is_zero((*wv)[ri])) continue;
              for (int rj = 0; rj < dR; ++rj)
                if (!is_zero(b.R.unit[rj]))
                  dense[H_[2].mono(xy, lb, ri, rj, dR)] += (*wv)[ri] * b.R.unit[rj];
            }
          }
          if (const RVec* wv = w_.at(lb, xy)) {
            for (int rj = 0; rj < dR; ++rj) {
              if (is_zero((*wv)[rj])) continue;
              for (int ri = 0; ri < dR; ++ri)
                if (!is_zero(b.R.unit[ri]))
                  dense[H_[2].mono(tr, xy, ri, rj, dR)] -= b.R.unit[ri] * (*wv)[rj];
            }
          }
        }
        SparseVec sv = SparseVec::from_dense(dense);
        if (!sv.empty()) {
          gens_.push_back(std::move(sv));
          gen_keys_.emplace_back(tr, lb);
        }
      }
  }

  // J_0 = J_1 = 0; J_2 = H_0 G H_0; J_m = H_1 J_{m-1} + J_{m-1} H_1.
  quot_.resize(cap_ + 1);
  auto remap = [&](int m, SparseVec v) {  // involutive column reversal
    uint32_t n = H_[m].dim;
    for (auto& [col, qv] : v.e) col = n - 1 - col;
    std::sort(v.e.begin(), v.e.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };
  if (cap_ >= 2) {
    std::vector<SparseVec> rows;
    int n0 = H_[0].dim;
    for (const auto& g : gens_)
      for (int u = 0; u < n0; ++u) {
        SparseVec ug = mono_vec_mul(0, u, 2, g, true);
        if (ug.empty()) continue;
        for (int v = 0; v < n0; ++v) {
          SparseVec ugv = mono_vec_mul(0, v, 2, ug, false);
          if (!ugv.empty()) rows.push_back(std::move(ugv));
        }
      }
    if (reversed) {
      for (auto& r : rows) r = remap(2, std::move(r));
      std::reverse(rows.begin(), rows.end());
    }
    for (auto& r : rows) quot_[2].ideal.insert(std::move(r));
  }
  for (int m = 3; m <= cap_; ++m) {
    std::vector<SparseVec> rows;
    const auto& prev = quot_[m - 1].ideal;
    int n1 = H_[1].dim;
    for (size_t r = 0; r < prev.rank(); ++r) {
      SparseVec rv = prev.row(r);
      if (reversed) rv = remap(m - 1, std::move(rv));
      for (int u = 0; u < n1; ++u) {
        SparseVec left = mono_vec_mul(1, u, m - 1, rv, true);
        if (!left.empty()) rows.push_back(std::move(left));
        SparseVec right = mono_vec_mul(1, u, m - 1, rv, false);
        if (!right.empty()) rows.push_back(std::move(right));
      }
    }
    if (reversed) {
      for (auto& r : rows) r = remap(m, std::move(r));
      std::reverse(rows.begin(), rows.end());
    }
    for (auto& r : rows) quot_[m].ideal.insert(std::move(r));
  }
  for (int m = 0; m <= cap_; ++m) {
    quot_[m].basis_cols = quot_[m].ideal.free_columns(H_[m].dim);
    for (int k = 0; k < int(quot_[m].basis_cols.size()); ++k)
      quot_[m].basis_index_of_col[quot_[m].basis_cols[k]] = k;
  }
  delta_cache_.assign(cap_ + 1, {});
}

SparseVec AwContext::normal_form(int m, SparseVec v) const {
  quot_[m].ideal.reduce(v);
  return v;
}

SparseVec AwContext::mul_raw(int m, const SparseVec& a, int n,
                             const SparseVec& b) const {
  if (m + n > cap_)
    throw std::runtime_error("product degree " + std::to_string(m + n) +
                             " exceeds the configured cap");
  SparseVec acc;
  for (const auto& [col, coeff] : a.e) {
    SparseVec part = mono_vec_mul(m, col, n, b, true);
    sv_axpy(acc, coeff, part);
  }
  return acc;
}

AwElem AwContext::mul(const AwElem& a, const AwElem& b) const {
  AwElem out;
  out.degree = a.degree + b.degree;
  out.v = normal_form(out.degree, mul_raw(a.degree, a.v, b.degree, b.v));
  return out;
}

AwElem AwContext::basis_element(int m, int k) const {
  AwElem e;
  e.degree = m;
  e.v.e.emplace_back(quot_[m].basis_cols[k], Rat(1));
  return e;
}

AwElem AwContext::aw_s(const RVec& f) const {
  const BaseCtx& b = *base_;
  int dR = b.dR();
  RVec dense(H_[0].dim, Rat(0));
  for (int l = 0; l < b.nLam(); ++l) {
    RVec fl = b.m_value_at(f, l);
    if (vec_is_zero(fl)) continue;
    for (int mu = 0; mu < b.nLam(); ++mu)
      for (int ri = 0; ri < dR; ++ri) {
        if (is_zero(fl[ri])) continue;
        for (int rj = 0; rj < dR; ++rj)
          if (!is_zero(b.R.unit[rj]))
            dense[H_[0].mono(l, mu, ri, rj, dR)] += fl[ri] * b.R.unit[rj];
      }
  }
  AwElem e;
  e.degree = 0;
  e.v = normal_form(0, SparseVec::from_dense(dense));
  return e;
}

AwElem AwContext::aw_t(const RVec& f) const {
  const BaseCtx& b = *base_;
  int dR = b.dR();
  RVec dense(H_[0].dim, Rat(0));
  for (int l = 0; l < b.nLam(); ++l) {
    RVec fl = b.m_value_at(f, l);
    if (vec_is_zero(fl)) continue;
    for (int mu = 0; mu < b.nLam(); ++mu)
      for (int rj = 0; rj < dR; ++rj) {
        if (is_zero(fl[rj])) continue;
        for (int ri = 0; ri < dR; ++ri)
          if (!is_zero(b.R.unit[ri]))
            dense[H_[0].mono(mu, l, ri, rj, dR)] += b.R.unit[ri] * fl[rj];
      }
  }
  AwElem e;
  e.degree = 0;
  e.v = normal_form(0, SparseVec::from_dense(dense));
  return e;
}

AwElem AwContext::unit() const { return aw_s(base_->m_unit()); }

std::vector<RVec> AwContext::zeta_mono(int m, int monomial) const {
  const BaseCtx& b = *base_;
  int dR = b.dR();
  int pi, qi, ri, rj;
  H_[m].split(monomial, pi, qi, ri, rj, dR);
  std::vector<RVec> cols(b.nM(), RVec(b.nM(), Rat(0)));
  if (pi != qi) return cols;
  const Path& q = H_[m].paths[qi];
  RVec rbase(dR, Rat(0));
  rbase[ri] = 1;
  RVec rprime(dR, Rat(0));
  rprime[rj] = 1;
  for (int rho = 0; rho < dR; ++rho) {
    RVec mid(dR, Rat(0));
    mid[rho] = 1;
    RVec prod = b.R.mul(b.R.mul(rbase, mid), rprime);
    int col = b.m_index(q.tgt, rho);
    for (int k = 0; k < dR; ++k)
      if (!is_zero(prod[k])) cols[col][b.m_index(q.src, k)] = prod[k];
  }
  return cols;
}

std::vector<RVec> AwContext::zeta(const AwElem& a) const {
  const BaseCtx& b = *base_;
  std::vector<RVec> acc(b.nM(), RVec(b.nM(), Rat(0)));
  for (const auto& [col, coeff] : a.v.e) {
    auto zc = zeta_mono(a.degree, col);
    for (int c = 0; c < b.nM(); ++c)
      for (int r = 0; r < b.nM(); ++r)
        if (!is_zero(zc[c][r])) acc[c][r] += coeff * zc[c][r];
  }
  return acc;
}

RVec AwContext::zeta_apply(const std::vector<RVec>& zmat, const RVec& f) const {
  RVec out(base_->nM(), Rat(0));
  for (int c = 0; c < base_->nM(); ++c)
    if (!is_zero(f[c])) vec_axpy(out, f[c], zmat[c]);
  return out;
}

RVec AwContext::pi_map(const AwElem& a) const {
  return zeta_apply(zeta(a), base_->m_unit());
}

const AwContext::TensorCoords& AwContext::delta_basis(int m, int k) const {
  auto it = delta_cache_[m].find(k);
  if (it != delta_cache_[m].end()) return it->second;

  const BaseCtx& b = *base_;
  int dR = b.dR();
  const auto& paths = H_[m].paths;

  // raw dressed coproduct: monomial-pair coefficients
  std::map<std::pair<int, int>, Rat> raw;
  SparseVec vec;
  vec.e.emplace_back(quot_[m].basis_cols[k], Rat(1));
  for (const auto& [col, coeff] : vec.e) {
    int pi, qi, ri, rj;
    H_[m].split(col, pi, qi, ri, rj, dR);
    for (int u = 0; u < int(paths.size()); ++u) {
      if (paths[pi].src != paths[u].src || paths[pi].tgt != paths[u].tgt) {
        // legs e[p;u] and e[u;q] exist for every u of the same degree; the
        // path endpoints need not match p, only the degree.
      }
      for (const auto& [e1, e2] : frobR_.casimir)
        for (int k1 = 0; k1 < dR; ++k1) {
          if (is_zero(e1[k1])) continue;
          for (int k2 = 0; k2 < dR; ++k2) {
            if (is_zero(e2[k2])) continue;
            int left = H_[m].mono(pi, u, ri, k1, dR);
            int right = H_[m].mono(u, qi, k2, rj, dR);
            raw[{left, right}] += coeff * e1[k1] * e2[k2];
          }
        }
    }
  }

  // reduce left legs, then right legs
  std::map<int, SparseVec> by_right;  // right monomial -> left vector
  for (const auto& [pr, c] : raw) {
    SparseVec one;
    one.e.emplace_back(pr.first, c);
    sv_axpy(by_right[pr.second], Rat(1), one);
  }
  TensorCoords out;
  for (auto& [right, leftv] : by_right) {
    SparseVec lred = normal_form(m, std::move(leftv));
    for (const auto& [lcol, lc] : lred.e) {
      SparseVec rone;
      rone.e.emplace_back(right, lc);
      SparseVec rred = normal_form(m, std::move(rone));
      for (const auto& [rcol, rc] : rred.e) {
        int bk1 = quot_[m].basis_index_of_col.at(lcol);
        int bk2 = quot_[m].basis_index_of_col.at(rcol);
        Rat& slot = out[{bk1, bk2}];
        slot += rc;
        if (is_zero(slot)) out.erase({bk1, bk2});
      }
    }
  }
  return delta_cache_[m].emplace(k, std::move(out)).first->second;
}

AwContext::TensorCoords AwContext::delta(const AwElem& a) const {
  TensorCoords out;
  for (const auto& [col, coeff] : a.v.e) {
    int k = quot_[a.degree].basis_index_of_col.at(col);
    for (const auto& [pr, c] : delta_basis(a.degree, k)) {
      Rat& slot = out[pr];
      slot += coeff * c;
      if (is_zero(slot)) out.erase(pr);
    }
  }
  return out;
}

Rat AwContext::eps(const AwElem& a) const {
  return frobM_.apply_psi(pi_map(a));
}

}  // namespace frtb
