#include "frtb/basemap.hpp"

#include <stdexcept>

namespace frtb {

int LabelSet::at(const std::string& s) const {
  auto it = index.find(s);
  if (it == index.end()) throw std::runtime_error("unknown label '" + s + "'");
  return it->second;
}

LabelSet LabelSet::of(std::vector<std::string> n) {
  LabelSet ls;
  ls.names = std::move(n);
  for (int i = 0; i < int(ls.names.size()); ++i) {
    if (!ls.index.emplace(ls.names[i], i).second)
      throw std::runtime_error("duplicate label '" + ls.names[i] + "'");
  }
  return ls;
}

void DegreeMap::validate(int n_lambda) const {
  for (const auto& p : perm) {
    if (int(p.size()) != n_lambda)
      throw std::runtime_error("degree permutation has wrong length");
    std::vector<bool> seen(n_lambda, false);
    for (int v : p) {
      if (v < 0 || v >= n_lambda || seen[v])
        throw std::runtime_error("degree value is not a permutation");
      seen[v] = true;
    }
  }
}

DegreeMap DegreeMap::from_images(const std::vector<std::vector<int>>& images,
                                 int n_lambda) {
  DegreeMap d;
  d.perm = images;
  d.validate(n_lambda);
  d.inv.resize(images.size());
  for (size_t x = 0; x < images.size(); ++x) {
    d.inv[x].assign(n_lambda, 0);
    for (int l = 0; l < n_lambda; ++l) d.inv[x][images[x][l]] = l;
  }
  return d;
}

RVec BaseCtx::m_unit() const {
  RVec f(nM(), Rat(0));
  for (int l = 0; l < nLam(); ++l)
    for (int r = 0; r < dR(); ++r) f[m_index(l, r)] = R.unit[r];
  return f;
}

RVec BaseCtx::m_delta(int lam) const {
  RVec f(nM(), Rat(0));
  for (int r = 0; r < dR(); ++r) f[m_index(lam, r)] = R.unit[r];
  return f;
}

RVec BaseCtx::m_const(const RVec& r) const {
  RVec f(nM(), Rat(0));
  for (int l = 0; l < nLam(); ++l)
    for (int k = 0; k < dR(); ++k) f[m_index(l, k)] = r[k];
  return f;
}

RVec BaseCtx::m_mul(const RVec& f, const RVec& g) const {
  RVec out(nM(), Rat(0));
  for (int l = 0; l < nLam(); ++l)
    for (int i = 0; i < dR(); ++i) {
      const Rat& fi = f[m_index(l, i)];
      if (is_zero(fi)) continue;
      for (int j = 0; j < dR(); ++j) {
        const Rat& gj = g[m_index(l, j)];
        if (is_zero(gj)) continue;
        Rat fg = fi * gj;
        for (int k = 0; k < dR(); ++k) {
          const Rat& c = R.c(i, j, k);
          if (!is_zero(c)) out[m_index(l, k)] += fg * c;
        }
      }
    }
  return out;
}

RVec BaseCtx::m_value_at(const RVec& f, int lam) const {
  RVec r(dR());
  for (int k = 0; k < dR(); ++k) r[k] = f[m_index(lam, k)];
  return r;
}

RVec BaseCtx::m_from_value(int lam, const RVec& r) const {
  RVec f(nM(), Rat(0));
  for (int k = 0; k < dR(); ++k) f[m_index(lam, k)] = r[k];
  return f;
}

RVec BaseCtx::shift(int x_label, const RVec& f, bool inverse) const {
  const auto& p = inverse ? deg.inv[x_label] : deg.perm[x_label];
  RVec out(nM());
  for (int l = 0; l < nLam(); ++l)
    for (int r = 0; r < dR(); ++r) out[m_index(l, r)] = f[m_index(p[l], r)];
  return out;
}

AlgebraSpec BaseCtx::m_algebra() const {
  AlgebraSpec a;
  a.dim = nM();
  a.sc.assign(size_t(a.dim) * a.dim * a.dim, Rat(0));
  for (int l = 0; l < nLam(); ++l)
    for (int i = 0; i < dR(); ++i)
      for (int j = 0; j < dR(); ++j)
        for (int k = 0; k < dR(); ++k) {
          const Rat& c = R.c(i, j, k);
          if (!is_zero(c)) a.c(m_index(l, i), m_index(l, j), m_index(l, k)) = c;
        }
  a.unit = m_unit();
  return a;
}

RVec BaseCtx::b_unit() const { return b_tensor(m_unit(), m_unit()); }

RVec BaseCtx::b_tensor(const RVec& f, const RVec& g) const {
  RVec out(nB(), Rat(0));
  for (int i = 0; i < nM(); ++i) {
    if (is_zero(f[i])) continue;
    for (int j = 0; j < nM(); ++j)
      if (!is_zero(g[j])) out[size_t(i) * nM() + j] = f[i] * g[j];
  }
  return out;
}

RVec BaseCtx::b_mul(const RVec& a, const RVec& b) const {
  // (f @ g)(f' @ g') = f f' @ g' g  (second leg is the opposite algebra)
  int n = nM();
  RVec out(nB(), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& aij = a[size_t(i) * n + j];
      if (is_zero(aij)) continue;
      int li = i / dR(), ri = i % dR();
      int lj = j / dR(), rj = j % dR();
      for (int k = 0; k < n; ++k) {
        int lk = k / dR(), rk = k % dR();
        if (lk != li) continue;
        for (int l = 0; l < n; ++l) {
          const Rat& bkl = b[size_t(k) * n + l];
          if (is_zero(bkl)) continue;
          int ll = l / dR(), rl = l % dR();
          if (ll != lj) continue;
          Rat ab = aij * bkl;
          // left leg: r_i * r_k at lambda li; right leg (op): r_l * r_j at lj
          for (int u = 0; u < dR(); ++u) {
            const Rat& cu = R.c(ri, rk, u);
            if (is_zero(cu)) continue;
            for (int v = 0; v < dR(); ++v) {
              const Rat& cv = R.c(rl, rj, v);
              if (is_zero(cv)) continue;
              out[size_t(m_index(li, u)) * n + m_index(lj, v)] += ab * cu * cv;
            }
          }
        }
      }
    }
  return out;
}

RVec BaseCtx::b_swap(const RVec& a) const {
  int n = nM();
  RVec out(nB(), Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& q = a[size_t(i) * n + j];
      if (!is_zero(q)) out[size_t(j) * n + i] = q;
    }
  return out;
}

RVec BaseCtx::b_permute(const RVec& a, const std::vector<int>& lperm,
                        const std::vector<int>& rperm) const {
  int n = nM();
  RVec out(nB(), Rat(0));
  for (int i = 0; i < n; ++i) {
    int li = i / dR(), ri = i % dR();
    int ip = m_index(lperm[li], ri);
    for (int j = 0; j < n; ++j) {
      const Rat& q = a[size_t(i) * n + j];
      if (is_zero(q)) continue;
      int lj = j / dR(), rj = j % dR();
      out[size_t(ip) * n + m_index(rperm[lj], rj)] = q;
    }
  }
  return out;
}

}  // namespace frtb
