#include "frtb/collected.hpp"

#include <stdexcept>

namespace frtb {

void CPoly::prune() {
  for (auto it = t.begin(); it != t.end();)
    it = vec_is_zero(it->second) ? t.erase(it) : std::next(it);
}

void CPoly::axpy(const Rat& c, const CPoly& other) {
  for (const auto& [w, xi] : other.t) {
    auto it = t.find(w);
    if (it == t.end())
      t.emplace(w, vec_scale(c, xi));
    else
      vec_axpy(it->second, c, xi);
  }
  prune();
}

bool operator==(const CPoly& a, const CPoly& b) { return a.t == b.t; }

void CTensor::prune() {
  for (auto it = t.begin(); it != t.end();)
    it = vec_is_zero(it->second) ? t.erase(it) : std::next(it);
}

void CTensor::axpy(const Rat& c, const CTensor& other) {
  for (const auto& [w, xi] : other.t) {
    auto it = t.find(w);
    if (it == t.end())
      t.emplace(w, vec_scale(c, xi));
    else
      vec_axpy(it->second, c, xi);
  }
  prune();
}

bool operator==(const CTensor& a, const CTensor& b) { return a.t == b.t; }

AsCtx::AsCtx(const BaseCtx* base, SigmaFamily sigma, FrobeniusSystem frobR)
    : base_(base), sigma_(std::move(sigma)), frobR_(std::move(frobR)) {
  frobM_ = lift_frobenius(*base_, frobR_);
  build_tables();
  build_generators();
}

void AsCtx::build_tables() {
  const BaseCtx& b = *base_;
  int nm = b.nM(), nb = b.nB();
  mtab_.resize(size_t(nm) * nm);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) {
      RVec ei(nm, Rat(0)), ej(nm, Rat(0));
      ei[i] = 1;
      ej[j] = 1;
      mtab_[size_t(i) * nm + j] = SparseVec::from_dense(b.m_mul(ei, ej));
    }
  btab_.resize(size_t(nb) * nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      // (e_p @ e_q)(e_r @ e_s) = (e_p e_r) @ (e_s e_q)
      int p = i / nm, q = i % nm, r = j / nm, s = j % nm;
      SparseVec out;
      for (const auto& [u, cu] : mtab_[size_t(p) * nm + r].e)
        for (const auto& [v, cv] : mtab_[size_t(s) * nm + q].e) {
          SparseVec one;
          one.e.emplace_back(uint32_t(u) * nm + v, cu * cv);
          sv_axpy(out, Rat(1), one);
        }
      btab_[size_t(i) * nb + j] = std::move(out);
    }
  int nl = 2 * nX() * nX();
  theta_perm_.resize(nl);
  for (int l = 0; l < nl; ++l) {
    int a = first_index(uint16_t(l)), c = second_index(uint16_t(l));
    const auto& lperm = is_inv(uint16_t(l)) ? b.deg.perm[c] : b.deg.inv[a];
    const auto& rperm = is_inv(uint16_t(l)) ? b.deg.perm[a] : b.deg.inv[c];
    theta_perm_[l].resize(nb);
    for (int i = 0; i < nb; ++i) {
      int p = i / nm, q = i % nm;
      int lp = lperm[p / b.dR()] * b.dR() + p % b.dR();
      int rq = rperm[q / b.dR()] * b.dR() + q % b.dR();
      theta_perm_[l][i] = lp * nm + rq;
    }
  }
}

int AsCtx::zdeg(const Word& w) const {
  int d = 0;
  for (uint16_t l : w) d += is_inv(l) ? -1 : 1;
  return d;
}

std::string AsCtx::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (uint16_t l : w) {
    s += is_inv(l) ? "Li[" : "L[";
    s += base_->x.names[first_index(l)] + "," +
         base_->x.names[second_index(l)] + "]";
  }
  return s;
}

RVec AsCtx::theta_letter(uint16_t l, const RVec& xi) const {
  RVec out(base_->nB(), Rat(0));
  const auto& p = theta_perm_[l];
  for (int i = 0; i < base_->nB(); ++i)
    if (!is_zero(xi[i])) out[p[i]] = xi[i];
  return out;
}

RVec AsCtx::theta_word(const Word& w, const RVec& xi) const {
  RVec cur = xi;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = theta_letter(*it, cur);
  return cur;
}

CPoly AsCtx::base_elem(const RVec& bvec) const {
  CPoly p;
  if (!vec_is_zero(bvec)) p.t.emplace(Word{}, bvec);
  return p;
}

CPoly AsCtx::s_map(const RVec& f) const {
  return base_elem(base_->b_tensor(f, base_->m_unit()));
}

CPoly AsCtx::t_map(const RVec& f) const {
  return base_elem(base_->b_tensor(base_->m_unit(), f));
}

CPoly AsCtx::letter(uint16_t l) const {
  CPoly p;
  p.t.emplace(Word{l}, base_->b_unit());
  return p;
}

CPoly AsCtx::mul(const CPoly& x, const CPoly& y) const {
  int nb = base_->nB();
  CPoly out;
  for (const auto& [w1, xi1] : x.t)
    for (const auto& [w2, xi2] : y.t) {
      RVec moved = theta_word(w1, xi2);
      RVec xi(nb, Rat(0));
      for (int i = 0; i < nb; ++i) {
        if (is_zero(xi1[i])) continue;
        for (int j = 0; j < nb; ++j) {
          if (is_zero(moved[j])) continue;
          Rat c = xi1[i] * moved[j];
          for (const auto& [k, ck] : btab(i, j).e) xi[k] += c * ck;
        }
      }
      if (vec_is_zero(xi)) continue;
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      auto it = out.t.find(w);
      if (it == out.t.end())
        out.t.emplace(std::move(w), std::move(xi));
      else
        vec_axpy(it->second, Rat(1), xi);
    }
  out.prune();
  return out;
}

CPoly AsCtx::scale(const Rat& c, CPoly x) const {
  for (auto& [w, xi] : x.t) xi = vec_scale(c, xi);
  x.prune();
  return x;
}

void AsCtx::build_generators() {
  int nx = nX();
  for (int kind = 0; kind < 2; ++kind)
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < nx; ++b) {
        CPoly g;
        for (int c = 0; c < nx; ++c) {
          Word w = kind == 0 ? Word{L(a, c), Li(c, b)} : Word{Li(a, c), L(c, b)};
          g.t.emplace(std::move(w), base_->b_unit());
        }
        if (a == b) {
          CPoly unit = one();
          g.axpy(Rat(-1), unit);
        }
        GenInfo info;
        info.pattern_kind = kind;
        info.a = a;
        info.b = b;
        info.name = std::string(kind == 0 ? "inv-r(" : "inv-l(") +
                    base_->x.names[a] + "," + base_->x.names[b] + ")";
        pattern_index_[{kind, a, b}] = int(gens_.size());
        gens_.push_back(std::move(g));
        gen_info_.push_back(std::move(info));
      }
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b)
      for (int c = 0; c < nx; ++c)
        for (int d = 0; d < nx; ++d) {
          CPoly g;
          for (int x = 0; x < nx; ++x)
            for (int y = 0; y < nx; ++y) {
              if (sigma_.present(x, y, a, c)) {
                CPoly term;
                term.t.emplace(Word{L(y, d), L(x, b)},
                               base_->b_tensor(sigma_.at(*base_, x, y, a, c),
                                               base_->m_unit()));
                g.axpy(Rat(1), term);
              }
              if (sigma_.present(b, d, x, y)) {
                CPoly term;
                term.t.emplace(Word{L(c, y), L(a, x)},
                               base_->b_tensor(base_->m_unit(),
                                               sigma_.at(*base_, b, d, x, y)));
                g.axpy(Rat(-1), term);
              }
            }
          exchange_index_[{a, b, c, d}] = int(gens_.size());
          GenInfo info;
          info.name = "exch(" + base_->x.names[a] + base_->x.names[b] +
                      base_->x.names[c] + base_->x.names[d] + ")";
          gens_.push_back(std::move(g));
          gen_info_.push_back(std::move(info));
        }
}

int AsCtx::gen_index_pattern(int kind, int a, int b) const {
  return pattern_index_.at({kind, a, b});
}

int AsCtx::gen_index_exchange(int a, int b, int c, int d) const {
  return exchange_index_.at({a, b, c, d});
}

MMat AsCtx::chi_word(const Word& w) const {
  const BaseCtx& b = *base_;
  int n = b.nM();
  // column-major identity, then right-compose letter actions
  MMat m(n, RVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    uint16_t l = *it;
    int a = first_index(l), c = second_index(l);
    if (a != c) return MMat(n, RVec(n, Rat(0)));
    // T_{deg a} (or its inverse): e_{(mu,r)} -> e_{(mu . alpha^-1, r)}
    const auto& lamperm = is_inv(l) ? b.deg.perm[a] : b.deg.inv[a];
    MMat next(n, RVec(n, Rat(0)));
    for (int col = 0; col < n; ++col) {
      int mu = col / b.dR(), r = col % b.dR();
      int col2 = b.m_index(lamperm[mu], r);
      next[col] = m[col2];
    }
    m = std::move(next);
  }
  return m;
}

MMat AsCtx::rho(const RVec& bvec) const {
  const BaseCtx& b = *base_;
  int n = b.nM();
  MMat m(n, RVec(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& c = bvec[size_t(i) * n + j];
      if (is_zero(c)) continue;
      for (int col = 0; col < n; ++col)
        for (const auto& [mid, c1] : mtab_[size_t(i) * n + col].e)
          for (const auto& [row, c2] : mtab_[size_t(mid) * n + j].e)
            m[col][row] += c * c1 * c2;
    }
  return m;
}

MMat AsCtx::chi(const CPoly& p) const {
  int n = base_->nM();
  MMat acc(n, RVec(n, Rat(0)));
  for (const auto& [w, xi] : p.t) {
    MMat m = mat_mul(rho(xi), chi_word(w));
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r)
        if (!is_zero(m[c][r])) acc[c][r] += m[c][r];
  }
  return acc;
}

RVec AsCtx::pi_map(const CPoly& p) const {
  return mat_apply(chi(p), base_->m_unit());
}

MMat AsCtx::mat_mul(const MMat& a, const MMat& b) const {
  int n = int(a.size());
  MMat out(n, RVec(n, Rat(0)));
  for (int col = 0; col < n; ++col)
    for (int k = 0; k < n; ++k) {
      const Rat& c = b[col][k];
      if (!is_zero(c)) vec_axpy(out[col], c, a[k]);
    }
  return out;
}

bool AsCtx::mat_is_zero(const MMat& a) const {
  for (const auto& col : a)
    if (!vec_is_zero(col)) return false;
  return true;
}

RVec AsCtx::mat_apply(const MMat& a, const RVec& v) const {
  RVec out(a.size(), Rat(0));
  for (size_t c = 0; c < a.size(); ++c)
    if (!is_zero(v[c])) vec_axpy(out, v[c], a[c]);
  return out;
}

Rat AsCtx::eps(const CPoly& p) const { return frobM_.apply_psi(pi_map(p)); }

CPoly AsCtx::eps_s(const CPoly& p) const {
  MMat m = chi(p);
  CPoly out;
  for (const auto& [e1, e2] : frobM_.casimir) {
    Rat c = frobM_.apply_psi(mat_apply(m, e2));
    if (!is_zero(c)) out.axpy(c, t_map(e1));
  }
  return out;
}

CPoly AsCtx::eps_t(const CPoly& p) const {
  RVec pi = pi_map(p);
  CPoly out;
  for (const auto& [e1, e2] : frobM_.casimir) {
    Rat c = frobM_.apply_psi(base_->m_mul(pi, e1));
    if (!is_zero(c)) out.axpy(c, s_map(e2));
  }
  return out;
}

CTensor AsCtx::ct_tensor(const CPoly& x, const CPoly& y) const {
  int nb = base_->nB();
  CTensor out;
  for (const auto& [w1, xi1] : x.t)
    for (const auto& [w2, xi2] : y.t) {
      RVec c(size_t(nb) * nb, Rat(0));
      for (int i = 0; i < nb; ++i) {
        if (is_zero(xi1[i])) continue;
        for (int j = 0; j < nb; ++j)
          if (!is_zero(xi2[j])) c[size_t(i) * nb + j] = xi1[i] * xi2[j];
      }
      auto key = std::make_pair(w1, w2);
      auto it = out.t.find(key);
      if (it == out.t.end())
        out.t.emplace(key, std::move(c));
      else
        vec_axpy(it->second, Rat(1), c);
    }
  out.prune();
  return out;
}

CTensor AsCtx::delta_bar(const CPoly& p) const {
  int nb = base_->nB();
  int nm = base_->nM();
  CTensor acc;
  for (const auto& [w, xi] : p.t) {
    CTensor cur;
    {
      // Delta of a base coefficient: e_i @ e_j -> (e_i @ 1) (x) (1 @ e_j)
      RVec c(size_t(nb) * nb, Rat(0));
      for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j) {
          const Rat& q = xi[size_t(i) * nm + j];
          if (is_zero(q)) continue;
          RVec ei(nm, Rat(0)), ej(nm, Rat(0));
          ei[i] = 1;
          ej[j] = 1;
          RVec left = base_->b_tensor(ei, base_->m_unit());
          RVec right = base_->b_tensor(base_->m_unit(), ej);
          for (int u = 0; u < nb; ++u) {
            if (is_zero(left[u])) continue;
            for (int v = 0; v < nb; ++v)
              if (!is_zero(right[v]))
                c[size_t(u) * nb + v] += q * left[u] * right[v];
          }
        }
      std::pair<Word, Word> key{Word{}, Word{}};
      cur.t.emplace(std::move(key), std::move(c));
      cur.prune();
    }
    for (uint16_t l : w) {
      int a = first_index(l), b = second_index(l);
      CTensor dl;
      for (int c2 = 0; c2 < nX(); ++c2) {
        CPoly lg, rg;
        if (!is_inv(l)) {
          lg = letter(L(a, c2));
          rg = letter(L(c2, b));
        } else {
          lg = letter(Li(c2, b));
          rg = letter(Li(a, c2));
        }
        dl.axpy(Rat(1), ct_tensor(lg, rg));
      }
      cur = ct_mul(cur, dl);
    }
    acc.axpy(Rat(1), cur);
  }
  return acc;
}

CTensor AsCtx::ct_mul(const CTensor& x, const CTensor& y) const {
  int nb = base_->nB();
  CTensor out;
  for (const auto& [wp1, c1] : x.t) {
    // theta permutations of the two legs as direct B-index maps
    std::vector<int> p1(nb), p2(nb);
    for (int i = 0; i < nb; ++i) {
      int u = i, v = i;
      for (auto it = wp1.first.rbegin(); it != wp1.first.rend(); ++it)
        u = theta_perm(*it)[u];
      for (auto it = wp1.second.rbegin(); it != wp1.second.rend(); ++it)
        v = theta_perm(*it)[v];
      p1[i] = u;
      p2[i] = v;
    }
    for (const auto& [wp2, c2] : y.t) {
      RVec prod(size_t(nb) * nb, Rat(0));
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
          const Rat& qa = c1[size_t(i) * nb + j];
          if (is_zero(qa)) continue;
          for (int k = 0; k < nb; ++k)
            for (int l = 0; l < nb; ++l) {
              const Rat& qb = c2[size_t(k) * nb + l];
              if (is_zero(qb)) continue;
              Rat qq = qa * qb;
              for (const auto& [u, cu] : btab(i, p1[k]).e)
                for (const auto& [v, cv] : btab(j, p2[l]).e)
                  prod[size_t(u) * nb + v] += qq * cu * cv;
            }
        }
      if (vec_is_zero(prod)) continue;
      Word w1 = wp1.first, w2 = wp1.second;
      w1.insert(w1.end(), wp2.first.begin(), wp2.first.end());
      w2.insert(w2.end(), wp2.second.begin(), wp2.second.end());
      auto key = std::make_pair(std::move(w1), std::move(w2));
      auto it = out.t.find(key);
      if (it == out.t.end())
        out.t.emplace(std::move(key), std::move(prod));
      else
        vec_axpy(it->second, Rat(1), prod);
    }
  }
  out.prune();
  return out;
}

CTensor AsCtx::project_base_tensor(const CTensor& x) const {
  int nb = base_->nB();
  CTensor out;
  std::vector<std::pair<RVec, RVec>> dress;
  for (const auto& [e1, e2] : frobM_.casimir)
    dress.emplace_back(base_->b_tensor(base_->m_unit(), e1),
                       base_->b_tensor(e2, base_->m_unit()));
  for (const auto& [wp, c] : x.t) {
    RVec mod(size_t(nb) * nb, Rat(0));
    for (const auto& [lt, rs] : dress) {
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
          const Rat& q = c[size_t(i) * nb + j];
          if (is_zero(q)) continue;
          for (int a = 0; a < nb; ++a) {
            if (is_zero(lt[a])) continue;
            for (const auto& [u, cu] : btab(a, i).e) {
              Rat qa = q * lt[a] * cu;
              for (int b = 0; b < nb; ++b) {
                if (is_zero(rs[b])) continue;
                for (const auto& [v, cv] : btab(b, j).e)
                  mod[size_t(u) * nb + v] += qa * rs[b] * cv;
              }
            }
          }
        }
    }
    if (vec_is_zero(mod)) continue;
    auto it = out.t.find(wp);
    if (it == out.t.end())
      out.t.emplace(wp, std::move(mod));
    else
      vec_axpy(it->second, Rat(1), mod);
  }
  out.prune();
  return out;
}

bool AsCtx::chi_tensor_is_zero(const CTensor& x) const {
  int n = base_->nM();
  int nb = base_->nB();
  std::vector<RVec> acc(n * n, RVec(n * n, Rat(0)));
  for (const auto& [wp, c] : x.t) {
    MMat mw1 = chi_word(wp.first), mw2 = chi_word(wp.second);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) {
        const Rat& q = c[size_t(i) * nb + j];
        if (is_zero(q)) continue;
        RVec ei(nb, Rat(0)), ej(nb, Rat(0));
        ei[i] = 1;
        ej[j] = 1;
        MMat m1 = mat_mul(rho(ei), mw1);
        MMat m2 = mat_mul(rho(ej), mw2);
        for (int c1 = 0; c1 < n; ++c1)
          for (int r1 = 0; r1 < n; ++r1) {
            if (is_zero(m1[c1][r1])) continue;
            for (int c2 = 0; c2 < n; ++c2)
              for (int r2 = 0; r2 < n; ++r2)
                if (!is_zero(m2[c2][r2]))
                  acc[c1 * n + c2][r1 * n + r2] += q * m1[c1][r1] * m2[c2][r2];
          }
      }
  }
  for (const auto& col : acc)
    if (!vec_is_zero(col)) return false;
  return true;
}

CPoly AsCtx::tensor_mul_legs(const CTensor& x) const {
  int nb = base_->nB();
  CPoly out;
  for (const auto& [wp, c] : x.t)
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) {
        const Rat& q = c[size_t(i) * nb + j];
        if (is_zero(q)) continue;
        RVec ei(nb, Rat(0)), ej(nb, Rat(0));
        ei[i] = 1;
        ej[j] = 1;
        CPoly p1, p2;
        p1.t.emplace(wp.first, std::move(ei));
        p2.t.emplace(wp.second, std::move(ej));
        out.axpy(q, mul(p1, p2));
      }
  return out;
}

CPoly apply_antipode(const AsCtx& ctx, const SRules& rules, const CPoly& p) {
  CPoly out;
  for (const auto& [w, xi] : p.t) {
    CPoly acc = ctx.base_elem(ctx.base().b_swap(xi));
    for (uint16_t l : w) {
      const CPoly& img =
          ctx.is_inv(l)
              ? rules.img_Li[ctx.first_index(l) * ctx.nX() + ctx.second_index(l)]
              : rules.img_L[ctx.first_index(l) * ctx.nX() + ctx.second_index(l)];
      acc = ctx.mul(img, acc);
    }
    out.axpy(Rat(1), acc);
  }
  return out;
}

}  // namespace frtb
