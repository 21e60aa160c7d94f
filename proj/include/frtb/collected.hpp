#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frtb/frobenius.hpp"
#include "frtb/linalg.hpp"
#include "frtb/sigma.hpp"

namespace frtb {

// Word over the L-alphabet.  Letter encoding: a*nX + b for L_{ab},
// nX^2 + a*nX + b for the formal inverse generator.
using Word = std::vector<uint16_t>;

// degree-then-lexicographic order
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the free algebra on the sigma alphabet in left-collected form:
// every term is (single coefficient in M (x) M^op) * (word in L-letters).
// Base-algebra relations, the commutation family and the empty-word
// identification are applied eagerly, so this representation is canonical
// modulo exactly those generator families.
struct CPoly {
  std::map<Word, RVec, WordLess> t;

  bool zero() const { return t.empty(); }
  void prune();
  void axpy(const Rat& c, const CPoly& other);
};

bool operator==(const CPoly& a, const CPoly& b);

// Element of (free) A (x) A with both legs collected; coefficients live in
// B (x) B, laid out as xi1 * nB + xi2.
struct CTensor {
  std::map<std::pair<Word, Word>, RVec> t;

  bool zero() const { return t.empty(); }
  void prune();
  void axpy(const Rat& c, const CTensor& other);
};

bool operator==(const CTensor& a, const CTensor& b);

// dense square matrix acting on M_Lambda(R), column-major
using MMat = std::vector<RVec>;

struct GenInfo {
  std::string name;
  // sum-collapse pattern for the invertibility family:
  // kind 0: sum_c L_{ac} Li_{cb};  kind 1: sum_c Li_{ac} L_{cb};  -1: none
  int pattern_kind = -1;
  int a = -1, b = -1;
};

// Presentation context for the dynamical FRT algebra.
class AsCtx {
 public:
  AsCtx(const BaseCtx* base, SigmaFamily sigma, FrobeniusSystem frobR);

  const BaseCtx& base() const { return *base_; }
  const SigmaFamily& sigma() const { return sigma_; }
  const FrobeniusSystem& frobM() const { return frobM_; }

  // --- letters -----------------------------------------------------------
  int nX() const { return base_->nX(); }
  uint16_t L(int a, int b) const { return uint16_t(a * nX() + b); }
  uint16_t Li(int a, int b) const { return uint16_t(nX() * nX() + a * nX() + b); }
  bool is_inv(uint16_t l) const { return l >= nX() * nX(); }
  int first_index(uint16_t l) const { return (l % (nX() * nX())) / nX(); }
  int second_index(uint16_t l) const { return l % nX(); }
  int zdeg(const Word& w) const;
  std::string word_str(const Word& w) const;

  // --- collected arithmetic ----------------------------------------------
  // push a coefficient left through one letter / a word (rightmost first)
  RVec theta_letter(uint16_t l, const RVec& xi) const;
  RVec theta_word(const Word& w, const RVec& xi) const;

  CPoly base_elem(const RVec& bvec) const;  // bvec * empty word
  CPoly s_map(const RVec& f) const;         // f (x) 1
  CPoly t_map(const RVec& f) const;         // 1 (x) f
  CPoly one() const { return base_elem(base_->b_unit()); }
  CPoly letter(uint16_t l) const;
  CPoly mul(const CPoly& x, const CPoly& y) const;
  CPoly scale(const Rat& c, CPoly x) const;

  // --- ideal generators ----------------------------------------------------
  // invertibility family first (both patterns), then the exchange family
  const std::vector<CPoly>& gens() const { return gens_; }
  const std::vector<GenInfo>& gen_info() const { return gen_info_; }
  int gen_index_pattern(int kind, int a, int b) const;
  int gen_index_exchange(int a, int b, int c, int d) const;

  // --- representation on the base ----------------------------------------
  MMat chi_word(const Word& w) const;
  MMat chi(const CPoly& p) const;  // kills the whole ideal (checked per run)
  RVec pi_map(const CPoly& p) const;  // chi(p)(1_M)
  MMat rho(const RVec& bvec) const;   // left/right multiplication operators

  // --- counit layer (weak structure over the lifted Frobenius system) -----
  Rat eps(const CPoly& p) const;         // psi' o pi
  CPoly eps_s(const CPoly& p) const;     // 1_(1) eps(a 1_(2))
  CPoly eps_t(const CPoly& p) const;     // eps(1_(1) a) 1_(2)

  // --- coproduct lift and the tensor-square section ------------------------
  CTensor delta_bar(const CPoly& p) const;
  CTensor ct_mul(const CTensor& x, const CTensor& y) const;
  CTensor ct_tensor(const CPoly& x, const CPoly& y) const;
  // E(x (x) y) = sum t(e1) x (x) s(e2) y; kills the mixed right ideal exactly
  CTensor project_base_tensor(const CTensor& x) const;
  // apply chi (x) chi; zero is necessary for membership in ideal (x) A + A (x) ideal
  bool chi_tensor_is_zero(const CTensor& x) const;
  CPoly tensor_mul_legs(const CTensor& x) const;  // multiply the two legs

  MMat mat_mul(const MMat& a, const MMat& b) const;
  bool mat_is_zero(const MMat& a) const;
  RVec mat_apply(const MMat& a, const RVec& v) const;

  const std::vector<std::pair<RVec, RVec>>& lifted_casimir() const {
    return frobM_.casimir;
  }

  // product of B basis elements i, j (sparse over B)
  const SparseVec& btab(int i, int j) const { return btab_[size_t(i) * base_->nB() + j]; }
  // B-index permutation for pushing a coefficient left through a letter
  const std::vector<int>& theta_perm(uint16_t l) const { return theta_perm_[l]; }

 private:
  void build_tables();
  void build_generators();

  const BaseCtx* base_;
  SigmaFamily sigma_;
  FrobeniusSystem frobR_, frobM_;
  std::vector<CPoly> gens_;
  std::vector<GenInfo> gen_info_;
  std::map<std::array<int, 3>, int> pattern_index_;
  std::map<std::array<int, 4>, int> exchange_index_;
  std::vector<SparseVec> btab_;
  std::vector<SparseVec> mtab_;               // M basis products
  std::vector<std::vector<int>> theta_perm_;  // per letter
};

// Antipode as generator-level rewriting: images of the base swap, the L
// letters, and the inverse letters (rigidity witnesses).
struct SRules {
  std::vector<CPoly> img_L;   // indexed a*nX+b
  std::vector<CPoly> img_Li;  // witness table x_{ab}
};

// S(xi * w) = S(w-reversed) * (swap xi); anti-multiplicative by construction.
CPoly apply_antipode(const AsCtx& ctx, const SRules& rules, const CPoly& p);

}  // namespace frtb
