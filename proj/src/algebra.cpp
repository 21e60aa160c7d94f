#include "frtb/algebra.hpp"

#include <stdexcept>

#include "frtb/linalg.hpp"

namespace frtb {

RVec AlgebraSpec::mul(const RVec& a, const RVec& b) const {
  RVec r(dim, Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(b[j])) continue;
      Rat ab = a[i] * b[j];
      for (int k = 0; k < dim; ++k) {
        const Rat& ck = c(i, j, k);
        if (!is_zero(ck)) r[k] += ab * ck;
      }
    }
  }
  return r;
}

void AlgebraSpec::validate() const {
  if (dim <= 0) throw std::runtime_error("algebra dimension must be positive");
  if (sc.size() != size_t(dim) * dim * dim || unit.size() != size_t(dim))
    throw std::runtime_error("algebra data has wrong shape");
  // associativity: sum_m c(i,j,m) c(m,k,l) = sum_m c(j,k,m) c(i,m,l)
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          Rat lhs(0), rhs(0);
          for (int m = 0; m < dim; ++m) {
            lhs += c(i, j, m) * c(m, k, l);
            rhs += c(j, k, m) * c(i, m, l);
          }
          if (lhs != rhs)
            throw std::runtime_error("structure constants are not associative");
        }
  for (int i = 0; i < dim; ++i) {
    RVec ei(dim, Rat(0));
    ei[i] = 1;
    if (mul(unit, ei) != ei || mul(ei, unit) != ei)
      throw std::runtime_error("unit coordinates are not a two-sided unit");
  }
}

std::vector<RVec> AlgebraSpec::center_basis() const {
  // Rows of the commutator system: for each basis pair (i, k) one functional
  // per output coordinate of z e_i - e_i z.
  std::vector<RVec> rows;
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      RVec row(dim, Rat(0));
      for (int j = 0; j < dim; ++j) row[j] = c(j, i, k) - c(i, j, k);
      rows.push_back(std::move(row));
    }
  return nullspace(rows, dim);
}

bool AlgebraSpec::in_center(const RVec& z) const {
  for (int i = 0; i < dim; ++i) {
    RVec ei(dim, Rat(0));
    ei[i] = 1;
    if (mul(z, ei) != mul(ei, z)) return false;
  }
  return true;
}

AlgebraSpec AlgebraSpec::rationals() {
  AlgebraSpec a;
  a.dim = 1;
  a.sc = {Rat(1)};
  a.unit = {Rat(1)};
  return a;
}

AlgebraSpec AlgebraSpec::matrix_algebra(int n) {
  // Basis E_{ij} in row-major order; E_{ij} E_{kl} = delta_{jk} E_{il}.
  AlgebraSpec a;
  a.dim = n * n;
  a.sc.assign(size_t(a.dim) * a.dim * a.dim, Rat(0));
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) a.c(idx(i, j), idx(k, l), idx(i, l)) = 1;
  a.unit.assign(a.dim, Rat(0));
  for (int i = 0; i < n; ++i) a.unit[idx(i, i)] = 1;
  return a;
}

}  // namespace frtb
