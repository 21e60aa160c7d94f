#pragma once

#include <string>
#include <vector>

#include "frtb/rat.hpp"

namespace frtb {

// Finite-dimensional unital algebra over Q, by structure constants:
// e_i * e_j = sum_k c(i,j,k) e_k.
struct AlgebraSpec {
  int dim = 0;
  RVec sc;    // c(i,j,k) at [ (i*dim + j)*dim + k ]
  RVec unit;  // coordinates of 1

  const Rat& c(int i, int j, int k) const {
    return sc[(size_t(i) * dim + j) * dim + k];
  }
  Rat& c(int i, int j, int k) { return sc[(size_t(i) * dim + j) * dim + k]; }

  RVec mul(const RVec& a, const RVec& b) const;

  // Throws on violated associativity or unit laws.
  void validate() const;

  // Basis of { z : z e_i = e_i z for all i }, by commutator null-space.
  std::vector<RVec> center_basis() const;

  bool in_center(const RVec& z) const;

  static AlgebraSpec rationals();
  static AlgebraSpec matrix_algebra(int n);
};

}  // namespace frtb
