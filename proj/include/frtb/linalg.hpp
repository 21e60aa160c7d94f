#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "frtb/rat.hpp"

namespace frtb {

// Sparse row vector: (column, coefficient) pairs sorted by column, no zeros.
struct SparseVec {
  std::vector<std::pair<uint32_t, Rat>> e;

  bool empty() const { return e.empty(); }
  uint32_t lead() const { return e.front().first; }
  const Rat& lead_coeff() const { return e.front().second; }
  void scale(const Rat& c);
  void normalize();  // divide by leading coefficient

  static SparseVec from_dense(const RVec& v);
  RVec to_dense(size_t n) const;
};

bool operator==(const SparseVec& a, const SparseVec& b);

// a += c*b
void sv_axpy(SparseVec& a, const Rat& c, const SparseVec& b);

// Row-echelon span over Q with leading-column pivots.  Rows are kept
// normalized (leading coefficient 1); pivot columns are unique.  Insertion
// order determines the echelon deterministically.
class RowSpace {
 public:
  // Reduces v against the echelon in place.  on_use(row, c) reports that
  // c * rows_[row] was subtracted.
  void reduce(SparseVec& v,
              const std::function<void(size_t, const Rat&)>& on_use = {}) const;

  // Reduce-then-insert; returns the stored row index if the rank grew.
  std::optional<size_t> insert(SparseVec v);

  size_t rank() const { return rows_.size(); }
  const SparseVec& row(size_t i) const { return rows_[i]; }
  bool is_pivot(uint32_t col) const { return pivot_of_col_.count(col) != 0; }

  // Columns in [0, ncols) that carry no pivot, ascending.
  std::vector<uint32_t> free_columns(uint32_t ncols) const;

 private:
  std::map<uint32_t, size_t> pivot_of_col_;
  std::vector<SparseVec> rows_;
};

// Basis of { x : M x = 0 } for a dense matrix given by rows.  Columns of the
// result are ordered by ascending free column.
std::vector<RVec> nullspace(const std::vector<RVec>& rows, size_t ncols);

// Deterministic parallel map: fn(i) for i in [0,n); results must be written
// into index-addressed slots by the caller.  threads <= 1 runs inline.
void parallel_for(size_t n, unsigned threads,
                  const std::function<void(size_t)>& fn);

}  // namespace frtb
