#include "frtb/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace frtb {

void SparseVec::scale(const Rat& c) {
  for (auto& [col, q] : e) q *= c;
}

void SparseVec::normalize() {
  if (e.empty()) return;
  Rat inv = 1 / e.front().second;
  if (inv == 1) return;
  for (auto& [col, q] : e) q *= inv;
}

SparseVec SparseVec::from_dense(const RVec& v) {
  SparseVec s;
  for (uint32_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.e.emplace_back(i, v[i]);
  return s;
}

RVec SparseVec::to_dense(size_t n) const {
  RVec v(n, Rat(0));
  for (const auto& [col, q] : e) v[col] = q;
  return v;
}

bool operator==(const SparseVec& a, const SparseVec& b) { return a.e == b.e; }

void sv_axpy(SparseVec& a, const Rat& c, const SparseVec& b) {
  std::vector<std::pair<uint32_t, Rat>> out;
  out.reserve(a.e.size() + b.e.size());
  size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      out.push_back(a.e[i++]);
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      Rat q = c * b.e[j].second;
      if (!is_zero(q)) out.emplace_back(b.e[j].first, q);
      ++j;
    } else {
      Rat q = a.e[i].second + c * b.e[j].second;
      if (!is_zero(q)) out.emplace_back(a.e[i].first, q);
      ++i;
      ++j;
    }
  }
  a.e = std::move(out);
}

void RowSpace::reduce(SparseVec& v,
                      const std::function<void(size_t, const Rat&)>& on_use) const {
  // Leading-pivot reduction: each step eliminates the current lead when it is
  // a pivot column, so the lead strictly advances.
  while (!v.empty()) {
    auto it = pivot_of_col_.find(v.lead());
    if (it == pivot_of_col_.end()) {
      // Lead is free; eliminate any later pivot columns too.
      bool changed = false;
      for (size_t k = 1; k < v.e.size(); ++k) {
        auto jt = pivot_of_col_.find(v.e[k].first);
        if (jt != pivot_of_col_.end()) {
          Rat c = v.e[k].second;
          if (on_use) on_use(jt->second, c);
          sv_axpy(v, -c, rows_[jt->second]);
          changed = true;
          break;
        }
      }
      if (!changed) return;
    } else {
      Rat c = v.lead_coeff();
      if (on_use) on_use(it->second, c);
      sv_axpy(v, -c, rows_[it->second]);
    }
  }
}

std::optional<size_t> RowSpace::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return std::nullopt;
  v.normalize();
  size_t idx = rows_.size();
  pivot_of_col_[v.lead()] = idx;
  rows_.push_back(std::move(v));
  return idx;
}

std::vector<uint32_t> RowSpace::free_columns(uint32_t ncols) const {
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < ncols; ++c)
    if (!pivot_of_col_.count(c)) out.push_back(c);
  return out;
}

std::vector<RVec> nullspace(const std::vector<RVec>& rows, size_t ncols) {
  RowSpace rs;
  for (const auto& r : rows) rs.insert(SparseVec::from_dense(r));
  // Fully interreduce pivot rows for back-substitution-free extraction.
  std::vector<SparseVec> red;
  std::map<uint32_t, size_t> pivot_at;
  for (size_t i = 0; i < rs.rank(); ++i) red.push_back(rs.row(i));
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < red.size(); ++i) {
      for (size_t k = 1; k < red[i].e.size(); ++k) {
        for (size_t j = 0; j < red.size(); ++j) {
          if (j != i && !red[j].empty() && red[j].lead() == red[i].e[k].first) {
            Rat c = red[i].e[k].second;
            sv_axpy(red[i], -c, red[j]);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
      if (changed) break;
    }
  }
  for (size_t i = 0; i < red.size(); ++i) pivot_at[red[i].lead()] = i;
  std::vector<RVec> basis;
  for (uint32_t c = 0; c < ncols; ++c) {
    if (pivot_at.count(c)) continue;
    RVec v(ncols, Rat(0));
    v[c] = 1;
    for (const auto& [p, i] : pivot_at) {
      // pivot row: x_p + sum over free cols; solve x_p = -coefficient of c
      for (const auto& [col, q] : red[i].e)
        if (col == c) v[p] = -q;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void parallel_for(size_t n, unsigned threads,
                  const std::function<void(size_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned t = std::min<size_t>(threads, n);
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned k = 0; k < t; ++k)
    pool.emplace_back([&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace frtb
