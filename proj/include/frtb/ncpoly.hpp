#pragma once

#include "frtb/collected.hpp"

namespace frtb {

// Raw free-algebra layer: words over the full alphabet, base coefficients
// allowed at any position.  Used for the generic polynomial operations and
// for auditing the collection rewriting.
struct RawLetter {
  int kind = 0;  // 0 = base coefficient, 1 = L, 2 = inverse letter
  RVec xi;       // kind 0 only
  int a = -1, b = -1;

  bool operator<(const RawLetter& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return xi < o.xi;
  }
  bool operator==(const RawLetter& o) const {
    return kind == o.kind && a == o.a && b == o.b && xi == o.xi;
  }
};

using RawWord = std::vector<RawLetter>;

struct RawWordLess {
  bool operator()(const RawWord& x, const RawWord& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

struct NCPoly {
  std::map<RawWord, Rat, RawWordLess> terms;

  bool zero() const { return terms.empty(); }
  void prune();
};

bool operator==(const NCPoly& a, const NCPoly& b);

NCPoly nc_add(const NCPoly& a, const NCPoly& b);
NCPoly nc_scale(const Rat& c, const NCPoly& a);
NCPoly nc_mul(const NCPoly& a, const NCPoly& b);

NCPoly nc_from_letter(RawLetter l);
NCPoly nc_embed(const AsCtx& ctx, const CPoly& p);  // collected -> raw

// Left collection: move base coefficients left through the letters, fuse
// them, and identify the empty word with the unit coefficient.  When trace
// is given, each rewriting step's raw difference is appended; the sum of the
// differences equals input - embed(output) exactly.
CPoly left_collect(const AsCtx& ctx, const NCPoly& p,
                   std::vector<NCPoly>* trace = nullptr);

}  // namespace frtb
