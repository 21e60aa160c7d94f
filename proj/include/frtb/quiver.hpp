#pragma once

#include <string>
#include <vector>

#include "frtb/basemap.hpp"

namespace frtb {

struct Arrow {
  std::string id;
  int src = 0, tgt = 0;
};

struct Quiver {
  int n_vertices = 0;
  std::vector<Arrow> arrows;

  void validate() const;
};

// Composable path of length m >= 0; a length-0 path is a vertex.
struct Path {
  std::vector<int> arrows;  // arrow indices into Quiver::arrows
  int vertex = -1;          // only for length 0
  int src = 0, tgt = 0;

  int length() const { return vertex >= 0 ? 0 : int(arrows.size()); }
};

bool operator==(const Path& a, const Path& b);

// Q^(m), enumerated once each in lexicographic order of arrow index
// sequences (vertex order for m = 0).
std::vector<Path> fiber_product(const Quiver& q, int m);

// Concatenation p * r; caller guarantees tgt(p) == src(r).
Path path_concat(const Path& p, const Path& r);

// Q = Lambda x X with s(l,x) = l, t(l,x) = l.deg(x); arrows ordered by
// (lambda index, x index), id "(l,x)".
Quiver build_sigma_quiver(const BaseCtx& ctx);

}  // namespace frtb
