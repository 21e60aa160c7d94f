#include "frtb/quiver.hpp"

#include <functional>
#include <stdexcept>

namespace frtb {

void Quiver::validate() const {
  for (const auto& a : arrows)
    if (a.src < 0 || a.src >= n_vertices || a.tgt < 0 || a.tgt >= n_vertices)
      throw std::runtime_error("arrow '" + a.id + "' has endpoint outside Lambda");
}

bool operator==(const Path& a, const Path& b) {
  return a.arrows == b.arrows && a.vertex == b.vertex;
}

std::vector<Path> fiber_product(const Quiver& q, int m) {
  std::vector<Path> out;
  if (m == 0) {
    for (int v = 0; v < q.n_vertices; ++v) {
      Path p;
      p.vertex = v;
      p.src = p.tgt = v;
      out.push_back(std::move(p));
    }
    return out;
  }
  // depth-first in ascending arrow index = lexicographic ordering
  std::vector<int> stack;
  auto emit = [&]() {
    Path p;
    p.arrows = stack;
    p.src = q.arrows[stack.front()].src;
    p.tgt = q.arrows[stack.back()].tgt;
    out.push_back(std::move(p));
  };
  std::function<void()> rec = [&]() {
    if (int(stack.size()) == m) {
      emit();
      return;
    }
    for (int a = 0; a < int(q.arrows.size()); ++a) {
      if (!stack.empty() && q.arrows[stack.back()].tgt != q.arrows[a].src)
        continue;
      stack.push_back(a);
      rec();
      stack.pop_back();
    }
  };
  rec();
  return out;
}

Path path_concat(const Path& p, const Path& r) {
  if (p.length() == 0) return r;
  if (r.length() == 0) return p;
  Path out;
  out.arrows = p.arrows;
  out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
  out.src = p.src;
  out.tgt = r.tgt;
  return out;
}

Quiver build_sigma_quiver(const BaseCtx& ctx) {
  Quiver q;
  q.n_vertices = ctx.nLam();
  for (int l = 0; l < ctx.nLam(); ++l)
    for (int xi = 0; xi < ctx.nX(); ++xi) {
      Arrow a;
      a.id = "(" + ctx.lambda.names[l] + "," + ctx.x.names[xi] + ")";
      a.src = l;
      a.tgt = ctx.deg.perm[xi][l];
      q.arrows.push_back(std::move(a));
    }
  return q;
}

}  // namespace frtb
