#include "frtb/ncpoly.hpp"

namespace frtb {

void NCPoly::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = is_zero(it->second) ? terms.erase(it) : std::next(it);
}

bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms == b.terms; }

NCPoly nc_add(const NCPoly& a, const NCPoly& b) {
  NCPoly out = a;
  for (const auto& [w, c] : b.terms) out.terms[w] += c;
  out.prune();
  return out;
}

NCPoly nc_scale(const Rat& c, const NCPoly& a) {
  NCPoly out;
  for (const auto& [w, q] : a.terms) out.terms[w] = c * q;
  out.prune();
  return out;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [w1, c1] : a.terms)
    for (const auto& [w2, c2] : b.terms) {
      RawWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.terms[w] += c1 * c2;
    }
  out.prune();
  return out;
}

NCPoly nc_from_letter(RawLetter l) {
  NCPoly p;
  p.terms[{std::move(l)}] = 1;
  return p;
}

NCPoly nc_embed(const AsCtx& ctx, const CPoly& p) {
  NCPoly out;
  for (const auto& [w, xi] : p.t) {
    RawWord rw;
    RawLetter head;
    head.kind = 0;
    head.xi = xi;
    rw.push_back(std::move(head));
    for (uint16_t l : w) {
      RawLetter rl;
      rl.kind = ctx.is_inv(l) ? 2 : 1;
      rl.a = ctx.first_index(l);
      rl.b = ctx.second_index(l);
      rw.push_back(std::move(rl));
    }
    out.terms[rw] += 1;
  }
  out.prune();
  return out;
}

CPoly left_collect(const AsCtx& ctx, const NCPoly& p,
                   std::vector<NCPoly>* trace) {
  NCPoly w = p;
  w.prune();
  auto record = [&](NCPoly diff) {
    if (trace) trace->push_back(std::move(diff));
  };
  // phase 1: fuse adjacent base letters and move base letters left
  for (;;) {
    bool changed = false;
    for (const auto& [word, c] : w.terms) {
      for (size_t k = 0; k + 1 < word.size(); ++k) {
        const RawLetter& l1 = word[k];
        const RawLetter& l2 = word[k + 1];
        RawWord repl;
        if (l1.kind == 0 && l2.kind == 0) {
          repl.assign(word.begin(), word.end());
          RawLetter fused;
          fused.kind = 0;
          fused.xi = ctx.base().b_mul(l1.xi, l2.xi);
          repl.erase(repl.begin() + k, repl.begin() + k + 2);
          repl.insert(repl.begin() + k, std::move(fused));
        } else if (l1.kind != 0 && l2.kind == 0) {
          uint16_t letter = l1.kind == 1 ? ctx.L(l1.a, l1.b) : ctx.Li(l1.a, l1.b);
          RawLetter moved;
          moved.kind = 0;
          moved.xi = ctx.theta_letter(letter, l2.xi);
          repl.assign(word.begin(), word.end());
          repl[k] = std::move(moved);
          repl[k + 1] = l1;
        } else {
          continue;
        }
        NCPoly diff;
        diff.terms[word] = c;
        diff.terms[repl] -= c;
        diff.prune();
        NCPoly neg = nc_scale(Rat(-1), diff);
        w = nc_add(w, neg);
        record(std::move(diff));
        changed = true;
        break;
      }
      if (changed) break;
    }
    if (!changed) break;
  }
  // phase 2: ensure a single leading base coefficient, absorb scalars, and
  // merge terms sharing a letter word (the merge is itself a base-relation
  // rewrite, so it is recorded too)
  std::map<Word, RVec, WordLess> merged;
  for (const auto& [word, c] : w.terms) {
    RawWord cur = word;
    if (cur.empty() || cur[0].kind != 0) {
      RawLetter unit;
      unit.kind = 0;
      unit.xi = ctx.base().b_unit();
      RawWord repl = cur;
      repl.insert(repl.begin(), unit);
      NCPoly diff;
      diff.terms[cur] = c;
      diff.terms[repl] -= c;
      diff.prune();
      record(std::move(diff));
      cur = std::move(repl);
    }
    RVec xi = vec_scale(c, cur[0].xi);
    if (c != 1) {
      RawWord repl = cur;
      repl[0].xi = xi;
      NCPoly diff;
      diff.terms[cur] = c;
      diff.terms[repl] -= 1;
      diff.prune();
      record(std::move(diff));
      cur = std::move(repl);
    }
    Word lw;
    for (size_t k = 1; k < cur.size(); ++k)
      lw.push_back(cur[k].kind == 1 ? ctx.L(cur[k].a, cur[k].b)
                                    : ctx.Li(cur[k].a, cur[k].b));
    auto it = merged.find(lw);
    if (it == merged.end()) {
      merged.emplace(std::move(lw), std::move(xi));
    } else {
      // B(x) w + B(y) w - B(x+y) w is a base-relation element
      RVec sum = vec_add(it->second, xi);
      auto raw_of = [&](const RVec& v) {
        RawWord rw = cur;
        rw[0].xi = v;
        return rw;
      };
      NCPoly diff;
      diff.terms[raw_of(it->second)] += 1;
      diff.terms[raw_of(xi)] += 1;
      diff.terms[raw_of(sum)] -= 1;
      diff.prune();
      record(std::move(diff));
      it->second = std::move(sum);
    }
  }
  CPoly out;
  for (auto& [lw, xi] : merged) {
    if (vec_is_zero(xi)) {
      // B(0) w is itself a base-relation element (0 . xi - B(0))
      RawWord rw;
      RawLetter zero;
      zero.kind = 0;
      zero.xi = xi;
      rw.push_back(std::move(zero));
      for (uint16_t l : lw) {
        RawLetter rl;
        rl.kind = ctx.is_inv(l) ? 2 : 1;
        rl.a = ctx.first_index(l);
        rl.b = ctx.second_index(l);
        rw.push_back(std::move(rl));
      }
      NCPoly diff;
      diff.terms[rw] = 1;
      record(std::move(diff));
      continue;
    }
    out.t.emplace(lw, std::move(xi));
  }
  return out;
}

}  // namespace frtb
