#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace frtb {

// Exact rational scalar. All arithmetic in the library is over Q.
using Rat = mpq_class;
using RVec = std::vector<Rat>;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Accepts "p" or "p/q" with optional sign; rejects zero denominators.
inline Rat parse_rat(const std::string& s) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("malformed rational '" + s + "'");
  };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      return Rat(n);
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw bad();
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool vec_is_zero(const RVec& v) {
  for (const auto& q : v)
    if (!is_zero(q)) return false;
  return true;
}

inline RVec vec_add(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline void vec_axpy(RVec& a, const Rat& c, const RVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

inline RVec vec_scale(const Rat& c, const RVec& a) {
  RVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

}  // namespace frtb
