#pragma once

#include "frtb/instance.hpp"
#include "frtb/report.hpp"

namespace frtb {

struct SuiteFlags {
  int degree_cap = -1;        // -1: per-suite default / instance option
  int membership_bound = -1;  // -1: instance option
  unsigned threads = 1;
  std::string target = "a-sigma";
};

// conditions + Frobenius verification; exit 0 iff everything passes
Report cmd_check(const Instance& inst, const SuiteFlags& flags);

// graded dimensions of the face-type quotient, with the reversed-order
// recomputation cross-check
Report cmd_dims(const Instance& inst, const SuiteFlags& flags);

// suite in { aw-bialgebroid, weak-axioms, phi, rigidity, weak-hopf, closure }
Report cmd_verify(const Instance& inst, const std::string& suite,
                  const SuiteFlags& flags);

}  // namespace frtb
