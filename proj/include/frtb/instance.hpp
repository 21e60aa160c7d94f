#pragma once

#include <optional>
#include <string>

#include "frtb/face.hpp"
#include "frtb/frobenius.hpp"
#include "frtb/quiver.hpp"
#include "frtb/sigma.hpp"

namespace frtb {

struct InstanceOptions {
  int degree_cap = 3;
  int membership_bound = 4;
};

struct WitnessSpec {
  char table = 'x';               // 'x' or 'y'
  int a = 0, b = 0;               // X indices
  std::string kind;               // "L", "Li", "0"
  int wa = 0, wb = 0;             // letter indices for L/Li
};

struct RawFaceEntry {
  std::string a, b, c, d;  // arrow ids, (a,b) top-right, (c,d) left-bottom
  RVec value;
};

struct Instance {
  std::string name;
  std::string digest;  // of the file bytes
  BaseCtx base;
  FrobeniusSystem frobR;
  std::optional<SigmaFamily> sigma;
  std::optional<Quiver> explicit_quiver;
  std::vector<RawFaceEntry> face_entries;
  std::vector<WitnessSpec> witnesses;
  bool has_witnesses = false;
  InstanceOptions options;

  // sigma-derived quiver when present, else the explicit one
  Quiver quiver() const;
  FaceWeight face_weight(const Quiver& q) const;  // explicit entries or w_sigma
};

// Throws std::runtime_error with "line N: ..." diagnostics.
Instance parse_instance_text(const std::string& text, const std::string& name);
Instance parse_instance_file(const std::string& path);

}  // namespace frtb
