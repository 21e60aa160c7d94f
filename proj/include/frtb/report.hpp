#pragma once

#include <map>
#include <string>
#include <vector>

namespace frtb {

struct CheckRecord {
  std::string id;
  std::string element;
  std::string verdict;  // pass | fail | inconclusive(bound N)
  std::string regime;
  std::string witness;
};

struct Report {
  std::string instance_digest;
  std::string suite;
  std::vector<std::pair<std::string, std::string>> options;
  std::vector<CheckRecord> checks;

  int n_pass = 0, n_fail = 0, n_inconclusive = 0;

  void add(CheckRecord r);
  // 0 all pass, 1 any fail, 2 inconclusive without fail
  int exit_code() const;
  std::string to_json() const;  // byte-deterministic
};

// FNV-1a over the raw bytes, hex-encoded
std::string digest_bytes(const std::string& bytes);

}  // namespace frtb
