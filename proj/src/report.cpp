#include "frtb/report.hpp"

#include <nlohmann/json.hpp>

namespace frtb {

void Report::add(CheckRecord r) {
  if (r.verdict == "pass")
    ++n_pass;
  else if (r.verdict == "fail")
    ++n_fail;
  else
    ++n_inconclusive;
  checks.push_back(std::move(r));
}

int Report::exit_code() const {
  if (n_fail > 0) return 1;
  if (n_inconclusive > 0) return 2;
  return 0;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["instance_digest"] = instance_digest;
  j["suite"] = suite;
  nlohmann::ordered_json opts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : options) opts[k] = v;
  j["options"] = std::move(opts);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json rec;
    rec["id"] = c.id;
    rec["element"] = c.element;
    rec["verdict"] = c.verdict;
    rec["regime"] = c.regime;
    if (!c.witness.empty()) rec["witness"] = c.witness;
    arr.push_back(std::move(rec));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"pass", n_pass},
                  {"fail", n_fail},
                  {"inconclusive", n_inconclusive}};
  return j.dump(2) + "\n";
}

std::string digest_bytes(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return std::string(buf);
}

}  // namespace frtb
