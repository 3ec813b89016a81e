#include "modpll/report.hpp"

#include <algorithm>
#include <sstream>

namespace modpll {

std::int64_t VerificationReport::count(const std::string& key) const {
  for (const auto& [k, v] : counts) {
    if (k == key) return v;
  }
  return 0;
}

void VerificationReport::bump(const std::string& key, std::int64_t delta) {
  for (auto& [k, v] : counts) {
    if (k == key) {
      v += delta;
      return;
    }
  }
  counts.emplace_back(key, delta);
}

void VerificationReport::fail(const std::string& witness) {
  pass = false;
  if (witnesses.size() < 64) witnesses.push_back(witness);
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& [k, v] : other.counts) bump(k, v);
  pass = pass && other.pass;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() < 64) witnesses.push_back(w);
  }
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (name.empty() ? "report" : name) << ": " << (pass ? "PASS" : "FAIL");
  std::vector<std::pair<std::string, std::int64_t>> sorted = counts;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [k, v] : sorted) os << ' ' << k << '=' << v;
  return os.str();
}

}  // namespace modpll
