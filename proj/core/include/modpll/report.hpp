#ifndef MODPLL_REPORT_HPP
#define MODPLL_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace modpll {

/// Outcome of a verification run: named counters, a pass flag, and failure
/// witnesses. Merging is associative and commutative so concurrent workers
/// can accumulate partial reports.
struct VerificationReport {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> counts;
  bool pass = true;
  std::vector<std::string> witnesses;

  std::int64_t count(const std::string& key) const;
  void bump(const std::string& key, std::int64_t delta = 1);
  void fail(const std::string& witness);
  void merge(const VerificationReport& other);
  std::string summary() const;
};

}  // namespace modpll

#endif  // MODPLL_REPORT_HPP
