#ifndef MODPLL_PROBLEM_HPP
#define MODPLL_PROBLEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modpll/errors.hpp"

namespace modpll {

/// Parsed problem description (sectioned key = value text, see README for
/// the format). Unknown sections or keys are rejected with a diagnostic
/// naming the offender; cross-field constraints are re-checked when the
/// mathematical objects are built.
struct ProblemFile {
  // [params]
  bool has_params = false;
  long p = 0;
  long ell = 0;
  int f = 1;
  int precision = 0;
  std::string backend = "eqchar";
  std::vector<long> modulus;  // empty: F_p itself

  // [rep]
  bool has_rep = false;
  std::string shape;     // "generic" | "one_plus_omega"
  std::string qm1_case;  // "split" | "ext_1_by_omega" | "ext_omega_by_1"
  bool has_sigma = false;
  std::vector<long> sigma_u, sigma_t;  // residue-field coefficient lists
  std::string support1, support2;
  std::vector<long> twist_u{1}, twist_t{1};

  // [char1], [char2]: pi-adic digit lists per generator
  bool has_char1 = false, has_char2 = false;
  std::vector<std::vector<long>> char1_u, char1_t, char2_u, char2_t;

  // [search]
  std::string mode = "full";
  std::uint64_t max_candidates = 200000;
  std::uint64_t seed = 20260809;
  int window = 1;

  // [expect]
  bool has_expect = false;
  std::string expect_variant;
};

ProblemFile parse_problem(const std::string& text, const std::string& origin);
ProblemFile load_problem(const std::string& path);

}  // namespace modpll

#endif  // MODPLL_PROBLEM_HPP
