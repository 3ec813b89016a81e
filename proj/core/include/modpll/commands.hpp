#ifndef MODPLL_COMMANDS_HPP
#define MODPLL_COMMANDS_HPP

#include <optional>
#include <string>

namespace modpll {

/// Flag overrides applied on top of the input file.
struct CmdOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> precision;
  std::optional<int> window;
};

/// Exit codes shared by every subcommand:
///   0 success / verification passed
///   1 verification failure (report written with witnesses)
///   2 invalid input (parse or validation error)
///   3 unsupported case (the deferred twist family)
///   4 precision / indistinguishability
int cmd_correspond(const std::string& input, const std::string& output, const CmdOverrides& ov);
int cmd_sigma(const std::string& input, const std::string& output, const CmdOverrides& ov);
int cmd_lattices(const std::string& input, const std::string& output, const CmdOverrides& ov);
int cmd_verify(const std::string& kind, const std::string& input, const std::string& output,
               const CmdOverrides& ov);

}  // namespace modpll

#endif  // MODPLL_COMMANDS_HPP
