// modpll: the modified mod-p local Langlands correspondence for GL2 of an
// l-adic field, with exact finite-precision verification of the lattice
// proposition and the main dispatch theorems.

#include <CLI11.hpp>

#include "modpll/commands.hpp"
#include "modpll/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"modified mod-p local Langlands correspondence for GL2 (exact arithmetic)"};
  app.set_version_flag("--version", modpll::kVersion);
  app.require_subcommand(1);

  std::string input, output, verify_kind;
  modpll::CmdOverrides ov;
  std::int64_t seed = -1;
  int precision = -1;
  int window = -1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "problem file")->required();
    cmd->add_option("--output", output, "result file (canonical JSON)")->required();
    cmd->add_option("--seed", seed, "override the search/report seed");
    cmd->add_option("--precision", precision, "override params.precision");
    cmd->add_option("--window", window, "override search.window");
  };

  CLI::App* correspond = app.add_subcommand("correspond", "compute pi-bar(rho-bar)");
  add_common(correspond);
  CLI::App* sigma = app.add_subcommand("sigma", "congruence level and sigma(chi1, chi2)");
  add_common(sigma);
  CLI::App* lattices = app.add_subcommand("lattices", "enumerate stable lattice classes");
  add_common(lattices);
  CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("kind", verify_kind, "prop31 | main2 | selftest")->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (seed >= 0) ov.seed = static_cast<std::uint64_t>(seed);
  if (precision >= 0) ov.precision = precision;
  if (window >= 0) ov.window = window;

  if (correspond->parsed()) return modpll::cmd_correspond(input, output, ov);
  if (sigma->parsed()) return modpll::cmd_sigma(input, output, ov);
  if (lattices->parsed()) return modpll::cmd_lattices(input, output, ov);
  if (verify->parsed()) return modpll::cmd_verify(verify_kind, input, output, ov);
  return 2;
}
