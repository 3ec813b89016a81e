// Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
// Criterion 8 drives the installed CLI binary (path in MODPLL_CLI) over the
// problem files shipped in problems/ (path in MODPLL_PROBLEMS).

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "modpll/verify.hpp"

using namespace modpll;

namespace {

void announce(int criterion, bool pass, const std::string& what) {
  std::cout << "CRITERION " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << what
            << std::endl;
  EXPECT_TRUE(pass) << "criterion " << criterion << ": " << what;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_cli(const std::string& args) {
  const char* cli = std::getenv("MODPLL_CLI");
  if (cli == nullptr) return -1;
  std::string cmd = std::string(cli) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("modpll_acc_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST(Acceptance, Criterion1_Prop31TwoPathEquivalence) {
  auto start = std::chrono::steady_clock::now();
  bool all_pass = true;
  std::int64_t nonsplit_total = 0;
  struct Cfg {
    long p, ell;
    int f;
  };
  for (const Cfg& c : {Cfg{3, 7, 1}, Cfg{5, 11, 1}, Cfg{3, 2, 2}, Cfg{3, 5, 1}}) {
    for (int a : {1, 2}) {
      Prop31SweepConfig cfg;
      cfg.p = c.p;
      cfg.ell = c.ell;
      cfg.f = c.f;
      cfg.level = a;
      cfg.precision = a + 4;
      cfg.windows = {1, 2};
      VerificationReport r = sweep_prop31(cfg, 0);
      all_pass = all_pass && r.pass;
      nonsplit_total += r.count("c1.nonsplit") + r.count("c2.nonsplit");
      if (!r.pass) {
        std::cout << "    " << r.summary() << std::endl;
        for (const std::string& w : r.witnesses) std::cout << "      " << w << std::endl;
      }
    }
  }
  double elapsed = seconds_since(start);
  bool in_time = elapsed < 60.0;
  std::ostringstream what;
  what << "lattice proposition: both reduction paths equal span(sigma) on every nonsplit class ("
       << nonsplit_total << " nonsplit reductions, all pairs with a in {1,2}, windows {1,2}, "
       << elapsed << " s)";
  announce(1, all_pass && in_time && nonsplit_total > 0, what.str());
}

TEST(Acceptance, Criterion2_EngineOracleEquivalence) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r = sweep_main2(3, 7, 1, 3, DvrBackend::EqualChar, SearchSpec{});
  double elapsed = seconds_since(start);
  bool ok = r.pass && r.count("targets") == 5 && r.count("agreements") == 5 && elapsed < 60.0;
  std::ostringstream what;
  what << "full-enumeration sum-of-lifts equals the dispatch on q=7, p=3, N=3 ("
       << r.count("agreements") << "/5 agreements, " << elapsed << " s)";
  announce(2, ok, what.str());
}

TEST(Acceptance, Criterion3_QMinus1DispatchTable) {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(3);
  AbelianGroupModel group = AbelianGroupModel::standard_model(3, 5, 1);
  ResidualCharacter triv = ResidualCharacter::trivial(group, field);
  auto rep = [&](QM1Case c) {
    return ResidualGaloisRep::one_plus_omega_qm1(group, field, c, triv);
  };
  SmoothRepDescription split = correspond(rep(QM1Case::Split));
  SmoothRepDescription e1o = correspond(rep(QM1Case::Ext1ByOmega));
  SmoothRepDescription eo1 = correspond(rep(QM1Case::ExtOmegaBy1));
  bool ok = split.variant() == RepVariant::CuspidalEnvelope &&
            split.jh() == std::vector<std::string>{"1_G", "normdet", "pi_gen"} &&
            e1o.variant() == RepVariant::WDualTwist &&
            e1o.jh() == std::vector<std::string>{"normdet", "pi_gen"} &&
            eo1.variant() == RepVariant::WDual &&
            eo1.jh() == std::vector<std::string>{"1_G", "pi_gen"} &&
            split.socle() == "pi_gen" && e1o.socle() == "pi_gen" && eo1.socle() == "pi_gen";
  announce(3, ok, "q = -1 dispatch: envelope / dual twisted / dual with the stated JH multisets");
}

TEST(Acceptance, Criterion4_CompatibilityLemma) {
  bool ok = true;
  struct Cfg {
    long p, ell;
    int f;
    int n;
  };
  for (const Cfg& c : {Cfg{3, 7, 1, 3}, Cfg{5, 11, 1, 3}, Cfg{3, 2, 2, 3}}) {
    FiniteFieldCtx field = FiniteFieldCtx::prime_field(c.p);
    AbelianGroupModel group = AbelianGroupModel::standard_model(c.p, c.ell, c.f);
    DVRCtx ring(field, c.n);
    VerificationReport r = sweep_compat_lemma(group, ring, 200, 20260809u + c.p);
    ok = ok && r.pass && r.count("line_identity") == 200;
  }
  announce(4, ok, "phi(sigma(chi1,chi2)) = restrict(t-side class) for 200 random pairs per model");
}

TEST(Acceptance, Criterion5_SigmaProperties) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  AbelianGroupModel q7 = AbelianGroupModel::standard_model(3, 7, 1);
  AbelianGroupModel q5 = AbelianGroupModel::standard_model(3, 5, 1);
  DVRCtx r4(f3, 4);
  VerificationReport a = sweep_sigma_properties(q7, r4, 1000, 101);
  VerificationReport b = sweep_sigma_properties(q5, r4, 1000, 102);
  bool ok = a.pass && b.pass && a.count("antisymmetry") == 1000 &&
            a.count("word_additivity") == 1000 && b.count("antisymmetry") == 1000 &&
            b.count("word_additivity") == 1000;
  announce(5, ok, "sigma antisymmetry and word additivity on 1000 random cases per model");
}

TEST(Acceptance, Criterion6_DimensionChecks) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  AbelianGroupModel q7 = AbelianGroupModel::standard_model(3, 7, 1);
  bool ok = hom_space_dim(q7, 3) == 2 && tz_ambient_dim(q7, 3) == 2 && torus_ambient_dim(q7, 3) == 4;
  announce(6, ok, "Hom space is 2-dimensional and the torus Ext space 4-dimensional on the q=1 model");
}

TEST(Acceptance, Criterion7_TwistEquivariance) {
  VerificationReport q1 = sweep_twist_properties(3, 7, 1, 3, DvrBackend::EqualChar, 20, 201);
  VerificationReport qm1 = sweep_twist_properties(3, 5, 1, 3, DvrBackend::EqualChar, 20, 202);
  bool ok = q1.pass && qm1.pass && q1.count("equivariance") == 20 && qm1.count("equivariance") == 20 &&
            q1.count("involution") == 20 && qm1.count("involution") == 20;
  announce(7, ok, "twist equivariance and the normdet involution over 20 random twists per regime");
}

TEST(Acceptance, Criterion8_CliDeterminismAndExitCodes) {
  const char* cli = std::getenv("MODPLL_CLI");
  const char* problems_env = std::getenv("MODPLL_PROBLEMS");
  ASSERT_NE(cli, nullptr) << "MODPLL_CLI not set";
  ASSERT_NE(problems_env, nullptr) << "MODPLL_PROBLEMS not set";
  std::filesystem::path problems(problems_env);
  TempDir tmp;

  struct Case {
    std::string subcommand;  // includes verify kind
    std::string file;
    int expect_code;
  };
  std::vector<Case> cases = {
      {"correspond", "qp1_sigma_zero.txt", 0},
      {"correspond", "qp1_sigma_unramified.txt", 0},
      {"correspond", "qp1_sigma_ramified.txt", 0},
      {"correspond", "qp1_q4.txt", 0},
      {"correspond", "qm1_split.txt", 0},
      {"correspond", "qm1_ext_1_by_omega.txt", 0},
      {"correspond", "qm1_ext_omega_by_1.txt", 0},
      {"correspond", "generic.txt", 0},
      {"correspond", "unsupported_q3_p5.txt", 3},
      {"correspond", "expect_mismatch.txt", 1},
      {"correspond", "invalid_unknown_key.txt", 2},
      {"sigma", "sigma_basic.txt", 0},
      {"sigma", "sigma_equal.txt", 4},
      {"sigma", "sigma_boundary.txt", 0},
      {"lattices", "lattices_q7.txt", 0},
      {"verify prop31", "lattices_q7.txt", 0},
      {"verify main2", "verify_main2.txt", 0},
      {"verify selftest", "selftest.txt", 0},
  };

  bool ok = true;
  std::vector<bool> code_seen(5, false);
  for (const Case& c : cases) {
    std::filesystem::path input = problems / c.file;
    if (!std::filesystem::exists(input)) {
      ADD_FAILURE() << "missing problem file " << input;
      ok = false;
      continue;
    }
    std::string base = c.file.substr(0, c.file.find('.')) + "_" +
                       std::to_string(&c - cases.data());
    std::filesystem::path out1 = tmp.path / (base + "_1.json");
    std::filesystem::path out2 = tmp.path / (base + "_2.json");
    int code1 = run_cli(c.subcommand + " --input " + input.string() + " --output " + out1.string());
    int code2 = run_cli(c.subcommand + " --input " + input.string() + " --output " + out2.string());
    if (code1 != c.expect_code || code2 != c.expect_code) {
      ADD_FAILURE() << c.file << ": exit " << code1 << "/" << code2 << ", expected "
                    << c.expect_code;
      ok = false;
      continue;
    }
    if (c.expect_code >= 0 && c.expect_code <= 4) code_seen[static_cast<size_t>(c.expect_code)] = true;
    if (c.expect_code != 2 && c.expect_code != 3 && c.expect_code != 4) {
      // a result file exists; two runs must be byte-identical
      std::string r1 = slurp(out1);
      std::string r2 = slurp(out2);
      if (r1.empty() || r1 != r2) {
        ADD_FAILURE() << c.file << ": outputs differ across runs or are empty";
        ok = false;
      }
    }
  }
  for (int code = 0; code <= 4; ++code) {
    if (!code_seen[static_cast<size_t>(code)]) {
      ADD_FAILURE() << "exit code " << code << " not exercised";
      ok = false;
    }
  }
  announce(8, ok, "byte-identical result files across runs and the 0..4 exit-code contract");
}
