#include "modpll/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include <json.hpp>

#include "modpll/correspondence.hpp"
#include "modpll/lattice.hpp"
#include "modpll/problem.hpp"
#include "modpll/verify.hpp"
#include "modpll/version.hpp"

namespace modpll {

namespace {

using json = nlohmann::json;  // map-backed: object keys serialize sorted

struct Model {
  FiniteFieldCtx field;
  DVRCtx ring;
  AbelianGroupModel group;

  Model(const ProblemFile& pf, const CmdOverrides& ov)
      : field(pf.p, pf.modulus.empty() ? std::vector<long>{0, 1} : pf.modulus),
        ring(field, ov.precision.value_or(pf.precision), parse_backend(pf.backend)),
        group(AbelianGroupModel::standard_model(pf.p, pf.ell, pf.f)) {}

  static DvrBackend parse_backend(const std::string& name) {
    if (name == "eqchar") return DvrBackend::EqualChar;
    if (name == "zmodpn") return DvrBackend::ZModPN;
    throw ParseError("params.backend: expected eqchar or zmodpn, got " + name);
  }
};

std::unique_ptr<Model> build_model(const ProblemFile& pf, const CmdOverrides& ov) {
  if (!pf.has_params) {
    throw ParseError("missing [params] section");
  }
  if (pf.p == 0) throw ParseError("params.p is required");
  if (pf.ell == 0) throw ParseError("params.ell is required");
  if (pf.precision == 0 && !ov.precision) throw ParseError("params.precision is required");
  return std::make_unique<Model>(pf, ov);
}

FFElem ff_from_list(const Model& m, const std::vector<long>& coeffs, const std::string& what) {
  if (static_cast<int>(coeffs.size()) > m.field.degree()) {
    throw ParseError(what + ": coefficient list longer than the residue degree");
  }
  return ff_from_coeffs(m.field, coeffs);
}

ResidualCharacter build_twist(const Model& m, const ProblemFile& pf) {
  std::vector<FFElem> values = {ff_from_list(m, pf.twist_u, "rep.twist_u"),
                                ff_from_list(m, pf.twist_t, "rep.twist_t")};
  return ResidualCharacter(m.group, values);
}

ResidualGaloisRep build_rep(const Model& m, const ProblemFile& pf) {
  if (!pf.has_rep) {
    throw ParseError("missing [rep] section");
  }
  ResidualCharacter twist = build_twist(m, pf);
  if (pf.shape == "generic") {
    if (!pf.qm1_case.empty() || pf.has_sigma) {
      throw ParseError("rep: case/sigma keys do not apply to the generic shape");
    }
    if (pf.support1.empty()) {
      throw ParseError("rep.support: two supercuspidal support labels are required");
    }
    return ResidualGaloisRep::generic(m.group, m.field, pf.support1, pf.support2, twist);
  }
  if (pf.shape != "one_plus_omega") {
    throw ParseError("rep.shape: expected generic or one_plus_omega, got '" + pf.shape + "'");
  }
  if (!pf.support1.empty()) {
    throw ParseError("rep.support: only applies to the generic shape");
  }
  std::uint64_t p = static_cast<std::uint64_t>(m.field.p());
  if ((m.group.q() - 1) % p == 0) {
    if (!pf.qm1_case.empty()) {
      throw ParseError("rep.case: only valid when q = -1 mod p (here q = 1 mod p; use sigma_u/sigma_t)");
    }
    std::vector<FFElem> sig = {ff_from_list(m, pf.sigma_u, "rep.sigma_u"),
                               ff_from_list(m, pf.sigma_t, "rep.sigma_t")};
    return ResidualGaloisRep::trivial_ss_qp1(m.group, m.field, ResidualHom(m.group, sig), twist);
  }
  if ((m.group.q() + 1) % p == 0) {
    if (pf.has_sigma) {
      throw ParseError("rep.sigma_u/sigma_t: only valid when q = 1 mod p (here q = -1 mod p; use case)");
    }
    QM1Case c;
    if (pf.qm1_case == "split") {
      c = QM1Case::Split;
    } else if (pf.qm1_case == "ext_1_by_omega") {
      c = QM1Case::Ext1ByOmega;
    } else if (pf.qm1_case == "ext_omega_by_1") {
      c = QM1Case::ExtOmegaBy1;
    } else {
      throw ParseError("rep.case: expected split, ext_1_by_omega or ext_omega_by_1, got '" +
                       pf.qm1_case + "'");
    }
    return ResidualGaloisRep::one_plus_omega_qm1(m.group, m.field, c, twist);
  }
  if (!pf.qm1_case.empty() || pf.has_sigma) {
    throw ParseError("rep: case/sigma keys do not apply when q is not +-1 mod p");
  }
  return ResidualGaloisRep::unsupported_twist(m.group, m.field, twist);
}

UnitCharacter build_character(const Model& m, const std::vector<std::vector<long>>& u,
                              const std::vector<std::vector<long>>& t, const std::string& section) {
  if (u.empty() || t.empty()) {
    throw ParseError(section + ": values on both u and t are required");
  }
  std::vector<DVRElem> values = {dvr_from_digits(m.ring, u), dvr_from_digits(m.ring, t)};
  return make_unit_character(m.group, m.ring, values);
}

SearchSpec build_search(const ProblemFile& pf, const CmdOverrides& ov) {
  SearchSpec s;
  s.full = pf.mode == "full";
  s.max_candidates = pf.max_candidates;
  s.seed = ov.seed.value_or(pf.seed);
  return s;
}

json ff_json(const FFElem& v) {
  if (v.ctx->degree() == 1) return json(v.c[0]);
  json arr = json::array();
  for (long c : ff_coeffs(v)) arr.push_back(c);
  return arr;
}

json dvr_json(const DVRElem& v) {
  json arr = json::array();
  for (int i = 0; i < v.ctx->precision(); ++i) arr.push_back(ff_json(dvr_digit(v, i)));
  return arr;
}

json hom_json(const ResidualHom& h) {
  json obj = json::object();
  for (int i = 0; i < h.group().generator_count(); ++i) {
    obj[h.group().generators()[static_cast<size_t>(i)].name] = ff_json(h.value(i));
  }
  return obj;
}

json twist_json(const ResidualCharacter& t) {
  json obj = json::object();
  for (int i = 0; i < t.group().generator_count(); ++i) {
    obj[t.group().generators()[static_cast<size_t>(i)].name] = ff_json(t.value(i));
  }
  return obj;
}

json desc_json(const SmoothRepDescription& d) {
  json obj = json::object();
  obj["variant"] = variant_name(d.variant());
  obj["jh"] = d.jh();
  obj["socle"] = d.socle();
  obj["twist"] = twist_json(d.twist());
  if (d.class_line()) obj["class_line"] = hom_json(d.class_line()->rep);
  if (d.variant() == RepVariant::Generic) {
    obj["support"] = json::array({d.support1(), d.support2()});
  }
  return obj;
}

json report_json(const VerificationReport& r) {
  json counts = json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  json obj = json::object();
  obj["name"] = r.name;
  obj["pass"] = r.pass;
  obj["counts"] = counts;
  obj["witnesses"] = r.witnesses;
  return obj;
}

json echo_json(const ProblemFile& pf, const Model* m, const CmdOverrides& ov) {
  json obj = json::object();
  if (pf.has_params && m != nullptr) {
    json params = json::object();
    params["p"] = pf.p;
    params["ell"] = pf.ell;
    params["f"] = pf.f;
    params["q"] = m->group.q();
    params["precision"] = m->ring.precision();
    params["backend"] = pf.backend;
    json mod = json::array();
    for (long c : m->field.modulus()) mod.push_back(c);
    params["modulus"] = mod;
    obj["params"] = params;
  }
  if (pf.has_rep) {
    json rep = json::object();
    rep["shape"] = pf.shape;
    if (!pf.qm1_case.empty()) rep["case"] = pf.qm1_case;
    if (pf.has_sigma) {
      rep["sigma_u"] = pf.sigma_u;
      rep["sigma_t"] = pf.sigma_t;
    }
    if (!pf.support1.empty()) rep["support"] = json::array({pf.support1, pf.support2});
    rep["twist_u"] = pf.twist_u;
    rep["twist_t"] = pf.twist_t;
    obj["rep"] = rep;
  }
  auto digits_json = [](const std::vector<std::vector<long>>& digits) {
    json arr = json::array();
    for (const auto& d : digits) {
      if (d.size() == 1) {
        arr.push_back(d[0]);
      } else {
        arr.push_back(d);
      }
    }
    return arr;
  };
  if (pf.has_char1) {
    obj["char1"] = json::object({{"u", digits_json(pf.char1_u)}, {"t", digits_json(pf.char1_t)}});
  }
  if (pf.has_char2) {
    obj["char2"] = json::object({{"u", digits_json(pf.char2_u)}, {"t", digits_json(pf.char2_t)}});
  }
  json search = json::object();
  search["mode"] = pf.mode;
  search["max_candidates"] = pf.max_candidates;
  search["seed"] = ov.seed.value_or(pf.seed);
  search["window"] = ov.window.value_or(pf.window);
  obj["search"] = search;
  return obj;
}

void write_result(const std::string& path, const json& result) {
  std::string payload = result.dump(2) + "\n";
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorKind::InvalidInput, "cannot write output file " + path);
    }
    out << payload;
  }
  std::filesystem::rename(tmp, target);
}

json result_shell(const char* command, const ProblemFile& pf, const Model* m,
                  const CmdOverrides& ov) {
  json obj = json::object();
  obj["command"] = command;
  obj["input"] = echo_json(pf, m, ov);
  obj["seed"] = ov.seed.value_or(pf.seed);
  obj["tool_version"] = kVersion;
  return obj;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidInput: return 2;
    case ErrorKind::Unsupported: return 3;
    case ErrorKind::Precision: return 4;
    case ErrorKind::Internal: return 2;
  }
  return 2;
}

template <typename Fn>
int run_guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int cmd_correspond(const std::string& input, const std::string& output, const CmdOverrides& ov) {
  return run_guarded([&]() {
    ProblemFile pf = load_problem(input);
    std::unique_ptr<Model> m = build_model(pf, ov);
    ResidualGaloisRep rep = build_rep(*m, pf);
    SmoothRepDescription desc = correspond(rep);
    json result = result_shell("correspond", pf, m.get(), ov);
    result["output"] = desc_json(desc);
    int code = 0;
    if (pf.has_expect) {
      bool match = variant_name(desc.variant()) == pf.expect_variant;
      json verification = json::object();
      verification["expected_variant"] = pf.expect_variant;
      verification["got_variant"] = variant_name(desc.variant());
      verification["pass"] = match;
      result["verification"] = verification;
      if (!match) code = 1;
    }
    write_result(output, result);
    return code;
  });
}

int cmd_sigma(const std::string& input, const std::string& output, const CmdOverrides& ov) {
  return run_guarded([&]() {
    ProblemFile pf = load_problem(input);
    std::unique_ptr<Model> m = build_model(pf, ov);
    if (!pf.has_char1 || !pf.has_char2) {
      throw ParseError("sigma needs [char1] and [char2] sections");
    }
    UnitCharacter chi1 = build_character(*m, pf.char1_u, pf.char1_t, "char1");
    UnitCharacter chi2 = build_character(*m, pf.char2_u, pf.char2_t, "char2");
    int a = congruence_level(chi1, chi2);
    ResidualHom sigma = sigma_class(chi1, chi2);
    json result = result_shell("sigma", pf, m.get(), ov);
    json out = json::object();
    out["a"] = a;
    out["sigma"] = hom_json(sigma);
    out["precision"] = m->ring.precision();
    out["certified_digits_after_shift"] = m->ring.precision() - a;
    result["output"] = out;
    write_result(output, result);
    return 0;
  });
}

int cmd_lattices(const std::string& input, const std::string& output, const CmdOverrides& ov) {
  return run_guarded([&]() {
    ProblemFile pf = load_problem(input);
    std::unique_ptr<Model> m = build_model(pf, ov);
    if (!pf.has_char1 || !pf.has_char2) {
      throw ParseError("lattices needs [char1] and [char2] sections");
    }
    UnitCharacter chi1 = build_character(*m, pf.char1_u, pf.char1_t, "char1");
    UnitCharacter chi2 = build_character(*m, pf.char2_u, pf.char2_t, "char2");
    DiagonalActionModule mod(chi1, chi2);
    int window = ov.window.value_or(pf.window);
    std::vector<LatticeBasis> stable = enumerate_stable_lattices(mod, window);
    json entries = json::array();
    for (const LatticeBasis& L : stable) {
      json e = json::object();
      e["r"] = L.r();
      e["s"] = L.s();
      e["off"] = dvr_json(L.off());
      ReductionExtension red = reduction_extension_direct(L, mod);
      e["reduction"] = red.split ? "split" : "nonsplit";
      if (!red.split) e["class_line"] = hom_json(*red.class_line);
      entries.push_back(e);
    }
    json result = result_shell("lattices", pf, m.get(), ov);
    json out = json::object();
    out["window"] = window;
    out["congruence_level"] = mod.level();
    out["sigma"] = hom_json(mod.sigma());
    out["stable_count"] = entries.size();
    out["lattices"] = entries;
    result["output"] = out;
    write_result(output, result);
    return 0;
  });
}

int cmd_verify(const std::string& kind, const std::string& input, const std::string& output,
               const CmdOverrides& ov) {
  return run_guarded([&]() {
    ProblemFile pf = load_problem(input);
    VerificationReport report;
    std::unique_ptr<Model> m;
    if (kind == "prop31") {
      m = build_model(pf, ov);
      if (!pf.has_char1 || !pf.has_char2) {
        throw ParseError("verify prop31 needs [char1] and [char2] sections");
      }
      UnitCharacter chi1 = build_character(*m, pf.char1_u, pf.char1_t, "char1");
      UnitCharacter chi2 = build_character(*m, pf.char2_u, pf.char2_t, "char2");
      DiagonalActionModule mod(chi1, chi2);
      report = verify_prop_class(mod, ov.window.value_or(pf.window));
    } else if (kind == "main2") {
      m = build_model(pf, ov);
      if ((m->group.q() - 1) % static_cast<std::uint64_t>(m->field.p()) != 0) {
        throw ParseError("verify main2 needs q = 1 mod p");
      }
      report = sweep_main2(pf.p, pf.ell, pf.f, m->ring.precision(), m->ring.backend(),
                           build_search(pf, ov));
    } else if (kind == "selftest") {
      report = selftest(ov.seed.value_or(pf.seed));
    } else {
      throw ParseError("unknown verify kind '" + kind + "' (prop31, main2, selftest)");
    }
    json result = result_shell("verify", pf, m.get(), ov);
    result["output"] = report_json(report);
    write_result(output, result);
    std::cout << report.summary() << '\n';
    return report.pass ? 0 : 1;
  });
}

}  // namespace modpll
