#include "modpll/verify.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace modpll {

namespace {

std::string config_tag(long p, std::uint64_t q, int level, int precision) {
  std::ostringstream os;
  os << "p=" << p << " q=" << q;
  if (level > 0) os << " a=" << level;
  os << " N=" << precision;
  return os.str();
}

void merge_prefixed(VerificationReport& total, const VerificationReport& sub, const std::string& prefix) {
  for (const auto& [k, v] : sub.counts) total.bump(prefix + "." + k, v);
  if (!sub.pass) total.pass = false;
  for (const auto& w : sub.witnesses) {
    if (total.witnesses.size() < 64) total.witnesses.push_back(prefix + ": " + w);
  }
}

// valuation of x - 1 for x in 1 + pi*O, read straight off the digits
// (digit 0 is 1 in both backends and subtracting 1 clears it with no carry)
int val_of_unit_minus_one(const DVRElem& x) {
  const DVRCtx& ctx = *x.ctx;
  int d = ctx.residue().degree();
  for (int i = 1; i < ctx.precision(); ++i) {
    for (int j = 0; j < d; ++j) {
      if (x.dig[static_cast<size_t>(i) * d + static_cast<size_t>(j)] != 0) return i;
    }
  }
  return ctx.precision();
}

FFElem random_ff(const FiniteFieldCtx& field, const std::vector<FFElem>& elems, Rng& rng) {
  (void)field;
  return elems[rng.below(elems.size())];
}

DVRElem random_dvr(const DVRCtx& ring, const std::vector<FFElem>& elems, Rng& rng) {
  DVRElem x = dvr_zero(ring);
  int d = ring.residue().degree();
  for (int i = 0; i < ring.precision(); ++i) {
    const FFElem& digit = elems[rng.below(elems.size())];
    for (int j = 0; j < d; ++j) {
      x.dig[static_cast<size_t>(i) * d + static_cast<size_t>(j)] = digit.c[static_cast<size_t>(j)];
    }
  }
  return x;
}

}  // namespace

std::vector<ResidualHom> enumerate_hom_lines(const AbelianGroupModel& group,
                                             const FiniteFieldCtx& field) {
  // free coordinates: infinite generators and torsion generators with p | order
  std::vector<int> free_idx;
  for (int i = 0; i < group.generator_count(); ++i) {
    std::uint64_t order = group.generators()[static_cast<size_t>(i)].order;
    if (order == 0 || order % static_cast<std::uint64_t>(field.p()) == 0) free_idx.push_back(i);
  }
  std::vector<FFElem> elems = ff_all_elements(field);
  std::uint64_t total = 1;
  for (size_t i = 0; i < free_idx.size(); ++i) total *= field.order();
  std::vector<ResidualHom> lines;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::vector<FFElem> values(static_cast<size_t>(group.generator_count()), ff_zero(field));
    std::uint64_t v = idx;
    for (size_t i = 0; i < free_idx.size(); ++i) {
      values[static_cast<size_t>(free_idx[i])] = elems[v % field.order()];
      v /= field.order();
    }
    ResidualHom norm = normalize_line(ResidualHom(group, values));
    bool seen = false;
    for (const ResidualHom& l : lines) {
      if (l == norm) {
        seen = true;
        break;
      }
    }
    if (!seen) lines.push_back(norm);
  }
  return lines;
}

ResidualCharacter sample_residual_character(const AbelianGroupModel& group,
                                            const FiniteFieldCtx& field, Rng& rng) {
  std::vector<FFElem> values;
  for (const Generator& g : group.generators()) {
    std::vector<FFElem> valid;
    for (const FFElem& c : ff_all_elements(field)) {
      if (ff_is_zero(c)) continue;
      if (g.order == 0 || ff_is_one(ff_pow(c, g.order))) valid.push_back(c);
    }
    values.push_back(valid[rng.below(valid.size())]);
  }
  return ResidualCharacter(group, values);
}

VerificationReport sweep_prop31(const Prop31SweepConfig& cfg, int threads) {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(cfg.p);
  DVRCtx ring(field, cfg.precision, cfg.backend);
  AbelianGroupModel group = AbelianGroupModel::standard_model(cfg.p, cfg.ell, cfg.f);

  VerificationReport report;
  report.name = "prop31 " + config_tag(cfg.p, group.q(), cfg.level, cfg.precision);

  int cmax = *std::max_element(cfg.windows.begin(), cfg.windows.end());
  std::vector<LatticeBasis> candidates = canonical_window_candidates(ring, cmax);
  // window membership of each candidate, one bit per entry of cfg.windows
  std::vector<std::uint32_t> masks(candidates.size(), 0);
  for (size_t i = 0; i < candidates.size(); ++i) {
    const LatticeBasis& L = candidates[i];
    bool off_zero = dvr_is_zero(L.off());
    for (size_t w = 0; w < cfg.windows.size(); ++w) {
      int bound = 2 * cfg.windows[w];
      if (L.r() <= bound && L.s() <= bound &&
          (off_zero || L.r() + L.s() - L.off_val() <= bound)) {
        masks[i] |= 1u << w;
      }
    }
  }

  std::vector<std::vector<DVRElem>> value_lists;
  for (const Generator& g : group.generators()) {
    value_lists.push_back(torsion_valid_units(ring, g.order));
  }
  std::uint64_t total = 1;
  for (const auto& list : value_lists) total *= list.size();

  UnitCharacter triv = trivial_character(group, ring);

  enum { kStable = 0, kSplit, kNonsplit, kMatches, kKinds };
  struct Partial {
    VerificationReport rep;
    std::vector<std::int64_t> counters;
    std::int64_t characters = 0;
  };

  auto worker = [&](std::uint64_t begin, std::uint64_t end, Partial& out) {
    out.counters.assign(cfg.windows.size() * kKinds, 0);
    std::vector<DVRElem> values(value_lists.size(), dvr_one(ring));
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t v = idx;
      int level = ring.precision();
      for (int i = static_cast<int>(value_lists.size()) - 1; i >= 0; --i) {
        const auto& list = value_lists[static_cast<size_t>(i)];
        values[static_cast<size_t>(i)] = list[v % list.size()];
        v /= list.size();
        level = std::min(level, val_of_unit_minus_one(values[static_cast<size_t>(i)]));
      }
      if (level != cfg.level) continue;
      ++out.characters;
      UnitCharacter chi = make_unit_character(group, ring, values);
      DiagonalActionModule mod(chi, triv);
      ResidualHom sigma_line = normalize_line(mod.sigma());
      for (size_t ci = 0; ci < candidates.size(); ++ci) {
        const LatticeBasis& L = candidates[ci];
        if (!is_stable(L, mod)) continue;
        std::uint32_t mask = masks[ci];
        auto bump = [&](int kind) {
          for (size_t w = 0; w < cfg.windows.size(); ++w) {
            if (mask & (1u << w)) ++out.counters[w * kKinds + static_cast<size_t>(kind)];
          }
        };
        bump(kStable);
        ReductionExtension direct = reduction_extension_direct(L, mod);
        if (direct.split) {
          bump(kSplit);
          continue;
        }
        bump(kNonsplit);
        ReductionExtension formula = sigma_from_lattice_proof_formula(L, mod);
        if (*direct.class_line == sigma_line && *formula.class_line == sigma_line) {
          bump(kMatches);
        } else {
          out.rep.fail("chi(u)=" + dvr_to_string(chi.value(0)) +
                       " chi(t)=" + dvr_to_string(chi.value(1)) + " " + L.display() +
                       " direct=" + hom_to_string(*direct.class_line) +
                       " formula=" + hom_to_string(*formula.class_line) +
                       " sigma=" + hom_to_string(sigma_line));
        }
      }
    }
  };

  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (nthreads < 1) nthreads = 1;
  if (nthreads > 8) nthreads = 8;
  std::vector<Partial> partials(static_cast<size_t>(nthreads));
  if (nthreads == 1 || total < 1024) {
    partials.resize(1);
    worker(0, total, partials[0]);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = total / static_cast<std::uint64_t>(nthreads) + 1;
    for (int t = 0; t < nthreads; ++t) {
      std::uint64_t begin = chunk * static_cast<std::uint64_t>(t);
      std::uint64_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end, std::ref(partials[static_cast<size_t>(t)]));
    }
    for (auto& th : pool) th.join();
  }

  std::int64_t characters = 0;
  std::vector<std::int64_t> counters(cfg.windows.size() * kKinds, 0);
  for (const Partial& part : partials) {
    characters += part.characters;
    for (size_t i = 0; i < part.counters.size(); ++i) counters[i] += part.counters[i];
    report.merge(part.rep);
  }
  report.bump("characters", characters);
  static const char* kind_names[kKinds] = {"stable", "split", "nonsplit", "matches"};
  for (size_t w = 0; w < cfg.windows.size(); ++w) {
    for (int k = 0; k < kKinds; ++k) {
      report.bump("c" + std::to_string(cfg.windows[w]) + "." + kind_names[k],
                  counters[w * kKinds + static_cast<size_t>(k)]);
    }
    if (counters[w * kKinds + kMatches] != counters[w * kKinds + kNonsplit]) report.pass = false;
  }
  if (characters == 0) {
    report.pass = false;
    report.fail("no characters at congruence level " + std::to_string(cfg.level));
  }
  return report;
}

VerificationReport sweep_prop31_pair_reduction(const Prop31SweepConfig& cfg, int samples,
                                               std::uint64_t seed) {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(cfg.p);
  DVRCtx ring(field, cfg.precision, cfg.backend);
  AbelianGroupModel group = AbelianGroupModel::standard_model(cfg.p, cfg.ell, cfg.f);
  int cmax = *std::max_element(cfg.windows.begin(), cfg.windows.end());
  std::vector<LatticeBasis> candidates = canonical_window_candidates(ring, cmax);

  VerificationReport report;
  report.name = "prop31 pair reduction " + config_tag(cfg.p, group.q(), cfg.level, cfg.precision);
  Rng rng(seed);
  UnitCharacter triv = trivial_character(group, ring);
  for (int i = 0; i < samples; ++i) {
    UnitCharacter chi1 = sample_residually_trivial_character(group, ring, rng);
    UnitCharacter chi2 = sample_residually_trivial_character(group, ring, rng);
    if (chi1 == chi2) {
      --i;
      continue;
    }
    UnitCharacter quotient = char_mul(chi1, char_inv(chi2));
    DiagonalActionModule pair_mod(chi1, chi2);
    DiagonalActionModule quot_mod(quotient, triv);
    for (int w : cfg.windows) {
      VerificationReport a = verify_prop_class(pair_mod, w, &candidates);
      VerificationReport b = verify_prop_class(quot_mod, w, &candidates);
      bool same = a.pass && b.pass;
      for (const char* key : {"stable", "split", "nonsplit", "matches"}) {
        same = same && a.count(key) == b.count(key);
      }
      if (same) {
        report.bump("agreements");
      } else {
        report.fail("pair vs quotient counts differ at window " + std::to_string(w) + ": " +
                    a.summary() + " vs " + b.summary());
      }
    }
    report.bump("pairs");
  }
  return report;
}

VerificationReport sweep_main2(long p, long ell, int f, int precision, DvrBackend backend,
                               const SearchSpec& search) {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(p);
  DVRCtx ring(field, precision, backend);
  AbelianGroupModel group = AbelianGroupModel::standard_model(p, ell, f);
  VerificationReport report;
  report.name = "main2 " + config_tag(p, group.q(), 0, precision);
  ResidualCharacter trivial_twist = ResidualCharacter::trivial(group, field);

  std::vector<ResidualHom> targets;
  targets.push_back(hom_zero(group, field));
  for (const ResidualHom& line : enumerate_hom_lines(group, field)) targets.push_back(line);

  for (const ResidualHom& sigma : targets) {
    ResidualGaloisRep rep = ResidualGaloisRep::trivial_ss_qp1(group, field, sigma, trivial_twist);
    SmoothRepDescription engine = correspond(rep);
    SmoothRepDescription oracle = brute_force_correspond(rep, ring, search);
    report.bump("targets");
    if (engine == oracle) {
      report.bump("agreements");
    } else {
      report.fail("sigma=" + hom_to_string(sigma) + " engine=" + variant_name(engine.variant()) +
                  " oracle=" + variant_name(oracle.variant()));
    }
  }
  return report;
}

VerificationReport sweep_sigma_properties(const AbelianGroupModel& group, const DVRCtx& ring,
                                          int iterations, std::uint64_t seed) {
  VerificationReport report;
  report.name = "sigma properties " + config_tag(ring.residue().p(), group.q(), 0, ring.precision());
  Rng rng(seed);
  UnitCharacter triv = trivial_character(group, ring);
  for (int iter = 0; iter < iterations; ++iter) {
    UnitCharacter chi1 = sample_residually_trivial_character(group, ring, rng);
    UnitCharacter chi2 = sample_residually_trivial_character(group, ring, rng);
    if (chi1 == chi2) {
      --iter;
      continue;
    }
    ResidualHom s12 = sigma_class(chi1, chi2);
    ResidualHom s21 = sigma_class(chi2, chi1);
    if (s12 == hom_neg(s21)) {
      report.bump("antisymmetry");
    } else {
      report.fail("antisymmetry: " + hom_to_string(s12) + " vs -" + hom_to_string(s21));
    }
    // word additivity: the reduction of pi^-a (chi1(w) - chi2(w)) is the sum
    // of the sigma values over the letters
    int len = 1 + static_cast<int>(rng.below(5));
    Word w;
    for (int i = 0; i < len; ++i) {
      int gen = static_cast<int>(rng.below(static_cast<std::uint64_t>(group.generator_count())));
      long exp = static_cast<long>(rng.below(4)) - 2;
      if (exp >= 0) ++exp;  // exponents in {-2,-1,1,2}
      w.emplace_back(gen, exp);
    }
    int a = congruence_level(chi1, chi2);
    DVRElem diff = dvr_sub(char_eval_word(chi1, w), char_eval_word(chi2, w));
    FFElem lhs = dvr_reduce(dvr_divide_by_uniformizer_power(diff, a));
    FFElem rhs = hom_eval_word(s12, w);
    if (lhs == rhs) {
      report.bump("word_additivity");
    } else {
      report.fail("word additivity: " + ff_to_string(lhs) + " vs " + ff_to_string(rhs));
    }
    // unit rescaling: sigma(chi1 chi2^-1, 1) = sigma(chi1, chi2)
    UnitCharacter quotient = char_mul(chi1, char_inv(chi2));
    if (sigma_class(quotient, triv) == s12) {
      report.bump("rescaling");
    } else {
      report.fail("rescaling changed sigma");
    }
    report.bump("torsion_compatible");  // ResidualHom construction validated it
  }
  return report;
}

VerificationReport sweep_compat_lemma(const AbelianGroupModel& group, const DVRCtx& ring,
                                      int pairs, std::uint64_t seed) {
  VerificationReport report;
  report.name = "compat lemma " + config_tag(ring.residue().p(), group.q(), 0, ring.precision());
  Rng rng(seed);
  for (int i = 0; i < pairs; ++i) {
    UnitCharacter chi1 = sample_residually_trivial_character(group, ring, rng);
    UnitCharacter chi2 = sample_residually_trivial_character(group, ring, rng);
    if (chi1 == chi2) {
      --i;
      continue;
    }
    TorusHom torus = t_side_class(chi1, chi2);
    if (hom_is_zero(hom_add(torus.first, torus.second))) {
      report.bump("center_vanishing");
    } else {
      report.fail("torus class not center trivial");
    }
    TZLine via_phi = phi(sigma_class(chi1, chi2));
    TZLine via_torus = restrict_to_TZ(torus);
    if (line_eq(via_phi, via_torus)) {
      report.bump("line_identity");
    } else {
      report.fail("phi line " + hom_to_string(via_phi.rep) + " vs torus line " +
                  hom_to_string(via_torus.rep));
    }
  }
  return report;
}

VerificationReport sweep_twist_properties(long p, long ell, int f, int precision,
                                          DvrBackend backend, int trials, std::uint64_t seed) {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(p);
  DVRCtx ring(field, precision, backend);
  AbelianGroupModel group = AbelianGroupModel::standard_model(p, ell, f);
  VerificationReport report;
  report.name = "twists " + config_tag(p, group.q(), 0, precision);
  Rng rng(seed);

  std::uint64_t qmod = group.q() % static_cast<std::uint64_t>(p);
  bool q_plus = qmod == 1;
  bool q_minus = (group.q() + 1) % static_cast<std::uint64_t>(p) == 0;
  std::vector<ResidualHom> lines = enumerate_hom_lines(group, field);
  ResidualCharacter omega = ResidualCharacter::cyclotomic(group, field);

  auto make_rep = [&]() -> ResidualGaloisRep {
    ResidualCharacter twist = sample_residual_character(group, field, rng);
    if (q_plus) {
      std::uint64_t pick = rng.below(lines.size() + 1);
      ResidualHom sigma = pick == 0 ? hom_zero(group, field) : lines[pick - 1];
      return ResidualGaloisRep::trivial_ss_qp1(group, field, sigma, twist);
    }
    if (q_minus) {
      QM1Case cases[3] = {QM1Case::Split, QM1Case::Ext1ByOmega, QM1Case::ExtOmegaBy1};
      return ResidualGaloisRep::one_plus_omega_qm1(group, field, cases[rng.below(3)], twist);
    }
    return ResidualGaloisRep::generic(group, field, "sc1", "sc2", twist);
  };

  for (int i = 0; i < trials; ++i) {
    ResidualGaloisRep rep = make_rep();
    ResidualCharacter chibar = sample_residual_character(group, field, rng);
    SmoothRepDescription lhs = correspond(twist_galois(rep, chibar));
    SmoothRepDescription rhs = twist_rep(correspond(rep), chibar);
    if (lhs == rhs) {
      report.bump("equivariance");
    } else {
      report.fail("equivariance: " + variant_name(lhs.variant()) + " vs " + variant_name(rhs.variant()));
    }
    SmoothRepDescription desc = correspond(rep);
    if (twist_rep(twist_rep(desc, omega), omega) == desc) {
      report.bump("involution");
    } else {
      report.fail("normdet twist applied twice is not the identity");
    }
    if (desc.socle() == "St" || desc.socle() == "pi_gen") {
      report.bump("generic_socle");
    } else {
      report.fail("socle " + desc.socle() + " is not generic");
    }
  }
  // a generic-shape run regardless of q mod p
  for (int i = 0; i < trials; ++i) {
    ResidualCharacter twist = sample_residual_character(group, field, rng);
    ResidualCharacter chibar = sample_residual_character(group, field, rng);
    ResidualGaloisRep rep = ResidualGaloisRep::generic(group, field, "sc1", "sc2", twist);
    if (correspond(twist_galois(rep, chibar)) == twist_rep(correspond(rep), chibar)) {
      report.bump("generic_equivariance");
    } else {
      report.fail("generic equivariance failed");
    }
  }
  return report;
}

VerificationReport sweep_lattice_invariants(const AbelianGroupModel& group, const DVRCtx& ring,
                                            int window, int samples, std::uint64_t seed) {
  VerificationReport report;
  report.name = "lattice invariants " + config_tag(ring.residue().p(), group.q(), 0, ring.precision());
  Rng rng(seed);
  UnitCharacter triv = trivial_character(group, ring);
  std::vector<FFElem> elems = ff_all_elements(ring.residue());
  for (int i = 0; i < samples; ++i) {
    UnitCharacter chi = sample_residually_trivial_character(group, ring, rng);
    if (chi == triv) {
      --i;
      continue;
    }
    DiagonalActionModule mod(chi, triv);
    std::vector<LatticeBasis> stable = enumerate_stable_lattices(mod, window);
    for (const LatticeBasis& L : stable) {
      if (!is_stable(L, mod)) {
        report.fail("enumerated lattice is unstable: " + L.display());
        continue;
      }
      report.bump("soundness");
      if (dvr_is_zero(L.off())) {
        if (reduction_extension_direct(L, mod).split) {
          report.bump("diagonal_split");
        } else {
          report.fail("diagonal lattice with nonsplit reduction: " + L.display());
        }
      }
    }
    // homothety invariance: pi L' canonicalizes back to L'
    if (!stable.empty()) {
      const LatticeBasis& L = stable[rng.below(stable.size())];
      LatticeBasis shifted = LatticeBasis::from_triangular(ring, window, L.r() + 1, L.s() + 1,
                                                           L.off(), /*off_denom=*/-1);
      if (shifted == L) {
        report.bump("homothety_invariance");
      } else {
        report.fail("pi L' canonicalized to a different class: " + shifted.display());
      }
    }
    // completeness spot check: a random window class that is stable must be
    // among the enumerated representatives
    int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * window + 1))) - window;
    int s = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * window + 1))) - window;
    DVRElem off = random_dvr(ring, elems, rng);
    try {
      LatticeBasis cand = LatticeBasis::from_triangular(ring, window, r, s, off, window);
      if (is_stable(cand, mod)) {
        bool found = false;
        for (const LatticeBasis& L : stable) {
          if (L == cand) {
            found = true;
            break;
          }
        }
        if (found) {
          report.bump("completeness");
        } else {
          report.fail("stable window class missed by enumeration: " + cand.display());
        }
      }
    } catch (const Error&) {
      // class does not meet the window; nothing to check
      report.bump("outside_window");
    }
  }
  return report;
}

VerificationReport sweep_kernel_axioms(const DVRCtx& ring, int iterations, std::uint64_t seed) {
  VerificationReport report;
  report.name = std::string("kernel axioms ") +
                (ring.backend() == DvrBackend::ZModPN ? "zmodpn" : "eqchar") +
                " p=" + std::to_string(ring.residue().p()) + " N=" + std::to_string(ring.precision());
  Rng rng(seed);
  const FiniteFieldCtx& field = ring.residue();
  std::vector<FFElem> elems = ff_all_elements(field);
  int n = ring.precision();
  for (int i = 0; i < iterations; ++i) {
    FFElem x = random_ff(field, elems, rng);
    FFElem y = random_ff(field, elems, rng);
    FFElem z = random_ff(field, elems, rng);
    bool ok = ff_mul(ff_mul(x, y), z) == ff_mul(x, ff_mul(y, z)) &&
              ff_mul(x, ff_add(y, z)) == ff_add(ff_mul(x, y), ff_mul(x, z)) &&
              ff_add(ff_add(x, y), z) == ff_add(x, ff_add(y, z)) && ff_mul(x, y) == ff_mul(y, x);
    if (ok) {
      report.bump("ff_ring_axioms");
    } else {
      report.fail("field axioms failed at " + ff_to_string(x) + "," + ff_to_string(y));
    }
    if (!ff_is_zero(x)) {
      if (ff_is_one(ff_mul(x, ff_inv(x)))) {
        report.bump("ff_inverse");
      } else {
        report.fail("x * x^-1 != 1 for " + ff_to_string(x));
      }
    }
    DVRElem a = random_dvr(ring, elems, rng);
    DVRElem b = random_dvr(ring, elems, rng);
    DVRElem c = random_dvr(ring, elems, rng);
    ok = dvr_mul(dvr_mul(a, b), c) == dvr_mul(a, dvr_mul(b, c)) &&
         dvr_mul(a, dvr_add(b, c)) == dvr_add(dvr_mul(a, b), dvr_mul(a, c)) &&
         dvr_add(dvr_add(a, b), c) == dvr_add(a, dvr_add(b, c)) && dvr_mul(a, b) == dvr_mul(b, a);
    if (ok) {
      report.bump("dvr_ring_axioms");
    } else {
      report.fail("ring axioms failed at " + dvr_to_string(a) + "," + dvr_to_string(b));
    }
    if (dvr_val(dvr_mul(a, b)) == std::min(dvr_val(a) + dvr_val(b), n)) {
      report.bump("val_multiplicative");
    } else {
      report.fail("val(ab) != min(val a + val b, N)");
    }
    // divide(a * pi^e, e) = a with the top e digits dropped
    int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    DVRElem shifted = a;
    for (int k = 0; k < e; ++k) shifted = dvr_mul(shifted, dvr_uniformizer(ring));
    DVRElem back = dvr_divide_by_uniformizer_power(shifted, e);
    DVRElem truncated = a;
    for (int pos = n - e; pos < n; ++pos) {
      for (int j = 0; j < field.degree(); ++j) {
        truncated.dig[static_cast<size_t>(pos) * field.degree() + static_cast<size_t>(j)] = 0;
      }
    }
    if (back == truncated) {
      report.bump("shift_roundtrip");
    } else {
      report.fail("divide(a pi^e, e) is not a truncation of a");
    }
    // principal units have p-power order
    DVRElem u = dvr_one(ring);
    for (int pos = 1; pos < n; ++pos) {
      const FFElem& digit = elems[rng.below(elems.size())];
      for (int j = 0; j < field.degree(); ++j) {
        u.dig[static_cast<size_t>(pos) * field.degree() + static_cast<size_t>(j)] = digit.c[static_cast<size_t>(j)];
      }
    }
    int steps = 0;
    DVRElem w = u;
    DVRElem one = dvr_one(ring);
    while (w != one && steps < 2 * n + 2) {
      w = dvr_unit_pow(w, static_cast<std::uint64_t>(field.p()));
      ++steps;
    }
    // digit model: done once p^k >= N; integer model: 1+p has order p^(N-1)
    int budget = 1;
    if (ring.backend() == DvrBackend::EqualChar) {
      int cover = 1;
      while (cover < n) {
        cover *= static_cast<int>(field.p());
        ++budget;
      }
    } else {
      budget = n - 1;
    }
    if (w == one && steps <= budget) {
      report.bump("principal_unit_order");
    } else {
      report.fail("principal unit order not a small p-power: " + dvr_to_string(u));
    }
  }
  return report;
}

VerificationReport selftest(std::uint64_t seed) {
  VerificationReport total;
  total.name = "selftest";

  {
    FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
    DVRCtx eq(f3, 4, DvrBackend::EqualChar);
    DVRCtx zp(f3, 4, DvrBackend::ZModPN);
    merge_prefixed(total, sweep_kernel_axioms(eq, 300, seed + 1), "kernel.eqchar");
    merge_prefixed(total, sweep_kernel_axioms(zp, 300, seed + 2), "kernel.zmodpn");
    FiniteFieldCtx f9(3, {1, 0, 1});  // F_9 = F_3[x]/(x^2+1)
    DVRCtx eq9(f9, 3, DvrBackend::EqualChar);
    merge_prefixed(total, sweep_kernel_axioms(eq9, 300, seed + 3), "kernel.f9");
  }

  {
    FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
    AbelianGroupModel g37 = AbelianGroupModel::standard_model(3, 7, 1);
    AbelianGroupModel g35 = AbelianGroupModel::standard_model(3, 5, 1);
    DVRCtx r3(f3, 3);
    DVRCtx r4(f3, 4);
    DVRCtx z3(f3, 3, DvrBackend::ZModPN);
    merge_prefixed(total, sweep_sigma_properties(g37, r3, 1000, seed + 4), "sigma.q7");
    merge_prefixed(total, sweep_sigma_properties(g35, r4, 1000, seed + 5), "sigma.q5");
    merge_prefixed(total, sweep_sigma_properties(g37, z3, 300, seed + 6), "sigma.zmodpn");
    merge_prefixed(total, sweep_compat_lemma(g37, r3, 200, seed + 7), "compat.q7");

    // dimension checks
    VerificationReport dims;
    dims.name = "dimensions";
    if (hom_space_dim(g37, 3) == 2 && tz_ambient_dim(g37, 3) == 2 && torus_ambient_dim(g37, 3) == 4) {
      dims.bump("q1_dims");
    } else {
      dims.fail("standard q=7 model dimensions are off");
    }
    if (hom_space_dim(g35, 3) == 1) {
      dims.bump("qm1_dim");
    } else {
      dims.fail("standard q=5 model dimension is off");
    }
    merge_prefixed(total, dims, "dims");
  }

  for (const Prop31SweepConfig& cfg :
       {Prop31SweepConfig{3, 7, 1, 1, 5, {1, 2}, DvrBackend::EqualChar},
        Prop31SweepConfig{3, 7, 1, 2, 6, {1, 2}, DvrBackend::EqualChar},
        Prop31SweepConfig{3, 2, 2, 1, 5, {1, 2}, DvrBackend::EqualChar},
        Prop31SweepConfig{3, 5, 1, 1, 5, {1, 2}, DvrBackend::EqualChar},
        Prop31SweepConfig{3, 7, 1, 1, 5, {1, 2}, DvrBackend::ZModPN}}) {
    merge_prefixed(total, sweep_prop31(cfg, 0),
                   "prop31.q" + std::to_string(AbelianGroupModel::standard_model(cfg.p, cfg.ell, cfg.f).q()) +
                       ".a" + std::to_string(cfg.level) +
                       (cfg.backend == DvrBackend::ZModPN ? ".zmodpn" : ""));
  }
  merge_prefixed(total,
                 sweep_prop31_pair_reduction({3, 7, 1, 1, 5, {1, 2}, DvrBackend::EqualChar}, 25, seed + 8),
                 "prop31.pairs");

  merge_prefixed(total, sweep_main2(3, 7, 1, 3, DvrBackend::EqualChar, SearchSpec{}), "main2.q7");

  merge_prefixed(total, sweep_twist_properties(3, 7, 1, 3, DvrBackend::EqualChar, 20, seed + 9), "twist.q7");
  merge_prefixed(total, sweep_twist_properties(3, 5, 1, 3, DvrBackend::EqualChar, 20, seed + 10), "twist.q5");

  {
    FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
    AbelianGroupModel g37 = AbelianGroupModel::standard_model(3, 7, 1);
    DVRCtx r5(f3, 5);
    merge_prefixed(total, sweep_lattice_invariants(g37, r5, 2, 40, seed + 11), "lattice.q7");
  }

  return total;
}

}  // namespace modpll
