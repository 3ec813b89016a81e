#include "modpll/correspondence.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace modpll;

namespace {

struct Q7Fixture : ::testing::Test {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(3);
  AbelianGroupModel group = AbelianGroupModel::standard_model(3, 7, 1);
  DVRCtx ring{field, 3};
  ResidualCharacter triv = ResidualCharacter::trivial(group, field);

  ResidualHom hom(long u, long t) {
    return ResidualHom(group, {ff_from_int(field, u), ff_from_int(field, t)});
  }
  ResidualGaloisRep qp1(long u, long t) {
    return ResidualGaloisRep::trivial_ss_qp1(group, field, hom(u, t), triv);
  }
};

struct Q5Fixture : ::testing::Test {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(3);
  AbelianGroupModel group = AbelianGroupModel::standard_model(3, 5, 1);
  ResidualCharacter triv = ResidualCharacter::trivial(group, field);

  ResidualGaloisRep rep(QM1Case c) {
    return ResidualGaloisRep::one_plus_omega_qm1(group, field, c, triv);
  }
};

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_F(Q5Fixture, DispatchTable) {
  SmoothRepDescription split = correspond(rep(QM1Case::Split));
  EXPECT_EQ(split.variant(), RepVariant::CuspidalEnvelope);
  EXPECT_EQ(split.jh(), sorted({"pi_gen", "1_G", "normdet"}));
  EXPECT_EQ(split.socle(), "pi_gen");

  SmoothRepDescription e1o = correspond(rep(QM1Case::Ext1ByOmega));
  EXPECT_EQ(e1o.variant(), RepVariant::WDualTwist);
  EXPECT_EQ(e1o.jh(), sorted({"pi_gen", "normdet"}));

  SmoothRepDescription eo1 = correspond(rep(QM1Case::ExtOmegaBy1));
  EXPECT_EQ(eo1.variant(), RepVariant::WDual);
  EXPECT_EQ(eo1.jh(), sorted({"pi_gen", "1_G"}));
  EXPECT_EQ(eo1.socle(), "pi_gen");
}

TEST_F(Q5Fixture, QMinus1LiftTagLists) {
  FiniteFieldCtx f = FiniteFieldCtx::prime_field(3);
  DVRCtx ring(f, 3);
  auto types = [&](QM1Case c) {
    std::vector<int> out;
    for (const LiftDescription& l : enumerate_lifts(rep(c), ring, SearchSpec{})) {
      out.push_back(l.type);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  EXPECT_EQ(types(QM1Case::Split), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(types(QM1Case::Ext1ByOmega), (std::vector<int>{1, 2}));
  EXPECT_EQ(types(QM1Case::ExtOmegaBy1), (std::vector<int>{1, 3}));
}

TEST_F(Q5Fixture, QMinus1LiftReductions) {
  for (auto [type, variant] :
       {std::pair{1, RepVariant::Cuspidal}, std::pair{2, RepVariant::WDualTwist},
        std::pair{3, RepVariant::WDual}, std::pair{4, RepVariant::CuspidalEnvelope}}) {
    LiftDescription lift;
    lift.regime = LiftDescription::Regime::QMinus1;
    lift.type = type;
    EXPECT_EQ(lift_reduction(lift, group, field).variant(), variant);
  }
}

TEST_F(Q7Fixture, CorrespondQPlus1) {
  SmoothRepDescription v = correspond(qp1(0, 0));
  EXPECT_EQ(v.variant(), RepVariant::StEnvelope);
  EXPECT_EQ(v.jh(), sorted({"St", "1_G", "1_G"}));
  EXPECT_EQ(v.socle(), "St");

  SmoothRepDescription e = correspond(qp1(1, 0));
  EXPECT_EQ(e.variant(), RepVariant::StExtension);
  EXPECT_TRUE(line_eq(*e.class_line(), TZLine{hom(1, 0)}));
  EXPECT_EQ(e.jh(), sorted({"St", "1_G"}));
}

TEST_F(Q7Fixture, UnsupportedCaseThrows) {
  FiniteFieldCtx f5 = FiniteFieldCtx::prime_field(5);
  AbelianGroupModel g = AbelianGroupModel::standard_model(5, 3, 1);  // q = 3, not +-1 mod 5
  ResidualCharacter t5 = ResidualCharacter::trivial(g, f5);
  ResidualGaloisRep rep = ResidualGaloisRep::unsupported_twist(g, f5, t5);
  EXPECT_THROW(correspond(rep), UnsupportedCase);
}

TEST_F(Q7Fixture, GenericPassthrough) {
  ResidualGaloisRep rep = ResidualGaloisRep::generic(group, field, "sc_a", "sc_b", triv);
  SmoothRepDescription d = correspond(rep);
  EXPECT_EQ(d.variant(), RepVariant::Generic);
  EXPECT_EQ(d.support1(), "sc_a");
  EXPECT_EQ(d.support2(), "sc_b");
  EXPECT_EQ(d.socle(), "pi_gen");
}

TEST_F(Q7Fixture, LiftReductions) {
  LiftDescription l3;
  l3.regime = LiftDescription::Regime::QPlus1;
  l3.type = 3;
  SmoothRepDescription st = lift_reduction(l3, group, field);
  EXPECT_EQ(st.variant(), RepVariant::Steinberg);
  EXPECT_EQ(st.jh(), std::vector<std::string>{"St"});

  LiftDescription l1 = l3;
  l1.type = 1;
  SmoothRepDescription w = lift_reduction(l1, group, field);
  EXPECT_EQ(w.variant(), RepVariant::StExtension);
  EXPECT_TRUE(line_eq(*w.class_line(), unramified_line(group, field)));

  LiftDescription l2 = l3;
  l2.type = 2;
  UnitCharacter c1 = make_unit_character(
      group, ring, {dvr_from_ints(ring, {1, 1}), dvr_one(ring)});
  l2.characters = {c1, trivial_character(group, ring)};
  SmoothRepDescription e = lift_reduction(l2, group, field);
  EXPECT_EQ(e.variant(), RepVariant::StExtension);
  EXPECT_TRUE(line_eq(*e.class_line(), TZLine{hom(1, 0)}));
}

TEST_F(Q7Fixture, EnumerateLiftsFiltersTypes) {
  SearchSpec full;
  // ramified sigma: no type 1/4
  std::vector<LiftDescription> ramified = enumerate_lifts(qp1(0, 1), ring, full);
  for (const LiftDescription& l : ramified) {
    EXPECT_TRUE(l.type == 2 || l.type == 3) << l.type;
  }
  // unramified sigma: type 1/4 present
  std::vector<LiftDescription> unram = enumerate_lifts(qp1(1, 0), ring, full);
  bool has1 = false, has4 = false;
  for (const LiftDescription& l : unram) {
    has1 = has1 || l.type == 1;
    has4 = has4 || l.type == 4;
  }
  EXPECT_TRUE(has1);
  EXPECT_TRUE(has4);
  // sigma = 0: types 1, 3, 4 are present and type-2 pairs realize every
  // line of the 2-dim Hom space
  std::vector<LiftDescription> all = enumerate_lifts(qp1(0, 0), ring, full);
  std::vector<bool> type_seen(5, false);
  for (const LiftDescription& l : all) type_seen[static_cast<size_t>(l.type)] = true;
  EXPECT_TRUE(type_seen[1] && type_seen[2] && type_seen[3] && type_seen[4]);
  std::vector<ResidualHom> lines;
  for (const LiftDescription& l : all) {
    if (l.type != 2) continue;
    ResidualHom s = sigma_class(l.characters->first, l.characters->second);
    bool seen = false;
    for (const ResidualHom& known : lines) {
      if (lines_equal(known, s)) {
        seen = true;
        break;
      }
    }
    if (!seen) lines.push_back(normalize_line(s));
  }
  EXPECT_EQ(lines.size(), 4u);  // (p^2-1)/(p-1) lines in F_3^2
}

TEST_F(Q7Fixture, EnumerateLiftsGuardsSearchSpace) {
  SearchSpec tiny;
  tiny.max_candidates = 10;
  EXPECT_THROW(enumerate_lifts(qp1(0, 0), ring, tiny), SearchSpaceTooLarge);
}

TEST_F(Q7Fixture, BruteForceMatchesEngine) {
  SearchSpec full;
  // sigma = 0: the span of all reduction lines is 2-dimensional
  EXPECT_EQ(brute_force_correspond(qp1(0, 0), ring, full).variant(), RepVariant::StEnvelope);
  // ramified line
  SmoothRepDescription br = brute_force_correspond(qp1(0, 1), ring, full);
  EXPECT_EQ(br.variant(), RepVariant::StExtension);
  EXPECT_TRUE(line_eq(*br.class_line(), *correspond(qp1(0, 1)).class_line()));
  // unramified: type-1/4 and type-2 reductions must agree
  SmoothRepDescription bu = brute_force_correspond(qp1(1, 0), ring, full);
  EXPECT_EQ(bu.variant(), RepVariant::StExtension);
  EXPECT_TRUE(line_eq(*bu.class_line(), unramified_line(group, field)));
}

TEST_F(Q7Fixture, BruteForceConsistencyOfAllLiftLines) {
  SearchSpec full;
  ResidualGaloisRep rep = qp1(1, 1);
  SmoothRepDescription engine = correspond(rep);
  for (const LiftDescription& lift : enumerate_lifts(rep, ring, full)) {
    SmoothRepDescription red = lift_reduction(lift, group, field);
    if (red.variant() == RepVariant::StExtension) {
      EXPECT_TRUE(line_eq(*red.class_line(), *engine.class_line()));
    }
  }
}

TEST_F(Q7Fixture, InsufficientEvidenceWhenSearchFindsNoLines) {
  // zero sampled draws leave only the Steinberg lift for a ramified target
  SearchSpec empty;
  empty.full = false;
  empty.max_candidates = 0;
  EXPECT_THROW(brute_force_correspond(qp1(0, 1), ring, empty), InsufficientEvidence);
}

TEST_F(Q7Fixture, ResidualCharacterTorsionValidation) {
  FiniteFieldCtx f5 = FiniteFieldCtx::prime_field(5);
  AbelianGroupModel g = AbelianGroupModel::standard_model(5, 11, 1);
  // 2^10 = 4 != 1 in F_5, so t -> 2 violates the order-10 relation
  EXPECT_THROW(ResidualCharacter(g, {ff_from_int(f5, 1), ff_from_int(f5, 2)}), TorsionViolation);
  EXPECT_NO_THROW(ResidualCharacter(g, {ff_from_int(f5, 2), ff_from_int(f5, 4)}));
}

TEST_F(Q7Fixture, SampledSearchIsSeededAndDeterministic) {
  SearchSpec sampled;
  sampled.full = false;
  sampled.max_candidates = 400;
  sampled.seed = 99;
  SmoothRepDescription a = brute_force_correspond(qp1(0, 1), ring, sampled);
  SmoothRepDescription b = brute_force_correspond(qp1(0, 1), ring, sampled);
  EXPECT_TRUE(a == b);
  EXPECT_EQ(a.variant(), RepVariant::StExtension);
}

TEST_F(Q5Fixture, TwistSwapsWDuals) {
  ResidualCharacter omega = ResidualCharacter::cyclotomic(group, field);
  // omega-bar has order two here: values (-1, 1)
  EXPECT_EQ(omega.value(0), ff_from_int(field, 2));
  SmoothRepDescription wd = correspond(rep(QM1Case::ExtOmegaBy1));
  SmoothRepDescription twisted = twist_rep(wd, omega);
  EXPECT_EQ(twisted.variant(), RepVariant::WDualTwist);
  EXPECT_EQ(twist_rep(twisted, omega).variant(), RepVariant::WDual);

  SmoothRepDescription v = correspond(rep(QM1Case::Split));
  EXPECT_EQ(twist_rep(v, omega).variant(), RepVariant::CuspidalEnvelope);

  // identity twist
  EXPECT_TRUE(twist_rep(v, triv) == v);
}

TEST_F(Q5Fixture, TwistEquivariance) {
  ResidualCharacter omega = ResidualCharacter::cyclotomic(group, field);
  for (QM1Case c : {QM1Case::Split, QM1Case::Ext1ByOmega, QM1Case::ExtOmegaBy1}) {
    EXPECT_TRUE(correspond(twist_galois(rep(c), omega)) == twist_rep(correspond(rep(c)), omega));
  }
}
