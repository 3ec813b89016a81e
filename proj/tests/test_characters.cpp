#include "modpll/characters.hpp"

#include <gtest/gtest.h>

using namespace modpll;

namespace {

// standard model p=3, ell=7, q=7, k=F_3 (note p | q-1 = 6)
struct StandardQ7 : ::testing::Test {
  FiniteFieldCtx field = FiniteFieldCtx::prime_field(3);
  AbelianGroupModel group = AbelianGroupModel::standard_model(3, 7, 1);

  UnitCharacter chi(const DVRCtx& ring, std::vector<long> u, std::vector<long> t) {
    return make_unit_character(group, ring, {dvr_from_ints(ring, u), dvr_from_ints(ring, t)});
  }
};

}  // namespace

TEST_F(StandardQ7, TorsionValidation) {
  DVRCtx r3(field, 3);
  // (1+pi)^6 = 1 in F_3[pi]/pi^3
  EXPECT_NO_THROW(chi(r3, {1, 1}, {1}));
  // (1+pi)^3 = 1 + pi^3 = 1 at N=3
  EXPECT_NO_THROW(chi(r3, {1}, {1, 1}));
  // at N=4: (1+pi)^6 = (1+pi^3)^2 = 1 + 2 pi^3 != 1
  DVRCtx r4(field, 4);
  EXPECT_THROW(chi(r4, {1}, {1, 1}), TorsionViolation);
  EXPECT_NO_THROW(chi(r4, {1, 1}, {1}));  // u is free
}

TEST_F(StandardQ7, TrivialModUniformizerFlag) {
  DVRCtx r3(field, 3);
  EXPECT_TRUE(chi(r3, {1, 1}, {1}).trivial_mod_uniformizer());
  EXPECT_FALSE(chi(r3, {2}, {1}).trivial_mod_uniformizer());
}

TEST_F(StandardQ7, CongruenceLevel) {
  DVRCtx r3(field, 3);
  UnitCharacter triv = trivial_character(group, r3);
  EXPECT_EQ(congruence_level(chi(r3, {1, 1}, {1}), triv), 1);
  EXPECT_EQ(congruence_level(chi(r3, {1, 0, 1}, {1}), triv), 2);
  EXPECT_THROW(congruence_level(triv, triv), Indistinguishable);
  EXPECT_THROW(congruence_level(chi(r3, {2}, {1}), triv), NotResiduallyTrivial);
}

TEST_F(StandardQ7, SigmaClassExamples) {
  DVRCtx r3(field, 3);
  UnitCharacter triv = trivial_character(group, r3);
  auto hom = [&](long u, long t) {
    return ResidualHom(group, {ff_from_int(field, u), ff_from_int(field, t)});
  };
  EXPECT_EQ(sigma_class(chi(r3, {1, 1}, {1}), triv), hom(1, 0));
  // (1 - (1+pi))/pi = -1 = 2 in F_3 on the t coordinate
  EXPECT_EQ(sigma_class(chi(r3, {1, 1}, {1}), chi(r3, {1}, {1, 1})), hom(1, 2));
  // level-2 pair
  EXPECT_EQ(sigma_class(chi(r3, {1, 0, 1}, {1, 0, 2}), triv), hom(1, 2));
  EXPECT_EQ(congruence_level(chi(r3, {1, 0, 1}, {1, 0, 2}), triv), 2);
}

TEST_F(StandardQ7, HomSpaceDim) {
  EXPECT_EQ(hom_space_dim(group, 3), 2);  // q = 7 = 1 mod 3
  AbelianGroupModel q5 = AbelianGroupModel::standard_model(3, 5, 1);
  EXPECT_EQ(hom_space_dim(q5, 3), 1);  // 3 does not divide 4
  AbelianGroupModel free_rank1({Generator{"u", 0}});
  EXPECT_EQ(hom_space_dim(free_rank1, 3), 1);

  // brute-force cross-check: count homomorphisms {u,t} -> F_3 respecting
  // n * x = 0 on torsion, then compare p^dim
  for (const AbelianGroupModel* g : {&group, &q5}) {
    long count = 0;
    for (long xu = 0; xu < 3; ++xu) {
      for (long xt = 0; xt < 3; ++xt) {
        std::uint64_t n = g->generators()[1].order;
        if ((n % 3) * static_cast<std::uint64_t>(xt) % 3 == 0) ++count;
      }
    }
    long expected = 1;
    for (int i = 0; i < hom_space_dim(*g, 3); ++i) expected *= 3;
    EXPECT_EQ(count, expected);
  }
}

TEST_F(StandardQ7, ResidualHomTorsionCompatibility) {
  AbelianGroupModel q5 = AbelianGroupModel::standard_model(3, 5, 1);
  // t has order 4, prime to 3: nonzero value rejected
  EXPECT_THROW(ResidualHom(q5, {ff_from_int(field, 1), ff_from_int(field, 1)}), TorsionViolation);
  EXPECT_NO_THROW(ResidualHom(q5, {ff_from_int(field, 1), ff_zero(field)}));
}

TEST_F(StandardQ7, LineNormalization) {
  auto hom = [&](long u, long t) {
    return ResidualHom(group, {ff_from_int(field, u), ff_from_int(field, t)});
  };
  EXPECT_TRUE(lines_equal(hom(1, 2), hom(2, 1)));   // 2*(1,2) = (2,4) = (2,1)
  EXPECT_FALSE(lines_equal(hom(1, 0), hom(0, 1)));
  EXPECT_TRUE(lines_equal(hom(1, 1), hom(1, 1)));
  EXPECT_EQ(normalize_line(hom(0, 2)), hom(0, 1));
  EXPECT_THROW(normalize_line(hom(0, 0)), ZeroClass);
}

TEST_F(StandardQ7, CharacterSpaceCounts) {
  // N=3: all nine values of 1+pi*O satisfy x^6 = 1; N=5 cuts t down to 1+pi^2*O
  DVRCtx r3(field, 3);
  DVRCtx r5(field, 5);
  EXPECT_EQ(count_torsion_valid_units(r3, 6), 9u);
  EXPECT_EQ(count_torsion_valid_units(r5, 6), 27u);
  EXPECT_EQ(count_residually_trivial_characters(group, r3), 81u);
  EXPECT_EQ(enumerate_residually_trivial_characters(group, r3).size(), 81u);
  // q=5: only the trivial t-value survives
  AbelianGroupModel q5 = AbelianGroupModel::standard_model(3, 5, 1);
  EXPECT_EQ(count_torsion_valid_units(r3, 4), 1u);
  EXPECT_EQ(count_residually_trivial_characters(q5, r3), 9u);
  // integer backend: x^6 = 1 in 1+3Z/27 has 3 solutions
  DVRCtx z3(field, 3, DvrBackend::ZModPN);
  EXPECT_EQ(count_torsion_valid_units(z3, 6), 3u);
  EXPECT_EQ(torsion_valid_units(z3, 6).size(), 3u);
}

TEST_F(StandardQ7, WordEvaluation) {
  DVRCtx r3(field, 3);
  UnitCharacter c = chi(r3, {1, 1}, {1, 1});
  // chi(u^2 t^-1) = (1+pi)^2 (1+pi)^-1 = 1+pi
  Word w = {{0, 2}, {1, -1}};
  EXPECT_EQ(char_eval_word(c, w), dvr_from_ints(r3, {1, 1}));
  ResidualHom h(group, {ff_from_int(field, 1), ff_from_int(field, 2)});
  // h(u^2 t^-1) = 2*1 - 2 = 0
  EXPECT_EQ(hom_eval_word(h, w), ff_zero(field));
}
