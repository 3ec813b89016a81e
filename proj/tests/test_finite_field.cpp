#include "modpll/finite_field.hpp"

#include <gtest/gtest.h>

#include "modpll/rng.hpp"

using namespace modpll;

TEST(FiniteField, PrimeFieldInverse) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  EXPECT_EQ(ff_inv(ff_from_int(f3, 2)), ff_from_int(f3, 2));  // 2*2 = 4 = 1 mod 3
  EXPECT_THROW(ff_inv(ff_zero(f3)), ZeroInversion);
}

TEST(FiniteField, ExtensionInverse) {
  // F_9 = F_3[x]/(x^2+1); x * 2x = 2x^2 = -2 = 1
  FiniteFieldCtx f9(3, {1, 0, 1});
  FFElem x = ff_from_coeffs(f9, {0, 1});
  FFElem two_x = ff_from_coeffs(f9, {0, 2});
  EXPECT_EQ(ff_inv(x), two_x);
  EXPECT_TRUE(ff_is_one(ff_mul(x, two_x)));
}

TEST(FiniteField, RejectsBadContexts) {
  EXPECT_THROW(FiniteFieldCtx::prime_field(2), Error);   // p must be odd
  EXPECT_THROW(FiniteFieldCtx::prime_field(9), Error);   // p must be prime
  EXPECT_THROW(FiniteFieldCtx(3, {1, 0, 2}), Error);     // not monic
  EXPECT_THROW(FiniteFieldCtx(3, {2, 0, 1}), Error);     // x^2+2 = (x+1)(x+2) over F_3
  EXPECT_NO_THROW(FiniteFieldCtx(3, {1, 0, 1}));         // x^2+1 irreducible over F_3
  EXPECT_THROW(FiniteFieldCtx(5, {1, 1, 2, 1}), Error);  // has root -1 over F_5
}

TEST(FiniteField, RingAxiomsRandom) {
  for (const FiniteFieldCtx& ctx : {FiniteFieldCtx::prime_field(5), FiniteFieldCtx(3, {1, 0, 1}),
                                    FiniteFieldCtx(3, {1, 2, 0, 1})}) {
    std::vector<FFElem> elems = ff_all_elements(ctx);
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
      FFElem a = elems[rng.below(elems.size())];
      FFElem b = elems[rng.below(elems.size())];
      FFElem c = elems[rng.below(elems.size())];
      EXPECT_EQ(ff_mul(ff_mul(a, b), c), ff_mul(a, ff_mul(b, c)));
      EXPECT_EQ(ff_mul(a, ff_add(b, c)), ff_add(ff_mul(a, b), ff_mul(a, c)));
      EXPECT_EQ(ff_mul(a, b), ff_mul(b, a));
      if (!ff_is_zero(a)) {
        EXPECT_TRUE(ff_is_one(ff_mul(a, ff_inv(a))));
      }
    }
  }
}

TEST(FiniteField, PowMatchesRepeatedMultiplication) {
  FiniteFieldCtx f27(3, {1, 2, 0, 1});
  std::vector<FFElem> elems = ff_all_elements(f27);
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    FFElem a = elems[rng.below(elems.size())];
    std::uint64_t n = rng.below(40);
    FFElem by_pow = ff_pow(a, n);
    FFElem by_mul = ff_one(f27);
    for (std::uint64_t k = 0; k < n; ++k) by_mul = ff_mul(by_mul, a);
    EXPECT_EQ(by_pow, by_mul);
  }
}

TEST(FiniteField, AllElementsEnumeration) {
  FiniteFieldCtx f9(3, {1, 0, 1});
  std::vector<FFElem> elems = ff_all_elements(f9);
  ASSERT_EQ(elems.size(), 9u);
  for (size_t i = 1; i < elems.size(); ++i) {
    EXPECT_LT(ff_cmp(elems[i - 1], elems[i]), 0);
  }
}
