#include "modpll/dvr.hpp"

#include <gtest/gtest.h>

#include "modpll/rng.hpp"

using namespace modpll;

namespace {

// Independent oracle for powers in k[pi]/(pi^N), k = F_p: expand the power
// exactly in Z[pi] by schoolbook multiplication (truncating the degree only),
// and reduce the integer coefficients mod p at the end.
std::vector<long> poly_pow_mod_p(const std::vector<long>& base, unsigned n, long p, int trunc) {
  std::vector<long long> acc = {1};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<long long> next(static_cast<size_t>(trunc), 0);
    for (size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (size_t j = 0; j < base.size() && i + j < static_cast<size_t>(trunc); ++j) {
        next[i + j] += acc[i] * base[j];
      }
    }
    acc = std::move(next);
  }
  std::vector<long> out(static_cast<size_t>(trunc), 0);
  for (size_t i = 0; i < acc.size(); ++i) {
    out[i] = static_cast<long>(((acc[i] % p) + p) % p);
  }
  return out;
}

// Independent oracle for the integer backend: plain 64-bit modpow.
std::uint64_t modpow(std::uint64_t base, std::uint64_t n, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (n) {
    if (n & 1) r = (unsigned __int128)(r)*base % mod;
    base = (unsigned __int128)(base)*base % mod;
    n >>= 1;
  }
  return r;
}

std::uint64_t dvr_as_u64(const DVRElem& a, long p) {
  std::uint64_t v = 0, b = 1;
  for (int i = 0; i < a.ctx->precision(); ++i) {
    v += b * static_cast<std::uint64_t>(ff_coeffs(dvr_digit(a, i))[0]);
    b *= static_cast<std::uint64_t>(p);
  }
  return v;
}

}  // namespace

TEST(Dvr, ValuationExamples) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  DVRCtx ring(f3, 4);
  EXPECT_EQ(dvr_val(dvr_from_ints(ring, {0, 0, 1, 2})), 2);  // pi^2 + 2 pi^3
  EXPECT_EQ(dvr_val(dvr_zero(ring)), 4);
  EXPECT_EQ(dvr_val(dvr_from_ints(ring, {1, 1})), 0);  // 1 + pi
}

TEST(Dvr, DivideByUniformizerPower) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  DVRCtx ring(f3, 4);
  DVRElem a = dvr_from_ints(ring, {0, 0, 1, 2});
  DVRElem q = dvr_divide_by_uniformizer_power(a, 2);
  EXPECT_EQ(q, dvr_from_ints(ring, {1, 2}));  // 1 + 2 pi
  EXPECT_EQ(q.certified, 2);

  EXPECT_THROW(dvr_divide_by_uniformizer_power(dvr_from_ints(ring, {1, 0, 2}), 1), InexactDivision);
  EXPECT_EQ(dvr_divide_by_uniformizer_power(dvr_zero(ring), 3), dvr_zero(ring));
}

TEST(Dvr, ReduceExamples) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  DVRCtx ring(f3, 4);
  EXPECT_EQ(dvr_reduce(dvr_from_ints(ring, {1, 2})), ff_from_int(f3, 1));
  EXPECT_EQ(dvr_reduce(dvr_uniformizer(ring)), ff_zero(f3));
  EXPECT_EQ(dvr_reduce(dvr_from_ints(ring, {2, 0, 0, 1})), ff_from_int(f3, 2));
}

TEST(Dvr, ReduceRequiresCertifiedDigit) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  DVRCtx ring(f3, 3);
  DVRElem a = dvr_from_ints(ring, {0, 0, 1});
  DVRElem q = dvr_divide_by_uniformizer_power(a, 2);  // certified to 1 digit
  EXPECT_NO_THROW(dvr_reduce(q));
  // multiplying by pi lifts the uncertainty along with the digits
  DVRElem qq = dvr_divide_by_uniformizer_power(dvr_mul(q, dvr_uniformizer(ring)), 1);
  EXPECT_NO_THROW(dvr_reduce(qq));
  // dividing the whole precision away leaves nothing certified
  DVRElem drained = dvr_divide_by_uniformizer_power(dvr_zero(ring), 3);
  EXPECT_THROW(dvr_reduce(drained), UncertifiedRead);
}

TEST(Dvr, UnitPowAgainstPolynomialOracle) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  // frozen from the oracle: (1+pi)^3 = 1 + pi^3 in char 3
  {
    DVRCtx ring(f3, 4);
    DVRElem v = dvr_unit_pow(dvr_from_ints(ring, {1, 1}), 3);
    EXPECT_EQ(v, dvr_from_ints(ring, {1, 0, 0, 1}));
    std::vector<long> expect = poly_pow_mod_p({1, 1}, 3, 3, 4);
    EXPECT_EQ(expect, (std::vector<long>{1, 0, 0, 1}));
  }
  {
    DVRCtx ring(f3, 3);
    DVRElem v = dvr_unit_pow(dvr_from_ints(ring, {1, 1}), 3);
    EXPECT_EQ(v, dvr_one(ring));
  }
  // a^0 = 1 for any unit
  {
    DVRCtx ring(f3, 3);
    EXPECT_EQ(dvr_unit_pow(dvr_from_ints(ring, {2, 1, 2}), 0), dvr_one(ring));
    EXPECT_THROW(dvr_unit_pow(dvr_uniformizer(ring), 2), NonUnitBase);
  }
  // randomized cross-check against the oracle
  Rng rng(21);
  DVRCtx ring(f3, 5);
  for (int i = 0; i < 300; ++i) {
    std::vector<long> digits(5);
    digits[0] = 1 + static_cast<long>(rng.below(2));
    for (int j = 1; j < 5; ++j) digits[static_cast<size_t>(j)] = static_cast<long>(rng.below(3));
    unsigned n = static_cast<unsigned>(rng.below(8));
    DVRElem got = dvr_unit_pow(dvr_from_ints(ring, digits), n);
    EXPECT_EQ(got, dvr_from_ints(ring, poly_pow_mod_p(digits, n, 3, 5)));
  }
}

TEST(Dvr, ZModPNMatchesIntegerArithmetic) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  DVRCtx ring(f3, 4, DvrBackend::ZModPN);  // Z/81
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    std::vector<long> da(4), db(4);
    for (int j = 0; j < 4; ++j) {
      da[static_cast<size_t>(j)] = static_cast<long>(rng.below(3));
      db[static_cast<size_t>(j)] = static_cast<long>(rng.below(3));
    }
    DVRElem a = dvr_from_ints(ring, da);
    DVRElem b = dvr_from_ints(ring, db);
    std::uint64_t ia = dvr_as_u64(a, 3), ib = dvr_as_u64(b, 3);
    EXPECT_EQ(dvr_as_u64(dvr_add(a, b), 3), (ia + ib) % 81);
    EXPECT_EQ(dvr_as_u64(dvr_mul(a, b), 3), (ia * ib) % 81);
    if (ia % 3 != 0) {
      EXPECT_EQ(dvr_as_u64(dvr_unit_pow(a, 10), 3), modpow(ia, 10, 81));
      EXPECT_EQ(dvr_as_u64(dvr_mul(a, dvr_unit_inv(a)), 3), 1u);
    }
  }
  // (1+p)^3 in Z/81: 4^3 = 64
  DVRElem one_plus_p = dvr_from_ints(ring, {1, 1});
  EXPECT_EQ(dvr_as_u64(dvr_unit_pow(one_plus_p, 3), 3), 64u);
}

TEST(Dvr, RingAxiomsBothBackends) {
  FiniteFieldCtx f5 = FiniteFieldCtx::prime_field(5);
  FiniteFieldCtx f9(3, {1, 0, 1});
  std::vector<DVRCtx> rings;
  rings.emplace_back(f5, 4, DvrBackend::EqualChar);
  rings.emplace_back(f5, 4, DvrBackend::ZModPN);
  rings.emplace_back(f9, 3, DvrBackend::EqualChar);
  for (const DVRCtx& ring : rings) {
    std::vector<FFElem> elems = ff_all_elements(ring.residue());
    Rng rng(11);
    auto random_elem = [&]() {
      DVRElem x = dvr_zero(ring);
      for (int i = 0; i < ring.precision(); ++i) {
        FFElem d = elems[rng.below(elems.size())];
        for (int j = 0; j < ring.residue().degree(); ++j) {
          x.dig[static_cast<size_t>(i) * ring.residue().degree() + static_cast<size_t>(j)] =
              d.c[static_cast<size_t>(j)];
        }
      }
      return x;
    };
    for (int i = 0; i < 1000; ++i) {
      DVRElem a = random_elem(), b = random_elem(), c = random_elem();
      EXPECT_EQ(dvr_mul(dvr_mul(a, b), c), dvr_mul(a, dvr_mul(b, c)));
      EXPECT_EQ(dvr_mul(a, dvr_add(b, c)), dvr_add(dvr_mul(a, b), dvr_mul(a, c)));
      EXPECT_EQ(dvr_add(dvr_add(a, b), c), dvr_add(a, dvr_add(b, c)));
      EXPECT_EQ(dvr_mul(a, b), dvr_mul(b, a));
      EXPECT_EQ(dvr_val(dvr_mul(a, b)), std::min(dvr_val(a) + dvr_val(b), ring.precision()));
      if (dvr_is_unit(a)) {
        EXPECT_EQ(dvr_mul(a, dvr_unit_inv(a)), dvr_one(ring));
      }
    }
  }
}

TEST(Dvr, PrincipalUnitsHavePPowerOrder) {
  // The step bound differs per backend: digits without carries kill a
  // principal unit once p^k >= N (ceil(log_3 5) + 1 = 3 cubings here), while
  // 1+p has order p^(N-1) in Z/p^N, needing N-1 = 4.
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  for (DvrBackend backend : {DvrBackend::EqualChar, DvrBackend::ZModPN}) {
    DVRCtx ring(f3, 5, backend);
    int bound = backend == DvrBackend::EqualChar ? 3 : 4;
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      DVRElem u = dvr_one(ring);
      for (int pos = 1; pos < 5; ++pos) {
        u.dig[static_cast<size_t>(pos)] = static_cast<std::uint8_t>(rng.below(3));
      }
      DVRElem w = u;
      int steps = 0;
      while (w != dvr_one(ring) && steps < bound) {
        w = dvr_unit_pow(w, 3);
        ++steps;
      }
      EXPECT_EQ(w, dvr_one(ring));
    }
  }
}

TEST(Dvr, PrecisionBounds) {
  FiniteFieldCtx f3 = FiniteFieldCtx::prime_field(3);
  EXPECT_THROW(DVRCtx(f3, 1), Error);
  FiniteFieldCtx f9(3, {1, 0, 1});
  EXPECT_THROW(DVRCtx(f9, 3, DvrBackend::ZModPN), Error);  // needs degree 1
}
