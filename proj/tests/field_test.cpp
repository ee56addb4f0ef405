#include <gtest/gtest.h>

#include "gelgamal/errors.hpp"
#include "gelgamal/field.hpp"
#include "gelgamal/random.hpp"

using gelgamal::FieldElement;

TEST(Field, ConstructionReducesToCanonicalResidue) {
  EXPECT_EQ(FieldElement(251).value(), 0);
  EXPECT_EQ(FieldElement(-1).value(), 250);
  EXPECT_EQ(FieldElement(1000).value(), 1000 % 251);
  EXPECT_EQ(FieldElement(-503).value(), 250);
  EXPECT_EQ(FieldElement(4, 3).value(), 1);
  EXPECT_EQ(FieldElement().modulus(), 251);
}

TEST(Field, RejectsNonPrimeModulus) {
  EXPECT_THROW(FieldElement(1, 4), gelgamal::ContractViolation);
  EXPECT_THROW(FieldElement(1, 1), gelgamal::ContractViolation);
  EXPECT_THROW(FieldElement(1, 0), gelgamal::ContractViolation);
  EXPECT_NO_THROW(FieldElement(1, 2));
  EXPECT_NO_THROW(FieldElement(1, 251));
}

TEST(Field, MinusOneSquaredIsOne) { EXPECT_EQ((FieldElement(250) * FieldElement(250)).value(), 1); }

TEST(Field, ExponentProductReducesTo19) { EXPECT_EQ((FieldElement(41) * FieldElement(178)).value(), 19); }

TEST(Field, ZeroIsAdditiveIdentity) {
  for (int x = 0; x < 251; ++x) EXPECT_EQ(FieldElement(0) + FieldElement(x), FieldElement(x));
}

TEST(Field, MismatchedModuliThrow) {
  EXPECT_THROW(FieldElement(1, 7) + FieldElement(1, 5), gelgamal::ContractViolation);
  EXPECT_THROW(FieldElement(1, 7) - FieldElement(1, 5), gelgamal::ContractViolation);
  EXPECT_THROW(FieldElement(1, 7) * FieldElement(1, 5), gelgamal::ContractViolation);
}

TEST(Field, NegationAndSubtraction) {
  EXPECT_EQ((-FieldElement(0)).value(), 0);
  EXPECT_EQ((-FieldElement(1)).value(), 250);
  EXPECT_EQ((FieldElement(3) - FieldElement(5)).value(), 249);
}

TEST(Field, InverseKnownValues) {
  EXPECT_EQ(inverse(FieldElement(1)).value(), 1);
  EXPECT_EQ(inverse(FieldElement(2)).value(), 126);
  EXPECT_EQ(inverse(FieldElement(250)).value(), 250);
  EXPECT_THROW(inverse(FieldElement(0)), gelgamal::NotInvertible);
}

TEST(Field, InverseAgreesWithFermatForEveryResidue) {
  for (int a = 1; a < 251; ++a) {
    const FieldElement x(a);
    const FieldElement inv = inverse(x);
    EXPECT_EQ((x * inv).value(), 1) << a;
    EXPECT_EQ(inv, pow(x, 249)) << a;
  }
}

TEST(Field, InverseInSmallFields) {
  for (unsigned p : {2U, 3U, 5U, 7U, 13U}) {
    for (unsigned a = 1; a < p; ++a) {
      const FieldElement x(a, static_cast<std::uint8_t>(p));
      EXPECT_EQ((x * inverse(x)).value(), 1);
    }
  }
}

TEST(Field, PowKnownValues) {
  EXPECT_EQ(pow(FieldElement(0), 0).value(), 1);
  EXPECT_EQ(pow(FieldElement(0), 5).value(), 0);
  long naive = 1;
  for (int i = 0; i < 10; ++i) naive = naive * 2 % 251;
  EXPECT_EQ(naive, 20);
  EXPECT_EQ(pow(FieldElement(2), 10).value(), naive);
  for (int x = 0; x < 251; ++x) EXPECT_EQ(pow(FieldElement(x), 0).value(), 1);
  for (int x = 1; x < 251; ++x) EXPECT_EQ(pow(FieldElement(x), 250).value(), 1);
}

TEST(Field, PowMatchesRepeatedMultiplication) {
  auto rng = gelgamal::RandomSource::deterministic(7);
  for (int t = 0; t < 200; ++t) {
    const FieldElement a = rng.uniform_residue(251);
    const auto e = rng.uniform_below(600);
    long acc = 1;
    for (std::uint64_t i = 0; i < e; ++i) acc = acc * a.value() % 251;
    EXPECT_EQ(pow(a, e).value(), acc);
  }
  EXPECT_EQ(pow(FieldElement(3), ~std::uint64_t{0}), pow(FieldElement(3), ~std::uint64_t{0} % 250));
}

TEST(Field, AxiomsAgainstWideIntegers) {
  auto rng = gelgamal::RandomSource::deterministic(11);
  for (int t = 0; t < 20000; ++t) {
    const long a = static_cast<long>(rng.uniform_below(251));
    const long b = static_cast<long>(rng.uniform_below(251));
    const long c = static_cast<long>(rng.uniform_below(251));
    const FieldElement fa(a), fb(b), fc(c);
    EXPECT_EQ((fa + fb).value(), (a + b) % 251);
    EXPECT_EQ((fa - fb).value(), ((a - b) % 251 + 251) % 251);
    EXPECT_EQ((fa * fb).value(), a * b % 251);
    EXPECT_EQ((fa + fb) + fc, fa + (fb + fc));
    EXPECT_EQ(fa * (fb + fc), fa * fb + fa * fc);
    EXPECT_EQ(fa * fb, fb * fa);
  }
}

TEST(Field, BytePrimeTable) {
  int count = 0;
  for (unsigned p = 0; p < 256; ++p) {
    bool naive = p >= 2;
    for (unsigned q = 2; q * q <= p; ++q) naive = naive && p % q != 0;
    EXPECT_EQ(gelgamal::is_byte_prime(p), naive) << p;
    count += naive;
  }
  EXPECT_EQ(count, 54);
}
