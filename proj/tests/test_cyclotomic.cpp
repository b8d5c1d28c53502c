#include "g2spectra/cyclotomic.hpp"
#include "g2spectra/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace g2s;

namespace {

Cyclotomic E(long n, long k = 1) { return Cyclotomic::root_of_unity(k, n); }

Cyclotomic w() { return E(7, 1) + E(7, 2) + E(7, 4); }

// Test-side oracle: evaluate sum c_k e^(2 pi i k/n) directly in floating point.
std::complex<double> direct(long n, const std::vector<std::pair<long, double>>& terms) {
  std::complex<double> z = 0;
  for (auto [k, c] : terms) z += c * std::polar(1.0, 2 * M_PI * k / n);
  return z;
}

Cyclotomic random_element(std::mt19937& rng, long n) {
  std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), terms(1, 4);
  std::uniform_int_distribution<long> exp(0, n - 1);
  Cyclotomic a;
  int t = terms(rng);
  for (int i = 0; i < t; ++i) a += Cyclotomic(Rational(coef(rng), den(rng))) * E(n, exp(rng));
  return a;
}

}  // namespace

TEST(Cyclotomic, RootOfUnityBasics) {
  EXPECT_EQ(E(1, 0), Cyclotomic(1L));
  EXPECT_EQ(E(1, 0).conductor(), 1);
  Cyclotomic s;
  for (long k = 0; k < 7; ++k) s += E(7, k);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(E(12, 13), E(12, 1));
  EXPECT_EQ(E(6, -1), E(6, 5));
}

TEST(Cyclotomic, SumOfQuadraticResiduesIsW) {
  // (-1 + i sqrt 7)/2 compared against a floating oracle.
  auto z = w().to_complex();
  EXPECT_NEAR(z.real(), -0.5, 1e-13);
  EXPECT_NEAR(z.imag(), std::sqrt(7.0) / 2, 1e-13);
  // (w + 1/2)^2 = -7/4 exactly.
  Cyclotomic t = w() + Cyclotomic(Rational(1, 2));
  EXPECT_EQ(t * t, Cyclotomic(Rational(-7, 4)));
}

TEST(Cyclotomic, NormOfW) {
  // (-1 + i sqrt7)(-1 - i sqrt7)/4 = (1 + 7)/4 = 2
  EXPECT_EQ(w() * w().conj(), Cyclotomic(2L));
}

TEST(Cyclotomic, ConjugateOfW) {
  Cyclotomic wb = w().conj();
  EXPECT_EQ(wb, E(7, 3) + E(7, 5) + E(7, 6));
  EXPECT_EQ(w() + wb, Cyclotomic(-1L));
  EXPECT_EQ(Cyclotomic(1L).conj(), Cyclotomic(1L));
  EXPECT_EQ(wb.conj(), w());
}

TEST(Cyclotomic, CubeOfOmega) {
  EXPECT_EQ(E(3) * E(3) * E(3), Cyclotomic(1L));
  EXPECT_EQ(w() + Cyclotomic(), w());
}

TEST(Cyclotomic, CanonicalizationSoundness) {
  EXPECT_EQ(E(6), -(E(3) * E(3)));
  EXPECT_EQ(E(4) * E(4), Cyclotomic(-1L));
  EXPECT_EQ((E(4) * E(4)).conductor(), 1);
  EXPECT_EQ(E(6).conductor(), 3);
  EXPECT_EQ(E(10).conductor(), 5);
  // sqrt 2 written two ways
  EXPECT_EQ(E(8) + E(8, 7), -(E(8, 3) + E(8, 5)));
  EXPECT_EQ((E(8) + E(8, 7)).conductor(), 8);
  // i sqrt 3 has conductor 3, sqrt 3 has conductor 12
  EXPECT_EQ((E(3) - E(3, 2)).conductor(), 3);
  EXPECT_EQ(((E(3) - E(3, 2)) * E(4)).conductor(), 12);
  // an element of Q(zeta_7) built at level 21 descends
  Cyclotomic a = E(21, 3) * E(21, 6) + E(21, 9);
  EXPECT_EQ(a.conductor(), 7);
  EXPECT_EQ(a, E(7, 3) + E(7, 3));
}

TEST(Cyclotomic, ToFloat) {
  auto one = Cyclotomic(1L).to_complex();
  EXPECT_EQ(one, std::complex<double>(1.0, 0.0));
  auto i = E(4).to_complex();
  EXPECT_NEAR(i.real(), 0.0, 1e-15);
  EXPECT_NEAR(i.imag(), 1.0, 1e-15);
  auto z = w().to_complex();
  EXPECT_NEAR(z.imag(), 1.3228756555322952, 1e-12);
}

TEST(Cyclotomic, RealityAndRationality) {
  EXPECT_FALSE(w().is_real());
  Cyclotomic p = E(9, 2) + E(9, 7), q = E(9, 4) + E(9, 5);
  EXPECT_TRUE((p + q).is_real());
  EXPECT_NEAR((p + q).to_complex().real(), 2 * std::cos(4 * M_PI / 9) + 2 * std::cos(8 * M_PI / 9),
              1e-13);
  ASSERT_TRUE(Cyclotomic(7L).as_rational());
  EXPECT_EQ(*Cyclotomic(7L).as_rational(), Rational(7));
  EXPECT_FALSE(w().as_rational());
}

TEST(Cyclotomic, DivisionByZeroIsDistinct) {
  EXPECT_THROW(w() / Cyclotomic(), DivisionByZero);
  EXPECT_THROW((E(3) + E(3, 2) + Cyclotomic(1L)).inverse(), DivisionByZero);
}

TEST(Cyclotomic, ConductorCap) {
  EXPECT_THROW(E(100003), ConductorTooLarge);
  EXPECT_THROW(E(99991) * E(97), ConductorTooLarge);
}

TEST(Cyclotomic, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(20240601);
  const long levels[] = {1, 3, 4, 6, 7, 12, 14, 21, 28, 42, 84};
  std::uniform_int_distribution<int> pick(0, std::size(levels) - 1);
  for (int it = 0; it < 150; ++it) {
    Cyclotomic a = random_element(rng, levels[pick(rng)]);
    Cyclotomic b = random_element(rng, levels[pick(rng)]);
    Cyclotomic c = random_element(rng, levels[pick(rng)]);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1L));
    EXPECT_LE(((a + b) * c).conductor(), 84);
  }
}

TEST(Cyclotomic, FloatAgreement) {
  std::mt19937 rng(7);
  const long levels[] = {3, 5, 7, 8, 9, 12, 13, 20, 36};
  std::uniform_int_distribution<int> pick(0, std::size(levels) - 1);
  for (int it = 0; it < 100; ++it) {
    Cyclotomic a = random_element(rng, levels[pick(rng)]);
    Cyclotomic b = random_element(rng, levels[pick(rng)]);
    auto fa = a.to_complex(), fb = b.to_complex();
    EXPECT_LT(std::abs((a + b).to_complex() - (fa + fb)), 1e-9);
    EXPECT_LT(std::abs((a - b).to_complex() - (fa - fb)), 1e-9);
    EXPECT_LT(std::abs((a * b).to_complex() - (fa * fb)), 1e-9);
    if (!b.is_zero()) EXPECT_LT(std::abs((a / b).to_complex() - (fa / fb)), 1e-9 * (1 + std::abs(fa / fb)));
  }
}

TEST(Cyclotomic, FloatMatchesDirectSum) {
  Cyclotomic a = Cyclotomic(Rational(3, 2)) * E(36, 5) - E(36, 11) + Cyclotomic(Rational(1, 3)) * E(36, 30);
  auto oracle = direct(36, {{5, 1.5}, {11, -1.0}, {30, 1.0 / 3}});
  EXPECT_LT(std::abs(a.to_complex() - oracle), 1e-12);
}

TEST(Cyclotomic, Parse) {
  EXPECT_EQ(parse_cyclotomic("E(7)+E(7)^2+E(7)^4"), w());
  EXPECT_EQ(parse_cyclotomic("-1/2*E(1)"), Cyclotomic(Rational(-1, 2)));
  EXPECT_EQ(parse_cyclotomic(" conj( E(7) + E(7)^2 + E(7)^4 ) "), w().conj());
  EXPECT_EQ(parse_cyclotomic("-1-2*E(4)"), Cyclotomic(-1L) - Cyclotomic(2L) * E(4));
  EXPECT_EQ(parse_cyclotomic("3"), Cyclotomic(3L));
  EXPECT_EQ(parse_cyclotomic("E(12)^-1"), E(12, 11));
  EXPECT_THROW(parse_cyclotomic("E(7"), ParseError);
  EXPECT_THROW(parse_cyclotomic("1/0"), ParseError);
  EXPECT_THROW(parse_cyclotomic("E(7)+x"), ParseError);
}

TEST(Cyclotomic, StringRoundTrip) {
  std::mt19937 rng(99);
  const long levels[] = {1, 3, 4, 7, 8, 9, 12, 13, 15, 28};
  std::uniform_int_distribution<int> pick(0, std::size(levels) - 1);
  for (int it = 0; it < 60; ++it) {
    Cyclotomic a = random_element(rng, levels[pick(rng)]);
    EXPECT_EQ(parse_cyclotomic(a.str()), a) << a.str();
  }
}

TEST(Cyclotomic, TrigHelpers) {
  EXPECT_EQ(two_cos(Rational(0)), Cyclotomic(2L));
  EXPECT_EQ(two_cos(Rational(1, 6)), Cyclotomic(1L));
  EXPECT_EQ(two_sin(Rational(1, 4)), Cyclotomic(2L));
  EXPECT_EQ(two_sin(Rational(1, 12)), Cyclotomic(1L));
  EXPECT_NEAR(two_sin(Rational(1, 36)).to_complex().real(), 2 * std::sin(M_PI / 18), 1e-13);
  EXPECT_TRUE(two_sin(Rational(1, 36)).is_real());
}
