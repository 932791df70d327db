#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "cfloer/scalars.hpp"

using namespace cfloer;

namespace {

Cyclotomic random_cyclotomic(std::mt19937_64& rng, unsigned m) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(m);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Cyclotomic::from_powers(m, c);
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng) {
  return random_cyclotomic(rng, std::uniform_int_distribution<unsigned>(1, 12)(rng));
}

}  // namespace

TEST(RootOfUnity, IdentityAndMinusOne) {
  EXPECT_EQ(root_of_unity(0, 3), Cyclotomic(1));
  EXPECT_EQ(root_of_unity(1, 2), Cyclotomic(-1));
  EXPECT_TRUE(root_of_unity(1, 2).is_rational());
}

TEST(RootOfUnity, CubeRootSatisfiesMinimalPolynomial) {
  const auto z = root_of_unity(1, 3);
  EXPECT_TRUE((z * z + z + Cyclotomic(1)).is_zero());
  EXPECT_FALSE((z - Cyclotomic(1)).is_zero());
}

TEST(RootOfUnity, InvalidOrder) {
  EXPECT_THROW(root_of_unity(1, 0), InvalidOrder);
  EXPECT_THROW(root_of_unity(1, -3), InvalidOrder);
}

TEST(RootOfUnity, PowersReturnToOne) {
  for (long long q = 1; q <= 24; ++q)
    for (long long p = 0; p < q; ++p) {
      const auto z = root_of_unity(p, q);
      EXPECT_EQ(z.pow(q), Cyclotomic(1)) << p << "/" << q;
      // Numeric cross-check against the polar form.
      const auto expected = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q));
      EXPECT_NEAR(std::abs(z.to_complex() - expected), 0.0, 1e-12);
    }
}

TEST(RootOfUnity, NegativeAndReducedExponents) {
  EXPECT_EQ(root_of_unity(-1, 3), root_of_unity(2, 3));
  EXPECT_EQ(root_of_unity(2, 6), root_of_unity(1, 3));
  EXPECT_EQ(root_of_unity(7, 4), root_of_unity(3, 4));
}

TEST(CyclotomicPolynomial, KnownValues) {
  EXPECT_EQ(detail::cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(detail::cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(detail::cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(detail::cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(detail::euler_phi(7), 6u);
  EXPECT_EQ(detail::euler_phi(24), 8u);
}

TEST(ScalarIsZero, Examples) {
  const auto z3 = root_of_unity(1, 3);
  EXPECT_TRUE(is_zero(Cyclotomic(1) + z3 + z3 * z3));
  EXPECT_TRUE(is_zero(ApproxComplex(1e-12, 0), 1e-9));
  EXPECT_FALSE(is_zero(ApproxComplex(1e-6, 0), 1e-9));
  const auto z4 = root_of_unity(1, 4);
  EXPECT_TRUE(is_zero(z4 - z4));
}

TEST(Cyclotomic, CanonicalReductionIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_cyclotomic(rng);
    const auto again = Cyclotomic::from_powers(x.order(), x.coeffs());
    EXPECT_EQ(again.coeffs(), x.coeffs());
    EXPECT_EQ(again.order(), x.order());
  }
}

TEST(Cyclotomic, MixedOrdersLiftToLcm) {
  const auto i = root_of_unity(1, 4);
  const auto w = root_of_unity(1, 3);
  const auto s = i * w;  // zeta_12^7
  EXPECT_EQ(s, root_of_unity(7, 12));
  EXPECT_EQ(s.order(), 12u);
}

TEST(Cyclotomic, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    // One field Q(zeta_m), m <= 12, per triple; mixed orders are covered below.
    const unsigned m = std::uniform_int_distribution<unsigned>(1, 12)(rng);
    const auto a = random_cyclotomic(rng, m), b = random_cyclotomic(rng, m), c = random_cyclotomic(rng, m);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
    }
    // Independent numeric check of the product.
    EXPECT_NEAR(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 0.0,
                1e-9 * (1.0 + std::abs(a.to_complex()) * std::abs(b.to_complex())));
  }
}

TEST(Cyclotomic, FieldAxiomsAcrossOrders) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_cyclotomic(rng), b = random_cyclotomic(rng), c = random_cyclotomic(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Cyclotomic, InverseOfZeroThrows) { EXPECT_THROW(Cyclotomic(0).inverse(), DomainError); }

TEST(Cyclotomic, ConjugateIsInverseOnRootsOfUnity) {
  for (long long q = 1; q <= 12; ++q)
    for (long long p = 0; p < q; ++p) {
      const auto z = root_of_unity(p, q);
      EXPECT_EQ(z.conj(), z.inverse());
    }
}

TEST(Cyclotomic, StringForm) {
  EXPECT_EQ(Cyclotomic(0).str(), "0");
  EXPECT_EQ(Cyclotomic(Rational(-1, 2)).str(), "-1/2");
  EXPECT_EQ((Cyclotomic(1) - root_of_unity(1, 5) * Cyclotomic(2)).str(), "1 - 2*zeta5");
}

TEST(Novikov, Normalize) {
  using N = NovikovElement<Cyclotomic>;
  auto two = novikov_normalize<Cyclotomic>({{Cyclotomic(1), 1}, {Cyclotomic(1), 1}});
  ASSERT_EQ(two.terms().size(), 1u);
  EXPECT_EQ(two.terms()[0].coeff, Cyclotomic(2));
  EXPECT_EQ(two.terms()[0].exponent, 1);

  EXPECT_TRUE(novikov_normalize<Cyclotomic>({{Cyclotomic(0), 2}}).empty());

  auto e1 = novikov_normalize<Cyclotomic>({{Cyclotomic(1), 0}, {Cyclotomic(1), 1}, {Cyclotomic(-1), 0}});
  ASSERT_EQ(e1.terms().size(), 1u);
  EXPECT_EQ(e1.terms()[0].exponent, 1);
  EXPECT_EQ(e1.str(), "1*e^1");

  EXPECT_THROW(N::monomial(Cyclotomic(1), -1), DomainError);
  EXPECT_EQ(N::degree(1), 2);
}

TEST(Novikov, SortedUniqueExponents) {
  auto x = novikov_normalize<ApproxComplex>({{ApproxComplex(1), 3}, {ApproxComplex(2), 0}, {ApproxComplex(1), 3}});
  ASSERT_EQ(x.terms().size(), 2u);
  EXPECT_EQ(x.terms()[0].exponent, 0);
  EXPECT_EQ(x.terms()[1].exponent, 3);
  EXPECT_EQ(x.str(), "(2,0)*e^0 + (2,0)*e^3");
}

TEST(HolonomyText, ExactAndApprox) {
  auto h = parse_holonomy("1/3");
  ASSERT_TRUE(h.is_exact());
  EXPECT_EQ(h.exact(), root_of_unity(1, 3));
  EXPECT_EQ(h.str(), "1/3");
  EXPECT_EQ(parse_holonomy("4/3").str(), "1/3");
  EXPECT_EQ(parse_holonomy("0/1").str(), "0/1");

  auto a = parse_holonomy("0,1");
  ASSERT_FALSE(a.is_exact());
  EXPECT_NEAR(a.approx().im(), 1.0, 0.0);
  EXPECT_THROW(parse_holonomy("2,0"), DomainError);
  EXPECT_THROW(parse_holonomy("abc"), ParseError);
  EXPECT_THROW(parse_holonomy("1/0"), ParseError);
}

TEST(HolonomyText, Lists) {
  auto l = parse_holonomy_list("1/3,1/3");
  ASSERT_EQ(l.size(), 2u);
  EXPECT_TRUE(l[0].is_exact() && l[1].is_exact());

  auto m = parse_holonomy_list("1,0;0,-1;1/2");
  ASSERT_EQ(m.size(), 3u);
  EXPECT_FALSE(m[0].is_exact());
  EXPECT_FALSE(m[1].is_exact());
  EXPECT_TRUE(m[2].is_exact());
  EXPECT_EQ(m[2].exact(), Cyclotomic(-1));

  EXPECT_THROW(parse_holonomy_list("1/3,"), ParseError);
  EXPECT_THROW(parse_holonomy_list("0.5"), ParseError);
}
