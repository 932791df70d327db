#include <gtest/gtest.h>

#include <numbers>

#include "cfloer/discs.hpp"

using namespace cfloer;

namespace {

BlaschkeComponent one() { return BlaschkeComponent(0.0, {}); }
BlaschkeComponent z_to(int k) {
  std::vector<BlaschkeFactor> f(static_cast<std::size_t>(k), BlaschkeFactor(GaussianRational{0, 0}));
  return BlaschkeComponent(0.0, std::move(f));
}

void expect_near(Complex a, Complex b, double tol = 1e-12) { EXPECT_LT(std::abs(a - b), tol) << a << " vs " << b; }

}  // namespace

TEST(Discs, MakeValidAndInvalid) {
  EXPECT_NO_THROW(disc_make({one(), z_to(1), one()}));
  EXPECT_THROW(disc_make({z_to(1), z_to(1)}), DegenerateDisc);
  // A zero shared by only some components is a genuine point of P^n.
  EXPECT_NO_THROW(disc_make({z_to(1), z_to(1), one()}));
  EXPECT_THROW(disc_make({one()}), DomainError);
  EXPECT_THROW(BlaschkeFactor(Complex(1.0, 0.0)), DomainError);
  EXPECT_THROW(BlaschkeFactor(GaussianRational{Rational(3, 5), Rational(4, 5)}), DomainError);

  auto d = disc_make({z_to(1), BlaschkeComponent(0.0, {BlaschkeFactor(Complex(0.5, 0.0))}), one()});
  EXPECT_EQ(homotopy_class(d).mu, (std::vector<int>{1, 1, 0}));
  // Approximate zeros within tolerance of each other count as common.
  EXPECT_THROW(disc_make({BlaschkeComponent(0.0, {BlaschkeFactor(Complex(0.3, 0.0))}),
                          BlaschkeComponent(0.0, {BlaschkeFactor(Complex(0.3 + 1e-12, 0.0))})}),
               DegenerateDisc);
}

TEST(Discs, Evaluate) {
  auto b1 = standard_disc(1, 3);
  for (auto x : disc_eval(b1, 1.0)) expect_near(x, 1.0);
  auto at_i = disc_eval(b1, Complex(0, 1));
  expect_near(at_i[0], 1.0);
  expect_near(at_i[1], Complex(0, 1));
  expect_near(at_i[2], 1.0);
  EXPECT_THROW(disc_eval(b1, Complex(1.5, 0)), DomainError);

  DiscSampler s(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto d = s.disc(4, 4, false);
    for (int k = 0; k < 64; ++k)
      for (auto x : disc_eval(d, std::polar(1.0, 2 * std::numbers::pi * k / 64)))
        EXPECT_NEAR(std::abs(x), 1.0, 1e-9);
  }
}

TEST(Discs, MaslovIndex) {
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(maslov_index(standard_disc(i, 3)), 2);
  EXPECT_EQ(maslov_index(disc_make({one(), one(), one()})), 0);
  EXPECT_EQ(maslov_index(disc_make({z_to(2), one(), one()})), 4);
}

TEST(Discs, HomotopyClassBoundary) {
  EXPECT_EQ(homotopy_class(standard_disc(1, 3)).boundary(), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(homotopy_class(standard_disc(0, 3)).boundary(), (std::vector<int>{-1, -1, -1}));
  auto all = disc_make({BlaschkeComponent(0.0, {BlaschkeFactor(Complex(0.1, 0))}),
                        BlaschkeComponent(0.0, {BlaschkeFactor(Complex(0.2, 0))}),
                        BlaschkeComponent(0.0, {BlaschkeFactor(Complex(0.3, 0))})});
  EXPECT_EQ(homotopy_class(all).boundary(), (std::vector<int>{0, 0}));
  EXPECT_EQ(homotopy_class(disc_make({z_to(2), one(), one()})).boundary(), (std::vector<int>{-2, -2}));
}

TEST(Discs, BoundaryAdditiveUnderProduct) {
  DiscSampler s(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = s.disc(4, 3, false);
    BlaschkeDisc b = a;
    do b = s.disc(4, 3, false);
    while (b.rank() != a.rank());
    BlaschkeDisc p = a;
    try {
      p = disc_product(a, b);
    } catch (const DegenerateDisc&) {
      continue;
    }
    auto ba = homotopy_class(a).boundary(), bb = homotopy_class(b).boundary(), bp = homotopy_class(p).boundary();
    for (std::size_t j = 0; j < bp.size(); ++j) EXPECT_EQ(bp[j], ba[j] + bb[j]);
    EXPECT_EQ(maslov_index(p), maslov_index(a) + maslov_index(b));
  }
}

TEST(Discs, Psl2Action) {
  auto b1 = standard_disc(1, 2);
  auto same = psl2_act(b1, Moebius{});
  EXPECT_LT(disc_distance(b1, same), 1e-12);

  // Rotation z -> e^{i t} z: (w o phi^{-1})_1(z) = e^{-i t} z.
  const double t = 0.7;
  auto rot = psl2_act(b1, Moebius{t, 0.0});
  EXPECT_EQ(rot.component(1).degree(), 1);
  EXPECT_LT(std::abs(rot.component(1).factors()[0].alpha()), 1e-12);
  EXPECT_LT(std::abs(std::polar(1.0, rot.component(1).theta()) - std::polar(1.0, -t)), 1e-12);

  DiscSampler s(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = s.disc(4, 4, false);
    for (int k = 0; k < 20; ++k) {
      auto phi = s.moebius();
      auto e = psl2_act(d, phi);
      EXPECT_EQ(maslov_index(e), maslov_index(d));
      EXPECT_EQ(homotopy_class(e), homotopy_class(d));
      // Pointwise: e(phi(z)) = d(z) on the boundary.
      const Complex z = std::polar(1.0, 0.37 * k);
      auto lhs = disc_eval(e, phi(z));
      auto rhs = disc_eval(d, z);
      for (std::size_t i = 0; i < lhs.size(); ++i) ASSERT_LT(std::abs(lhs[i] - rhs[i]), 1e-9);
    }
  }
}

TEST(Discs, SolveThroughPoint) {
  auto d = solve_disc_through_point(1, {1.0, 1.0});
  EXPECT_LT(disc_distance(d, standard_disc(1, 2)), 1e-15);

  const double psi = 1.1;
  auto e = solve_disc_through_point(1, {std::polar(1.0, psi), 1.0});
  EXPECT_NEAR(e.component(1).theta(), psi, 1e-15);

  DiscSampler s(5);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> target;
        for (int j = 0; j < n; ++j) target.push_back(std::polar(1.0, 2 * std::numbers::pi * s.uniform()));
        auto disc = solve_disc_through_point(i, target);
        EXPECT_EQ(homotopy_class(disc).mu, HomotopyClass::beta(i, n).mu);
        auto x = disc_eval(disc, 1.0);
        for (int j = 1; j <= n; ++j) EXPECT_LT(std::abs(x[j] / x[0] - target[j - 1]), 1e-9);
      }
  EXPECT_THROW(solve_disc_through_point(0, {Complex(2, 0)}), DomainError);
  EXPECT_THROW(solve_disc_through_point(3, {1.0, 1.0}), IndexError);
}

TEST(Discs, JsonRoundTrip) {
  auto exact = disc_make({BlaschkeComponent::with_turn(Rational(1, 3), {BlaschkeFactor(GaussianRational{Rational(1, 2), 0})}),
                          z_to(1), one()});
  auto j = disc_to_json(exact);
  EXPECT_EQ(j["components"][0]["theta"], "1/3");
  EXPECT_EQ(j["components"][0]["zeros"][0]["re"], "1/2");
  auto back = disc_from_json(j);
  EXPECT_LT(disc_distance(exact, back), 1e-15);
  EXPECT_EQ(disc_to_json(back), j);

  DiscSampler s(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto d = s.disc(3, 3, false);
    auto r = disc_from_json(nlohmann::json::parse(disc_to_json(d).dump()));
    EXPECT_EQ(disc_distance(d, r), 0.0);
  }
  EXPECT_THROW(disc_from_json(nlohmann::json::parse(R"({"x":1})")), ParseError);
  EXPECT_THROW(disc_from_json(nlohmann::json::parse(R"({"components":[{"theta":true}]})")), ParseError);
}

TEST(Discs, SamplerDeterministic) {
  DiscSampler a(42), b(42);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(disc_to_json(a.disc(4, 4, true)), disc_to_json(b.disc(4, 4, true)));
  DiscSampler c(1);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(c.disc(4, 4, true).component(0).degree(), 0);
}
