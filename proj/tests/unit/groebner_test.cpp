#include <gtest/gtest.h>

#include <algorithm>

#include "../support/oracles.hpp"
#include "../support/random_poly.hpp"
#include "syzflip/error.hpp"
#include "syzflip/groebner.hpp"
#include "syzflip/hilbert.hpp"
#include "syzflip/parse.hpp"

namespace syzflip {
namespace {

using testing::Rng;

Ideal parse_ideal(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> polys;
  for (const char* g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(polys));
}

Ideal twisted_cubic(const RingPtr& ring) {
  return parse_ideal(ring, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
}

TEST(Groebner, LinearForms) {
  auto ring = Ring::make_indexed("x", 2);
  auto gb = groebner_basis(parse_ideal(ring, {"x0", "x0 + x1"}));
  ASSERT_EQ(gb.elements().size(), 2U);
  EXPECT_TRUE(gb.contains(parse_polynomial("x0", ring)));
  EXPECT_TRUE(gb.contains(parse_polynomial("x1", ring)));
}

TEST(Groebner, TwistedCubicMinorsAreABasis) {
  auto ring = Ring::make_indexed("x", 4);
  auto gb = groebner_basis(twisted_cubic(ring));
  ASSERT_EQ(gb.elements().size(), 3U);
  EXPECT_TRUE(testing::is_groebner_basis(gb.elements()));
  const auto minors = twisted_cubic(ring);
  for (const auto& g : minors.generators()) {
    const bool present = std::any_of(gb.elements().begin(), gb.elements().end(),
                                     [&](const Polynomial& e) { return e == g.monic(); });
    EXPECT_TRUE(present) << g.to_string();
  }
}

TEST(Groebner, PrincipalIdealIsMonicGenerator) {
  auto ring = Ring::make_indexed("x", 3);
  auto f = parse_polynomial("3*x0^2 - x1*x2 + 7*x2^2", ring);
  auto gb = groebner_basis(Ideal(ring, {f}));
  ASSERT_EQ(gb.elements().size(), 1U);
  EXPECT_EQ(gb.elements()[0], f.monic());
}

TEST(Groebner, NormalFormModuloTwistedCubic) {
  auto ring = Ring::make_indexed("x", 4);
  auto ideal = twisted_cubic(ring);
  EXPECT_EQ(normal_form(parse_polynomial("x1^2", ring), ideal), parse_polynomial("x0*x2", ring));
  EXPECT_EQ(normal_form(parse_polynomial("x0*x2", ring), ideal), parse_polynomial("x0*x2", ring));
  EXPECT_TRUE(normal_form(parse_polynomial("x0*x2 - x1^2", ring), ideal).is_zero());
}

TEST(Groebner, UnitIdeal) {
  auto ring = Ring::make_indexed("x", 2);
  auto gb = groebner_basis(parse_ideal(ring, {"x0*x1 - 1", "x0"}));
  EXPECT_TRUE(gb.is_unit());
}

TEST(Groebner, DegreeCapIsEnforced) {
  auto ring = Ring::make_indexed("x", 4);
  GroebnerOptions options;
  options.degree_cap = 2;
  EXPECT_THROW(groebner_basis(twisted_cubic(ring).in_ring(ring->with_order(MonomialOrder::lex())),
                              options),
               DegreeCapExceeded);
}

TEST(Groebner, EliminationImplicitizesCuspidalCubic) {
  auto ring = Ring::make({"s", "z", "w"});
  auto ideal = parse_ideal(ring, {"z - s^2", "w - s^3"});
  auto elim = eliminate(ideal, 1);
  ASSERT_EQ(elim.generators().size(), 1U);
  auto expected = parse_polynomial("w^2 - z^3", elim.ring());
  EXPECT_TRUE(equal(elim, Ideal(elim.ring(), {expected})));
}

TEST(Groebner, EliminatingEverythingFromAProductGivesZero) {
  auto ring = Ring::make({"x", "y"});
  auto elim = eliminate(parse_ideal(ring, {"x*y"}), 1);
  EXPECT_TRUE(elim.is_zero());
}

TEST(Groebner, QuotientAndSaturation) {
  auto ring = Ring::make_indexed("x", 3);
  auto ideal = parse_ideal(ring, {"x0^2*x1", "x0^3"});
  auto q = quotient(ideal, parse_ideal(ring, {"x0"}));
  EXPECT_TRUE(equal(q, parse_ideal(ring, {"x0*x1", "x0^2"})));
  auto sat = saturate(ideal, parse_ideal(ring, {"x0"}));
  EXPECT_TRUE(groebner_basis(sat).is_unit());
  // The irrelevant component of an embedded point disappears.
  auto line = parse_ideal(ring, {"x0^2", "x0*x1", "x0*x2"});
  EXPECT_TRUE(equal(saturate(line, Ideal::irrelevant(ring)), parse_ideal(ring, {"x0"})));
}

TEST(Groebner, IntersectionOfCoordinateLines) {
  auto ring = Ring::make_indexed("x", 3);
  std::vector<Ideal> parts{parse_ideal(ring, {"x0", "x1"}), parse_ideal(ring, {"x1", "x2"})};
  auto meet = intersect(parts);
  EXPECT_TRUE(equal(meet, parse_ideal(ring, {"x1", "x0*x2"})));
}

TEST(Groebner, KernelOfVeroneseMapIsDeterminantal) {
  auto ring = Ring::make_indexed("s", 2);
  std::vector<Polynomial> images{parse_polynomial("s0^2", ring), parse_polynomial("s0*s1", ring),
                                 parse_polynomial("s1^2", ring)};
  auto ker = kernel_of_map(images);
  ASSERT_EQ(ker.ring()->nvars(), 3U);
  EXPECT_TRUE(equal(ker, Ideal(ker.ring(), {parse_polynomial("t0*t2 - t1^2", ker.ring())})));
}

TEST(Groebner, KernelModuloAnIdeal) {
  // Linear forms vanishing on the conic: none.
  auto ring = Ring::make_indexed("x", 3);
  auto conic = parse_ideal(ring, {"x0*x2 - x1^2"});
  std::vector<Polynomial> images{parse_polynomial("x0", ring), parse_polynomial("x1", ring),
                                 parse_polynomial("x2", ring)};
  auto ker = kernel_of_map(images, &conic);
  ASSERT_EQ(ker.generators().size(), 1U);
  EXPECT_EQ(ker.generators()[0].degree(), 2);
}

TEST(Hilbert, TwistedCubic) {
  auto ring = Ring::make_indexed("x", 4);
  auto h = hilbert_data(twisted_cubic(ring));
  EXPECT_EQ(h.dimension, 1);
  EXPECT_EQ(h.degree, 3);
  for (long k = 0; k < 8; ++k) {
    EXPECT_EQ(h.hilbert_function(k), 3 * k + 1);
    EXPECT_EQ(h.hilbert_polynomial(k), 3 * k + 1);
  }
}

TEST(Hilbert, ZeroAndIrrelevantIdeals) {
  auto ring = Ring::make_indexed("x", 4);
  auto full = hilbert_data(Ideal(ring));
  EXPECT_EQ(full.dimension, 3);
  EXPECT_EQ(full.degree, 1);
  EXPECT_EQ(full.hilbert_function(2), 10);
  auto empty = hilbert_data(Ideal::irrelevant(ring));
  EXPECT_EQ(empty.dimension, -1);
  EXPECT_EQ(empty.hilbert_function(0), 1);
  EXPECT_EQ(empty.hilbert_function(1), 0);
}

TEST(Hilbert, BinomialPolynomialNegativeArgument) {
  EXPECT_EQ(binomial_polynomial(-1, 3), -1);
  EXPECT_EQ(binomial_polynomial(5, 2), 10);
  EXPECT_EQ(binomial(-1, 3), 0);
}

Ideal random_homogeneous_ideal(Rng& rng, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  const long count = rng.uniform(1, 3);
  while (static_cast<long>(gens.size()) < count) {
    auto f = testing::random_polynomial(rng, ring, 4, 3, true);
    if (!f.is_zero() && f.degree() > 0) gens.push_back(f);
  }
  return Ideal(ring, std::move(gens));
}

TEST(GroebnerProperty, BuchbergerCriterionHolds) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto ring = Ring::make_indexed("x", 3);
    auto gb = groebner_basis(random_homogeneous_ideal(rng, ring));
    EXPECT_TRUE(testing::is_groebner_basis(gb.elements())) << trial;
  }
}

TEST(GroebnerProperty, ReducedBasisIgnoresGeneratorOrder) {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto ring = Ring::make_indexed("x", 3);
    auto ideal = random_homogeneous_ideal(rng, ring);
    auto gens = ideal.generators();
    std::reverse(gens.begin(), gens.end());
    if (gens.size() > 1) gens.push_back(gens[0] + gens[1]);
    EXPECT_EQ(groebner_basis(ideal), groebner_basis(Ideal(ring, gens))) << trial;
  }
}

TEST(GroebnerProperty, MembershipAgreesWithGradedLinearAlgebra) {
  Rng rng(13);
  int members = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto ring = Ring::make_indexed("x", 3);
    auto ideal = random_homogeneous_ideal(rng, ring);
    const int d = static_cast<int>(rng.uniform(3, 6));
    Polynomial f(ring);
    if (trial % 2 == 0) {
      for (const auto& g : ideal.generators()) {
        if (g.degree() > d) continue;
        auto c = testing::random_polynomial(rng, ring, 3, d - g.degree(), true);
        f += (c.is_zero() || c.degree() != d - g.degree()) ? Polynomial(ring) : c * g;
      }
    } else {
      f = testing::random_polynomial(rng, ring, 4, d, true);
    }
    const bool expected = testing::graded_member(f, ideal.generators());
    members += expected ? 1 : 0;
    EXPECT_EQ(contains(ideal, f), expected) << trial << " " << f.to_string();
  }
  EXPECT_GT(members, 20);
}

TEST(GroebnerProperty, HilbertDataMatchesStandardMonomialCount) {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    auto ring = Ring::make_indexed("x", 4);
    auto ideal = random_homogeneous_ideal(rng, ring);
    auto gb = groebner_basis(ideal);
    auto leads = gb.leading_monomials();
    auto h = hilbert_data(ideal);
    for (int k = 0; k <= 6; ++k) {
      EXPECT_EQ(h.hilbert_function(k), testing::standard_monomial_count(leads, 4, k)) << trial;
    }
    EXPECT_EQ(h.affine_dimension, testing::monomial_krull_dimension(leads, 4)) << trial;
  }
}

TEST(GroebnerProperty, EliminationKillsParametrization) {
  // Random rational curves t -> (f0(t), f1(t), f2(t)) in the affine plane
  // of the last variables: the eliminant vanishes on them.
  Rng rng(15);
  for (int trial = 0; trial < 15; ++trial) {
    auto ring = Ring::make({"t", "u", "v"});
    auto param = Ring::make({"t"});
    auto f = testing::random_polynomial(rng, param, 3, 3);
    auto g = testing::random_polynomial(rng, param, 3, 3);
    if (f.degree() < 1 || g.degree() < 1) continue;
    std::vector<Polynomial> to_big{Polynomial::variable(ring, 0)};
    auto ideal = Ideal(ring, {Polynomial::variable(ring, 1) - f.substitute(to_big),
                              Polynomial::variable(ring, 2) - g.substitute(to_big)});
    auto elim = eliminate(ideal, 1);
    ASSERT_FALSE(elim.is_zero());
    std::vector<Polynomial> back{f, g};
    for (const auto& h : elim.generators()) EXPECT_TRUE(h.substitute(back).is_zero()) << trial;
  }
}

}  // namespace
}  // namespace syzflip
