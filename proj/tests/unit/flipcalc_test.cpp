#include <gtest/gtest.h>

#include <array>

#include "syzflip/cohomology.hpp"
#include "syzflip/corpus.hpp"
#include "syzflip/error.hpp"
#include "syzflip/flipcalc.hpp"
#include "syzflip/random.hpp"

namespace syzflip {
namespace {

const Scalar n = Scalar::symbol(Symbol::N);
const Scalar r = Scalar::symbol(Symbol::R);
const Scalar k = Scalar::symbol(Symbol::K);

DivisorClass tilde(Scalar a, Scalar b, Scalar c) { return DivisorClass(Space::M2tilde, {a, b, c}); }

template <typename F>
void expect_code(F&& f, const std::string& code) {
  try {
    f();
    FAIL() << "expected " << code;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code);
  }
}

// Both sides of the rewrite expanded by hand in plain rationals.
std::pair<std::array<mpq_class, 3>, std::array<mpq_class, 3>> kv_oracle(long nv, long rv, long kv) {
  const mpq_class nn(nv), rr(rv), kk(kv);
  const std::array<mpq_class, 3> b{2 * kk - 1, -kk, -2};
  const std::array<mpq_class, 3> canonical{-nn - 1, nn - rr - 1, nn - 2 * rr - 2};
  const mpq_class m = nn - 2 * rr;
  const mpq_class alpha = (kk + nn - rr - 1) / m;
  return {{b[0] - canonical[0], b[1] - canonical[1], b[2] - canonical[2]},
          {(2 * alpha - 1) * m + 2, -alpha * m, -m}};
}

TEST(ClassArith, Examples) {
  const DivisorClass a(Space::BlownUpPn, {2, -1});
  const DivisorClass b(Space::BlownUpPn, {1, 0});
  EXPECT_EQ(a + b, DivisorClass(Space::BlownUpPn, {3, -1}));
  const DivisorClass scaled = scale(tilde(2 * k - 1, -k, -1), n - 2 * r);
  EXPECT_EQ(scaled, tilde((2 * k - 1) * (n - 2 * r), -k * (n - 2 * r), -(n - 2 * r)));
  expect_code([&] { return a + tilde(0, 0, 0); }, "space_mismatch");
  expect_code([] { return DivisorClass(Space::M2, {1, 2, 3}); }, "coefficient_count");
}

TEST(Scalar, Formatting) {
  EXPECT_EQ((n - 2 * r - 2).to_string(), "n-2r-2");
  EXPECT_EQ((-n - 1).display(), "−n−1");
  EXPECT_EQ(Scalar(mpq_class(-1, 2)).to_string(), "-1/2");
  EXPECT_EQ(((k + n - r - 1) / (n - 2 * r)).to_string(), "(n-r+k-1)/(n-2r)");
  EXPECT_EQ(((n - 2 * r) * k / (n - 2 * r)).to_string(), "k");
  EXPECT_TRUE((n - r).is_affine());
  EXPECT_FALSE((n * r).is_affine());
}

TEST(Scalar, FieldAxiomsAtRandomPoints) {
  SeededRng rng(5);
  auto affine = [&] {
    return Scalar(rng.uniform(-3, 3)) * n + Scalar(rng.uniform(-3, 3)) * r + Scalar(rng.uniform(-3, 3)) * k +
           Scalar(rng.uniform(-5, 5));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = affine();
    const Scalar b = affine();
    Scalar c = affine();
    if (c.is_zero()) c = 1;
    const Scalar q = a / c;
    EXPECT_EQ((q + b) - b, q);
    EXPECT_EQ(q * c, a);
    EXPECT_EQ((a + b) * q, a * q + b * q);
    const mpq_class pn(rng.uniform(-20, 20)), pr(rng.uniform(-20, 20)), pk(rng.uniform(-20, 20));
    if (c.evaluate(pn, pr, pk) == 0) continue;
    EXPECT_EQ((q * b).evaluate(pn, pr, pk), q.evaluate(pn, pr, pk) * b.evaluate(pn, pr, pk));
    EXPECT_EQ((q - b).evaluate(pn, pr, pk), q.evaluate(pn, pr, pk) - b.evaluate(pn, pr, pk));
  }
  expect_code([] { return Scalar(1) / Scalar(0); }, "division_by_zero");
  expect_code([] { return (Scalar(1) / (n - 2 * r)).evaluate(4, 2, 0); }, "pole");
}

TEST(CanonicalClass, Examples) {
  EXPECT_EQ(canonical_class(Space::M2tilde).display(), "O(−n−1, n−r−1, n−2r−2)");
  EXPECT_EQ(canonical_class(Space::BlownUpPn, 3, 1), DivisorClass(Space::BlownUpPn, {-4, 1}));
  const DivisorClass boundary = canonical_class(Space::M2tilde, 2 * r + 1, r);
  EXPECT_EQ(boundary[2], Scalar(-1));
  EXPECT_FALSE(codimension_assumption(7, 3));
  EXPECT_TRUE(codimension_assumption(7, 2));
  EXPECT_TRUE(codimension_assumption(n, r));
  expect_code([] { return canonical_class(Space::M2); }, "invalid_space");
}

TEST(LkClass, Examples) {
  EXPECT_EQ(lk_class(2), tilde(3, -2, -1));
  EXPECT_EQ(lk_class(mpq_class(1, 2)), tilde(0, mpq_class(-1, 2), -1));
  EXPECT_EQ(lk_class().to_string(), "O(2k-1, -k, -1)");
}

TEST(KvRewrite, Symbolic) {
  const KvRewrite kv = kv_rewrite(kv_base());
  EXPECT_TRUE(kv.holds);
  EXPECT_TRUE(verify_kv_rewrite());
  EXPECT_EQ(kv.alpha, (k + n - r - 1) / (n - 2 * r));
  EXPECT_EQ(kv.lhs, tilde(2 * k + n, -k - n + r + 1, -n + 2 * r));
  EXPECT_EQ(kv.rhs, kv.lhs);
  EXPECT_FALSE(verify_kv_rewrite(tilde(2 * k, -k, -2)));
  EXPECT_FALSE(verify_kv_rewrite(tilde(2 * k - 1, -k, -1)));
}

TEST(KvRewrite, NumericSpotCheck) {
  const KvRewrite kv = kv_rewrite(kv_base(5), 7, 1, 5);
  EXPECT_TRUE(kv.holds);
  EXPECT_EQ(kv.lhs, tilde(17, -10, -5));
  EXPECT_EQ(kv.alpha, Scalar(2));
}

TEST(KvRewrite, IntegerGridAgainstHandExpansion) {
  const KvRewrite symbolic = kv_rewrite(kv_base());
  int checked = 0;
  for (long rv = 1; 2 * rv + 3 <= 12; ++rv) {
    for (long nv = 2 * rv + 3; nv <= 12; ++nv) {
      for (long kv = 2; kv <= 10; ++kv) {
        const KvRewrite numeric = kv_rewrite(kv_base(kv), nv, rv, kv);
        EXPECT_TRUE(numeric.holds) << nv << " " << rv << " " << kv;
        const auto [lhs, rhs] = kv_oracle(nv, rv, kv);
        for (std::size_t i = 0; i < 3; ++i) {
          EXPECT_EQ(numeric.lhs[i], Scalar(lhs[i]));
          EXPECT_EQ(numeric.rhs[i], Scalar(rhs[i]));
          EXPECT_EQ(symbolic.rhs[i].evaluate(nv, rv, kv), rhs[i]);
        }
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 9 * (8 + 6 + 4 + 2));
}

TEST(KvRewrite, DegenerateCodimension) {
  expect_code([] { return kv_rewrite(kv_base(), 2 * r, r); }, "degenerate");
}

TEST(PullbackH, Examples) {
  EXPECT_EQ(pullback_h(DivisorClass(Space::M2, {3, -2})), tilde(3, -2, -1));
  EXPECT_EQ(pullback_h(DivisorClass(Space::M2, {3, -2})), lk_class(2));
  EXPECT_EQ(pullback_h(DivisorClass(Space::M2, {2, -1})), tilde(2, -1, 0));
  EXPECT_EQ(pullback_h(DivisorClass::zero(Space::M2)), DivisorClass::zero(Space::M2tilde));
  EXPECT_EQ(pullback_h(DivisorClass(Space::M2, {2 * k - 1, -k})), lk_class());
  expect_code([] { return pullback_h(lk_class()); }, "space_mismatch");
}

TEST(PullbackH, Notation) {
  EXPECT_EQ(pullback_statement(DivisorClass(Space::M2, {3, -2})),
            "h*O_{M₂}(3H−2E) = O_{M̃₂}(3H−2E₁−E₂)");
  EXPECT_EQ(tilde(2, 0, 1).notation(), "2H+E₂");
  EXPECT_EQ(DivisorClass::zero(Space::M2).sheaf(), "O_{M₂}(0)");
  EXPECT_EQ(lk_class().notation(), "(2k−1)H−kE₁−E₂");
}

TEST(PullbackH, BoundaryRaysAreDistinct) {
  const DivisorClass f = pullback_h(DivisorClass(Space::M2, {2, -1}));
  for (long kv = 2; kv <= 50; ++kv) {
    const DivisorClass g = pullback_h(DivisorClass(Space::M2, {2 * kv - 1, -kv}));
    EXPECT_FALSE(f.proportional_to(g)) << kv;
    EXPECT_FALSE(g.proportional_to(f)) << kv;
  }
  EXPECT_FALSE(f.proportional_to(lk_class()));
  EXPECT_TRUE(lk_class(3).proportional_to(scale(lk_class(3), mpq_class(5, 7))));
}

TEST(KvRewrite, AdjunctionCoefficients) {
  const DivisorClass b_minus_k = kv_base() - canonical_class(Space::M2tilde);
  EXPECT_EQ(b_minus_k, tilde(2 * k + n, -k - n + r + 1, -n + 2 * r));
}

TEST(Threshold, Examples) {
  const ThresholdFormula little = threshold(ThresholdVariant::Little, {2, 2, 1, 3, 1});
  EXPECT_EQ(little.bound, Scalar(0));
  EXPECT_EQ(little.statement(), "k >= 0");
  EXPECT_TRUE(little.admits(0));
  EXPECT_FALSE(little.admits(-1));

  const ThresholdFormula second = threshold(ThresholdVariant::Second, {2, 3, 2, 4, 1});
  EXPECT_EQ(second.bound, Scalar(0));
  EXPECT_EQ(second.statement(), "a > 0; twist 3");
  EXPECT_TRUE(second.admits(2));
  EXPECT_FALSE(second.admits(0));

  const ThresholdFormula big = threshold(ThresholdVariant::Veronese, {2, 3, 2, 5, 2});
  EXPECT_EQ(big.bound, Scalar(0));
  EXPECT_EQ(big.statement(), "k > 0");
  EXPECT_FALSE(big.admits(0));

  const ThresholdFormula symbolic = threshold(ThresholdVariant::Little, {2, n - r, k, n, r});
  EXPECT_EQ(symbolic.bound, 2 * (n - r + k - 1) - (n + 1));
  expect_code([&] { return symbolic.admits(3); }, "symbolic_bound");
  expect_code([] { return parse_threshold_variant("third"); }, "unknown_variant");
  EXPECT_EQ(parse_threshold_variant("second"), ThresholdVariant::Second);
}

TEST(Threshold, AgreesWithScanBounds) {
  for (int d : {3, 4}) {
    const Ideal x = rational_normal_curve(d).ideal;
    const int nv = d;
    const std::vector<int> a_values{1, 2};
    const VanishingScan scan = vanishing_scan(x, 2, a_values, 0);
    for (int a : a_values) {
      const ThresholdFormula f = threshold(ThresholdVariant::Little, {2, nv - 1, a, nv, 1});
      EXPECT_EQ(Scalar(scan.bounds.at(a)), f.bound);
      EXPECT_TRUE(f.admits(scan.bounds.at(a)));
      EXPECT_FALSE(f.admits(scan.bounds.at(a) - 1));
    }
  }
  const VanishingScan second = vanishing_scan(rational_normal_curve(4).ideal, 2, std::vector<int>{1, 2}, 0,
                                              VanishingVariant::Second);
  for (int a : {1, 2}) {
    const ThresholdFormula f = threshold(ThresholdVariant::Second, {2, 3, a, 4, 1});
    EXPECT_EQ(second.hypothesis.at(a), f.admits(a));
    EXPECT_EQ(Scalar(second.bounds.at(a)), *f.twist);
  }
}

}  // namespace
}  // namespace syzflip
