#include "wmgroups/dsl.hpp"
#include "wmgroups/group.hpp"
#include "wmgroups/properties.hpp"

#include <gtest/gtest.h>

using namespace wm;

namespace {

Group theta_z() { return make_theta(make_integers(), props::roomy_limits()); }

Element word(const GroupDesc& g, const std::string& text) { return parse_element(g, text); }

}  // namespace

TEST(Theta, ConjugationByTAppliesPhi) {
  const Group c = theta_z();
  const CElement t = make_t(*c);
  for (std::uint32_t level = 0; level <= 3; ++level) {
    Rng rng(100 + level);
    for (int k = 0; k < 20; ++k) {
      const WElement w = make_w(*c, level, random_element(c->w_level(level), rng));
      const CElement lhs = c_mul(*c, c_mul(*c, t, c_from_w(*c, w)), c_inv(*c, t));
      EXPECT_EQ(lhs, c_from_w(*c, phi(*c, w)));
    }
  }
}

TEST(Theta, NormalFormIsUnique) {
  const Group c = theta_z();
  // t^-1 w t written two ways, and t (t^-1 w t) t^-1 = w.
  EXPECT_EQ(word(*c, "t^-1*embed(2)*t"), word(*c, "embed(2)^t"));
  EXPECT_EQ(word(*c, "t*(t^-1*embed(2)*t)*t^-1"), word(*c, "embed(2)"));
  EXPECT_EQ(word(*c, "t^2*t^-3"), word(*c, "t^-1"));
  // phi(w) at depth 0 equals the depth-1 form of w conjugated back.
  EXPECT_EQ(word(*c, "t*embed(2)*t^-1"), Element(c_from_w(*c, phi(*c, WElement{0, make_delta(c->abar(), Element(Integer(2)))}))));
}

TEST(Theta, PrintsNormalForm) {
  const Group c = theta_z();
  EXPECT_EQ(format_element(*c, word(*c, "embed(2)")), "embed(2)");
  EXPECT_EQ(format_element(*c, word(*c, "t^-1*embed(2)*t")), "t^-1 wlevel(0, delta(2)) t");
  EXPECT_EQ(format_element(*c, word(*c, "t^3")), "t^3");
  EXPECT_EQ(format_element(*c, word(*c, "t*t^-1")), "1");
}

TEST(Theta, EmbeddingOfA) {
  const Group c = theta_z();
  for (int a : {-3, -1, 1, 7}) {
    const CElement x = theta_embed(*c, Element(Integer(a)));
    ASSERT_TRUE(theta_embed_value(*c, x).has_value());
    EXPECT_EQ(*theta_embed_value(*c, x), Element(Integer(a)));
    EXPECT_EQ(is_positive(*c, Element(x)), a > 0);
  }
  EXPECT_FALSE(theta_embed_value(*c, make_t(*c)).has_value());
}

TEST(Theta, OrderCone) {
  const Group c = theta_z();
  EXPECT_TRUE(is_positive(*c, word(*c, "t")));
  EXPECT_FALSE(is_positive(*c, word(*c, "t^-1*embed(5)")));
  EXPECT_TRUE(is_positive(*c, word(*c, "embed(3)^t")));
  const auto r = props::order_cone(*c, 21, 500);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Theta, TorsionFree) {
  const auto r = props::torsion_free(*theta_z(), 22, 200);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Theta, NormalClosureWitness) {
  const Group c = theta_z();
  const GroupDesc& w0 = c->abar();
  const Element a = word(w0, "fg(1)");
  const Element x = word(w0, "fg(2)"), y = word(w0, "sigma");
  const ConjugateWord cw = theta_normal_closure_witness(*c, a, x, y);
  const auto embed = [&](const Element& v) { return Element(c_from_w(*c, WElement{0, v})); };
  EXPECT_EQ(evaluate_conjugate_word(*c, cw, embed(a)), commutator(*c, embed(x), embed(y)));
  EXPECT_THROW(theta_normal_closure_witness(*c, identity(w0), x, y), PreconditionError);
  const auto r = props::theta_witness(*c, 23, 100);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Theta, AssociationIndependence) {
  const auto r = props::association_independence(*theta_z(), 24, 300);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Theta, LevelBoundsAreEnforced) {
  const Group c = make_theta(make_integers());
  EXPECT_THROW(c->w_level(5), DepthError);
  // Tenth powers of t^-1 w elements climb past the default wreath level.
  bool hit = false;
  try {
    (void)order_of_element(*c, word(*c, "t^-1*embed(5)"), 10);
  } catch (const DepthError&) {
    hit = true;
  }
  EXPECT_TRUE(hit);
}

TEST(ThetaLimit, LevelsIdentifyAlongEmbedding) {
  const Group l = make_theta_limit(make_integers(), props::roomy_limits());
  EXPECT_TRUE(eq(*l, word(*l, "at(0, 3)"), word(*l, "at(1, embed(3))")));
  EXPECT_FALSE(eq(*l, word(*l, "at(1, t)"), word(*l, "at(0, 1)")));
  const auto r = props::group_axioms(*l, 25, 100);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
