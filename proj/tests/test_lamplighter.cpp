#include "wmgroups/dsl.hpp"
#include "wmgroups/group.hpp"
#include "wmgroups/properties.hpp"

#include <gtest/gtest.h>

using namespace wm;

namespace {

std::string eval(const std::string& group, const std::string& expr) {
  const Group g = parse_group(group);
  return format_element(*g, parse_element(*g, expr));
}

}  // namespace

// Frozen from tests/oracles/lamplighter_oracle.py.
TEST(Lamp, OracleProducts) {
  EXPECT_EQ(eval("lamp(Z)", "fg(5)*sigma^2*fg(-3)"), "([2 | -2 | 5 | 0 | 0] ; 2)");
  EXPECT_EQ(eval("lamp(Z)", "(fg(2)*sigma)^3"), "([6 | -2 | 4 | -1 | 2 | 0 | 0] ; 3)");
  EXPECT_EQ(eval("lamp(Z)", "sigma^-1*fg(4)*sigma*fg(1)"), "([5 | 0 | 4 | 1 | 0] ; 0)");
  EXPECT_EQ(eval("lamp(Z)", "[fg(5), sigma]"), "delta(5)");
  EXPECT_EQ(eval("lamp(Z)", "[fg(2)*sigma, fg(3)]"), "delta(-3)");
  EXPECT_EQ(eval("lamp(Z)", "[delta(7), sigma^3]"), "([0 | -4 | -7 | -3 | 0 | -1 | 7 | 0 | 0] ; 0)");
  EXPECT_EQ(eval("lamp(Z)", "fg(1)*sigma^-2*fg(1)*sigma^5"), "([2 | 0 | 1 | 2 | 0] ; 3)");
}

TEST(Lamp, DeltaIsCommutatorOverNonabelianBase) {
  const Group l = make_lamp(make_symmetric(3));
  const Element g = Element(Permutation::parse("(1 2 3)"));
  EXPECT_EQ(commutator(*l, make_fg(*l, g), make_sigma(*l)), make_delta(*l, g));
  EXPECT_EQ(lamp_delta_value(*l, make_delta(*l, g)), g);
  EXPECT_FALSE(lamp_delta_value(*l, make_fg(*l, g)).has_value());
}

TEST(Lamp, StepFunctionsStayCanonical) {
  const Group l = make_lamp(make_integers());
  const Element x = parse_element(*l, "fg(3)*fg(-3)");
  EXPECT_TRUE(is_identity(*l, x));
  const auto& lx = x.as<LampElement>("test");
  EXPECT_TRUE(lx.f.breaks.empty());
  EXPECT_EQ(eval("lamp(Z)", "([1 | 0 | 1 | 2 | 0] ; 0)"), "([1 | 2 | 0] ; 0)");
}

TEST(Lamp, RejectsNontrivialRightTail) {
  const Group l = make_lamp(make_integers());
  EXPECT_THROW(make_lamp_element(*l, {0}, {Element(Integer(1)), Element(Integer(2))}, 0), PreconditionError);
  EXPECT_THROW(make_lamp_element(*l, {3, 1}, {Element(Integer(1)), Element(Integer(2)), Element(Integer(0))}, 0),
               PreconditionError);
}

TEST(Lamp, Order) {
  const Group l = make_lamp(make_integers());
  // Shift dominates, then the last nontrivial value.
  EXPECT_TRUE(is_positive(*l, make_sigma(*l)));
  EXPECT_TRUE(is_positive(*l, parse_element(*l, "fg(-100)*sigma")));
  EXPECT_FALSE(is_positive(*l, parse_element(*l, "fg(100)*sigma^-1")));
  EXPECT_TRUE(is_positive(*l, parse_element(*l, "fg(5)*delta(-1)")));
  EXPECT_EQ(compare(*l, parse_element(*l, "delta(2)"), parse_element(*l, "delta(3)")), Order::Less);
  EXPECT_EQ(compare(*l, parse_element(*l, "fg(1)"), parse_element(*l, "fg(1)")), Order::Equal);
}

TEST(Lamp, UnorderedBaseRefusesComparison) {
  const Group l = make_lamp(make_symmetric(3));
  EXPECT_THROW(is_positive(*l, make_sigma(*l)), CapabilityError);
}

TEST(Lamp, NestedLamp) {
  const Group ll = make_lamp(make_lamp(make_integers()));
  const Element x = parse_element(*ll, "[fg(sigma), sigma]");
  EXPECT_EQ(format_element(*ll, x), "delta(sigma)");
  EXPECT_TRUE(is_positive(*ll, x));
}

// Frozen from tests/oracles/lamplighter_oracle.py.
TEST(Wreath, OracleProducts) {
  EXPECT_EQ(eval("wr(Z,Z)", "base(2)*top(1)*base(3)"), "base(2) base(3, 1) top(1)");
  EXPECT_EQ(eval("wr(Z,Z)", "[top(2), base(5)]"), "base(-5) base(5, 2)");
}

TEST(Wreath, FourConjugateWitness) {
  const Group w = make_wreath(make_symmetric(3), make_integers());
  const Element x = Element(Permutation::parse("(1 2)")), y = Element(Permutation::parse("(2 3)"));
  const Element b = Element(Integer(4));
  const ConjugateWord word = normal_closure_witness(*w, x, y, b);
  ASSERT_EQ(word.terms.size(), 4u);
  EXPECT_EQ(evaluate_conjugate_word(*w, word, rw_embed_top(*w, b)),
            commutator(*w, rw_embed_base(*w, x), rw_embed_base(*w, y)));
  EXPECT_THROW(normal_closure_witness(*w, x, y, Element(Integer(0))), PreconditionError);
}

TEST(Wreath, OrderUsesTopThenLargestSupportPoint) {
  const Group w = make_wreath(make_integers(), make_integers());
  EXPECT_TRUE(is_positive(*w, parse_element(*w, "base(-9)*top(1)")));
  EXPECT_TRUE(is_positive(*w, parse_element(*w, "base(-9)*base(1, 3)")));
  EXPECT_FALSE(is_positive(*w, parse_element(*w, "base(9)*base(-1, 3)")));
}

TEST(Tower, WitnessLiftsGenerators) {
  const Group t = make_tower(make_integers());
  for (const Element& x : props::tower_generators(*t, 3)) {
    const auto [f, s] = perfectness_witness(*t, x);
    EXPECT_TRUE(eq(*t, commutator(*t, f, s), tower_lift(*t, x))) << format_element(*t, x);
  }
}

TEST(Tower, LevelsIdentifyAlongDelta) {
  const Group t = make_tower(make_integers());
  EXPECT_TRUE(eq(*t, parse_element(*t, "at(0, 3)"), parse_element(*t, "at(1, delta(3))")));
  EXPECT_TRUE(eq(*t, parse_element(*t, "at(1, sigma)"), parse_element(*t, "at(2, delta(sigma))")));
  EXPECT_FALSE(eq(*t, parse_element(*t, "at(1, fg(3))"), parse_element(*t, "at(0, 3)")));
}

TEST(Tower, DepthBound) {
  Limits l;
  l.tower_depth = 2;
  const Group t = make_tower(make_integers(), l);
  EXPECT_THROW(t->level(3), DepthError);
  EXPECT_THROW(parse_element(*t, "at(3, sigma)"), ParseError);
}

TEST(Lamp, PropertySuites) {
  for (const auto& base : {make_integers(), make_symmetric(3), make_lamp(make_integers())}) {
    const auto r = props::lamp_commutator_identity(*make_lamp(base), 11, 200);
    EXPECT_TRUE(r.ok()) << r.first_failure;
  }
  const auto cone = props::order_cone(*make_lamp(make_integers()), 12, 500);
  EXPECT_TRUE(cone.ok()) << cone.first_failure;
  const auto torsion = props::torsion_free(*make_lamp(make_integers()), 13, 200);
  EXPECT_TRUE(torsion.ok()) << torsion.first_failure;
}
