#include "wmgroups/dsl.hpp"
#include "wmgroups/properties.hpp"

#include <gtest/gtest.h>

using namespace wm;

TEST(Dsl, GroupNames) {
  EXPECT_EQ(parse_group("Z")->name(), "Z");
  EXPECT_EQ(parse_group("lamp( S(3) )")->name(), "lamp(S(3))");
  EXPECT_EQ(parse_group("wr(A(4), lamp(Z))")->name(), "wr(A(4),lamp(Z))");
  EXPECT_EQ(parse_group("theta(Z)")->kind(), GroupKind::Theta);
  EXPECT_EQ(parse_group("tower(S(3))")->kind(), GroupKind::Tower);
  EXPECT_EQ(parse_group("thetalimit(Z)")->kind(), GroupKind::ThetaLimit);
  EXPECT_EQ(parse_group("altfin")->kind(), GroupKind::AltFin);
  EXPECT_EQ(parse_group("C(5)")->generators().size(), 1u);
}

TEST(Dsl, GroupErrors) {
  EXPECT_THROW(parse_group("lamp(Z"), ParseError);
  EXPECT_THROW(parse_group("foo(Z)"), ParseError);
  EXPECT_THROW(parse_group("S(0)"), ParseError);
  EXPECT_THROW(parse_group("Z extra"), ParseError);
  Limits l;
  l.desc_depth = 3;
  EXPECT_THROW(parse_group("lamp(lamp(lamp(lamp(Z))))", l), DepthError);
}

TEST(Dsl, ElementErrors) {
  const Group l = parse_group("lamp(Z)");
  EXPECT_THROW(parse_element(*l, "sigma *"), ParseError);
  EXPECT_THROW(parse_element(*l, "t"), ParseError);
  EXPECT_THROW(parse_element(*l, "([1 | 0 | 2] ; 0)"), ParseError);
  const Group a4 = parse_group("A(4)");
  EXPECT_THROW(parse_element(*a4, "(1 2)"), ParseError);
}

TEST(Dsl, Permutations) {
  const Group s = parse_group("S(4)");
  EXPECT_EQ(format_element(*s, parse_element(*s, "(1 2)(2 3)")), "(1 2 3)");
  EXPECT_EQ(format_element(*s, parse_element(*s, "(1 2 3)^-1")), "(1 3 2)");
  EXPECT_EQ(format_element(*s, parse_element(*s, "[(1 2), (2 3)]")), "(1 3 2)");
  EXPECT_EQ(format_element(*s, parse_element(*s, "(1 2)^(2 3)")), "(1 3)");
  EXPECT_EQ(format_element(*s, parse_element(*s, "1")), "()");
}

TEST(Dsl, Integers) {
  const Group z = parse_group("Z");
  EXPECT_EQ(format_element(*z, parse_element(*z, "3*4^2*-2")), "9");
  EXPECT_EQ(format_element(*z, parse_element(*z, "[3, 4]")), "0");
}

TEST(Dsl, RoundTripOnRandomElements) {
  const Limits roomy = props::roomy_limits();
  for (const char* desc : {"Z", "S(3)", "A(5)", "altfin", "lamp(Z)", "lamp(S(3))", "lamp(lamp(Z))", "wr(Z,Z)",
                           "wr(S(3),lamp(Z))", "theta(Z)", "tower(Z)", "thetalimit(Z)"}) {
    const Group g = parse_group(desc, roomy);
    Rng rng(77);
    for (int k = 0; k < 100; ++k) {
      const Element x = random_element(*g, rng);
      const std::string text = format_element(*g, x);
      EXPECT_TRUE(eq(*g, parse_element(*g, text), x)) << desc << ": " << text;
    }
  }
}
