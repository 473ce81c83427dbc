#include "wmgroups/properties.hpp"

#include <gtest/gtest.h>

using namespace wm;

TEST(Properties, EverySuitePasses) {
  for (const auto& r : props::run_all(2024, 100)) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
    EXPECT_GT(r.samples, 0u) << r.name;
  }
}

TEST(Properties, DeterministicForFixedSeed) {
  const auto a = props::run_all(7, 20);
  const auto b = props::run_all(7, 20);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].samples, b[i].samples);
  }
}

TEST(Properties, FailuresAreRecorded) {
  props::PropertyResult r{"demo", 0, 0, {}};
  r.check(true, [] { return std::string("unused"); });
  r.check(false, [] { return std::string("first"); });
  r.check(false, [] { return std::string("second"); });
  r.guarded([] { throw std::runtime_error("boom"); });
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.samples, 4u);
  EXPECT_EQ(r.failures, 3u);
  EXPECT_EQ(r.first_failure, "first");
}

TEST(Properties, GroupAxiomsAcrossConstructions) {
  std::uint64_t seed = 40;
  for (const auto& g : {make_lamp(make_symmetric(3)), make_wreath(make_symmetric(3), make_symmetric(3)),
                        make_theta(make_symmetric(3), props::roomy_limits()), make_tower(make_symmetric(3))}) {
    const auto r = props::group_axioms(*g, ++seed, 100);
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
  }
}
