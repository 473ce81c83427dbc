#include "wmgroups/coset_table.hpp"
#include "wmgroups/presentation.hpp"
#include "wmgroups/properties.hpp"
#include "wmgroups/verbal.hpp"
#include "wmgroups/wm_report.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace wm;

namespace {

const char* kHigman = "<a, b, c, d | a^-1 b a = b^2, b^-1 c b = c^2, c^-1 d c = d^2, d^-1 a d = a^2>";

std::string fixture(const std::string& name) {
  for (const auto& fx : props::presentation_fixtures())
    if (fx.name == name) return fx.text;
  throw std::runtime_error("no fixture " + name);
}

/// index -> (subgroups, conjugacy classes)
std::map<std::size_t, std::pair<std::size_t, std::size_t>> low_index_counts(const std::string& text, std::uint32_t k) {
  const auto res = low_index_subgroups(parse_presentation(text), k);
  EXPECT_FALSE(res.partial);
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> out;
  for (std::size_t n = 2; n <= k; ++n) out[n] = {0, 0};
  for (const auto& s : res.subgroups) {
    out[s.table.index()].first += s.conjugates;
    out[s.table.index()].second += 1;
  }
  return out;
}

using Counts = std::map<std::size_t, std::pair<std::size_t, std::size_t>>;

}  // namespace

TEST(Presentation, ParsesAndPrints) {
  const Presentation p = parse_presentation(kHigman);
  EXPECT_EQ(p.rank(), 4u);
  EXPECT_EQ(p.relators.size(), 4u);
  EXPECT_EQ(p.to_string(), "<a, b, c, d | a^-1 b a b^-2, b^-1 c b c^-2, c^-1 d c d^-2, d^-1 a d a^-2>");
  EXPECT_EQ(parse_presentation(p.to_string()), p);
  EXPECT_EQ(parse_presentation("<a, b | a^b a^-2>").relators[0].to_string(p.generators), "b^-1 a b a^-2");
  EXPECT_EQ(parse_presentation("<a |>").relators.size(), 0u);
}

TEST(Presentation, ReportsErrors) {
  EXPECT_THROW(parse_presentation("a, b | a"), ParseError);
  EXPECT_THROW(parse_presentation("<a, b | c>"), ParseError);
  EXPECT_THROW(parse_presentation("<a, a | a>"), ParseError);
  EXPECT_THROW(parse_presentation("<a | a^>"), ParseError);
}

TEST(Abelianization, InvariantFactors) {
  EXPECT_TRUE(abelianization(parse_presentation(kHigman)).empty());
  EXPECT_EQ(smith_normal_form(exponent_matrix(parse_presentation(kHigman))).diagonal(),
            (std::vector<Integer>{1, 1, 1, 1}));
  EXPECT_EQ(abelianization(parse_presentation("<a, b | [a, b]>")), (std::vector<Integer>{0, 0}));
  EXPECT_EQ(abelianization(parse_presentation("<a | a^3>")), (std::vector<Integer>{3}));
  EXPECT_EQ(abelianization(parse_presentation("<a, b | a^2, b^4>")), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(abelianization(parse_presentation("<a, b | a^2 b^-4, a^6>")), (std::vector<Integer>{2, 12}));
  EXPECT_EQ(abelianization(parse_presentation(fixture("Q8"))), (std::vector<Integer>{2, 2}));
  EXPECT_TRUE(abelianization(parse_presentation(fixture("A5"))).empty());
}

TEST(ToddCoxeter, FiniteGroupOrders) {
  const std::vector<std::pair<std::string, std::size_t>> orders{
      {"Z/3", 3}, {"S3", 6}, {"A5", 60}, {"Q8", 8}, {"PSL(2,7)", 168}};
  for (const auto& [name, order] : orders) {
    const auto res = todd_coxeter(parse_presentation(fixture(name)));
    ASSERT_FALSE(res.exhausted()) << name;
    EXPECT_EQ(res.table->index(), order) << name;
    EXPECT_FALSE(coset_table_violation(*res.table, parse_presentation(fixture(name))).has_value()) << name;
  }
}

TEST(ToddCoxeter, SubgroupCosets) {
  const Presentation s3 = parse_presentation(fixture("S3"));
  const auto res = todd_coxeter(s3, {FreeWord::generator(1)});
  ASSERT_FALSE(res.exhausted());
  EXPECT_EQ(res.table->index(), 3u);
  EXPECT_FALSE(coset_table_violation(*res.table, s3, {FreeWord::generator(1)}).has_value());
}

TEST(ToddCoxeter, InfiniteGroupsExhaustTheLimit) {
  EXPECT_TRUE(todd_coxeter(parse_presentation("<a, b | [a, b]>"), {}, 2000).exhausted());
  EXPECT_TRUE(todd_coxeter(parse_presentation(kHigman), {}, 10000).exhausted());
}

// Frozen from tests/oracles/low_index_oracle.py.
TEST(LowIndex, MatchesBruteForceOracle) {
  EXPECT_EQ(low_index_counts("<a |>", 4), (Counts{{2, {1, 1}}, {3, {1, 1}}, {4, {1, 1}}}));
  EXPECT_EQ(low_index_counts("<a, b | [a, b]>", 4), (Counts{{2, {3, 3}}, {3, {4, 4}}, {4, {7, 7}}}));
  EXPECT_EQ(low_index_counts(fixture("S3"), 4), (Counts{{2, {1, 1}}, {3, {3, 1}}, {4, {0, 0}}}));
  EXPECT_EQ(low_index_counts(fixture("Q8"), 4), (Counts{{2, {3, 3}}, {3, {0, 0}}, {4, {1, 1}}}));
  EXPECT_EQ(low_index_counts(fixture("A5"), 6),
            (Counts{{2, {0, 0}}, {3, {0, 0}}, {4, {0, 0}}, {5, {5, 1}}, {6, {6, 1}}}));
  EXPECT_EQ(low_index_counts(kHigman, 5), (Counts{{2, {0, 0}}, {3, {0, 0}}, {4, {0, 0}}, {5, {0, 0}}}));
}

TEST(LowIndex, BudgetMarksPartial) {
  const auto res = low_index_subgroups(parse_presentation("<a, b |>"), 6, 50);
  EXPECT_TRUE(res.partial);
}

TEST(LowIndex, TablesAreValidAndPairwiseNonconjugate) {
  const auto r = props::coset_table_validity(4);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(LowIndex, SubgroupGeneratorsFixBasepoint) {
  const Presentation s3 = parse_presentation(fixture("S3"));
  for (const auto& s : low_index_subgroups(s3, 3).subgroups)
    for (const auto& w : subgroup_generators(s.table)) EXPECT_EQ(s.table.act(0, w), 0u);
}

TEST(Verbal, CommutatorAndPowerWords) {
  const FreeWord comm = parse_free_word("[x,y]", 2);
  EXPECT_EQ(verbal_subgroup(make_symmetric(3)->generators(), {comm}).order(), 3u);
  EXPECT_EQ(verbal_subgroup(make_symmetric(4)->generators(), {comm}).order(), 12u);
  EXPECT_EQ(verbal_subgroup(make_alternating(5)->generators(), {comm}).order(), 60u);
  EXPECT_EQ(verbal_subgroup(make_symmetric(3)->generators(), {parse_free_word("x^2", 1)}).order(), 3u);
  EXPECT_EQ(verbal_subgroup(make_symmetric(3)->generators(), {parse_free_word("x^3", 1)}).order(), 6u);
  EXPECT_EQ(verbal_subgroup({Permutation()}, {comm}).order(), 1u);
  const auto r = props::verbal_normality();
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Verbal, ClosureCap) {
  EXPECT_EQ(group_closure(make_symmetric(5)->generators()).size(), 120u);
  EXPECT_THROW(group_closure(make_symmetric(8)->generators(), 1000), CapabilityError);
}

TEST(WmReport, Higman) {
  const WmReport rep = wm_necessary_report(parse_presentation(kHigman), 5);
  EXPECT_EQ(rep.verdict, WmVerdict::ConsistentUpTo);
  EXPECT_EQ(rep.verdict_text(), "consistent-with-WM up to 5");
  EXPECT_EQ(rep.exit_code(), 0);
  EXPECT_TRUE(rep.abelianization_trivial);
  EXPECT_TRUE(rep.no_low_index_subgroups);
}

TEST(WmReport, Witnesses) {
  const WmReport z2 = wm_necessary_report(parse_presentation("<a, b | [a, b]>"), 3);
  EXPECT_EQ(z2.verdict, WmVerdict::NotWm);
  EXPECT_EQ(z2.witness, "abelianization (0, 0)");
  EXPECT_EQ(z2.exit_code(), 2);

  const WmReport s3 = wm_necessary_report(parse_presentation(fixture("S3")), 3);
  EXPECT_EQ(s3.verdict, WmVerdict::NotWm);
  EXPECT_EQ(s3.witness, "subgroup of index 2");
  ASSERT_TRUE(s3.witness_subgroup.has_value());

  // A5 is perfect; its index-5 subgroup rules out WM.
  const WmReport a5 = wm_necessary_report(parse_presentation(fixture("A5")), 5);
  EXPECT_EQ(a5.verdict, WmVerdict::NotWm);
  EXPECT_TRUE(a5.abelianization_trivial);
  EXPECT_EQ(a5.witness, "subgroup of index 5");

  const WmReport a5_small = wm_necessary_report(parse_presentation(fixture("A5")), 4);
  EXPECT_EQ(a5_small.verdict, WmVerdict::ConsistentUpTo);

  const WmReport budget = wm_necessary_report(parse_presentation(kHigman), 5, 10);
  EXPECT_TRUE(budget.search_partial);
  EXPECT_EQ(budget.verdict, WmVerdict::Inconclusive);
  EXPECT_EQ(budget.exit_code(), 1);
}
