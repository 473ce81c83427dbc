#include "wmgroups/magnus.hpp"
#include "wmgroups/properties.hpp"

#include <gtest/gtest.h>

using namespace wm;

namespace {

QuotientMap z2(std::uint32_t rank = 2) {
  return QuotientMap::parse(rank == 2 ? "Z/2: x->s, y->s" : "Z/2: x->s, y->s, z->s");
}

}  // namespace

TEST(QuotientMap, ParsesTargets) {
  const QuotientMap s3 = QuotientMap::parse("S(3): x->s, y->c");
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.rank(), 2u);
  EXPECT_EQ(QuotientMap::parse("Z/5: x->s^2, y->1").order(), 5u);
  EXPECT_EQ(QuotientMap::parse("perm: x1->(1 2 3), x2->(1 2)").order(), 6u);
  EXPECT_FALSE(QuotientMap::parse("altfin: x->(1 2 3), y->(3 4 5)").is_finite());
}

TEST(QuotientMap, RejectsBadInput) {
  EXPECT_THROW(QuotientMap::parse("Z/2: x->(1 2 3)"), PreconditionError);  // generates Z/3, not Z/2
  EXPECT_THROW(QuotientMap::parse("altfin: x->(1 2)"), PreconditionError);
  EXPECT_THROW(QuotientMap::parse("Z/2 x->s"), ParseError);
  EXPECT_THROW(QuotientMap::parse("altfin: x->(1 2 3)").order(), CapabilityError);
}

TEST(QuotientMap, BreadthFirstTransversal) {
  const QuotientMap pi = QuotientMap::parse("S(3): x->s, y->c");
  ASSERT_EQ(pi.transversal().size(), 6u);
  for (std::size_t i = 0; i < pi.order(); ++i) EXPECT_EQ(pi.evaluate(pi.transversal()[i]), pi.elements()[i]);
  EXPECT_TRUE(pi.elements()[0].is_identity());
}

// Frozen from tests/oracles/fox_lattice_oracle.py: d[x,y]/dx = 1 - s,
// d[x,y]/dy = s - 1, image in Q trivial.
TEST(Fox, CommutatorOverZ2) {
  const QuotientMap pi = z2();
  const FreeWord w = parse_free_word("[x,y]", 2);
  const MagnusElement m = magnus_image(w, pi);
  EXPECT_TRUE(m.q.is_identity());
  EXPECT_EQ(m.v[0].to_string(pi), "1 - s");
  EXPECT_EQ(m.v[1].to_string(pi), "-1 + s");
  EXPECT_EQ(m.to_string(pi), "(1 ; (1 - s, -1 + s))");
  EXPECT_FALSE(in_Nprime(w, pi));
  EXPECT_TRUE(in_Fprime(w));
}

TEST(Fox, InverseLetterRule) {
  const QuotientMap pi = z2();
  // d(x^-1)/dx = -x^-1, and pi(x^-1) = s.
  EXPECT_EQ(fox_derivative(parse_free_word("x^-1", 2), 1, pi).to_string(pi), "-s");
  EXPECT_EQ(fox_derivative(parse_free_word("x^2", 2), 1, pi).to_string(pi), "1 + s");
  EXPECT_EQ(fox_derivative(parse_free_word("y", 2), 1, pi).to_string(pi), "0");
  EXPECT_THROW(fox_derivative(parse_free_word("x", 2), 3, pi), PreconditionError);
}

TEST(Fox, ProductRuleAndHomomorphism) {
  for (const auto& fx : props::finite_magnus_fixtures()) {
    const auto r = props::magnus_homomorphism(fx.pi, fx.name, 31, 200);
    EXPECT_TRUE(r.ok()) << r.first_failure;
  }
  const auto r = props::magnus_homomorphism(props::altfin_sample_quotient(32), "altfin", 33, 100);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Magnus, PowersAndInverse) {
  const QuotientMap pi = z2();
  const MagnusElement x = magnus_image(parse_free_word("x y^-1 x", 2), pi);
  EXPECT_EQ(magnus_pow(x, 3), magnus_mul(x, magnus_mul(x, x)));
  EXPECT_EQ(magnus_pow(x, -2), magnus_inv(magnus_mul(x, x)));
  EXPECT_TRUE(magnus_mul(x, magnus_inv(x)).is_identity());
}

TEST(Magnus, NprimeMembership) {
  const QuotientMap pi = z2();
  // x^2 and (xy) lie in N; their commutator lies in N'.
  EXPECT_TRUE(in_Nprime(parse_free_word("[x^2, x y]", 2), pi));
  EXPECT_FALSE(in_Nprime(parse_free_word("x^2", 2), pi));
  for (const auto& fx : props::finite_magnus_fixtures()) {
    const auto r = props::magnus_kernel(fx.pi, fx.name, 34, 100);
    EXPECT_TRUE(r.ok()) << r.first_failure;
  }
}

TEST(Magnus, SchreierGenerators) {
  const auto gens = schreier_generators(z2());
  ASSERT_EQ(gens.size(), 3u);
  const std::vector<std::string> names{"x", "y"};
  EXPECT_EQ(gens[0].to_string(names), "y x^-1");
  EXPECT_EQ(gens[1].to_string(names), "x^2");
  EXPECT_EQ(gens[2].to_string(names), "x y");
  EXPECT_THROW(schreier_generators(QuotientMap::parse("Z/2: x->s")), PreconditionError);
}

// Frozen from tests/oracles/fox_lattice_oracle.py: ranks 3, 7, 5.
TEST(Lattice, RanksMatchOracle) {
  const std::vector<std::size_t> expected{3, 7, 5};
  const auto fx = props::finite_magnus_fixtures();
  for (std::size_t i = 0; i < fx.size(); ++i) {
    const FiberLattice f = fiber_lattice(fx[i].pi);
    EXPECT_EQ(f.rank, expected[i]) << fx[i].name;
    EXPECT_EQ(f.basis.rows(), expected[i]) << fx[i].name;
    EXPECT_EQ(f.rank, fx[i].pi.order() * (fx[i].pi.rank() - 1) + 1);
    const auto r = props::lattice_checks(fx[i].pi, fx[i].name);
    EXPECT_TRUE(r.ok()) << r.first_failure;
  }
}

TEST(Crystallographic, Verdicts) {
  for (const auto& fx : props::finite_magnus_fixtures()) {
    const auto rep = crystallographic_report(fx.pi);
    EXPECT_TRUE(rep.verdict) << fx.name;
    EXPECT_TRUE(rep.faithful) << fx.name;
    EXPECT_FALSE(rep.degenerate) << fx.name;
    EXPECT_EQ(rep.holonomy.size(), fx.pi.rank());
  }
  const auto trivial = crystallographic_report(QuotientMap::parse("Z/1: x->1, y->1"));
  EXPECT_TRUE(trivial.degenerate);
  EXPECT_EQ(trivial.order, 1u);
  EXPECT_EQ(trivial.rank, 2u);
}

TEST(Crystallographic, NeedsFiniteQuotient) {
  EXPECT_THROW(crystallographic_report(props::altfin_sample_quotient(1)), CapabilityError);
}

TEST(Torsion, ProbeFindsNoSmallOrder) {
  const QuotientMap pi = z2();
  EXPECT_TRUE(torsion_probe_magnus(parse_free_word("x", 2), pi, 10));
  EXPECT_TRUE(torsion_probe_magnus(parse_free_word("[x,y]", 2), pi, 10));
  EXPECT_THROW(torsion_probe_magnus(parse_free_word("x", 2), pi, 1), PreconditionError);
  for (const auto& fx : props::finite_magnus_fixtures()) {
    const auto r = props::magnus_torsion(fx.pi, fx.name, 35, 100);
    EXPECT_TRUE(r.ok()) << r.first_failure;
  }
}

TEST(ModP, CommutatorSurvives) {
  const QuotientMap pi = z2();
  const ModPQuotient q(pi, 3);
  // |Q| p^(|Q| r) = 2 * 3^4.
  EXPECT_EQ(q.order(), 162);
  const MagnusElement img = q.image(parse_free_word("[x,y]", 2));
  EXPECT_FALSE(img.is_identity());
  EXPECT_EQ(img.to_string(pi), "(1 ; (1 + 2s, 2 + s))");
  EXPECT_TRUE(q.image(parse_free_word("[x,y]^3", 2)).is_identity());
  EXPECT_THROW(ModPQuotient(pi, 4), PreconditionError);
  const auto r = props::mod_p_homomorphism(pi, 3, "Z/2", 36, 100);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
