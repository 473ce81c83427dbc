#include "wmgroups/int_matrix.hpp"
#include "wmgroups/permutation.hpp"

#include <gtest/gtest.h>

using namespace wm;

TEST(Permutation, ComposesRightToLeft) {
  const Permutation p = Permutation::parse("(1 2)");
  const Permutation q = Permutation::parse("(2 3)");
  // (pq)(x) = p(q(x)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  EXPECT_EQ((p * q).to_string(), "(1 2 3)");
  EXPECT_EQ((q * p).to_string(), "(1 3 2)");
  EXPECT_TRUE((p * p).is_identity());
  EXPECT_EQ(Permutation::parse("(1 2 3)(4 5)").inverse().to_string(), "(1 3 2)(4 5)");
}

TEST(Permutation, Parity) {
  EXPECT_FALSE(Permutation::parse("(1 2)").is_even());
  EXPECT_TRUE(Permutation::parse("(1 2 3)").is_even());
  EXPECT_TRUE(Permutation().is_even());
}

TEST(Permutation, RejectsMalformedCycles) {
  EXPECT_THROW(Permutation::parse("(1 1)"), ParseError);
  EXPECT_THROW(Permutation::parse("(1 2"), ParseError);
}

TEST(SmithForm, OracleValues) {
  // Frozen from tests/oracles/fox_lattice_oracle.py (sympy).
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).D.to_string(), "[[2, 0], [0, 4]]");
  EXPECT_EQ(smith_normal_form(IntMatrix{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}).D,
            IntMatrix::identity(4));
}

TEST(SmithForm, UnimodularTransforms) {
  const IntMatrix a{{4, 6, 2}, {2, 8, 10}, {0, 4, 12}};
  const SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(abs(determinant(s.U)), 1);
  EXPECT_EQ(abs(determinant(s.V)), 1);
}

TEST(SmithForm, ZeroAndRectangular) {
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 3)).diagonal(), (std::vector<Integer>{0, 0}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{1, 1, 1}}).diagonal(), (std::vector<Integer>{1}));
}

TEST(HermiteForm, ReducesAbovePivots) {
  const IntMatrix h = hermite_normal_form(IntMatrix{{2, 3}, {4, 5}, {6, 7}});
  EXPECT_EQ(h.to_string(), "[[2, 0], [0, 1]]");
  const IntMatrix h2 = hermite_normal_form(IntMatrix{{2, 4}, {0, 3}});
  EXPECT_EQ(h2.to_string(), "[[2, 1], [0, 3]]");
  EXPECT_EQ(matrix_rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
}

TEST(HermiteForm, SolveInBasis) {
  const IntMatrix h = hermite_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_TRUE(solve_in_hermite_basis(h, {4, 9}).has_value());
  EXPECT_FALSE(solve_in_hermite_basis(h, {1, 0}).has_value());
}

TEST(Determinant, Bareiss) {
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1, 2}, {3, 4, 5}, {6, 7, 9}}), -3);
}
