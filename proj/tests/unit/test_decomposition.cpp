#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rcyclic/decomposition.hpp"
#include "rcyclic/errors.hpp"

using namespace rcyclic;

using Circuits = std::vector<std::vector<int>>;

// Hand-worked listings for m = 12 and m = 10.
TEST(Decompose, GoldenListingsForTwelveSets) {
  EXPECT_EQ(decompose(12, 2).circuits, (Circuits{{1, 3, 5, 7, 9, 11}, {2, 4, 6, 8, 10, 12}}));
  EXPECT_EQ(decompose(12, 3).circuits, (Circuits{{1, 4, 7, 10}, {2, 5, 8, 11}, {3, 6, 9, 12}}));
  EXPECT_EQ(decompose(12, 4).circuits, (Circuits{{1, 5, 9}, {2, 6, 10}, {3, 7, 11}, {4, 8, 12}}));
  EXPECT_EQ(decompose(12, 6).circuits, (Circuits{{1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12}}));
  EXPECT_EQ(decompose(12, 8).circuits, (Circuits{{1, 9, 5}, {2, 10, 6}, {3, 11, 7}, {4, 12, 8}}));
  EXPECT_EQ(decompose(12, 9).circuits, (Circuits{{1, 10, 7, 4}, {2, 11, 8, 5}, {3, 12, 9, 6}}));
  EXPECT_EQ(decompose(12, 10).circuits, (Circuits{{1, 11, 9, 7, 5, 3}, {2, 12, 10, 8, 6, 4}}));
  EXPECT_EQ(decompose(10, 5).circuits, (Circuits{{1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}}));
}

TEST(Decompose, RejectsOutOfRange) {
  EXPECT_THROW(decompose(1, 1), ArgumentError);
  EXPECT_THROW(decompose(5, 0), ArgumentError);
  EXPECT_THROW(decompose(5, 5), ArgumentError);
  EXPECT_THROW(decompose(5, 6), ArgumentError);
}

TEST(Decompose, CircuitOf) {
  const auto dec = decompose(12, 8);
  EXPECT_EQ(dec.k, 4);
  EXPECT_EQ(dec.circuit_of(1), 0);
  EXPECT_EQ(dec.circuit_of(5), 0);
  EXPECT_EQ(dec.circuit_of(12), 3);
}

// Property: decompose agrees with a marking walk and the circuits partition 1..m.
TEST(DecomposeProperty, MatchesWalkOracle) {
  for (int m = 2; m <= 40; ++m)
    for (int r = 1; r < m; ++r) {
      const auto dec = decompose(m, r);
      ASSERT_EQ(dec.circuits, oracle::circuits_by_walk(m, r)) << m << "," << r;
      EXPECT_EQ(dec.k, oracle::gcd_by_subtraction(m, r));
      std::vector<int> count(static_cast<std::size_t>(m + 1), 0);
      for (const auto& c : dec.circuits) {
        EXPECT_EQ(static_cast<int>(c.size()), m / dec.k);
        for (int i : c) ++count[static_cast<std::size_t>(i)];
      }
      for (int i = 1; i <= m; ++i) EXPECT_EQ(count[static_cast<std::size_t>(i)], 1);
    }
}

TEST(OrbitIndices, FollowsShift) {
  EXPECT_EQ(orbit_indices(1, 8, 12, 4), (std::vector<int>{1, 9, 5, 1, 9}));
  EXPECT_EQ(orbit_indices(3, 1, 4, 2), (std::vector<int>{3, 4, 1}));
  EXPECT_TRUE(visits_all(2, 5, 12));
  EXPECT_FALSE(visits_all(2, 4, 12));
}

TEST(ShiftGroup, ElementsAndComposition) {
  EXPECT_THROW(ShiftElement(0, 4), ArgumentError);
  EXPECT_THROW(ShiftElement(5, 4), ArgumentError);
  EXPECT_THROW(compose_shifts(ShiftElement(1, 4), ShiftElement(1, 5)), ArgumentError);
  EXPECT_EQ(compose_shifts(ShiftElement(3, 4), ShiftElement(3, 4)), ShiftElement(2, 4));
  EXPECT_EQ(shift_identity(6), ShiftElement(6, 6));
  EXPECT_EQ(shift_inverse(ShiftElement(2, 6)), ShiftElement(4, 6));
  EXPECT_EQ(shift_inverse(ShiftElement(6, 6)), ShiftElement(6, 6));
  EXPECT_EQ(cayley_table(3), (std::vector<std::vector<int>>{{2, 3, 1}, {3, 1, 2}, {1, 2, 3}}));
  EXPECT_TRUE(verify_group_axioms(7).ok());
  EXPECT_THROW(verify_group_axioms(1), ArgumentError);
}

TEST(EmitDot, NodesEdgesAndCircuits) {
  const auto dot = emit_dot(decompose(4, 2));
  EXPECT_EQ(dot.rfind("digraph cyclic_covering_m4_r2 {", 0), 0u);
  EXPECT_NE(dot.find("subgraph circuit_1"), std::string::npos);
  EXPECT_NE(dot.find("subgraph circuit_2"), std::string::npos);
  EXPECT_NE(dot.find("X1 -> X3"), std::string::npos);
  EXPECT_NE(dot.find("X4 -> X2"), std::string::npos);
  EXPECT_NE(dot.find("label=\"X_3\""), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}
