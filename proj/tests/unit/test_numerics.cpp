#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "reference.hpp"
#include "smp/linear_algebra.hpp"
#include "smp/min_cut.hpp"
#include "smp/simplex.hpp"

using namespace smp;

TEST(Gaussian, IdentityReturnsRhs) {
  LinearSystem sys;
  sys.matrix = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  sys.rhs = {Rational(1, 2), -3, 7};
  GaussianResult r = gaussian_solve(sys);
  EXPECT_EQ(r.status, GaussianResult::Status::unique);
  EXPECT_EQ(r.solution, sys.rhs);
  EXPECT_TRUE(r.nullspace.empty());
}

TEST(Gaussian, InconsistentSystemIsInfeasible) {
  LinearSystem sys;
  sys.matrix = {{1}, {1}};
  sys.rhs = {1, 2};
  EXPECT_EQ(gaussian_solve(sys).status, GaussianResult::Status::infeasible);
}

TEST(Gaussian, TieMarketBalanceSystemHasOneDimensionalNullspace) {
  // Unknowns phi1..phi3, psi1..psi3; one balance row per vertex.
  LinearSystem sys;
  sys.matrix = {
      {2, 0, 0, 0, 0, -1},   // f1: two bold edges, dotted f1w3
      {0, 2, 0, -1, 0, 0},   // f2: two bold edges, dotted f2w1
      {0, 0, 1, 0, -1, -1},  // f3: one bold edge, dotted f3w2 and f3w3
      {-1, 0, -1, 1, 0, 0},  // w1: head f2w1, bold f1w1 and f3w1
      {-1, -1, 0, 0, 1, 0},  // w2: head f3w2, bold f1w2 and f2w2
      {0, -1, 0, 0, 0, 2},   // w3: head f1w3 and f3w3, bold f2w3
  };
  sys.rhs.assign(6, 0);
  GaussianResult r = gaussian_solve(sys);
  ASSERT_EQ(r.nullspace.size(), 1u);
  std::vector<Integer> expected{1, 4, 7, 8, 5, 2};
  EXPECT_EQ(r.nullspace[0], expected);
}

TEST(Gaussian, NormalizeIntegerScalesToGcdOne) {
  std::vector<Integer> v = normalize_integer({Rational(-1, 2), Rational(3, 4), 0});
  std::vector<Integer> expected{2, -3, 0};
  EXPECT_EQ(v, expected);
}

TEST(Simplex, SingleVariable) {
  LinearProgram lp;
  lp.objective = {1};
  lp.constraints = {{{1}, Relation::less_equal, 3}};
  LpResult r = simplex_maximize(lp);
  ASSERT_EQ(r.status, LpResult::Status::optimal);
  EXPECT_EQ(r.solution[0], 3);
  EXPECT_EQ(r.tight, std::vector<int>{0});
}

TEST(Simplex, InfeasibleAndUnbounded) {
  LinearProgram lp;
  lp.objective = {1};
  lp.constraints = {{{1}, Relation::less_equal, -1}};
  EXPECT_EQ(simplex_maximize(lp).status, LpResult::Status::infeasible);
  LinearProgram open;
  open.objective = {1, 1};
  open.constraints = {{{1, -1}, Relation::less_equal, 2}};
  EXPECT_EQ(simplex_maximize(open).status, LpResult::Status::unbounded);
}

TEST(Simplex, FreeVariablesAndEqualities) {
  LinearProgram lp;
  lp.objective = {-1, 0};
  lp.nonnegative = {false, true};
  lp.constraints = {{{1, 1}, Relation::equal, 2}, {{0, 1}, Relation::less_equal, 5}};
  LpResult r = simplex_maximize(lp);
  ASSERT_EQ(r.status, LpResult::Status::optimal);
  EXPECT_EQ(r.solution[0], -3);
  EXPECT_EQ(r.objective, 3);
}

TEST(Simplex, MatchesVertexEnumerationOnRandomPrograms) {
  std::mt19937_64 rng(11);
  auto small = [&](int lo, int hi) { return Rational(lo + static_cast<long>(rng() % (hi - lo + 1))); };
  int optimal = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    LinearProgram lp;
    for (int j = 0; j < n; ++j) lp.objective.push_back(small(-3, 5));
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> row(n, Rational(0));
      row[j] = 1;
      lp.constraints.push_back({row, Relation::less_equal, small(1, 6)});
    }
    int extra = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < extra; ++k) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.push_back(small(-2, 3));
      Relation rel = rng() % 4 == 0 ? Relation::greater_equal : Relation::less_equal;
      lp.constraints.push_back({row, rel, small(-1, 6)});
    }
    LpResult r = simplex_maximize(lp);
    auto brute = reference::lp_optimum(lp);
    if (!brute) {
      EXPECT_EQ(r.status, LpResult::Status::infeasible) << "trial " << t;
      continue;
    }
    ++optimal;
    ASSERT_EQ(r.status, LpResult::Status::optimal) << "trial " << t;
    EXPECT_EQ(r.objective, *brute) << "trial " << t;
  }
  EXPECT_GT(optimal, 100);
}

TEST(MinCut, SingleArc) {
  FlowNetwork net(2, 0, 1);
  net.add_arc(0, 1, Capacity::finite(5));
  MinCutResult r = min_cut(net);
  EXPECT_EQ(r.capacity, 5);
  EXPECT_TRUE(r.source_side[0]);
  EXPECT_FALSE(r.source_side[1]);
}

TEST(MinCut, DisconnectedHasZeroCut) {
  FlowNetwork net(2, 0, 1);
  EXPECT_EQ(min_cut(net).capacity, 0);
}

TEST(MinCut, InfinitePathIsUnbounded) {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, Capacity::unbounded());
  net.add_arc(1, 2, Capacity::unbounded());
  EXPECT_FALSE(min_cut(net).bounded);
}

TEST(MinCut, MatchesBruteForceOnRandomNetworks) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + static_cast<int>(rng() % 5);
    FlowNetwork net(n, 0, n - 1);
    int arcs = n + static_cast<int>(rng() % (2 * n));
    for (int k = 0; k < arcs; ++k) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a == b) continue;
      if (rng() % 6 == 0) {
        net.add_arc(a, b, Capacity::unbounded());
      } else {
        Rational c(static_cast<long>(rng() % 9));
        c /= 1 + static_cast<long>(rng() % 3);
        net.add_arc(a, b, Capacity::finite(c));
      }
    }
    auto brute = reference::brute_min_cut(net);
    MinCutResult r = min_cut(net);
    if (!brute) {
      EXPECT_FALSE(r.bounded) << "trial " << t;
      continue;
    }
    ASSERT_TRUE(r.bounded) << "trial " << t;
    EXPECT_EQ(r.capacity, *brute) << "trial " << t;
    EXPECT_EQ(cut_capacity(net, r.source_side), r.capacity);
  }
}
