// Copyright 2026 The cqedgate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqedgate/analytic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <tuple>

namespace cqedgate {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(RabiFrequenciesTest, Values) {
  auto [w01, w11] = rabi_frequencies(1.0, 0.0);
  EXPECT_DOUBLE_EQ(w01, 2.0);
  EXPECT_DOUBLE_EQ(w11, 2.0 * std::sqrt(2.0));
  std::tie(w01, w11) = rabi_frequencies(0.0, 5.0);
  EXPECT_DOUBLE_EQ(w01, 5.0);
  EXPECT_DOUBLE_EQ(w11, 5.0);
  std::tie(w01, w11) = rabi_frequencies(1.0, 2.353);
  EXPECT_NEAR(w01, 3.08814, 1e-5);
  EXPECT_NEAR(w11, 3.67921, 1e-5);
  EXPECT_GE(w11, w01);
  EXPECT_THROW(rabi_frequencies(-1.0, 0.0), InvalidArgument);
}

TEST(AmplitudeTest, Examples) {
  EXPECT_EQ(amplitude_cjk(1.3, 0.2, 0.0, 1, 1), std::complex<double>(1.0, 0.0));
  EXPECT_EQ(amplitude_cjk(1.3, 0.2, 17.0, 0, 0), std::complex<double>(1.0, 0.0));
  EXPECT_NEAR(std::abs(amplitude_cjk(1.0, 0.0, kPi, 1, 0) + 1.0), 0.0, 1e-15);
  // cos(sqrt(2) * 37.699)
  EXPECT_NEAR(amplitude_cjk(1.0, 0.0, 37.699, 1, 1).real(), -0.995712166, 1e-9);
  EXPECT_NEAR(amplitude_cjk(1.0, 0.0, 37.699, 1, 1).imag(), 0.0, 1e-15);
  EXPECT_THROW(amplitude_cjk(1.0, 0.0, 1.0, 2, 0), InvalidArgument);
}

TEST(AmplitudeTest, ResonantLimitIsCosine) {
  for (double t : {0.1, 1.0, 7.3, 42.0}) {
    EXPECT_NEAR(amplitude_cjk(1.0, 0.0, t, 0, 1).real(), std::cos(t), 1e-14);
    EXPECT_NEAR(amplitude_cjk(1.0, 0.0, t, 1, 1).real(), std::cos(std::sqrt(2.0) * t), 1e-14);
  }
}

TEST(AmplitudeTest, BoundedByOne) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double g = 3.0 * u(rng);
    const double delta = 10.0 * (u(rng) - 0.5);
    const double t = 200.0 * u(rng);
    EXPECT_LE(std::abs(amplitude_cjk(g, delta, t, 1, 0)), 1.0 + 1e-14);
    EXPECT_LE(std::abs(amplitude_cjk(g, delta, t, 1, 1)), 1.0 + 1e-14);
  }
}

// Eliminating the excited amplitude from the two-level equations
//   i c' = G e^{i D t} e,  i e' = G e^{-i D t} c
// gives c'' - i D c' + G^2 c = 0, with G = g for one photon and sqrt(2) g for
// |c,1,1> coupled to its bright state.
TEST(AmplitudeTest, SatisfiesTwoLevelEquationByFiniteDifferences) {
  const double h = 1e-4;
  for (double delta : {0.0, 0.707, 2.353, -1.2}) {
    for (auto [j, k, coupling2] : {std::tuple{1, 0, 1.0}, std::tuple{1, 1, 2.0}}) {
      for (double t : {0.5, 3.1, 20.0}) {
        auto c = [&](double s) { return amplitude_cjk(1.0, delta, s, j, k); };
        const auto d1 = (c(t + h) - c(t - h)) / (2.0 * h);
        const auto d2 = (c(t + h) - 2.0 * c(t) + c(t - h)) / (h * h);
        const auto residual = d2 - std::complex<double>(0.0, delta) * d1 + coupling2 * c(t);
        EXPECT_LT(std::abs(residual), 1e-5) << delta << " " << j << k << " " << t;
      }
    }
  }
}

struct TableRow {
  GateKind gate;
  int m, n;
  double p, delta_over_g, gt;
};

// Reference table; the U2 (0, 14) p entry reads 20.066 there, the closed form
// gives 20.006.
const TableRow kTable[] = {
    {GateKind::U1, 0, 6, 7.985, 0.0, 37.7},      {GateKind::U2, 8, 10, 12.01, 2.353, 42.73},
    {GateKind::U1, 12, 15, 16.993, 2.667, 56.55}, {GateKind::U1, 4, 12, 15.992, 0.707, 71.09},
    {GateKind::U2, 18, 21, 24.005, 3.062, 73.88}, {GateKind::U2, 10, 15, 19.007, 1.689, 74.41},
    {GateKind::U1, 24, 28, 30.996, 3.328, 90.61}, {GateKind::U2, 0, 14, 20.006, 0.0, 91.10},
    {GateKind::U1, 25, 29, 32.011, 3.402, 92.34}, {GateKind::U2, 16, 22, 27.004, 2.022, 99.39},
};

TEST(SolutionParametersTest, ReproducesTable) {
  for (const auto& row : kTable) {
    const GateSolution s = solution_parameters(row.gate, row.m, row.n);
    EXPECT_NEAR(s.delta_over_g, row.delta_over_g, 0.005) << row.m << "," << row.n;
    EXPECT_NEAR(s.gt, row.gt, 0.05) << row.m << "," << row.n;
    EXPECT_NEAR(s.p_star, row.p, 0.01) << row.m << "," << row.n;
    EXPECT_TRUE(s.satisfies_ordering());
  }
  EXPECT_NEAR(solution_parameters(GateKind::U2, 0, 14).p_star, 20.0061, 1e-4);
}

TEST(SolutionParametersTest, RejectsBadIndices) {
  EXPECT_THROW(solution_parameters(GateKind::U1, 6, 6), InvalidArgument);
  EXPECT_THROW(solution_parameters(GateKind::U1, -1, 6), InvalidArgument);
  EXPECT_THROW(solution_parameters(GateKind::U2, 11, 10), InvalidArgument);
  EXPECT_NO_THROW(solution_parameters(GateKind::U2, 10, 10));
}

// The first two timing conditions are met exactly by construction; the third
// misses by exactly epsilon (in units of pi).
TEST(SolutionParametersTest, TimingConditions) {
  for (GateKind gate : {GateKind::U1, GateKind::U2}) {
    for (const auto& s : search_solutions(gate, 30, 0.5)) {
      const double t = s.gt;  // g = 1
      const double half_delta = s.delta_over_g * t / 2.0;
      const double half_01 = s.omega_01_over_g() * t / 2.0;
      const double half_11 = s.omega_11_over_g() * t / 2.0;
      EXPECT_NEAR(half_delta, 2.0 * kPi * s.m, 1e-9);
      const double target_01 = gate == GateKind::U1 ? 2.0 * kPi * s.n : (2.0 * s.n + 1.0) * kPi;
      EXPECT_NEAR(half_01, target_01, 1e-9);
      EXPECT_NEAR(std::abs(half_11 / kPi - (2.0 * s.p() + 1.0)), s.epsilon, 1e-9);
    }
  }
}

// An exact solution needs rhs to be an odd perfect square; rhs is even for both
// gates, so integer enumeration finds none.
TEST(SearchTest, NoExactSolutionsByIntegerEnumeration) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m < n; ++m) {
      const std::int64_t rhs = 8LL * n * n - 4LL * m * m;
      const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rhs))));
      EXPECT_FALSE(r * r == rhs && r % 2 == 1);
    }
  }
  EXPECT_TRUE(search_solutions(GateKind::U1, 5, 1e-9).empty());
}

TEST(SearchTest, Examples) {
  const auto u1 = search_solutions(GateKind::U1, 30, kDefaultEpsilonMax);
  ASSERT_FALSE(u1.empty());
  EXPECT_EQ(u1.front().m, 0);
  EXPECT_EQ(u1.front().n, 6);
  EXPECT_NEAR(u1.front().gt, 37.70, 0.005);

  const auto u2 = search_solutions(GateKind::U2, 30, 0.07);
  const auto it = std::find_if(u2.begin(), u2.end(),
                               [](const GateSolution& s) { return s.m == 18 && s.n == 21; });
  ASSERT_NE(it, u2.end());
  EXPECT_NEAR(it->p_star, 24.005, 0.001);
  EXPECT_NEAR(it->gt, 73.88, 0.005);

  EXPECT_THROW(search_solutions(GateKind::U1, 0, 0.1), InvalidArgument);
  EXPECT_THROW(search_solutions(GateKind::U1, 10, 0.0), InvalidArgument);
}

TEST(SearchTest, SortedFilteredAndOrdered) {
  const auto all = search_all_gates(30, 0.07);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_LE(all[i].epsilon, 0.07);
    EXPECT_LE(all[i].n, 30);
    EXPECT_GE(all[i].delta_over_g, 0.0);
    EXPECT_GT(all[i].gt, 0.0);
    EXPECT_TRUE(all[i].satisfies_ordering());
    if (i > 0) {
      EXPECT_FALSE(solution_order(all[i], all[i - 1]));
    }
  }
  const auto capped = search_all_gates(30, 0.07, 50.0);
  for (const auto& s : capped) EXPECT_LE(s.gt, 50.0);
  EXPECT_LT(capped.size(), all.size());
}

TEST(SearchTest, DefaultTableHasExactlyTheTenClassicRowsBelowGt100) {
  const auto table = search_all_gates(kDefaultMaxN, kDefaultEpsilonMax, 100.0);
  ASSERT_EQ(std::size(kTable), table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    EXPECT_EQ(table[i].gate, kTable[i].gate) << i;
    EXPECT_EQ(table[i].m, kTable[i].m) << i;
    EXPECT_EQ(table[i].n, kTable[i].n) << i;
  }
  EXPECT_EQ(default_table_row(1).n, 6);
  EXPECT_THROW(default_table_row(0), InvalidArgument);
}

}  // namespace
}  // namespace cqedgate
