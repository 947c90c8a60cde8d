// Copyright 2026 The qvir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvir/fock.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace qvir {
namespace {

FockVector vac(int delta, int cap = 8) { return FockVector::highest_weight(delta, cap); }

FockVector state(int delta, std::vector<int> labels, int cap = 8, int spin = 1) {
  return FockVector::basis(delta, cap, fock_state(delta, std::move(labels), spin));
}

double dist(const FockVector& a, const FockVector& b) { return (a - b).norm(); }

TEST(FockState, Labels) {
  EXPECT_EQ(fock_state(1, {1, 2}).label(1), "{3/2,1/2}");
  EXPECT_EQ(fock_state(0, {2}, -1).label(0), "{2}-");
  EXPECT_EQ(fock_state(1, {2, 1}).level2(), 4);
  EXPECT_THROW(fock_state(1, {1, 1}), std::invalid_argument);
  EXPECT_THROW(fock_state(1, {0}), std::invalid_argument);
}

TEST(FockState, EnumerationCounts) {
  // Partitions into distinct parts: 1, 1, 1, 2, 2, 3, 4 for n = 0..6.
  auto r = enumerate_fock_states(0, 12);
  EXPECT_EQ(r.size(), 2u * (1 + 1 + 1 + 2 + 2 + 3 + 4));
  // Distinct half-odd depths with sum <= 4: {}, {1/2}, {3/2}, {3/2,1/2}, {5/2}, {5/2,1/2},
  // {7/2}, {7/2,1/2}, {5/2,3/2}.
  EXPECT_EQ(enumerate_fock_states(1, 8).size(), 9u);
}

TEST(Psi, Examples) {
  FockVector v = apply_psi(vac(1), -1);
  EXPECT_EQ(dist(v, state(1, {1})), 0.0);
  EXPECT_EQ(dist(apply_psi(v, 1), vac(1)), 0.0);
  EXPECT_TRUE(apply_psi(vac(1), 1).empty());
  FockVector hw = vac(0);
  EXPECT_EQ(dist(apply_psi(apply_psi(hw, 0), 0), 0.5 * hw), 0.0);
  EXPECT_THROW(apply_psi(hw, 1), std::invalid_argument);
}

TEST(Psi, Anticommutator) {
  for (int delta : {0, 1}) {
    CheckReport r = psi_anticommutator_check(delta, 6);
    EXPECT_TRUE(r.pass) << r.residual;
    EXPECT_EQ(r.residual, 0.0);
  }
}

TEST(Psi, TruncationFlagsLossy) {
  FockVector v = FockVector::highest_weight(1, 2);
  FockVector w = apply_psi(apply_psi(v, -1), -5);
  EXPECT_TRUE(w.lossy());
  EXPECT_TRUE(w.empty());
}

TEST(Virasoro, Examples) {
  FockVector s = state(1, {2, 1});
  EXPECT_EQ(dist(apply_L(s, 0), 2.0 * s), 0.0);
  EXPECT_TRUE(apply_L(vac(1), -1).empty());
  FockVector x = apply_L(apply_L(vac(1, 4), -2), 2);
  EXPECT_NEAR(std::abs(x.coeff(FockState{}) - 0.25), 0.0, 1e-15);
}

TEST(Virasoro, TwistedZeroModeWeight) {
  // L_0 carries h = 1/16 on the twisted highest weight.
  FockVector hw = vac(0);
  EXPECT_NEAR(dist(apply_L(hw, 0), (1.0 / 16.0) * hw), 0.0, 1e-15);
}

TEST(Virasoro, CommutatorGrid) {
  for (int delta : {0, 1})
    for (int cap : {6, 7, 8})
      for (int n = -3; n <= 3; ++n)
        for (int m = -3; m <= 3; ++m) {
          CheckReport r = virasoro_comm_check(n, m, delta, cap);
          EXPECT_TRUE(r.pass) << delta << " " << cap << " " << n << " " << m << " " << r.residual;
        }
}

TEST(Virasoro, VacuumExpectation) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(virasoro_vacuum_check(n, 1, 8).pass);
    EXPECT_TRUE(virasoro_vacuum_check(n, 0, 8).pass);
  }
}

TEST(Gradedness, ShiftsLevel) {
  QParam q = QParam::from_angle(0.3);
  for (int delta : {0, 1}) EXPECT_TRUE(gradedness_check(delta, 6, q).pass);
}

TEST(DeformedD, ZeroModeOnSingleFermion) {
  // D_0(q) psi_{-1/2}|0> = (q - 1/q)[1]_q psi_{-1/2}|0> with the bilinear convention used here.
  for (QParam q : {QParam::exact(1, 10), QParam::from_angle(0.3)}) {
    FockVector s = state(1, {1});
    cplx want = q.value() - 1.0 / q.value();
    EXPECT_NEAR(dist(apply_D(s, 0, q), want * s), 0.0, 1e-15);
  }
}

TEST(DeformedD, PsiCommutatorExample) {
  QParam q = QParam::from_angle(0.3);
  FockVector v = vac(1);
  FockVector c = apply_D(apply_psi(v, -1), 1, q) - apply_psi(apply_D(v, 1, q), -1);
  EXPECT_LT(c.norm(), 1e-15);
}

TEST(DeformedD, DescendantIdentity) {
  // (a D_-2 + b D_-1^2)|1/16>_+ is proportional to psi_-2 psi_0 |1/16>_+; the two weights
  // are -(q^-1 - q)[2]_q and -(q^-1 - q)^2 [-3]_q.
  for (double t : {0.3, 0.7, std::numbers::pi / 8}) {
    QParam q = QParam::from_angle(t);
    cplx k = 1.0 / q.value() - q.value();
    FockVector hw = vac(0, 4);
    FockVector target = apply_psi(apply_psi(hw, 0), -4);
    EXPECT_LT(dist(apply_D(hw, -2, q), -(k * q_int(2, q)) * target), 1e-14);
    EXPECT_LT(dist(apply_D(apply_D(hw, -1, q), -1, q), -(k * k * q_int(-3, q)) * target), 1e-14);
  }
}

TEST(DeformedD, EqualQAndReversedMixedHold) {
  QParam q = QParam::from_angle(0.3);
  for (int delta : {0, 1})
    for (int n = -3; n <= 3; ++n)
      for (int m = -3; m <= 3; ++m) {
        EXPECT_TRUE(dva_comm_check(n, m, 1, 1, q, delta, 6, DvaForm::kPrinted).pass) << delta << n << m;
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {1, 3}})
          EXPECT_TRUE(dva_comm_check(n, m, a, b, q, delta, 6, DvaForm::kReversed).pass) << delta << n << m << a << b;
      }
  EXPECT_TRUE(dva_comm_check(1, -1, 1, 1, QParam::exact(1, 10), 1, 6, DvaForm::kPrinted).pass);
}

TEST(DeformedD, PrintedMixedFormHasOppositeSign) {
  CheckReport r = dva_comm_check(1, -1, 2, 1, QParam::from_angle(0.3), 1, 6, DvaForm::kPrinted);
  EXPECT_FALSE(r.pass);
}

TEST(DeformedD, PsiCommutatorGrid) {
  QParam q = QParam::from_angle(0.3);
  for (int delta : {0, 1})
    for (int n = -3; n <= 3; ++n)
      for (int tm = -6; tm <= 6; ++tm) {
        if (((tm % 2) + 2) % 2 != delta) continue;
        EXPECT_TRUE(fock_dpsi_check(n, tm, q, delta, 8).pass) << delta << " " << n << " " << tm;
      }
}

TEST(DeformedD, DegenerateThrows) {
  EXPECT_THROW(apply_D(vac(1), 0, QParam::exact(0, 1)), DegenerateParameter);
}

TEST(DeformedD, NullStateAtLevelTwo) {
  for (QParam q : {QParam::exact(1, 8), QParam::from_angle(0.3), QParam::from_angle(1.1)}) {
    for (int spin : {1, -1}) {
      EXPECT_TRUE(null_level2_check(q, spin).pass);
      CheckReport c = null_level2_check(q, spin, true);
      EXPECT_TRUE(c.pass);
      EXPECT_GT(1.0 / c.residual, 0.1);
    }
  }
}

TEST(Limits, ClassicalSlope) {
  for (int delta : {0, 1})
    for (int n = -2; n <= 2; ++n) {
      CheckReport r = classical_limit_check(n, {1e-2, 1e-3}, delta, 6);
      EXPECT_TRUE(r.pass) << n << " " << r.params["slope"];
    }
}

TEST(Limits, SingleFermionRatio) {
  // D_0 psi_{-1/2}|0> = 2i sin(eps) psi_{-1/2}|0>; divided by 2 log q^2 = 4i eps this is sin(eps)/(2 eps).
  const double eps = 1e-3;
  QParam q = QParam::from_angle(eps);
  cplx lam = apply_D(state(1, {1}), 0, q).coeff(fock_state(1, {1}));
  cplx ratio = lam / cplx(0.0, 4.0 * eps);
  EXPECT_NEAR(ratio.real(), std::sin(eps) / (2.0 * eps), 1e-15);
  EXPECT_NEAR(ratio.real(), 0.5, 1e-6);
}

TEST(Limits, D0Expansion) {
  // q = e^{i pi/20}: on psi_{-1/2}|0> both sides equal 2i sin(pi/20).
  QParam q = QParam::exact(1, 20);
  cplx lam = apply_D(state(1, {1}), 0, q).coeff(fock_state(1, {1}));
  EXPECT_NEAR(std::abs(lam - cplx(0.0, 2.0 * std::sin(std::numbers::pi / 20))), 0.0, 1e-15);
  for (int delta : {0, 1}) {
    EXPECT_TRUE(d0_expansion_check(q, 6, delta, 4).pass);
    EXPECT_TRUE(d0_expansion_check(QParam::exact(1, 40), 6, delta, 6).pass);
  }
}

TEST(Integrals, Eigenvalues) {
  FockVector s = state(1, {1});
  EXPECT_EQ(dist(apply_I(s, 1), s), 0.0);
  FockVector t = state(1, {2, 1});
  EXPECT_NEAR(dist(apply_I(t, 2), 7.0 * t), 0.0, 1e-14);
  EXPECT_TRUE(apply_I(vac(0), 1).empty());
  EXPECT_DOUBLE_EQ(iom_eigenvalue(fock_state(1, {2, 1}), 2), 7.0);
  EXPECT_DOUBLE_EQ(iom_eigenvalue(fock_state(0, {1, 3}), 1), 8.0);
}

TEST(Integrals, DiagonalAndEvenVanish) {
  for (int delta : {0, 1}) {
    CheckReport r = iom_diagonal_check(delta, 8, 4);
    EXPECT_TRUE(r.pass) << r.residual;
    for (int k = 1; k <= 3; ++k) EXPECT_TRUE(even_power_sum_check(delta, 8, k).pass);
  }
}

TEST(Integrals, OddFullSumIsI) {
  FockVector t = state(1, {3, 1});
  for (int k = 1; k <= 3; ++k) EXPECT_LT(dist(apply_full_power_sum(t, 2 * k - 1), apply_I(t, k)), 1e-12);
}

TEST(Integrals, LevelSixIdentities) {
  auto reports = iom_virasoro_identity_check(6);
  ASSERT_EQ(reports.size(), 6u);
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.name << " " << r.residual;
  EXPECT_EQ(reports[0].params.at("coef"), "112");
  EXPECT_EQ(reports[2].params.at("coef"), "16");
  EXPECT_EQ(reports[4].params.at("coef"), "56");
  EXPECT_THROW(iom_virasoro_identity_check(5), std::invalid_argument);
}

}  // namespace
}  // namespace qvir
