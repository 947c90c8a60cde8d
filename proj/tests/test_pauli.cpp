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

#include "qvir/pauli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace qvir {
namespace {

const cplx I{0.0, 1.0};

OperatorSum word(const std::string& w, cplx c = 1.0) {
  return OperatorSum::term(static_cast<int>(w.size()), PauliString::parse(w), c);
}

// Random sum of a few Pauli words with complex coefficients.
OperatorSum random_sum(std::mt19937& rng, int sites, int terms) {
  std::uniform_int_distribution<int> op(0, 3);
  std::normal_distribution<double> g;
  OperatorSum s(sites);
  for (int t = 0; t < terms; ++t) {
    std::string w;
    for (int i = 0; i < sites; ++i) w += "IXYZ"[op(rng)];
    s += word(w, cplx(g(rng), g(rng)));
  }
  return s;
}

// Single-site matrices in the basis |0> (Z = +1), |1>.
DenseOperator single(char c) {
  DenseOperator m(2, 2);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -I, I, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1;
  }
  return m;
}

// Kronecker product with site 0 as the least significant bit.
DenseOperator kron_word(const std::string& w) {
  DenseOperator m = DenseOperator::Identity(1, 1);
  for (char c : w) {
    DenseOperator s = single(c);
    DenseOperator r(m.rows() * 2, m.cols() * 2);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) r.block(a * m.rows(), b * m.cols(), m.rows(), m.cols()) = s(a, b) * m;
    m = r;
  }
  return m;
}

TEST(Pauli, SingleSiteProducts) {
  EXPECT_EQ(residual(word("X") * word("Y"), word("Z", I)), 0.0);
  EXPECT_EQ(residual(word("Y") * word("Z"), word("X", I)), 0.0);
  EXPECT_EQ(residual(word("Z") * word("X"), word("Y", I)), 0.0);
  EXPECT_EQ(residual(word("Y") * word("X"), word("Z", -I)), 0.0);
  for (const char* w : {"X", "Y", "Z"}) EXPECT_EQ(residual(word(w) * word(w), OperatorSum::identity(1)), 0.0);
}

TEST(Pauli, ParseAndPrint) {
  PauliString p = PauliString::parse("XIZY");
  EXPECT_EQ(p.to_string(4), "XIZY");
  EXPECT_EQ(p.x, 0b1001u);
  EXPECT_EQ(p.z, 0b1100u);
  EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
}

TEST(Pauli, IdentityIsUnit) {
  std::mt19937 rng(1);
  OperatorSum a = random_sum(rng, 3, 6);
  EXPECT_EQ(residual(OperatorSum::identity(3) * a, a), 0.0);
  EXPECT_EQ(residual(a * OperatorSum::identity(3), a), 0.0);
}

TEST(Pauli, AddScale) {
  std::mt19937 rng(2);
  OperatorSum a = random_sum(rng, 2, 5);
  EXPECT_EQ(residual(a + OperatorSum(2), a), 0.0);
  EXPECT_TRUE(scale(a, 0.0).empty());
  EXPECT_EQ(residual(word("X") + word("X"), word("X", 2.0)), 0.0);
}

TEST(Pauli, Commutators) {
  std::mt19937 rng(3);
  OperatorSum a = random_sum(rng, 3, 7);
  EXPECT_TRUE(commutator(a, a).empty());
  EXPECT_TRUE(commutator(word("XI"), word("IZ")).empty());
  EXPECT_EQ(residual(anticommutator(word("X"), word("Z")), OperatorSum(1)), 0.0);
  EXPECT_EQ(residual(commutator(word("X"), word("Z")), word("Y", -2.0 * I)), 0.0);
}

TEST(Pauli, Adjoint) {
  std::mt19937 rng(4);
  OperatorSum a = random_sum(rng, 3, 7);
  EXPECT_EQ(residual(adjoint(adjoint(a)), a), 0.0);
  EXPECT_EQ(residual(adjoint(word("Z", I)), word("Z", -I)), 0.0);
}

TEST(Pauli, Norms) {
  for (int D = 1; D <= 6; ++D) EXPECT_NEAR(frobenius_norm(OperatorSum::identity(D)), std::pow(2.0, D / 2.0), 1e-14);
  std::mt19937 rng(5);
  OperatorSum a = random_sum(rng, 3, 5);
  EXPECT_EQ(residual(a, a), 0.0);
  // |X - Z|_F = 2 on one site, normalizer max(1, sqrt2, sqrt2) = sqrt2.
  EXPECT_NEAR(residual(word("X"), word("Z")), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(residual(to_dense(word("X")), to_dense(word("Z"))), std::sqrt(2.0), 1e-15);
}

TEST(Pauli, DenseMatchesKronecker) {
  for (const char* w : {"X", "Y", "Z", "XY", "ZIY", "YYXZ"})
    EXPECT_LT((to_dense(word(w)) - kron_word(w)).norm(), 1e-15) << w;
  EXPECT_LT((to_dense(OperatorSum::identity(3)) - DenseOperator::Identity(8, 8)).norm(), 1e-15);
}

TEST(Pauli, ApplyFlipsSite) {
  StateVector v = StateVector::Zero(8);
  v(0) = 1.0;
  StateVector w = qvir::apply(word("IXI"), v);
  EXPECT_EQ(w(2), cplx(1.0));
  EXPECT_NEAR(w.norm(), 1.0, 1e-15);
}

TEST(Pauli, SparseAgreesWithDense) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    OperatorSum a = random_sum(rng, 4, 8), b = random_sum(rng, 4, 8);
    DenseOperator A = to_dense(a), B = to_dense(b);
    EXPECT_LT((to_dense(a * b) - A * B).norm(), 1e-12);
    EXPECT_LT((to_dense(commutator(a, b)) - (A * B - B * A)).norm(), 1e-12);
    EXPECT_LT((to_dense(anticommutator(a, b)) - (A * B + B * A)).norm(), 1e-12);
    EXPECT_LT((to_dense(adjoint(a)) - A.adjoint()).norm(), 1e-12);
    StateVector v = StateVector::Random(16);
    EXPECT_LT((qvir::apply(a, v) - A * v).norm(), 1e-12);
    EXPECT_NEAR(frobenius_norm(a), A.norm(), 1e-12);
  }
}

TEST(Pauli, AlgebraProperties) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    OperatorSum a = random_sum(rng, 4, 6), b = random_sum(rng, 4, 6), c = random_sum(rng, 4, 6);
    EXPECT_LT(residual((a * b) * c, a * (b * c)), 1e-13);
    OperatorSum jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    EXPECT_LT(frobenius_norm(jac) / std::max(1.0, frobenius_norm(a) * frobenius_norm(b) * frobenius_norm(c)), 1e-13);
    EXPECT_LT(residual(adjoint(a * b), adjoint(b) * adjoint(a)), 1e-13);
    EXPECT_LT(residual(a * (b + c), a * b + a * c), 1e-13);
  }
}

TEST(Pauli, CommuteFlagMatchesProducts) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::uint64_t> bits(0, 63);
  for (int trial = 0; trial < 200; ++trial) {
    PauliString p{bits(rng), bits(rng)}, q{bits(rng), bits(rng)};
    PauliProduct pq = pauli_mul(p, q), qp = pauli_mul(q, p);
    EXPECT_EQ(pq.word, qp.word);
    EXPECT_EQ(pauli_commute(p, q), pq.phase == qp.phase);
  }
}

TEST(Eig, Examples) {
  auto z = eig_hermitian(to_dense(word("Z")));
  ASSERT_EQ(z.size(), 2u);
  EXPECT_NEAR(z[0], -1.0, 1e-15);
  EXPECT_NEAR(z[1], 1.0, 1e-15);
  for (double e : eig_hermitian(to_dense(OperatorSum::identity(2)))) EXPECT_NEAR(e, 1.0, 1e-15);
  DenseOperator bad(2, 2);
  bad << 0, 1, 0, 0;
  EXPECT_THROW(eig_hermitian(bad), std::invalid_argument);
}

TEST(Eig, AscendingAndDeterministic) {
  std::mt19937 rng(10);
  OperatorSum a = random_sum(rng, 4, 10);
  DenseOperator h = to_dense(a + adjoint(a));
  auto e1 = eig_hermitian(h), e2 = eig_hermitian(h);
  EXPECT_EQ(e1, e2);
  EXPECT_TRUE(std::is_sorted(e1.begin(), e1.end()));
  double trace = h.trace().real(), sum = 0.0;
  for (double e : e1) sum += e;
  EXPECT_NEAR(sum, trace, 1e-10);
}

TEST(Dense, SizeGuard) {
  EXPECT_THROW(to_dense(OperatorSum::identity(kDenseMaxSites + 1)), std::length_error);
}

}  // namespace
}  // namespace qvir
