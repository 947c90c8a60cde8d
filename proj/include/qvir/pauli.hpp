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

#ifndef QVIR_PAULI_HPP_
#define QVIR_PAULI_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qvir/qnum.hpp"

namespace qvir {

using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double kPruneTol = 1e-14;
inline constexpr int kDenseMaxSites = 12;
inline constexpr int kMaxSites = 64;

// A Pauli word without scalar. Site j (0-based) carries
//   I if neither bit is set, X if only x, Z if only z, Y if both.
// The Y factor is the Hermitian one, i.e. Y = i X Z on that site.
struct PauliString {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  static PauliString identity() { return {}; }
  static PauliString single(int site, char op);
  // Parse e.g. "XIZY" with site 0 first.
  static PauliString parse(const std::string& word);

  std::string to_string(int sites) const;
  bool is_identity() const { return x == 0 && z == 0; }
  auto operator<=>(const PauliString&) const = default;
};

// a*b = i^phase * (a xor b).
struct PauliProduct {
  int phase;  // exponent of i, in {0,1,2,3}
  PauliString word;
};
PauliProduct pauli_mul(const PauliString& a, const PauliString& b);

// True when a and b commute as operators.
bool pauli_commute(const PauliString& a, const PauliString& b);

class OperatorSum {
 public:
  using Terms = std::map<PauliString, cplx>;

  explicit OperatorSum(int sites = 0);
  static OperatorSum identity(int sites, cplx c = 1.0);
  static OperatorSum term(int sites, const PauliString& p, cplx c = 1.0);

  int site_count() const { return sites_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  cplx coeff(const PauliString& p) const;

  // Accumulate c*p without pruning; call prune() afterwards.
  void add_term(const PauliString& p, cplx c);
  void prune(double tol = kPruneTol);

  OperatorSum& operator+=(const OperatorSum& o);
  OperatorSum& operator-=(const OperatorSum& o);
  OperatorSum& operator*=(cplx c);

 private:
  int sites_;
  Terms terms_;
};

OperatorSum multiply(const OperatorSum& a, const OperatorSum& b);
OperatorSum add(const OperatorSum& a, const OperatorSum& b);
OperatorSum subtract(const OperatorSum& a, const OperatorSum& b);
OperatorSum scale(const OperatorSum& a, cplx c);
OperatorSum commutator(const OperatorSum& a, const OperatorSum& b);
OperatorSum anticommutator(const OperatorSum& a, const OperatorSum& b);
OperatorSum adjoint(const OperatorSum& a);

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator-(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator*(cplx c, const OperatorSum& a);

// Hilbert-Schmidt norm; Pauli words are orthogonal with norm 2^(D/2).
double frobenius_norm(const OperatorSum& a);
// |a - b|_F / max(1, |a|_F, |b|_F).
double residual(const OperatorSum& a, const OperatorSum& b);

// Basis state index bit j is site j; bit value 0 is the Z = +1 state.
DenseOperator to_dense(const OperatorSum& a);
StateVector apply(const OperatorSum& a, const StateVector& v);

double frobenius_norm(const DenseOperator& a);
double residual(const DenseOperator& a, const DenseOperator& b);

// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> eig_hermitian(const DenseOperator& m, double herm_tol = 1e-10);

}  // namespace qvir

#endif  // QVIR_PAULI_HPP_
