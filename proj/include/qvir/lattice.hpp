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

#ifndef QVIR_LATTICE_HPP_
#define QVIR_LATTICE_HPP_

#include <utility>
#include <vector>

#include "qvir/check.hpp"
#include "qvir/pauli.hpp"
#include "qvir/qnum.hpp"

namespace qvir {

// Periodic chain of 2D Majorana generators on D qubits at q = exp(i pi / 2D).
// All Clifford and mode indices are read mod 2D.
class LatticeContext {
 public:
  explicit LatticeContext(int D);

  int D() const { return D_; }
  int sites() const { return D_; }
  const QParam& q() const { return q_; }

  // Gamma_i, i in Z (1-based, mod 2D).
  const OperatorSum& gamma(int i) const { return gamma_[wrap(i - 1)]; }
  // e_j = 1/sqrt2 + i sqrt2 Gamma_j Gamma_{j+1}.
  const OperatorSum& tl(int j) const { return tl_[wrap(j - 1)]; }
  // psi_k = (2D)^{-1/2} sum_j Gamma_j exp(i j k pi / D).
  const OperatorSum& psi(int k) const { return psi_[wrap(k)]; }
  OperatorSum identity(cplx c = 1.0) const { return OperatorSum::identity(D_, c); }

  int wrap(int i) const {
    int p = 2 * D_;
    return ((i % p) + p) % p;
  }

 private:
  int D_;
  QParam q_;
  std::vector<OperatorSum> gamma_;
  std::vector<OperatorSum> tl_;
  std::vector<OperatorSum> psi_;
};

std::vector<OperatorSum> build_gammas(int D);
std::vector<OperatorSum> build_tl(const LatticeContext& ctx);
// psi_0 .. psi_{2D-1}.
std::vector<OperatorSum> build_fermi_modes(const LatticeContext& ctx);

// {Gamma_i, Gamma_j} = delta_ij over all 2D generators.
CheckReport clifford_check(const LatticeContext& ctx, double tol = 1e-12);
// e_i^2 = sqrt2 e_i, e_i e_{i+-1} e_i = e_i, [e_i, e_j] = 0 for |i - j| >= 2 on the ring.
// One report per relation family.
std::vector<CheckReport> tl_check(const LatticeContext& ctx, double tol = 1e-12);
// {psi_n, psi_m} = delta_{n+m mod 2D, 0} and psi_n^dagger = psi_{-n}.
std::vector<CheckReport> psi_mode_check(const LatticeContext& ctx, double tol = 1e-12);

// D_n(q^alpha) on the lattice:
//   1/2 sum_{s=1}^{2D} (x^j - x^-j) psi_a psi_b  -  delta_{n,0} / (x - 1/x),   x = q^alpha,
// with (a, b, j) = (k-s, k+s, 2s) for n = 2k and (k+1-s, k+s, 2s-1) for n = 2k+1.
// Throws DegenerateParameter when x = +-1.
OperatorSum lattice_D(const LatticeContext& ctx, int n, int alpha);

// Right-hand side of the D-commutator relation.
//   kPrinted:  alpha == beta uses the equal-q form
//                (x - 1/x)[n-m]_x D_{n+m}(x^2) + ([n]_{x^2} - n) delta_{n+m,0},  x = q^alpha;
//              otherwise the mixed-power form
//                (q - 1/q)[a m - b n]_q D_{n+m}(q^{a+b}) - (q - 1/q)[a m + b n]_q D_{n+m}(q^{a-b})
//                + ([m]_{q^{a+b}} - [m]_{q^{a-b}}) delta_{n+m,0}.
//   kReversed: minus the mixed-power form (the bracket taken in the other order),
//              with the a == b term D_{n+m}(q^0) replaced by its limit.
enum class DvaForm { kPrinted, kReversed };
OperatorSum lattice_dva_rhs(const LatticeContext& ctx, int n, int m, int alpha, int beta, DvaForm form);

// Window guard for commutator checks on the ring.
bool lattice_in_window(const LatticeContext& ctx, int n, int m);

CheckReport comm_check_general(const LatticeContext& ctx, int n, int m, int alpha, int beta,
                               DvaForm form = DvaForm::kPrinted, double tol = 1e-10);

// [D_n(q), psi_m] against (1/q - q)[n+2m]_q psi_{n+m}.
CheckReport dpsi_check(const LatticeContext& ctx, int n, int m, double tol = 1e-10);

// H_{2k-1} = sqrt2 sum_{n=1}^{2D} [e_n, [e_{n+1}, ..., e_{n+2k-2}]].
OperatorSum build_H(const LatticeContext& ctx, int k);

// A_{2k-1} = h_k H_{2k-1} + sum_{m=1}^{k-1} c_{k,m} A_{2(k-m)-1}  (- 2D for k = 1).
struct ARecursion {
  double h;
  std::vector<double> c;  // c[m-1] multiplies A_{2(k-m)-1}
};
ARecursion a_recursion(int k);
OperatorSum build_A(const LatticeContext& ctx, int k);
// A_1 .. A_{2k-1} in one pass.
std::vector<OperatorSum> build_A_tower(const LatticeContext& ctx, int k);

// 2 (4n-4)!! sum_{k=1}^{2D} sin^{2n-1}(pi k / D) psi_{-k} psi_k.
OperatorSum A_via_modes(const LatticeContext& ctx, int n);
// i (4n-4)!!/2^{2n-3} sum_k binom(2n-1,k) (-1)^{n-k-1} (D_0(q^{2(n-k)-1}) + 1/(q^{..} - q^{-..})).
OperatorSum A_via_D0(const LatticeContext& ctx, int n);

double double_factorial(int n);

// build_A(n) against A_via_modes(n), A_via_D0(n) and -A_via_D0(n) (the conjugate prefactor).
std::vector<CheckReport> a_equality_check(const LatticeContext& ctx, int n, double tol = 1e-9);
// [A_{2i-1}, A_{2j-1}] = 0.
CheckReport a_commute_check(const LatticeContext& ctx, int i, int j, double tol = 1e-9);
// H_{2k-1}^dagger = H_{2k-1}.
CheckReport h_hermitian_check(const LatticeContext& ctx, int k, double tol = 1e-12);

struct SigmaStates {
  StateVector plus;
  StateVector minus;
};
// Joint kernel of psi_{-n} psi_n, 0 < n < D. sigma_+ is the +1 eigenvector of
// 2i psi_0 psi_D inside the kernel, phase fixed so that its largest-modulus
// amplitude is real positive; sigma_- = sqrt2 psi_0 sigma_+.
SigmaStates sigma_states(const LatticeContext& ctx);
// Dimension of the joint kernel (2 for a correct construction).
int sigma_kernel_dim(const LatticeContext& ctx);
CheckReport sigma_check(const LatticeContext& ctx, double tol = 1e-10);

struct LatticePartition {
  std::vector<int> elements;  // strictly increasing, in [1, D]
  int spin = +1;              // +1 or -1

  static LatticePartition make(int D, std::vector<int> elements, int spin);
  std::string label() const;
};

// prod_{k in P} psi_{-k} sigma_spin, largest k applied first; normalized.
StateVector partition_state(const LatticeContext& ctx, const LatticePartition& p);
StateVector partition_state(const LatticeContext& ctx, const LatticePartition& p, const SigmaStates& s);

// 2 (4n-4)!! (2 sum_{k in P} sin^{2n-1}(pi k/D) - sum_{k=1}^{D} sin^{2n-1}(pi k/D)).
double eigvalue_formula(int D, int n, const LatticePartition& p);

// Partitions of {1..D-1} times both spins: 2^D entries.
std::vector<LatticePartition> enumerate_partitions(int D);

struct SpectrumRow {
  double eigenvalue;
  double formula;
  LatticePartition partition;
};
// Dense spectrum of build_A(n) paired with the sorted formula multiset.
std::vector<SpectrumRow> spectrum_rows(const LatticeContext& ctx, int n);
CheckReport spectrum_check(const LatticeContext& ctx, int n, double tol = 1e-9);

// ((1/q - q)[3]_q D_{-2} + sign [2]_q D_{-1}^2) sigma_spin; sign = -1 is the control.
CheckReport null_state_check(const LatticeContext& ctx, int spin, bool control = false, double tol = 1e-10);

}  // namespace qvir

#endif  // QVIR_LATTICE_HPP_
