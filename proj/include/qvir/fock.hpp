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

#ifndef QVIR_FOCK_HPP_
#define QVIR_FOCK_HPP_

#include <map>
#include <string>
#include <vector>

#include "qvir/check.hpp"
#include "qvir/lattice.hpp"
#include "qvir/qnum.hpp"

namespace qvir {

// Mode indices and depths are stored doubled so that half-integers are ints:
// "twice" values are odd in the delta = 1 sector and even in delta = 0.

// Partition state prod_k psi_{-k} |hw>, depths strictly decreasing.
// delta = 1: |hw> = |0>, spin = 0.  delta = 0: |hw> = |1/16>_spin, spin = +-1.
struct FockState {
  std::vector<int> parts;  // twice the depths, strictly decreasing, positive
  int spin = 0;

  int level2() const;
  std::string label(int delta) const;
  auto operator<=>(const FockState&) const = default;
};

class FockVector {
 public:
  using Terms = std::map<FockState, cplx>;

  FockVector(int delta, int cap2);
  // |0> for delta = 1, |1/16>_spin for delta = 0.
  static FockVector highest_weight(int delta, int cap, int spin = +1);
  static FockVector basis(int delta, int cap, const FockState& s);

  int delta() const { return delta_; }
  int cap2() const { return cap2_; }
  bool lossy() const { return lossy_; }
  void mark_lossy() { lossy_ = true; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  cplx coeff(const FockState& s) const;

  // Adds c|s>, dropping (and flagging) states above the level cap.
  void add(const FockState& s, cplx c);
  void prune(double tol = kPruneTol);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(cplx c);
  double norm() const;

 private:
  int delta_;
  int cap2_;
  bool lossy_ = false;
  Terms terms_;
};

FockVector operator+(const FockVector& a, const FockVector& b);
FockVector operator-(const FockVector& a, const FockVector& b);
FockVector operator*(cplx c, const FockVector& a);

// Builds a partition state from integer labels: delta = 1 label k has depth k - 1/2,
// delta = 0 label k has depth k.
FockState fock_state(int delta, std::vector<int> labels, int spin = 0);

// All partition states up to level2 (both spins for delta = 0).
std::vector<FockState> enumerate_fock_states(int delta, int max_level2);

// psi_n with n = twice_n / 2.
FockVector apply_psi(const FockVector& v, int twice_n);
// L_n = 1/2 sum w psi_a psi_b over the four mode formulas; delta = 0 adds 1/16 to L_0.
FockVector apply_L(const FockVector& v, int n);
// D_n(q) = sum (q^w - q^-w) psi_a psi_b over the same pairs; delta = 0 adds
// (q + 1/q - 2) / (2 (q - 1/q)) to D_0.
FockVector apply_D(const FockVector& v, int n, const QParam& q);
// Constant carried by D_0(q) on the delta = 0 highest weight.
cplx d0_constant(int delta, const QParam& q);
// I_{2k-1} = 2 sum_{n > 0} n^{2k-1} psi_{-n} psi_n.
FockVector apply_I(const FockVector& v, int k);
// sum over all nonzero modes n^j :psi_{-n} psi_n:; equals I_j for odd j and 0 for even j.
FockVector apply_full_power_sum(const FockVector& v, int j);

// 2 sum (n - delta/2)^{2k-1} over the labels n, i.e. 2 sum depth^{2k-1}.
double iom_eigenvalue(const FockState& s, int k);

CheckReport virasoro_comm_check(int n, int m, int delta, int cap, double tol = 1e-12);
// <hw| L_n L_{-n} |hw> against c/24 n(n^2-1) + (2n h for delta = 0).
CheckReport virasoro_vacuum_check(int n, int delta, int cap, double tol = 1e-12);

// Mixed-power D commutator; forms as in the lattice module.
CheckReport dva_comm_check(int n, int m, int alpha, int beta, const QParam& q, int delta, int cap, DvaForm form,
                           double tol = 1e-10);
// [D_n(q), psi_m] against (1/q - q)[n+2m]_q psi_{n+m}; m is twice the mode.
CheckReport fock_dpsi_check(int n, int twice_m, const QParam& q, int delta, int cap, double tol = 1e-10);

// Slope of log |D_n/(2 log q^2) - L_n| against log eps, q = exp(i eps).
// Residual is 2 - slope; passes when the slope is at least 1.8.
CheckReport classical_limit_check(int n, const std::vector<double>& eps_grid, int delta, int cap);
// D_0(q) eigenvalues against sum_{k <= k_max} log^{2k-1}(q^2)/(2k-1)! I_{2k-1}.
CheckReport d0_expansion_check(const QParam& q, int k_max, int delta, int cap, double tol = 1e-8);

// ((1/q - q)[3]_q D_{-2} + sign [2]_q D_{-1}^2)|1/16>_spin; control flips the sign.
CheckReport null_level2_check(const QParam& q, int spin, bool control = false, double tol = 1e-12);

// 20L_-6 + 24L_-4L_-2 + 5L_-3^2, 4L_-6 - 8L_-4L_-2 + L_-3^2, 20L_-6 + 24L_-4L_-2 - 23L_-3^2 on |0>.
std::vector<CheckReport> iom_virasoro_identity_check(int cap = 6, double tol = 1e-12);

CheckReport psi_anticommutator_check(int delta, int cap, double tol = 1e-14);
CheckReport gradedness_check(int delta, int cap, const QParam& q);
CheckReport iom_diagonal_check(int delta, int cap, int k_max, double tol = 1e-12);
CheckReport even_power_sum_check(int delta, int cap, int k, double tol = 1e-12);

}  // namespace qvir

#endif  // QVIR_FOCK_HPP_
