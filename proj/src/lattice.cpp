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

#include "qvir/lattice.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qvir {

namespace {

using Params = std::map<std::string, std::string>;

const double kSqrt2 = std::numbers::sqrt2;

// floor(a / 2) for possibly negative a.
int floor_half(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

cplx qpow(const QParam& q, int a) { return q_power(q, a).value(); }

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string str(int v) { return std::to_string(v); }

}  // namespace

std::vector<OperatorSum> build_gammas(int D) {
  if (D < 2 || D > kDenseMaxSites) throw std::out_of_range("build_gammas: D must be in [2, 12]");
  std::vector<OperatorSum> g;
  g.reserve(static_cast<std::size_t>(2 * D));
  const double s = 1.0 / kSqrt2;
  for (int j = 0; j < D; ++j) {
    std::uint64_t zs = (std::uint64_t{1} << j) - 1;
    std::uint64_t bit = std::uint64_t{1} << j;
    g.push_back(OperatorSum::term(D, PauliString{bit, zs}, s));
    g.push_back(OperatorSum::term(D, PauliString{bit, zs | bit}, s));
  }
  return g;
}

LatticeContext::LatticeContext(int D) : D_(D), q_(lattice_q(D)) {
  gamma_ = build_gammas(D);
  tl_ = build_tl(*this);
  psi_ = build_fermi_modes(*this);
}

std::vector<OperatorSum> build_tl(const LatticeContext& ctx) {
  std::vector<OperatorSum> e;
  const int N = 2 * ctx.D();
  e.reserve(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) {
    OperatorSum t = ctx.identity(1.0 / kSqrt2);
    t += scale(multiply(ctx.gamma(j), ctx.gamma(j + 1)), cplx{0.0, kSqrt2});
    e.push_back(std::move(t));
  }
  return e;
}

std::vector<OperatorSum> build_fermi_modes(const LatticeContext& ctx) {
  const int D = ctx.D();
  const int N = 2 * D;
  std::vector<OperatorSum> psi;
  psi.reserve(static_cast<std::size_t>(N));
  const double norm = 1.0 / std::sqrt(static_cast<double>(N));
  for (int k = 0; k < N; ++k) {
    OperatorSum p(D);
    for (int j = 1; j <= N; ++j) {
      // exp(i j k pi / D), angle reduced exactly.
      cplx ph = QParam::exact(static_cast<std::int64_t>(j) * k, D).value();
      for (const auto& [w, c] : ctx.gamma(j).terms()) p.add_term(w, norm * ph * c);
    }
    p.prune();
    psi.push_back(std::move(p));
  }
  return psi;
}

CheckReport clifford_check(const LatticeContext& ctx, double tol) {
  const int N = 2 * ctx.D();
  double worst = 0.0;
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j)
      worst = std::max(worst, residual(anticommutator(ctx.gamma(i), ctx.gamma(j)), ctx.identity(i == j ? 1.0 : 0.0)));
  return CheckReport::make("lattice.clifford", {{"D", str(ctx.D())}}, worst, tol);
}

std::vector<CheckReport> tl_check(const LatticeContext& ctx, double tol) {
  const int N = 2 * ctx.D();
  double sq = 0.0, braid = 0.0, far = 0.0;
  for (int i = 1; i <= N; ++i) {
    const OperatorSum& e = ctx.tl(i);
    sq = std::max(sq, residual(multiply(e, e), scale(e, kSqrt2)));
    for (int d : {-1, 1}) braid = std::max(braid, residual(multiply(multiply(e, ctx.tl(i + d)), e), e));
    for (int j = 1; j <= N; ++j) {
      int dist = std::abs(i - j);
      dist = std::min(dist, N - dist);
      if (dist >= 2) far = std::max(far, frobenius_norm(commutator(e, ctx.tl(j))));
    }
  }
  Params p{{"D", str(ctx.D())}};
  return {CheckReport::make("lattice.tl_square", p, sq, tol), CheckReport::make("lattice.tl_braid", p, braid, tol),
          CheckReport::make("lattice.tl_distant", p, far, tol)};
}

std::vector<CheckReport> psi_mode_check(const LatticeContext& ctx, double tol) {
  const int N = 2 * ctx.D();
  double ac = 0.0, adj = 0.0;
  for (int n = 0; n < N; ++n) {
    adj = std::max(adj, residual(adjoint(ctx.psi(n)), ctx.psi(-n)));
    for (int m = 0; m < N; ++m) {
      cplx d = ctx.wrap(n + m) == 0 ? 1.0 : 0.0;
      ac = std::max(ac, residual(anticommutator(ctx.psi(n), ctx.psi(m)), ctx.identity(d)));
    }
  }
  Params p{{"D", str(ctx.D())}};
  return {CheckReport::make("lattice.psi_anticommutator", p, ac, tol),
          CheckReport::make("lattice.psi_adjoint", p, adj, tol)};
}

OperatorSum lattice_D(const LatticeContext& ctx, int n, int alpha) {
  const int D = ctx.D();
  if (std::abs(n) > 2 * D) throw std::out_of_range("lattice_D: |n| must not exceed 2D");
  QParam x = q_power(ctx.q(), alpha);
  if (x.degenerate()) throw DegenerateParameter("lattice_D: q^alpha = +-1 (alpha=" + str(alpha) + ")");
  OperatorSum r(D);
  const bool even = (n % 2 == 0);
  const int k = even ? n / 2 : floor_half(n - 1);
  for (int s = 1; s <= 2 * D; ++s) {
    int a = even ? k - s : k + 1 - s;
    int b = k + s;
    int j = even ? 2 * s : 2 * s - 1;
    // Full-period sum visits every pair twice; the 1/2 compensates.
    cplx w = 0.5 * q_sym(x, j);
    if (w == cplx{}) continue;
    OperatorSum pp = multiply(ctx.psi(a), ctx.psi(b));
    for (const auto& [word, c] : pp.terms()) r.add_term(word, w * c);
  }
  if (n == 0) r.add_term(PauliString::identity(), -1.0 / (x.value() - 1.0 / x.value()));
  r.prune();
  return r;
}

bool lattice_in_window(const LatticeContext& ctx, int n, int m) { return std::abs(n) + std::abs(m) <= ctx.D(); }

OperatorSum lattice_dva_rhs(const LatticeContext& ctx, int n, int m, int alpha, int beta, DvaForm form) {
  const QParam& q = ctx.q();
  const cplx qq = q.value() - 1.0 / q.value();
  const bool diag = (n + m == 0);
  if (form == DvaForm::kPrinted && alpha == beta) {
    QParam x = q_power(q, alpha);
    QParam x2 = q_power(q, 2 * alpha);
    OperatorSum r = scale(lattice_D(ctx, n + m, 2 * alpha), (x.value() - 1.0 / x.value()) * q_int(n - m, x));
    if (diag) r += ctx.identity(q_int(n, x2) - static_cast<double>(n));
    return r;
  }
  QParam xp = q_power(q, alpha + beta);
  OperatorSum r = scale(lattice_D(ctx, n + m, alpha + beta), qq * q_int(alpha * m - beta * n, q));
  cplx c2 = qq * q_int(alpha * m + beta * n, q);
  cplx central = diag ? q_int(m, xp) : cplx{};
  if (alpha == beta) {
    // c2 D_{n+m}(x) -> -m as x -> 1 when n + m = 0, and -> 0 otherwise.
    if (diag) r += ctx.identity(static_cast<double>(m));
    if (diag) central -= static_cast<double>(m);
  } else {
    QParam xm = q_power(q, alpha - beta);
    if (xm.degenerate()) {
      if (std::abs(c2) > 1e-14) throw DegenerateParameter("lattice_dva_rhs: q^(alpha-beta) = +-1 with nonzero weight");
    } else {
      r -= scale(lattice_D(ctx, n + m, alpha - beta), c2);
    }
    if (diag) central -= q_int(m, xm);
  }
  if (diag) r += ctx.identity(central);
  if (form == DvaForm::kReversed) r *= -1.0;
  return r;
}

CheckReport comm_check_general(const LatticeContext& ctx, int n, int m, int alpha, int beta, DvaForm form,
                               double tol) {
  Params p{{"D", str(ctx.D())}, {"n", str(n)}, {"m", str(m)}, {"alpha", str(alpha)}, {"beta", str(beta)}};
  std::string name = form == DvaForm::kPrinted ? "lattice.dva_commutator" : "lattice.dva_commutator_reversed";
  OperatorSum lhs = commutator(lattice_D(ctx, n, alpha), lattice_D(ctx, m, beta));
  OperatorSum rhs = lattice_dva_rhs(ctx, n, m, alpha, beta, form);
  CheckReport r = CheckReport::make(name, std::move(p), residual(lhs, rhs), tol);
  if (!lattice_in_window(ctx, n, m)) {
    r.in_window = false;
    r.pass = false;
    r.note = "outside |n|+|m| <= D";
  }
  return r;
}

CheckReport dpsi_check(const LatticeContext& ctx, int n, int m, double tol) {
  const QParam& q = ctx.q();
  OperatorSum lhs = commutator(lattice_D(ctx, n, 1), ctx.psi(m));
  OperatorSum rhs = scale(ctx.psi(n + m), (1.0 / q.value() - q.value()) * q_int(n + 2 * m, q));
  CheckReport r =
      CheckReport::make("lattice.d_psi_commutator", {{"D", str(ctx.D())}, {"n", str(n)}, {"m", str(m)}},
                        residual(lhs, rhs), tol);
  if (!lattice_in_window(ctx, n, m)) {
    r.in_window = false;
    r.pass = false;
    r.note = "outside |n|+|m| <= D";
  }
  return r;
}

OperatorSum build_H(const LatticeContext& ctx, int k) {
  if (k < 1 || k > 6) throw std::out_of_range("build_H: k must be in [1, 6]");
  const int N = 2 * ctx.D();
  OperatorSum h(ctx.D());
  for (int n = 1; n <= N; ++n) {
    OperatorSum op = ctx.tl(n + 2 * k - 2);
    for (int t = 2 * k - 3; t >= 0; --t) op = commutator(ctx.tl(n + t), op);
    h += op;
  }
  h *= kSqrt2;
  return h;
}

ARecursion a_recursion(int k) {
  if (k < 1) throw std::out_of_range("a_recursion: k must be positive");
  ARecursion r;
  r.h = static_cast<double>(factorial(2 * k - 2) / (std::int64_t{1} << (k - 1)));
  for (int m = 1; m < k; ++m) {
    std::int64_t num = binomial(2 * k - m - 2, m - 1) * (factorial(2 * k - 1) / factorial(2 * k - 2 * m - 2));
    double c = static_cast<double>(num) / m;
    r.c.push_back(m % 2 == 1 ? c : -c);
  }
  return r;
}

std::vector<OperatorSum> build_A_tower(const LatticeContext& ctx, int k) {
  if (k < 1 || k > 6) throw std::out_of_range("build_A: k must be in [1, 6]");
  std::vector<OperatorSum> A;
  for (int j = 1; j <= k; ++j) {
    ARecursion rec = a_recursion(j);
    OperatorSum a = scale(build_H(ctx, j), rec.h);
    if (j == 1) a -= ctx.identity(2.0 * ctx.D());
    for (int m = 1; m < j; ++m) a += scale(A[static_cast<std::size_t>(j - m - 1)], rec.c[static_cast<std::size_t>(m - 1)]);
    A.push_back(std::move(a));
  }
  return A;
}

OperatorSum build_A(const LatticeContext& ctx, int k) { return build_A_tower(ctx, k).back(); }

double double_factorial(int n) {
  double r = 1.0;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

OperatorSum A_via_modes(const LatticeContext& ctx, int n) {
  if (n < 1 || n > 6) throw std::out_of_range("A_via_modes: n must be in [1, 6]");
  const int D = ctx.D();
  OperatorSum a(D);
  const double pre = 2.0 * double_factorial(4 * n - 4);
  for (int k = 1; k <= 2 * D; ++k) {
    // sin(pi k / D) from the exact angle; vanishes at k = D, 2D.
    double s = (k % D == 0) ? 0.0 : std::sin(std::numbers::pi * k / D);
    double w = pre * std::pow(s, 2 * n - 1);
    if (w == 0.0) continue;
    a += scale(multiply(ctx.psi(-k), ctx.psi(k)), w);
  }
  return a;
}

OperatorSum A_via_D0(const LatticeContext& ctx, int n) {
  if (n < 1 || n > 6) throw std::out_of_range("A_via_D0: n must be in [1, 6]");
  const QParam& q = ctx.q();
  OperatorSum a(ctx.D());
  for (int k = 0; k < n; ++k) {
    int p = 2 * (n - k) - 1;
    double c = static_cast<double>(binomial(2 * n - 1, k)) * (((n - k - 1) % 2 == 0) ? 1.0 : -1.0);
    QParam xp = q_power(q, p);
    if (xp.degenerate()) {
      if (c != 0.0) throw DegenerateParameter("A_via_D0: odd power of q hits +-1");
      continue;
    }
    OperatorSum t = lattice_D(ctx, 0, p);
    t += ctx.identity(1.0 / (qpow(q, p) - qpow(q, -p)));
    a += scale(t, c);
  }
  a *= cplx{0.0, double_factorial(4 * n - 4) / std::pow(2.0, 2 * n - 3)};
  return a;
}

std::vector<CheckReport> a_equality_check(const LatticeContext& ctx, int n, double tol) {
  OperatorSum a = build_A(ctx, n);
  OperatorSum d0 = A_via_D0(ctx, n);
  Params p{{"D", str(ctx.D())}, {"n", str(n)}};
  return {CheckReport::make("lattice.a_via_modes", p, residual(a, A_via_modes(ctx, n)), tol),
          CheckReport::make("lattice.a_via_d0", p, residual(a, d0), tol),
          CheckReport::make("lattice.a_via_d0_conjugate", p, residual(a, scale(d0, -1.0)), tol)};
}

CheckReport a_commute_check(const LatticeContext& ctx, int i, int j, double tol) {
  std::vector<OperatorSum> tower = build_A_tower(ctx, std::max(i, j));
  const OperatorSum& a = tower[i - 1];
  const OperatorSum& b = tower[j - 1];
  double r = frobenius_norm(commutator(a, b)) / std::max({1.0, frobenius_norm(a) * frobenius_norm(b)});
  return CheckReport::make("lattice.a_commute", {{"D", str(ctx.D())}, {"i", str(i)}, {"j", str(j)}}, r, tol);
}

CheckReport h_hermitian_check(const LatticeContext& ctx, int k, double tol) {
  OperatorSum h = build_H(ctx, k);
  return CheckReport::make("lattice.h_hermitian", {{"D", str(ctx.D())}, {"k", str(k)}}, residual(h, adjoint(h)), tol);
}

CheckReport sigma_check(const LatticeContext& ctx, double tol) {
  SigmaStates s = sigma_states(ctx);
  double r = std::abs(sigma_kernel_dim(ctx) - 2);
  r = std::max(r, std::abs(s.plus.norm() - 1.0));
  r = std::max(r, std::abs(s.minus.norm() - 1.0));
  r = std::max(r, std::abs(s.plus.dot(s.minus)));
  return CheckReport::make("lattice.sigma_states", {{"D", str(ctx.D())}}, r, tol);
}

int sigma_kernel_dim(const LatticeContext& ctx) {
  OperatorSum N(ctx.D());
  for (int n = 1; n < ctx.D(); ++n) N += multiply(ctx.psi(-n), ctx.psi(n));
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(to_dense(N), Eigen::EigenvaluesOnly);
  int dim = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-9) ++dim;
  return dim;
}

SigmaStates sigma_states(const LatticeContext& ctx) {
  const int D = ctx.D();
  OperatorSum N(D);
  for (int n = 1; n < D; ++n) N += multiply(ctx.psi(-n), ctx.psi(n));
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(to_dense(N));
  std::vector<Eigen::Index> ker;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-9) ker.push_back(i);
  if (ker.size() != 2)
    throw std::runtime_error("sigma_states: kernel dimension is " + std::to_string(ker.size()) + ", expected 2");
  DenseOperator K(es.eigenvectors().rows(), 2);
  K.col(0) = es.eigenvectors().col(ker[0]);
  K.col(1) = es.eigenvectors().col(ker[1]);

  // Zero-mode pair parity 2i psi_0 psi_D, restricted to the kernel.
  DenseOperator P = to_dense(scale(multiply(ctx.psi(0), ctx.psi(D)), cplx{0.0, 2.0}));
  Eigen::Matrix2cd M = K.adjoint() * P * K;
  M = 0.5 * (M + M.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es2(M);
  StateVector plus = K * es2.eigenvectors().col(1);

  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < plus.size(); ++i) {
    double a = std::abs(plus(i));
    if (a > best + 1e-12) {
      best = a;
      imax = i;
    }
  }
  plus *= std::conj(plus(imax)) / std::abs(plus(imax));
  plus.normalize();
  StateVector minus = kSqrt2 * qvir::apply(ctx.psi(0), plus);
  return {plus, minus};
}

LatticePartition LatticePartition::make(int D, std::vector<int> elements, int spin) {
  if (spin != 1 && spin != -1) throw std::invalid_argument("LatticePartition: spin must be +1 or -1");
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1 || elements[i] > D) throw std::invalid_argument("LatticePartition: element outside [1, D]");
    if (i > 0 && elements[i] <= elements[i - 1])
      throw std::invalid_argument("LatticePartition: elements must be strictly increasing");
  }
  return {std::move(elements), spin};
}

std::string LatticePartition::label() const {
  if (elements.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elements[i]);
  }
  return s + "}";
}

StateVector partition_state(const LatticeContext& ctx, const LatticePartition& p, const SigmaStates& s) {
  StateVector v = p.spin > 0 ? s.plus : s.minus;
  for (auto it = p.elements.rbegin(); it != p.elements.rend(); ++it) v = qvir::apply(ctx.psi(-*it), v);
  double nv = v.norm();
  if (nv < 1e-12) throw std::runtime_error("partition_state: state " + p.label() + " is annihilated");
  return v / nv;
}

StateVector partition_state(const LatticeContext& ctx, const LatticePartition& p) {
  return partition_state(ctx, p, sigma_states(ctx));
}

double eigvalue_formula(int D, int n, const LatticePartition& p) {
  auto sp = [&](int k) {
    double s = (k % D == 0) ? 0.0 : std::sin(std::numbers::pi * k / D);
    return std::pow(s, 2 * n - 1);
  };
  double in = 0.0, all = 0.0;
  for (int k : p.elements) in += sp(k);
  for (int k = 1; k <= D; ++k) all += sp(k);
  return 2.0 * double_factorial(4 * n - 4) * (2.0 * in - all);
}

std::vector<LatticePartition> enumerate_partitions(int D) {
  std::vector<LatticePartition> out;
  const int free = D - 1;
  for (int spin : {+1, -1}) {
    for (std::uint32_t mask = 0; mask < (1U << free); ++mask) {
      std::vector<int> el;
      for (int k = 1; k <= free; ++k)
        if (mask & (1U << (k - 1))) el.push_back(k);
      out.push_back(LatticePartition::make(D, std::move(el), spin));
    }
  }
  return out;
}

std::vector<SpectrumRow> spectrum_rows(const LatticeContext& ctx, int n) {
  DenseOperator a = to_dense(build_A(ctx, n));
  DenseOperator ah = 0.5 * (a + a.adjoint());
  std::vector<double> ev = eig_hermitian(ah);
  std::vector<SpectrumRow> f;
  for (const auto& p : enumerate_partitions(ctx.D())) f.push_back({0.0, eigvalue_formula(ctx.D(), n, p), p});
  std::stable_sort(f.begin(), f.end(), [](const SpectrumRow& x, const SpectrumRow& y) { return x.formula < y.formula; });
  if (f.size() != ev.size()) throw std::runtime_error("spectrum_rows: cardinality mismatch");
  for (std::size_t i = 0; i < f.size(); ++i) f[i].eigenvalue = ev[i];
  return f;
}

CheckReport spectrum_check(const LatticeContext& ctx, int n, double tol) {
  Params p{{"D", str(ctx.D())}, {"n", str(n)}};
  DenseOperator a = to_dense(build_A(ctx, n));
  std::vector<double> ev = eig_hermitian(0.5 * (a + a.adjoint()));
  std::vector<double> f;
  for (const auto& part : enumerate_partitions(ctx.D())) f.push_back(eigvalue_formula(ctx.D(), n, part));
  std::sort(f.begin(), f.end());
  if (f.size() != ev.size()) {
    CheckReport r = CheckReport::make("lattice.spectrum", p, INFINITY, tol);
    r.note = "cardinality " + std::to_string(f.size()) + " vs " + std::to_string(ev.size());
    return r;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(f[i] - ev[i]));
  return CheckReport::make("lattice.spectrum", p, worst, tol);
}

CheckReport null_state_check(const LatticeContext& ctx, int spin, bool control, double tol) {
  const QParam& q = ctx.q();
  OperatorSum d1 = lattice_D(ctx, -1, 1);
  OperatorSum op = scale(lattice_D(ctx, -2, 1), (1.0 / q.value() - q.value()) * q_int(3, q));
  op += scale(multiply(d1, d1), (control ? -1.0 : 1.0) * q_int(2, q));
  SigmaStates s = sigma_states(ctx);
  StateVector v = qvir::apply(op, spin > 0 ? s.plus : s.minus);
  Params p{{"D", str(ctx.D())}, {"spin", spin > 0 ? "+" : "-"}};
  if (!control) return CheckReport::make("lattice.null_state", p, v.norm(), tol);
  // The control passes when its norm exceeds 0.1, i.e. 1/norm <= 10.
  CheckReport r = CheckReport::make("lattice.null_state_control", p, 1.0 / v.norm(), 10.0);
  r.note = "residual is 1/norm";
  return r;
}

}  // namespace qvir
