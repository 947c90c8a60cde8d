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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qvir {

namespace {

using Params = std::map<std::string, std::string>;

std::string str(int v) { return std::to_string(v); }

std::string str(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_delta(int delta) {
  if (delta != 0 && delta != 1) throw std::invalid_argument("sector delta must be 0 or 1");
}

int floor_half(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

double rel_diff(const FockVector& a, const FockVector& b) {
  double na = a.norm(), nb = b.norm();
  return (a - b).norm() / std::max({1.0, na, nb});
}

// One bilinear term w * psi_{A/2} psi_{B/2} (doubled indices).
struct Pair {
  int A;
  int B;
  int w;
};

// The four simplified mode formulas, truncated where psi_B can no longer act.
std::vector<Pair> bilinear_pairs(int delta, int n, int max_part) {
  std::vector<Pair> out;
  const bool even = (n % 2 == 0);
  const int k = even ? n / 2 : floor_half(n - 1);
  for (int S = (delta == 0 ? 2 : 1);; S += 2) {
    Pair p{};
    if (delta == 0) {
      if (even) p = {2 * k - S, 2 * k + S, S};
      else p = {2 * k - S + 2, 2 * k + S, S - 1};
    } else {
      if (even) p = {2 * k - S, 2 * k + S, S};
      else p = {2 * k - S, 2 * k + S + 2, S + 1};
    }
    if (p.B > 0 && p.B > max_part) break;
    out.push_back(p);
  }
  return out;
}

int max_part(const FockVector& v) {
  int m = 0;
  for (const auto& kv : v.terms())
    if (!kv.first.parts.empty()) m = std::max(m, kv.first.parts.front());
  return m;
}

FockVector apply_bilinear(const FockVector& v, int n, const std::function<cplx(int)>& weight) {
  FockVector out(v.delta(), v.cap2());
  if (v.lossy()) out.mark_lossy();
  for (const Pair& p : bilinear_pairs(v.delta(), n, max_part(v))) {
    cplx w = weight(p.w);
    if (w == cplx{}) continue;
    FockVector t = apply_psi(apply_psi(v, p.B), p.A);
    t *= w;
    out += t;
  }
  return out;
}

// Window basis: states with level2 <= limit2.
std::vector<FockVector> window_basis(int delta, int cap, int limit2) {
  std::vector<FockVector> out;
  for (const auto& s : enumerate_fock_states(delta, limit2)) out.push_back(FockVector::basis(delta, cap, s));
  return out;
}

int window_limit2(int cap, int shift) { return 2 * cap - 2 * shift; }

CheckReport lossy_report(const std::string& name, Params p, double tol) {
  CheckReport r = CheckReport::make(name, std::move(p), INFINITY, tol);
  r.note = "truncation reached inside the window";
  return r;
}

}  // namespace

int FockState::level2() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string FockState::label(int delta) const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    if (parts[i] % 2 == 0) os << parts[i] / 2;
    else os << parts[i] << "/2";
  }
  os << "}";
  if (delta == 0) os << (spin > 0 ? "+" : "-");
  return os.str();
}

FockVector::FockVector(int delta, int cap2) : delta_(delta), cap2_(cap2) {
  check_delta(delta);
  if (cap2 < 0) throw std::invalid_argument("FockVector: negative level cap");
}

FockVector FockVector::highest_weight(int delta, int cap, int spin) {
  FockVector v(delta, 2 * cap);
  FockState s;
  s.spin = delta == 0 ? (spin >= 0 ? 1 : -1) : 0;
  v.add(s, 1.0);
  return v;
}

FockVector FockVector::basis(int delta, int cap, const FockState& s) {
  FockVector v(delta, 2 * cap);
  v.add(s, 1.0);
  if (v.lossy()) throw std::invalid_argument("FockVector::basis: state above level cap");
  return v;
}

cplx FockVector::coeff(const FockState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{} : it->second;
}

void FockVector::add(const FockState& s, cplx c) {
  if (s.level2() > cap2_) {
    lossy_ = true;
    return;
  }
  terms_[s] += c;
}

void FockVector::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (o.delta_ != delta_) throw std::invalid_argument("FockVector: sector mismatch");
  for (const auto& [s, c] : o.terms_) add(s, c);
  lossy_ = lossy_ || o.lossy_;
  prune();
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (o.delta_ != delta_) throw std::invalid_argument("FockVector: sector mismatch");
  for (const auto& [s, c] : o.terms_) add(s, -c);
  lossy_ = lossy_ || o.lossy_;
  prune();
  return *this;
}

FockVector& FockVector::operator*=(cplx c) {
  for (auto& kv : terms_) kv.second *= c;
  prune();
  return *this;
}

double FockVector::norm() const {
  double s = 0.0;
  for (const auto& kv : terms_) s += std::norm(kv.second);
  return std::sqrt(s);
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  FockVector r = a;
  r += b;
  return r;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
  FockVector r = a;
  r -= b;
  return r;
}

FockVector operator*(cplx c, const FockVector& a) {
  FockVector r = a;
  r *= c;
  return r;
}

FockState fock_state(int delta, std::vector<int> labels, int spin) {
  check_delta(delta);
  FockState s;
  for (int k : labels) {
    if (k < 1) throw std::invalid_argument("fock_state: labels must be positive");
    s.parts.push_back(delta == 1 ? 2 * k - 1 : 2 * k);
  }
  std::sort(s.parts.begin(), s.parts.end(), std::greater<>());
  if (std::adjacent_find(s.parts.begin(), s.parts.end()) != s.parts.end())
    throw std::invalid_argument("fock_state: repeated label");
  s.spin = delta == 0 ? (spin >= 0 ? 1 : -1) : 0;
  return s;
}

std::vector<FockState> enumerate_fock_states(int delta, int max_level2) {
  check_delta(delta);
  std::vector<FockState> out;
  std::vector<int> cur;
  const int first = delta == 1 ? 1 : 2;
  // cur is kept in increasing order during recursion; flip when storing.
  std::function<void(int)> rec_desc = [&](int budget) {
    FockState s;
    s.parts.assign(cur.rbegin(), cur.rend());
    s.spin = delta == 0 ? 1 : 0;
    out.push_back(s);
    if (delta == 0) {
      s.spin = -1;
      out.push_back(s);
    }
    int start = cur.empty() ? first : cur.back() + 2;
    for (int p = start; p <= budget; p += 2) {
      cur.push_back(p);
      rec_desc(budget - p);
      cur.pop_back();
    }
  };
  rec_desc(max_level2);
  std::sort(out.begin(), out.end(), [](const FockState& a, const FockState& b) {
    if (a.level2() != b.level2()) return a.level2() < b.level2();
    return a < b;
  });
  return out;
}

FockVector apply_psi(const FockVector& v, int t) {
  const int delta = v.delta();
  if (((t % 2) + 2) % 2 != (delta == 1 ? 1 : 0))
    throw std::invalid_argument("apply_psi: mode index does not belong to the sector");
  FockVector out(delta, v.cap2());
  if (v.lossy()) out.mark_lossy();
  for (const auto& [s, c] : v.terms()) {
    const auto& P = s.parts;
    if (t < 0) {
      int d = -t;
      auto it = std::lower_bound(P.begin(), P.end(), d, std::greater<>());
      if (it != P.end() && *it == d) continue;
      int pos = static_cast<int>(it - P.begin());
      FockState ns = s;
      ns.parts.insert(ns.parts.begin() + pos, d);
      out.add(ns, (pos % 2 ? -1.0 : 1.0) * c);
    } else if (t > 0) {
      auto it = std::lower_bound(P.begin(), P.end(), t, std::greater<>());
      if (it == P.end() || *it != t) continue;
      int pos = static_cast<int>(it - P.begin());
      FockState ns = s;
      ns.parts.erase(ns.parts.begin() + pos);
      out.add(ns, (pos % 2 ? -1.0 : 1.0) * c);
    } else {
      // Zero mode: passes every creation factor, then swaps the spin label.
      FockState ns = s;
      ns.spin = -s.spin;
      double sign = (P.size() % 2) ? -1.0 : 1.0;
      out.add(ns, sign * (1.0 / std::numbers::sqrt2) * c);
    }
  }
  out.prune();
  return out;
}

FockVector apply_L(const FockVector& v, int n) {
  FockVector out = apply_bilinear(v, n, [](int w) { return cplx{0.5 * w, 0.0}; });
  if (n == 0 && v.delta() == 0) out += (1.0 / 16.0) * v;
  return out;
}

cplx d0_constant(int delta, const QParam& q) {
  if (delta == 1) return {0.0, 0.0};
  if (q.degenerate()) throw DegenerateParameter("d0_constant: q = +-1");
  cplx x = q.value();
  return (x + 1.0 / x - 2.0) / (2.0 * (x - 1.0 / x));
}

FockVector apply_D(const FockVector& v, int n, const QParam& q) {
  if (q.degenerate()) throw DegenerateParameter("apply_D: q = +-1 is degenerate");
  FockVector out = apply_bilinear(v, n, [&q](int w) { return q_sym(q, w); });
  if (n == 0 && v.delta() == 0) out += d0_constant(0, q) * v;
  return out;
}

FockVector apply_I(const FockVector& v, int k) {
  if (k < 1) throw std::invalid_argument("apply_I: k must be positive");
  FockVector out(v.delta(), v.cap2());
  if (v.lossy()) out.mark_lossy();
  const int mp = max_part(v);
  for (int t = (v.delta() == 1 ? 1 : 2); t <= mp; t += 2) {
    FockVector x = apply_psi(apply_psi(v, t), -t);
    x *= 2.0 * std::pow(0.5 * t, 2 * k - 1);
    out += x;
  }
  return out;
}

FockVector apply_full_power_sum(const FockVector& v, int j) {
  if (j < 1) throw std::invalid_argument("apply_full_power_sum: power must be positive");
  FockVector out(v.delta(), v.cap2());
  if (v.lossy()) out.mark_lossy();
  const int mp = max_part(v);
  for (int t = (v.delta() == 1 ? 1 : 2); t <= mp; t += 2) {
    double w = std::pow(0.5 * t, j);
    // n > 0: psi_{-n} psi_n.  n < 0: :psi_{n'} psi_{-n'}: = -psi_{-n'} psi_{n'} with n' = -n.
    FockVector pos = apply_psi(apply_psi(v, t), -t);
    FockVector x = w * pos;
    double wneg = std::pow(-0.5 * t, j);
    x -= wneg * pos;
    out += x;
  }
  return out;
}

double iom_eigenvalue(const FockState& s, int k) {
  double r = 0.0;
  for (int p : s.parts) r += std::pow(0.5 * p, 2 * k - 1);
  return 2.0 * r;
}

CheckReport virasoro_comm_check(int n, int m, int delta, int cap, double tol) {
  Params p{{"delta", str(delta)}, {"n", str(n)}, {"m", str(m)}, {"cap", str(cap)}};
  const int lim = window_limit2(cap, std::abs(n) + std::abs(m));
  if (lim < 0) throw std::invalid_argument("virasoro_comm_check: window is empty");
  double worst = 0.0;
  for (const FockVector& v : window_basis(delta, cap, lim)) {
    FockVector lhs = apply_L(apply_L(v, m), n) - apply_L(apply_L(v, n), m);
    FockVector rhs = static_cast<double>(n - m) * apply_L(v, n + m);
    if (n + m == 0) rhs += (n * (n * n - 1) / 24.0) * v;
    if (lhs.lossy() || rhs.lossy()) return lossy_report("fock.virasoro", p, tol);
    worst = std::max(worst, rel_diff(lhs, rhs));
  }
  return CheckReport::make("fock.virasoro", p, worst, tol);
}

CheckReport virasoro_vacuum_check(int n, int delta, int cap, double tol) {
  Params p{{"delta", str(delta)}, {"n", str(n)}, {"cap", str(cap)}};
  FockVector hw = FockVector::highest_weight(delta, cap);
  FockVector x = apply_L(apply_L(hw, -n), n);
  double h = delta == 0 ? 1.0 / 16.0 : 0.0;
  double expect = n * (n * n - 1) / 24.0 + 2.0 * n * h;
  double got_re = x.coeff(hw.terms().begin()->first).real();
  double err = std::abs(x.coeff(hw.terms().begin()->first) - expect);
  if (x.lossy()) return lossy_report("fock.virasoro_vacuum", p, tol);
  CheckReport r = CheckReport::make("fock.virasoro_vacuum", p, err, tol);
  r.note = "value " + str(got_re);
  return r;
}

namespace {

// Right-hand side of the D commutator on a state; forms as in the lattice module.
FockVector dva_rhs(const FockVector& v, int n, int m, int alpha, int beta, const QParam& q, DvaForm form) {
  const bool diag = (n + m == 0);
  const cplx qq = q.value() - 1.0 / q.value();
  if (form == DvaForm::kPrinted && alpha == beta) {
    QParam x = q_power(q, alpha);
    FockVector r = (x.value() - 1.0 / x.value()) * q_int(n - m, x) * apply_D(v, n + m, q_power(q, 2 * alpha));
    if (diag) r += (q_int(n, q_power(q, 2 * alpha)) - static_cast<double>(n)) * v;
    return r;
  }
  QParam xp = q_power(q, alpha + beta);
  FockVector r = qq * q_int(alpha * m - beta * n, q) * apply_D(v, n + m, xp);
  cplx central = diag ? q_int(m, xp) : cplx{};
  if (alpha == beta) {
    // D_{n+m}(x) -> 0 as x -> 1 in both sectors.
    if (diag) central -= static_cast<double>(m);
  } else {
    QParam xm = q_power(q, alpha - beta);
    cplx c2 = qq * q_int(alpha * m + beta * n, q);
    if (xm.degenerate()) {
      if (std::abs(c2) > 1e-14) throw DegenerateParameter("dva_rhs: q^(alpha-beta) = +-1 with nonzero weight");
    } else {
      r -= c2 * apply_D(v, n + m, xm);
    }
    if (diag) central -= q_int(m, xm);
  }
  if (diag) r += central * v;
  if (form == DvaForm::kReversed) r *= -1.0;
  return r;
}

}  // namespace

CheckReport dva_comm_check(int n, int m, int alpha, int beta, const QParam& q, int delta, int cap, DvaForm form,
                           double tol) {
  Params p{{"delta", str(delta)}, {"n", str(n)},         {"m", str(m)},
           {"alpha", str(alpha)}, {"beta", str(beta)},   {"cap", str(cap)},
           {"q", q.to_string()}};
  std::string name = form == DvaForm::kPrinted ? "fock.dva_commutator" : "fock.dva_commutator_reversed";
  const int lim = window_limit2(cap, std::abs(n) + std::abs(m));
  if (lim < 0) throw std::invalid_argument("dva_comm_check: window is empty");
  QParam qa = q_power(q, alpha), qb = q_power(q, beta);
  double worst = 0.0;
  for (const FockVector& v : window_basis(delta, cap, lim)) {
    FockVector lhs = apply_D(apply_D(v, m, qb), n, qa) - apply_D(apply_D(v, n, qa), m, qb);
    FockVector rhs = dva_rhs(v, n, m, alpha, beta, q, form);
    if (lhs.lossy() || rhs.lossy()) return lossy_report(name, p, tol);
    worst = std::max(worst, rel_diff(lhs, rhs));
  }
  return CheckReport::make(name, p, worst, tol);
}

CheckReport fock_dpsi_check(int n, int twice_m, const QParam& q, int delta, int cap, double tol) {
  Params p{{"delta", str(delta)}, {"n", str(n)}, {"twice_m", str(twice_m)}, {"cap", str(cap)}, {"q", q.to_string()}};
  const int lim = 2 * cap - 2 * std::abs(n) - std::abs(twice_m);
  if (lim < 0) throw std::invalid_argument("fock_dpsi_check: window is empty");
  // [n + 2m]_q with m = twice_m / 2.
  cplx coef = (1.0 / q.value() - q.value()) * q_int(n + twice_m, q);
  double worst = 0.0;
  for (const FockVector& v : window_basis(delta, cap, lim)) {
    FockVector lhs = apply_D(apply_psi(v, twice_m), n, q) - apply_psi(apply_D(v, n, q), twice_m);
    FockVector rhs = coef * apply_psi(v, twice_m + 2 * n);
    if (lhs.lossy() || rhs.lossy()) return lossy_report("fock.d_psi_commutator", p, tol);
    worst = std::max(worst, rel_diff(lhs, rhs));
  }
  return CheckReport::make("fock.d_psi_commutator", p, worst, tol);
}

CheckReport classical_limit_check(int n, const std::vector<double>& eps_grid, int delta, int cap) {
  Params p{{"delta", str(delta)}, {"n", str(n)}, {"cap", str(cap)}};
  if (eps_grid.size() < 2) throw std::invalid_argument("classical_limit_check: need at least two grid points");
  const int lim = window_limit2(cap, std::abs(n));
  std::vector<double> lx, ly;
  std::string trace;
  for (double eps : eps_grid) {
    QParam q = QParam::from_angle(eps);
    cplx two_log_q2{0.0, 4.0 * eps};
    double worst = 0.0;
    for (const FockVector& v : window_basis(delta, cap, lim)) {
      FockVector d = apply_D(v, n, q);
      d *= 1.0 / two_log_q2;
      FockVector diff = d - apply_L(v, n);
      if (diff.lossy()) return lossy_report("fock.classical_limit", p, 0.2);
      worst = std::max(worst, diff.norm());
    }
    lx.push_back(std::log(eps));
    ly.push_back(std::log(std::max(worst, 1e-300)));
    trace += (trace.empty() ? "" : ";") + str(eps) + ":" + str(worst);
  }
  const double N = static_cast<double>(lx.size());
  double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / N;
  double my = std::accumulate(ly.begin(), ly.end(), 0.0) / N;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  double slope = sxy / sxx;
  p["slope"] = str(slope);
  CheckReport r = CheckReport::make("fock.classical_limit", p, 2.0 - slope, 0.2);
  r.note = "residual is 2 - slope; r(eps) " + trace;
  return r;
}

CheckReport d0_expansion_check(const QParam& q, int k_max, int delta, int cap, double tol) {
  Params p{{"delta", str(delta)}, {"k_max", str(k_max)}, {"cap", str(cap)}, {"q", q.to_string()}};
  const cplx log_q2{0.0, 2.0 * q.angle()};
  const cplx c0 = d0_constant(delta, q);
  double worst = 0.0;
  for (const FockState& s : enumerate_fock_states(delta, 2 * cap)) {
    FockVector v = FockVector::basis(delta, cap, s);
    FockVector d = apply_D(v, 0, q);
    cplx lam = d.coeff(s);
    FockVector off = d - lam * v;
    cplx series{};
    cplx pw = log_q2;
    double fact = 1.0;
    for (int k = 1; k <= k_max; ++k) {
      if (k > 1) {
        pw *= log_q2 * log_q2;
        fact *= (2.0 * k - 2) * (2.0 * k - 1);
      }
      series += pw / fact * iom_eigenvalue(s, k);
    }
    worst = std::max({worst, off.norm(), std::abs(lam - c0 - series)});
  }
  return CheckReport::make("fock.d0_expansion", p, worst, tol);
}

CheckReport null_level2_check(const QParam& q, int spin, bool control, double tol) {
  Params p{{"spin", spin > 0 ? "+" : "-"}, {"q", q.to_string()}};
  FockVector hw = FockVector::highest_weight(0, 3, spin);
  FockVector x = (1.0 / q.value() - q.value()) * q_int(3, q) * apply_D(hw, -2, q);
  x += (control ? -1.0 : 1.0) * q_int(2, q) * apply_D(apply_D(hw, -1, q), -1, q);
  if (!control) return CheckReport::make("fock.null_level2", p, x.norm(), tol);
  CheckReport r = CheckReport::make("fock.null_level2_control", p, 1.0 / x.norm(), 10.0);
  r.note = "residual is 1/norm";
  return r;
}

std::vector<CheckReport> iom_virasoro_identity_check(int cap, double tol) {
  if (cap < 6) throw std::invalid_argument("iom_virasoro_identity_check: cap must be at least 6");
  struct Identity {
    double a, b, c, coef;
    int d1, d2;  // twice the depths of the right-hand pair
  };
  const Identity ids[] = {{20, 24, 5, 112, 11, 1}, {4, -8, 1, 16, 9, 3}, {20, 24, -23, 56, 7, 5}};
  std::vector<CheckReport> out;
  FockVector vac = FockVector::highest_weight(1, cap);
  FockVector l6 = apply_L(vac, -6);
  FockVector l42 = apply_L(apply_L(vac, -2), -4);
  FockVector l33 = apply_L(apply_L(vac, -3), -3);
  for (const auto& id : ids) {
    FockVector lhs = id.a * l6 + id.b * l42 + id.c * l33;
    FockVector state = apply_psi(apply_psi(vac, -id.d2), -id.d1);
    FockVector rhs = id.coef * state;
    Params p{{"a", str(id.a)}, {"b", str(id.b)}, {"c", str(id.c)}, {"coef", str(id.coef)}};
    out.push_back(CheckReport::make("fock.level6_identity", p, rel_diff(lhs, rhs), tol));
    double worst = 0.0;
    const FockState& s = state.terms().begin()->first;
    for (int k = 1; k <= 4; ++k) {
      FockVector ix = apply_I(state, k) - iom_eigenvalue(s, k) * state;
      worst = std::max(worst, ix.norm() / std::max(1.0, std::abs(iom_eigenvalue(s, k))));
    }
    out.push_back(CheckReport::make("fock.level6_eigenstate", {{"coef", str(id.coef)}}, worst, tol));
  }
  return out;
}

CheckReport psi_anticommutator_check(int delta, int cap, double tol) {
  Params p{{"delta", str(delta)}, {"cap", str(cap)}};
  double worst = 0.0;
  const int first = delta == 1 ? 1 : 0;
  std::vector<int> modes;
  for (int t = first; t <= 2 * cap; t += 2) {
    modes.push_back(t);
    if (t != 0) modes.push_back(-t);
  }
  for (int a : modes) {
    for (int b : modes) {
      const int lim = 2 * cap - std::abs(a) - std::abs(b);
      if (lim < 0) continue;
      for (const FockVector& v : window_basis(delta, cap, lim)) {
        FockVector x = apply_psi(apply_psi(v, b), a) + apply_psi(apply_psi(v, a), b);
        if (a + b == 0) x -= v;
        if (x.lossy()) return lossy_report("fock.psi_anticommutator", p, tol);
        worst = std::max(worst, x.norm());
      }
    }
  }
  return CheckReport::make("fock.psi_anticommutator", p, worst, tol);
}

CheckReport gradedness_check(int delta, int cap, const QParam& q) {
  Params p{{"delta", str(delta)}, {"cap", str(cap)}, {"q", q.to_string()}};
  double bad = 0.0;
  for (int n = -3; n <= 3; ++n) {
    const int lim = window_limit2(cap, std::abs(n));
    for (const FockVector& v : window_basis(delta, cap, lim)) {
      const int l2 = v.terms().begin()->first.level2();
      for (const FockVector& w : {apply_L(v, n), apply_D(v, n, q)}) {
        if (w.lossy()) bad += 1.0;
        for (const auto& kv : w.terms())
          if (kv.first.level2() != l2 - 2 * n) bad += 1.0;
      }
    }
  }
  CheckReport r = CheckReport::make("fock.gradedness", p, bad, 0.0);
  r.note = "residual counts misgraded terms";
  return r;
}

CheckReport iom_diagonal_check(int delta, int cap, int k_max, double tol) {
  Params p{{"delta", str(delta)}, {"cap", str(cap)}, {"k_max", str(k_max)}};
  double worst = 0.0;
  for (const FockState& s : enumerate_fock_states(delta, 2 * cap)) {
    FockVector v = FockVector::basis(delta, cap, s);
    for (int k = 1; k <= k_max; ++k) {
      FockVector x = apply_I(v, k);
      for (const auto& [t, c] : x.terms()) {
        // Off-diagonal entries must be exactly zero.
        if (t != s && c != cplx{}) worst = INFINITY;
      }
      double lam = iom_eigenvalue(s, k);
      worst = std::max(worst, std::abs(x.coeff(s) - lam) / std::max(1.0, std::abs(lam)));
    }
  }
  return CheckReport::make("fock.iom_diagonal", p, worst, tol);
}

CheckReport even_power_sum_check(int delta, int cap, int k, double tol) {
  Params p{{"delta", str(delta)}, {"cap", str(cap)}, {"k", str(k)}};
  double worst = 0.0;
  for (const FockState& s : enumerate_fock_states(delta, 2 * cap)) {
    FockVector v = FockVector::basis(delta, cap, s);
    worst = std::max(worst, apply_full_power_sum(v, 2 * k).norm());
  }
  return CheckReport::make("fock.even_power_sum", p, worst, tol);
}

}  // namespace qvir
