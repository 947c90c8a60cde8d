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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace qvir {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_sites(const OperatorSum& a, const OperatorSum& b) {
  if (a.site_count() != b.site_count())
    throw std::invalid_argument("OperatorSum: site count mismatch (" + std::to_string(a.site_count()) + " vs " +
                                std::to_string(b.site_count()) + ")");
}

}  // namespace

PauliString PauliString::single(int site, char op) {
  if (site < 0 || site >= kMaxSites) throw std::out_of_range("PauliString: site out of range");
  std::uint64_t bit = std::uint64_t{1} << site;
  switch (op) {
    case 'I': return {};
    case 'X': return {bit, 0};
    case 'Z': return {0, bit};
    case 'Y': return {bit, bit};
    default: throw std::invalid_argument(std::string("PauliString: bad letter ") + op);
  }
}

PauliString PauliString::parse(const std::string& word) {
  if (word.size() > static_cast<std::size_t>(kMaxSites)) throw std::invalid_argument("PauliString: word too long");
  PauliString p;
  for (std::size_t i = 0; i < word.size(); ++i) {
    PauliString s = single(static_cast<int>(i), word[i]);
    p.x |= s.x;
    p.z |= s.z;
  }
  return p;
}

std::string PauliString::to_string(int sites) const {
  std::string s(static_cast<std::size_t>(sites), 'I');
  for (int j = 0; j < sites; ++j) {
    bool bx = (x >> j) & 1U, bz = (z >> j) & 1U;
    s[static_cast<std::size_t>(j)] = bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
  }
  return s;
}

PauliProduct pauli_mul(const PauliString& a, const PauliString& b) {
  // Each word is i^{|x&z|} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{|z1&x2|}.
  PauliString c{a.x ^ b.x, a.z ^ b.z};
  int e = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) + 2 * std::popcount(a.z & b.x) -
          std::popcount(c.x & c.z);
  e = ((e % 4) + 4) % 4;
  return {e, c};
}

bool pauli_commute(const PauliString& a, const PauliString& b) {
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

OperatorSum::OperatorSum(int sites) : sites_(sites) {
  if (sites < 0 || sites > kMaxSites) throw std::out_of_range("OperatorSum: site count out of range");
}

OperatorSum OperatorSum::identity(int sites, cplx c) { return term(sites, PauliString::identity(), c); }

OperatorSum OperatorSum::term(int sites, const PauliString& p, cplx c) {
  OperatorSum s(sites);
  if (sites < kMaxSites && ((p.x | p.z) >> sites) != 0) throw std::out_of_range("OperatorSum: word exceeds site count");
  s.add_term(p, c);
  s.prune();
  return s;
}

cplx OperatorSum::coeff(const PauliString& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? cplx{} : it->second;
}

void OperatorSum::add_term(const PauliString& p, cplx c) { terms_[p] += c; }

void OperatorSum::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& o) {
  check_sites(*this, o);
  for (const auto& [p, c] : o.terms_) terms_[p] += c;
  prune();
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& o) {
  check_sites(*this, o);
  for (const auto& [p, c] : o.terms_) terms_[p] -= c;
  prune();
  return *this;
}

OperatorSum& OperatorSum::operator*=(cplx c) {
  for (auto& kv : terms_) kv.second *= c;
  prune();
  return *this;
}

OperatorSum multiply(const OperatorSum& a, const OperatorSum& b) {
  check_sites(a, b);
  OperatorSum r(a.site_count());
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      PauliProduct pp = pauli_mul(pa, pb);
      assert(pp.phase >= 0 && pp.phase < 4);
      r.add_term(pp.word, kIPow[pp.phase] * ca * cb);
    }
  }
  r.prune();
  return r;
}

OperatorSum add(const OperatorSum& a, const OperatorSum& b) {
  OperatorSum r = a;
  r += b;
  return r;
}

OperatorSum subtract(const OperatorSum& a, const OperatorSum& b) {
  OperatorSum r = a;
  r -= b;
  return r;
}

OperatorSum scale(const OperatorSum& a, cplx c) {
  OperatorSum r = a;
  r *= c;
  return r;
}

OperatorSum commutator(const OperatorSum& a, const OperatorSum& b) {
  // Commuting word pairs cancel exactly; only anticommuting pairs contribute 2ab.
  check_sites(a, b);
  OperatorSum r(a.site_count());
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      if (pauli_commute(pa, pb)) continue;
      PauliProduct pp = pauli_mul(pa, pb);
      r.add_term(pp.word, 2.0 * kIPow[pp.phase] * ca * cb);
    }
  }
  r.prune();
  return r;
}

OperatorSum anticommutator(const OperatorSum& a, const OperatorSum& b) {
  check_sites(a, b);
  OperatorSum r(a.site_count());
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      if (!pauli_commute(pa, pb)) continue;
      PauliProduct pp = pauli_mul(pa, pb);
      r.add_term(pp.word, 2.0 * kIPow[pp.phase] * ca * cb);
    }
  }
  r.prune();
  return r;
}

OperatorSum adjoint(const OperatorSum& a) {
  OperatorSum r(a.site_count());
  for (const auto& [p, c] : a.terms()) r.add_term(p, std::conj(c));
  r.prune();
  return r;
}

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b) { return add(a, b); }
OperatorSum operator-(const OperatorSum& a, const OperatorSum& b) { return subtract(a, b); }
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) { return multiply(a, b); }
OperatorSum operator*(cplx c, const OperatorSum& a) { return scale(a, c); }

double frobenius_norm(const OperatorSum& a) {
  double s = 0.0;
  for (const auto& kv : a.terms()) s += std::norm(kv.second);
  return std::sqrt(s) * std::pow(2.0, 0.5 * a.site_count());
}

double residual(const OperatorSum& a, const OperatorSum& b) {
  double na = frobenius_norm(a), nb = frobenius_norm(b);
  return frobenius_norm(subtract(a, b)) / std::max({1.0, na, nb});
}

DenseOperator to_dense(const OperatorSum& a) {
  int n = a.site_count();
  if (n > kDenseMaxSites)
    throw std::length_error("to_dense: " + std::to_string(n) + " sites exceeds the dense limit of " +
                            std::to_string(kDenseMaxSites));
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : a.terms()) {
    cplx base = kIPow[std::popcount(p.x & p.z) % 4] * c;
    for (std::uint64_t col = 0; col < dim; ++col) {
      double sign = (std::popcount(col & p.z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(col ^ p.x), static_cast<Eigen::Index>(col)) += sign * base;
    }
  }
  return m;
}

StateVector apply(const OperatorSum& a, const StateVector& v) {
  int n = a.site_count();
  if (n >= 63) throw std::length_error("apply: state vector too large");
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(v.size()) != dim) throw std::invalid_argument("apply: dimension mismatch");
  StateVector out = StateVector::Zero(v.size());
  for (const auto& [p, c] : a.terms()) {
    cplx base = kIPow[std::popcount(p.x & p.z) % 4] * c;
    for (std::uint64_t col = 0; col < dim; ++col) {
      cplx vc = v(static_cast<Eigen::Index>(col));
      if (vc == cplx{}) continue;
      double sign = (std::popcount(col & p.z) & 1) ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(col ^ p.x)) += sign * base * vc;
    }
  }
  return out;
}

double frobenius_norm(const DenseOperator& a) { return a.norm(); }

double residual(const DenseOperator& a, const DenseOperator& b) {
  return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

std::vector<double> eig_hermitian(const DenseOperator& m, double herm_tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_hermitian: matrix is not square");
  double dev = (m - m.adjoint()).norm() / std::max(1.0, m.norm());
  if (dev > herm_tol) throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: eigensolver did not converge");
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace qvir
