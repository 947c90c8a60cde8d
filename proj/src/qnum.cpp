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

#include "qvir/qnum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace qvir {

namespace {

constexpr double kUnitTol = 1e-12;

// Reduce num/den to lowest terms with the angle folded into (-1, 1].
void normalize(std::int64_t& num, std::int64_t& den) {
  if (den == 0) throw std::invalid_argument("QParam: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t period = 2 * den;
  num %= period;
  if (num <= -den) num += period;
  if (num > den) num -= period;
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

}  // namespace

QParam QParam::exact(std::int64_t num, std::int64_t den) {
  QParam q;
  q.kind_ = Kind::kExact;
  normalize(num, den);
  q.num_ = num;
  q.den_ = den;
  double theta = std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  // Snap the common axis values so that sin/cos come out exact.
  if (num == 0) {
    q.value_ = {1.0, 0.0};
  } else if (den == 1) {
    q.value_ = {-1.0, 0.0};
  } else if (den == 2) {
    q.value_ = {0.0, num > 0 ? 1.0 : -1.0};
  } else {
    q.value_ = std::polar(1.0, theta);
  }
  return q;
}

QParam QParam::from_angle(double theta) {
  QParam q;
  q.kind_ = Kind::kGeneric;
  q.value_ = std::polar(1.0, theta);
  return q;
}

QParam QParam::generic(cplx value) {
  double r = std::abs(value);
  if (r == 0.0 || !std::isfinite(r)) throw std::invalid_argument("QParam: value must be nonzero and finite");
  QParam q;
  q.kind_ = Kind::kGeneric;
  q.value_ = value / r;
  return q;
}

double QParam::angle() const {
  if (is_exact()) return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return std::arg(value_);
}

bool QParam::degenerate() const {
  if (is_exact()) return den_ == 1;
  return std::abs(value_ - 1.0) <= kUnitTol || std::abs(value_ + 1.0) <= kUnitTol;
}

std::string QParam::to_string() const {
  std::ostringstream os;
  if (is_exact()) {
    os << "exp(i*pi*" << num_ << "/" << den_ << ")";
  } else {
    os.precision(17);
    os << "exp(i*" << angle() << ")";
  }
  return os.str();
}

cplx q_int(int n, const QParam& q) {
  if (q.degenerate()) throw DegenerateParameter("q_int: q = +-1 is degenerate (" + q.to_string() + ")");
  if (n == 0) return {0.0, 0.0};
  if (n == 1) return {1.0, 0.0};
  if (q.is_exact()) {
    // sin(n t)/sin(t) with the argument reduced exactly.
    std::int64_t den = q.den();
    std::int64_t num = (static_cast<std::int64_t>(n) * q.num()) % (2 * den);
    double t = std::numbers::pi * static_cast<double>(q.num()) / static_cast<double>(den);
    double nt = std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    double s = (num % den == 0) ? 0.0 : std::sin(nt);
    return {s / std::sin(t), 0.0};
  }
  return q_int(n, q.value());
}

cplx q_int(int n, cplx q) {
  if (std::abs(q - 1.0) <= kUnitTol || std::abs(q + 1.0) <= kUnitTol)
    throw DegenerateParameter("q_int: q = +-1 is degenerate");
  cplx qi = 1.0 / q;
  return (std::pow(qi, n) - std::pow(q, n)) / (qi - q);
}

cplx q_sym(const QParam& q, int j) {
  QParam qj = q_power(q, j);
  if (qj.is_exact() && (qj.num() == 0 || qj.den() == 1)) return {0.0, 0.0};
  return {0.0, 2.0 * std::sin(qj.angle())};
}

QIntExpansion q_int_expansion(std::int64_t n) {
  std::int64_t num = n * (n * n - 1);
  std::int64_t den = 6;
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {n, num, den};
}

QParam lattice_q(int D) {
  if (D < 2) throw std::invalid_argument("lattice_q: D must be at least 2");
  return QParam::exact(1, 2 * static_cast<std::int64_t>(D));
}

QParam q_power(const QParam& q, int a) {
  if (q.is_exact()) return QParam::exact(q.num() * a, q.den());
  return QParam::from_angle(q.angle() * a);
}

}  // namespace qvir
