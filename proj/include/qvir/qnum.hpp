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

#ifndef QVIR_QNUM_HPP_
#define QVIR_QNUM_HPP_

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qvir {

using cplx = std::complex<double>;

// Thrown whenever a formula would divide by q - 1/q with q = +-1.
class DegenerateParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unit-modulus deformation parameter. Exact values are stored as a reduced
// rational multiple of pi so that powers never drift off the unit circle.
class QParam {
 public:
  enum class Kind { kExact, kGeneric };

  // q = exp(i*pi*num/den).
  static QParam exact(std::int64_t num, std::int64_t den);
  // q = exp(i*theta).
  static QParam from_angle(double theta);
  // Any complex number; normalized onto the unit circle.
  static QParam generic(cplx value);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::kExact; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  cplx value() const { return value_; }
  double angle() const;

  // True when q = +1 or q = -1 (within 1e-12 for generic parameters).
  bool degenerate() const;

  std::string to_string() const;

 private:
  QParam() = default;
  Kind kind_ = Kind::kGeneric;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  cplx value_{1.0, 0.0};
};

// [n]_q = (q^-n - q^n) / (q^-1 - q).
cplx q_int(int n, const QParam& q);
// Same formula for a bare complex argument.
cplx q_int(int n, cplx q);

// q^j - q^-j, i.e. (q - 1/q)[j]_q, evaluated from the angle (no division).
cplx q_sym(const QParam& q, int j);

// Coefficients of [n]_q ~ n + c3 * log^2(q) as q -> 1, with c3 = n(n^2-1)/6.
struct QIntExpansion {
  std::int64_t leading;
  std::int64_t cubic_num;
  std::int64_t cubic_den;
  double cubic() const { return static_cast<double>(cubic_num) / cubic_den; }
};
QIntExpansion q_int_expansion(std::int64_t n);

// exp(i*pi/(2D)).
QParam lattice_q(int D);

// q^a, exact inputs stay exact.
QParam q_power(const QParam& q, int a);

}  // namespace qvir

#endif  // QVIR_QNUM_HPP_
