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

#ifndef QVIR_SUITE_HPP_
#define QVIR_SUITE_HPP_

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvir/check.hpp"

namespace qvir {

// Bad command-line or suite configuration; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::string suite = "all";  // lattice, fock or all
  std::vector<int> D_list = {2, 3, 4};
  int cap = 6;
  double tol_op = 1e-10;
  double tol_spec = 1e-9;
  unsigned threads = 0;  // 0: hardware concurrency

  // Throws UsageError.
  void validate() const;
};

struct SuiteResult {
  SuiteConfig config;
  std::vector<CheckReport> checks;
  std::vector<CheckReport> recorded;  // outside the exactness window, never counted
  int total = 0;
  int passed = 0;
  int failed = 0;
  double wall_time_s = 0.0;
};

SuiteResult run_suite(const SuiteConfig& cfg);

// Ordering used for the report: name, then parameters (numeric values compared as numbers).
bool report_less(const CheckReport& a, const CheckReport& b);

// Sorted keys, shortest round-trip floats; non-finite residuals become null.
std::string report_json(const SuiteResult& r, int indent = 2);
void write_report(const SuiteResult& r, const std::string& path);

// A1, A3, A5, A7 -> 1..4; throws UsageError otherwise.
int parse_a_name(const std::string& op);

struct SpectrumGroup {
  double eigenvalue;
  int multiplicity;
  double formula;
  std::string partitions;  // e.g. "∅" or "{1}" or "{1};{2}"
  std::string spin;        // "+", "-" or "±"
};
// Eigenvalues of A_{2n-1} clustered within tol, each paired with its formula value.
std::vector<SpectrumGroup> spectrum_groups(int D, int n, double tol);
// Writes csv or json; returns false when some eigenvalue misses its formula value by more than tol.
bool spectrum_export(const std::string& op, int D, const std::string& format, std::ostream& out, double tol = 1e-9);

// Dense dump of a named operator as CSV, one matrix row per line, "re,im" per entry.
// Specs: D<n> (with power alpha), e<j>, psi<k>, gamma<i>, H<2k-1>, A<2k-1>; underscores allowed.
void dump_operator(const std::string& spec, int power, int D, std::ostream& out);

// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace qvir

#endif  // QVIR_SUITE_HPP_
