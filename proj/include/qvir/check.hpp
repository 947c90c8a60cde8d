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

#ifndef QVIR_CHECK_HPP_
#define QVIR_CHECK_HPP_

#include <map>
#include <string>
#include <utility>

namespace qvir {

// One identity check. Records outside the exactness window carry
// in_window = false; they are reported but never counted.
struct CheckReport {
  std::string name;
  std::map<std::string, std::string> params;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool in_window = true;
  std::string note;

  static CheckReport make(std::string name, std::map<std::string, std::string> params, double residual, double tol) {
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.residual = residual;
    r.tol = tol;
    r.pass = residual <= tol;
    return r;
  }
};

}  // namespace qvir

#endif  // QVIR_CHECK_HPP_
