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

// Command-line driver: verify, spectrum, dump.
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qvir/suite.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Writes to path, or stdout when path is empty or "-".
template <typename F>
void with_output(const std::string& path, F&& f) {
  if (path.empty() || path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  f(out);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed Virasoro identity checks on the Majorana chain and the free-fermion Fock space"};
  app.require_subcommand(1);

  qvir::SuiteConfig cfg;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "run a check suite and write a JSON report");
  verify->add_option("--suite", cfg.suite, "lattice, fock or all")->required();
  verify->add_option("--D", cfg.D_list, "lattice sizes, comma separated")->delimiter(',');
  verify->add_option("--cap", cfg.cap, "Fock level cap");
  verify->add_option("--tol-op", cfg.tol_op, "operator identity tolerance");
  verify->add_option("--tol-spec", cfg.tol_spec, "spectrum tolerance");
  verify->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  verify->add_option("--out", report_path, "report path (stdout if omitted)");

  std::string op, format = "csv", out_path;
  int D = 2;
  double tol_spec = 1e-9;
  auto* spectrum = app.add_subcommand("spectrum", "export the spectrum of A1, A3, A5 or A7");
  spectrum->add_option("--op", op, "A1, A3, A5 or A7")->required();
  spectrum->add_option("--D", D, "lattice size")->required();
  spectrum->add_option("--format", format, "csv or json");
  spectrum->add_option("--tol-spec", tol_spec, "eigenvalue clustering and agreement tolerance");
  spectrum->add_option("--out", out_path, "output path (stdout if omitted)");

  std::string dump_op;
  int power = 1;
  auto* dump = app.add_subcommand("dump", "write a dense operator as CSV");
  dump->add_option("--op", dump_op, "D<n>, e<j>, psi<k>, gamma<i>, H<2k-1> or A<2k-1>")->required();
  dump->add_option("--power", power, "power alpha for D<n>(q^alpha)");
  dump->add_option("--D", D, "lattice size")->required();
  dump->add_option("--out", out_path, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      cfg.validate();
      qvir::SuiteResult r = qvir::run_suite(cfg);
      with_output(report_path, [&](std::ostream& os) { os << qvir::report_json(r); });
      std::cerr << "checks " << r.total << "  passed " << r.passed << "  failed " << r.failed << "  recorded "
                << r.recorded.size() << "  wall " << r.wall_time_s << " s\n";
      for (const auto& c : r.checks) {
        if (c.pass) continue;
        std::cerr << "FAIL " << c.name;
        for (const auto& [k, v] : c.params) std::cerr << " " << k << "=" << v;
        std::cerr << " residual=" << c.residual << " tol=" << c.tol << "\n";
      }
      return r.failed == 0 ? 0 : kExitFail;
    }
    if (*spectrum) {
      bool ok = true;
      qvir::parse_a_name(op);
      if (format != "csv" && format != "json") throw qvir::UsageError("format must be csv or json");
      std::ostringstream buf;
      ok = qvir::spectrum_export(op, D, format, buf, tol_spec);
      with_output(out_path, [&](std::ostream& os) { os << buf.str(); });
      return ok ? 0 : kExitFail;
    }
    if (*dump) {
      std::ostringstream buf;
      qvir::dump_operator(dump_op, power, D, buf);
      with_output(out_path, [&](std::ostream& os) { os << buf.str(); });
      return 0;
    }
  } catch (const qvir::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
