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

#include "qvir/suite.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "qvir/fock.hpp"
#include "qvir/lattice.hpp"

namespace qvir {

namespace {

using Task = std::function<std::vector<CheckReport>()>;
using Params = std::map<std::string, std::string>;

const std::vector<std::pair<int, int>> kPowerPairs = {{1, 1}, {1, 2}, {2, 1}, {1, 3}};
constexpr double kFockAngle = 0.3;

CheckReport recorded(std::string name, Params p, std::string note) {
  CheckReport r = CheckReport::make(std::move(name), std::move(p), std::numeric_limits<double>::quiet_NaN(), 0.0);
  r.pass = false;
  r.in_window = false;
  r.note = std::move(note);
  return r;
}

// Degenerate parameters (q^k = +-1) are recorded instead of counted.
Task guarded(std::string name, Params p, std::function<CheckReport()> f) {
  return [name = std::move(name), p = std::move(p), f = std::move(f)]() -> std::vector<CheckReport> {
    try {
      return {f()};
    } catch (const DegenerateParameter& e) {
      return {recorded(name, p, std::string("degenerate parameter: ") + e.what())};
    }
  };
}

std::string s(int v) { return std::to_string(v); }

void add_lattice_tasks(const SuiteConfig& cfg, int D, std::vector<Task>& tasks) {
  auto ctx = std::make_shared<const LatticeContext>(D);
  const double to = cfg.tol_op, ts = cfg.tol_spec;
  tasks.push_back([ctx, to] { return std::vector<CheckReport>{clifford_check(*ctx, to)}; });
  tasks.push_back([ctx, to] { return tl_check(*ctx, to); });
  tasks.push_back([ctx, to] { return psi_mode_check(*ctx, to); });
  for (int n = -2; n <= 2; ++n) {
    for (int m = -2; m <= 2; ++m) {
      for (auto [a, b] : kPowerPairs) {
        for (DvaForm form : {DvaForm::kPrinted, DvaForm::kReversed}) {
          std::string name = form == DvaForm::kPrinted ? "lattice.dva_commutator" : "lattice.dva_commutator_reversed";
          Params p{{"D", s(D)}, {"n", s(n)}, {"m", s(m)}, {"alpha", s(a)}, {"beta", s(b)}};
          tasks.push_back(guarded(name, p, [=] { return comm_check_general(*ctx, n, m, a, b, form, to); }));
        }
      }
      tasks.push_back([=] { return std::vector<CheckReport>{dpsi_check(*ctx, n, m, to)}; });
    }
  }
  for (int k = 1; k <= 4; ++k) {
    tasks.push_back([=] { return std::vector<CheckReport>{h_hermitian_check(*ctx, k, to)}; });
    tasks.push_back([=] { return a_equality_check(*ctx, k, ts); });
    for (int j = k + 1; j <= 4; ++j) tasks.push_back([=] { return std::vector<CheckReport>{a_commute_check(*ctx, k, j, ts)}; });
  }
  for (int n = 1; n <= 3; ++n) tasks.push_back([=] { return std::vector<CheckReport>{spectrum_check(*ctx, n, ts)}; });
  tasks.push_back([=] { return std::vector<CheckReport>{sigma_check(*ctx, to)}; });
  for (int spin : {1, -1}) {
    Params p{{"D", s(D)}, {"spin", spin > 0 ? "+" : "-"}};
    tasks.push_back(guarded("lattice.null_state", p, [=] { return null_state_check(*ctx, spin, false, to); }));
    tasks.push_back(guarded("lattice.null_state_control", p, [=] { return null_state_check(*ctx, spin, true); }));
  }
}

void add_fock_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks) {
  const int cap = cfg.cap;
  const double to = cfg.tol_op;
  const QParam q = QParam::from_angle(kFockAngle);
  for (int delta : {0, 1}) {
    tasks.push_back([=] { return std::vector<CheckReport>{psi_anticommutator_check(delta, cap, to)}; });
    tasks.push_back([=] { return std::vector<CheckReport>{gradedness_check(delta, cap, q)}; });
    tasks.push_back([=] { return std::vector<CheckReport>{iom_diagonal_check(delta, cap, 4, to)}; });
    for (int k = 1; k <= 3; ++k)
      tasks.push_back([=] { return std::vector<CheckReport>{even_power_sum_check(delta, cap, k, to)}; });
    for (int n = 1; n <= 3; ++n)
      tasks.push_back([=] { return std::vector<CheckReport>{virasoro_vacuum_check(n, delta, cap, to)}; });
    for (int n = -3; n <= 3; ++n) {
      for (int m = -3; m <= 3; ++m) {
        Params base{{"delta", s(delta)}, {"n", s(n)}, {"m", s(m)}, {"cap", s(cap)}};
        if (std::abs(n) + std::abs(m) > cap) {
          tasks.push_back([=] { return std::vector<CheckReport>{recorded("fock.virasoro", base, "window is empty")}; });
          continue;
        }
        tasks.push_back([=] { return std::vector<CheckReport>{virasoro_comm_check(n, m, delta, cap, to)}; });
        for (auto [a, b] : kPowerPairs) {
          for (DvaForm form : {DvaForm::kPrinted, DvaForm::kReversed}) {
            std::string name = form == DvaForm::kPrinted ? "fock.dva_commutator" : "fock.dva_commutator_reversed";
            Params p = base;
            p["alpha"] = s(a);
            p["beta"] = s(b);
            p["q"] = q.to_string();
            tasks.push_back(guarded(name, p, [=] { return dva_comm_check(n, m, a, b, q, delta, cap, form, to); }));
          }
        }
      }
      for (int tm = -6; tm <= 6; ++tm) {
        if (((tm % 2) + 2) % 2 != delta) continue;
        if (2 * cap - 2 * std::abs(n) - std::abs(tm) < 0) continue;
        tasks.push_back([=] { return std::vector<CheckReport>{fock_dpsi_check(n, tm, q, delta, cap, to)}; });
      }
    }
    for (int n = -2; n <= 2; ++n)
      tasks.push_back([=] { return std::vector<CheckReport>{classical_limit_check(n, {1e-2, 1e-3}, delta, cap)}; });
    tasks.push_back([=] {
      return std::vector<CheckReport>{d0_expansion_check(QParam::exact(1, 40), 6, delta, cap, std::max(to, 1e-8))};
    });
  }
  for (double t : {0.3, 0.7, 1.1}) {
    for (int spin : {1, -1}) {
      QParam qq = QParam::from_angle(t);
      tasks.push_back([=] {
        return std::vector<CheckReport>{null_level2_check(qq, spin, false, to), null_level2_check(qq, spin, true)};
      });
    }
  }
  tasks.push_back([=] { return iom_virasoro_identity_check(std::max(cap, 6), to); });
}

int compare_values(const std::string& a, const std::string& b) {
  long long x = 0, y = 0;
  auto ra = std::from_chars(a.data(), a.data() + a.size(), x);
  auto rb = std::from_chars(b.data(), b.data() + b.size(), y);
  bool na = ra.ec == std::errc{} && ra.ptr == a.data() + a.size();
  bool nb = rb.ec == std::errc{} && rb.ptr == b.data() + b.size();
  if (na && nb) return x < y ? -1 : (x > y ? 1 : 0);
  return a.compare(b);
}

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["residual"] = number_or_null(r.residual);
  j["tol"] = r.tol;
  if (r.in_window) j["pass"] = r.pass;
  else j["pass"] = nullptr;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string format_cplx(cplx c) { return format_double(c.real()) + "," + format_double(c.imag()); }

int parse_index(const std::string& text, const std::string& spec) {
  int v = 0;
  auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || r.ec != std::errc{} || r.ptr != text.data() + text.size())
    throw UsageError("unknown operator spec '" + spec + "'");
  return v;
}

}  // namespace

void SuiteConfig::validate() const {
  if (suite != "lattice" && suite != "fock" && suite != "all") throw UsageError("suite must be lattice, fock or all");
  if (D_list.empty()) throw UsageError("D list is empty");
  for (int D : D_list)
    if (D < 2 || D > 10) throw UsageError("D values must lie in [2, 10]");
  if (cap < 4 || cap > 10) throw UsageError("level cap must lie in [4, 10]");
  if (!(tol_op > 0.0) || !(tol_spec > 0.0)) throw UsageError("tolerances must be positive");
}

bool report_less(const CheckReport& a, const CheckReport& b) {
  if (a.name != b.name) return a.name < b.name;
  auto ia = a.params.begin(), ib = b.params.begin();
  for (; ia != a.params.end() && ib != b.params.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    int c = compare_values(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return a.params.size() < b.params.size();
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Task> tasks;
  if (cfg.suite != "fock") {
    std::vector<int> Ds = cfg.D_list;
    std::sort(Ds.begin(), Ds.end());
    Ds.erase(std::unique(Ds.begin(), Ds.end()), Ds.end());
    for (int D : Ds) add_lattice_tasks(cfg, D, tasks);
  }
  if (cfg.suite != "lattice") add_fock_tasks(cfg, tasks);

  std::vector<std::vector<CheckReport>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  SuiteResult res;
  res.config = cfg;
  for (auto& v : out) {
    for (auto& r : v) {
      if (r.in_window) res.checks.push_back(std::move(r));
      else res.recorded.push_back(std::move(r));
    }
  }
  std::stable_sort(res.checks.begin(), res.checks.end(), report_less);
  std::stable_sort(res.recorded.begin(), res.recorded.end(), report_less);
  res.total = static_cast<int>(res.checks.size());
  res.passed = static_cast<int>(std::count_if(res.checks.begin(), res.checks.end(), [](auto& r) { return r.pass; }));
  res.failed = res.total - res.passed;
  res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::string report_json(const SuiteResult& r, int indent) {
  nlohmann::json j;
  j["suite"] = r.config.suite;
  j["params"] = {{"D_list", r.config.D_list},
                 {"cap", r.config.cap},
                 {"tol_op", r.config.tol_op},
                 {"tol_spec", r.config.tol_spec}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) j["checks"].push_back(report_to_json(c));
  j["recorded"] = nlohmann::json::array();
  for (const auto& c : r.recorded) j["recorded"].push_back(report_to_json(c));
  j["summary"] = {{"total", r.total}, {"passed", r.passed}, {"failed", r.failed}};
  j["wall_time_s"] = r.wall_time_s;
  return j.dump(indent) + "\n";
}

void write_report(const SuiteResult& r, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << report_json(r);
  if (!f) throw std::runtime_error("write failed for " + path);
}

int parse_a_name(const std::string& op) {
  if (op == "A1") return 1;
  if (op == "A3") return 2;
  if (op == "A5") return 3;
  if (op == "A7") return 4;
  throw UsageError("unknown operator '" + op + "' (expected A1, A3, A5 or A7)");
}

std::vector<SpectrumGroup> spectrum_groups(int D, int n, double tol) {
  if (D < 2 || D > 10) throw UsageError("D must lie in [2, 10]");
  LatticeContext ctx(D);
  std::vector<SpectrumRow> rows = spectrum_rows(ctx, n);
  std::vector<SpectrumGroup> out;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i + 1;
    while (j < rows.size() && std::abs(rows[j].eigenvalue - rows[i].eigenvalue) <= tol * std::max(1.0, std::abs(rows[i].eigenvalue)))
      ++j;
    // Partition labels with the spins each one carries inside the cluster.
    std::map<std::vector<int>, std::pair<bool, bool>> parts;
    double ev = 0.0, fv = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      ev += rows[k].eigenvalue;
      fv += rows[k].formula;
      auto& sp = parts[rows[k].partition.elements];
      (rows[k].partition.spin > 0 ? sp.first : sp.second) = true;
    }
    SpectrumGroup g;
    g.multiplicity = static_cast<int>(j - i);
    g.eigenvalue = ev / g.multiplicity;
    g.formula = fv / g.multiplicity;
    bool all_both = true, all_plus = true;
    for (const auto& [el, sp] : parts) {
      if (!g.partitions.empty()) g.partitions += ";";
      g.partitions += el.empty() ? "∅" : LatticePartition{el, 1}.label();
      all_both = all_both && sp.first && sp.second;
      all_plus = all_plus && sp.first && !sp.second;
    }
    g.spin = all_both ? "±" : (all_plus ? "+" : "-");
    if (!all_both && !all_plus) {
      bool all_minus = std::all_of(parts.begin(), parts.end(), [](auto& kv) { return !kv.second.first; });
      if (!all_minus) g.spin = "mixed";
    }
    out.push_back(std::move(g));
    i = j;
  }
  return out;
}

bool spectrum_export(const std::string& op, int D, const std::string& format, std::ostream& out, double tol) {
  int n = parse_a_name(op);
  if (format != "csv" && format != "json") throw UsageError("format must be csv or json");
  std::vector<SpectrumGroup> groups = spectrum_groups(D, n, tol);
  LatticeContext ctx(D);
  bool ok = true;
  for (const auto& row : spectrum_rows(ctx, n))
    if (std::abs(row.eigenvalue - row.formula) > tol * std::max(1.0, std::abs(row.formula))) ok = false;
  if (format == "csv") {
    out << "eigenvalue,multiplicity,formula_value,partition,spin\n";
    for (const auto& g : groups)
      out << format_double(g.eigenvalue) << "," << g.multiplicity << "," << format_double(g.formula) << ",\""
          << g.partitions << "\"," << g.spin << "\n";
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& g : groups)
      j.push_back({{"eigenvalue", g.eigenvalue},
                   {"multiplicity", g.multiplicity},
                   {"formula_value", g.formula},
                   {"partition", g.partitions},
                   {"spin", g.spin}});
    out << nlohmann::json{{"op", op}, {"D", D}, {"rows", j}}.dump(2) << "\n";
  }
  return ok;
}

void dump_operator(const std::string& spec, int power, int D, std::ostream& out) {
  if (D < 2 || D > kDenseMaxSites) throw UsageError("dump: D must lie in [2, " + std::to_string(kDenseMaxSites) + "]");
  std::string name = spec;
  std::erase(name, '_');
  LatticeContext ctx(D);
  OperatorSum op(D);
  auto rest = [&](std::size_t k) { return parse_index(name.substr(k), spec); };
  if (name.rfind("psi", 0) == 0) {
    op = ctx.psi(rest(3));
  } else if (name.rfind("gamma", 0) == 0) {
    op = ctx.gamma(rest(5));
  } else if (name.rfind("e", 0) == 0) {
    op = ctx.tl(rest(1));
  } else if (name.rfind("D", 0) == 0) {
    op = lattice_D(ctx, rest(1), power);
  } else if (name.rfind("H", 0) == 0 || name.rfind("A", 0) == 0) {
    int idx = rest(1);
    if (idx < 1 || idx % 2 == 0 || idx > 11) throw UsageError("unknown operator spec '" + spec + "'");
    op = name[0] == 'H' ? build_H(ctx, (idx + 1) / 2) : build_A(ctx, (idx + 1) / 2);
  } else {
    throw UsageError("unknown operator spec '" + spec + "'");
  }
  DenseOperator m = to_dense(op);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      out << format_cplx(m(r, c));
    }
    out << "\n";
  }
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace qvir
