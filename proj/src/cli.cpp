/*
   Copyright 2026 The qboson Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qboson/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qboson/errors.hpp"
#include "qboson/qcore.hpp"
#include "qboson/qgas.hpp"
#include "qboson/qpolylog.hpp"
#include "qboson/sweep.hpp"
#include "qboson/verify.hpp"

namespace qboson::cli {

namespace {

using qpolylog::GOrder;
using qpolylog::SeriesPolicy;

struct Grid {
  double start;
  double stop;
  double step;
};

struct RunConfig {
  std::vector<double> qs;
  std::optional<Grid> grid;
  std::string order = "3/2";
  std::optional<double> rel_tol;
  std::optional<std::int64_t> max_terms;
  std::string output_path;
  bool jump = false;

  [[nodiscard]] SeriesPolicy policy() const {
    return {rel_tol.value_or(SeriesPolicy::kDefaultRelTol),
            max_terms.value_or(SeriesPolicy::kDefaultMaxTerms)};
  }
};

Grid parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("--grid expects start:stop:step, got '" + text + "'");
    }
    if (used != item.size()) {
      throw DomainError("--grid expects start:stop:step, got '" + text + "'");
    }
    parts.push_back(v);
  }
  if (parts.size() != 3) {
    throw DomainError("--grid expects start:stop:step, got '" + text + "'");
  }
  const Grid g{parts[0], parts[1], parts[2]};
  if (!(g.start < g.stop) || !(g.step > 0.0)) {
    throw DomainError("--grid needs start < stop and step > 0");
  }
  return g;
}

GOrder parse_order(const std::string& text) {
  if (text == "3/2") return GOrder::three_halves();
  if (text == "5/2") return GOrder::five_halves();
  if (text == "7/2") return GOrder::seven_halves();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("--order expects 3/2, 5/2, 7/2 or a real number, got '" + text + "'");
  }
  if (used != text.size()) {
    throw DomainError("--order expects 3/2, 5/2, 7/2 or a real number, got '" + text + "'");
  }
  return GOrder(v);
}

std::string order_label(const GOrder& order, const std::string& text) {
  if (text == "3/2" || text == "5/2" || text == "7/2") return text;
  return format_value(order.n());
}

double single_q(const RunConfig& cfg, double fallback) {
  if (cfg.qs.empty()) return fallback;
  if (cfg.qs.size() != 1) throw DomainError("this subcommand takes a single --q value");
  return cfg.qs.front();
}

std::vector<double> grid_or(const RunConfig& cfg, Grid fallback) {
  const Grid g = cfg.grid.value_or(fallback);
  return sweep::make_grid(g.start, g.stop, g.step);
}

// Rows are rendered in parallel and joined in grid order.
using Rows = std::vector<std::string>;

std::string join(const std::string& header, const std::vector<Rows>& blocks) {
  std::string text = header + "\n";
  for (const auto& rows : blocks) {
    for (const auto& r : rows) {
      text += r;
      text += '\n';
    }
  }
  return text;
}

std::string csv(std::initializer_list<std::string> fields) {
  std::string line;
  for (const auto& f : fields) {
    if (!line.empty()) line += ',';
    line += f;
  }
  return line;
}

std::string cmd_gfun(const RunConfig& cfg) {
  const GOrder order = parse_order(cfg.order);
  const SeriesPolicy policy = cfg.policy();
  const std::vector<double> qs = cfg.qs.empty() ? std::vector<double>{0.8, 0.9, 1.0, 1.1, 1.2} : cfg.qs;
  const std::vector<double> base = grid_or(cfg, {0.0, 1.0, 0.005});
  std::vector<Rows> blocks;
  for (double q : qs) {
    const Deformation d(q);
    const double z_max = qgas::max_fugacity(d);
    std::vector<double> zs;
    std::copy_if(base.begin(), base.end(), std::back_inserter(zs),
                 [&](double z) { return z >= 0.0 && z <= z_max; });
    // Each curve ends exactly at its own upper bound z_q.
    if (zs.empty() || zs.back() < z_max * (1.0 - 1e-12)) {
      if (base.back() >= z_max) zs.push_back(z_max);
    }
    const std::string q_text = format_value(q);
    blocks.push_back(sweep::map_grid(zs, [&](double z) {
      return csv({q_text, format_value(z), format_value(qpolylog::g_function(order, z, d, policy))});
    }));
  }
  return join("q,z,g_" + order_label(order, cfg.order) + "(z,q)", blocks);
}

std::string cmd_tc(const RunConfig& cfg) {
  if (!cfg.qs.empty()) throw DomainError("tc sweeps q over --grid; --q is not accepted");
  const SeriesPolicy policy = cfg.policy();
  const auto qs = grid_or(cfg, {0.6, 1.5, 0.005});
  return join("q,T_c^q/T_c", {sweep::map_grid(qs, [&](double q) {
                return csv({format_value(q), format_value(qgas::tc_ratio(Deformation(q), policy))});
              })});
}

std::string cmd_cv(const RunConfig& cfg) {
  const SeriesPolicy policy = cfg.policy();
  if (cfg.jump) {
    if (!cfg.qs.empty()) throw DomainError("cv --jump sweeps q over --grid; --q is not accepted");
    const auto qs = grid_or(cfg, {1.005, 1.3, 0.005});
    return join("q,Delta(C_v/N)", {sweep::map_grid(qs, [&](double q) {
                  return csv({format_value(q), format_value(qgas::cv_jump(Deformation(q), policy))});
                })});
  }
  const Deformation d(single_q(cfg, 1.05));
  const auto ts = grid_or(cfg, {0.2, 2.0, 0.01});
  auto row = [&](const qgas::GasPoint& p) {
    return csv({format_value(p.t()), format_value(qgas::heat_capacity(p)),
                std::string(qgas::to_string(p.regime()))});
  };
  return join("t,C_v/N,regime", {sweep::map_grid(ts, [&](double t) {
                if (t == 1.0) {
                  // Both one-sided values at the transition.
                  return row(qgas::GasPoint::condensed(d, 1.0, policy)) + "\n" +
                         row(qgas::GasPoint::at_temperature(d, 1.0, policy));
                }
                return row(qgas::GasPoint::at_temperature(d, t, policy));
              })});
}

std::string cmd_stirling(const RunConfig& cfg) {
  const Deformation d(single_q(cfg, 1.5));
  if (!d.above_unity()) throw DomainError("the q-Stirling approximation needs q > 1");
  std::vector<double> ns;
  if (cfg.grid) {
    ns = grid_or(cfg, *cfg.grid);
    for (double n : ns) {
      if (n < 1.0 || n != std::floor(n)) throw DomainError("stirling --grid must list positive integers");
    }
  } else {
    ns = {1, 10, 100, 300, 1000, 3000, 5000};
  }
  return join("n,ln[n]!,q-Stirling,rel_error", {sweep::map_grid(ns, [&](double n) {
                const auto r = verify::stirling_row(static_cast<std::int64_t>(n), d);
                return csv({std::to_string(r.n), format_value(r.exact), format_value(r.approximation),
                            format_value(r.relative_error)});
              })});
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto qs = cfg.qs.empty() ? verify::kDefaultQs : cfg.qs;
  for (double q : qs) (void)Deformation(q);  // reject invalid q before running anything
  const auto stirling_q = cfg.qs.empty() ? std::optional<double>(verify::kDefaultStirlingQ) : std::nullopt;
  const auto report = verify::run(qs, cfg.policy(), stirling_q);
  char line[256];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%s  %-26s q=%-6g max_residual=%.3e threshold=%.1e\n",
                  c.passed() ? "PASS" : "FAIL", c.name.c_str(), c.q, c.max_residual, c.threshold);
    out << line;
  }
  if (!report.stirling.empty()) {
    for (const auto& r : report.stirling) {
      std::snprintf(line, sizeof line, "INFO  q-Stirling q=%g n=%lld relative_error=%.4f%%\n", report.stirling_q,
                    static_cast<long long>(r.n), 100.0 * r.relative_error);
      out << line;
    }
  }
  const auto failures = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const verify::CheckResult& c) { return !c.passed(); });
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << " ("
      << report.checks.size() << " checks)\n";
  return failures == 0 ? kOk : kVerificationFailure;
}

void add_common(CLI::App& sub, RunConfig& cfg, std::string& grid_text) {
  sub.add_option("--q", cfg.qs, "deformation parameter(s), comma separated")->delimiter(',');
  sub.add_option("--grid", grid_text, "sweep grid start:stop:step");
  sub.add_option("--tol", cfg.rel_tol, "series relative tolerance");
  sub.add_option("--max-terms", cfg.max_terms, "series term cap");
  sub.add_option("--out", cfg.output_path, "write CSV to this file instead of stdout");
}

}  // namespace

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for the ideal q-Bose gas: g-functions, condensation, specific heat", "qboson"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string grid_text;

  auto* gfun = app.add_subcommand("gfun", "g_n(z,q) curves on [0, z_q]");
  add_common(*gfun, cfg, grid_text);
  gfun->add_option("--order", cfg.order, "order n: 3/2, 5/2, 7/2 or a real > 1/2");
  auto* tc = app.add_subcommand("tc", "condensation temperature ratio over a q grid");
  add_common(*tc, cfg, grid_text);
  auto* cv = app.add_subcommand("cv", "specific heat per particle over t, or its jump over q");
  add_common(*cv, cfg, grid_text);
  cv->add_flag("--jump", cfg.jump, "emit the jump at the transition over a q grid");
  auto* stirling = app.add_subcommand("stirling", "q-Stirling accuracy over n");
  add_common(*stirling, cfg, grid_text);
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  add_common(*verify_cmd, cfg, grid_text);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidConfig;
  }

  try {
    if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
    int code = kOk;
    std::string text;
    if (verify_cmd->parsed()) {
      std::ostringstream report;
      code = cmd_verify(cfg, report);
      text = report.str();
    } else if (gfun->parsed()) {
      text = cmd_gfun(cfg);
    } else if (tc->parsed()) {
      text = cmd_tc(cfg);
    } else if (cv->parsed()) {
      text = cmd_cv(cfg);
    } else {
      text = cmd_stirling(cfg);
    }
    if (cfg.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "error: cannot open '" << cfg.output_path << "' for writing\n";
        return kInvalidConfig;
      }
      file << text;
      if (!file.flush()) {
        err << "error: failed writing '" << cfg.output_path << "'\n";
        return kInvalidConfig;
      }
    }
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
}

}  // namespace qboson::cli
