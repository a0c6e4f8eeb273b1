// Copyright 2026 The hcover Authors
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

#include "hcover/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "hcover/asymptotics.hpp"
#include "hcover/bodies.hpp"
#include "hcover/combinatorics.hpp"
#include "hcover/covering.hpp"
#include "hcover/lattice_sets.hpp"

namespace hcover::cli {
namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  int n = 1;
  int k = 0;
  double p = 1.0;
  double r = 0.5;
  std::string body = "simplex";
  std::string set = "m1";
  std::string method = "closed";
  int samples = 1000;
  std::uint64_t seed = 42;
  double tol = kDefaultTol;
  std::string format = "plain";
  std::string variant = "remark";
  std::vector<int> n_list;
  bool corrupt_witness = false;
};

const std::map<std::string, Family> kBodies = {
    {"simplex", Family::Simplex},
    {"crosspolytope", Family::CrossPolytope},
    {"qlp", Family::QuarterLp},
    {"lp", Family::Lp},
};

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

SetKind set_kind(const RunConfig& cfg) { return cfg.set == "m1" ? SetKind::M1 : SetKind::M2; }

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const LatticeSetSpec spec{set_kind(cfg), cfg.n, cfg.k};
  if (spec.n < 1 || spec.k < 0) throw std::invalid_argument("count: need n >= 1 and k >= 0");
  BigCount value;
  if (spec.kind == SetKind::M1) {
    value = m1_count(cfg.n, cfg.k);
  } else {
    value = cfg.method == "recurrence" ? m2_count_recurrence(cfg.n, cfg.k) : m2_count_closed(cfg.n, cfg.k);
  }
  if (cfg.format == "json") {
    out << Json{{"set", cfg.set}, {"n", cfg.n}, {"k", cfg.k}, {"count", value.get_str()}}.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "set,n,k,count\n" << cfg.set << ',' << cfg.n << ',' << cfg.k << ',' << value.get_str() << '\n';
  } else {
    out << value.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const LatticeSetSpec spec{set_kind(cfg), cfg.n, cfg.k};
  LatticeStream stream(spec);
  if (cfg.format == "json") {
    Json points = Json::array();
    for (LatticePoint z; stream.next(z);) points.push_back(z);
    out << Json{{"set", cfg.set}, {"n", cfg.n}, {"k", cfg.k}, {"points", std::move(points)}}.dump() << '\n';
    return kExitOk;
  }
  if (cfg.format == "csv") {
    for (int i = 1; i <= cfg.n; ++i) out << (i > 1 ? "," : "") << 'x' << i;
    out << '\n';
  }
  for (LatticePoint z; stream.next(z);) out << to_csv(z) << '\n';
  return kExitOk;
}

Json report_json(const VerificationReport& r) {
  Json levels = Json::object();
  for (const auto& [level, count] : r.level_histogram) levels[std::to_string(level)] = count;
  return Json{{"body", family_name(r.family)},
              {"n", r.n},
              {"k", r.k},
              {"p", r.p},
              {"exact", r.exact},
              {"samples", r.samples},
              {"witness_failures", r.witness_failures},
              {"translates_checked", r.translates_checked},
              {"translates", r.translates},
              {"translate_failures", r.translate_failures},
              {"level_histogram", std::move(levels)},
              {"holds", r.holds()}};
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Family family = kBodies.at(cfg.body);
  VerifyOptions options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.tol = cfg.tol;
  options.corrupt_first_witness = cfg.corrupt_witness;

  VerificationReport report;
  if (family == Family::Simplex || family == Family::CrossPolytope) {
    report = verify_covering_exact(family == Family::Simplex ? CoverKind::SimplexM1 : CoverKind::CrossPolytopeM2,
                                   cfg.n, cfg.k, options);
  } else {
    report = verify_covering_lp(family, cfg.n, cfg.p, cfg.k, options);
  }

  if (cfg.format == "json") {
    out << report_json(report).dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "body,n,k,p,samples,witness_failures,translates,translate_failures,holds\n"
        << family_name(report.family) << ',' << report.n << ',' << report.k << ',' << real(report.p) << ','
        << report.samples << ',' << report.witness_failures << ',' << report.translates << ','
        << report.translate_failures << ',' << (report.holds() ? "true" : "false") << '\n';
  } else {
    out << "body=" << family_name(report.family) << " n=" << report.n << " k=" << report.k
        << " p=" << real(report.p) << '\n';
    out << "samples=" << report.samples << " witness_failures=" << report.witness_failures << '\n';
    if (report.translates_checked) {
      out << "translates=" << report.translates << " translate_failures=" << report.translate_failures << '\n';
    }
    out << (report.exact ? "shell_levels:" : "peel_steps:");
    for (const auto& [level, count] : report.level_histogram) out << ' ' << level << ':' << count;
    out << '\n' << (report.holds() ? "result=holds" : "result=violated") << '\n';
  }
  return report.holds() ? kExitOk : kExitVerificationFailed;
}

int cmd_gamma(const RunConfig& cfg, std::ostream& out) {
  const GammaBound b = gamma_upper_bound(kBodies.at(cfg.body), cfg.n, cfg.p, cfg.k);
  const std::string rho_text = b.rho_exact ? to_string(*b.rho_exact) : real(b.rho);
  if (cfg.format == "json") {
    Json doc{{"m", b.m.get_str()}};
    if (b.rho_exact) {
      doc["rho"] = rho_text;
    } else {
      doc["rho"] = b.rho;
    }
    out << doc.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "body,n,k,p,m,rho\n"
        << cfg.body << ',' << b.n << ',' << b.k << ',' << real(b.p) << ',' << b.m.get_str() << ',' << rho_text
        << '\n';
  } else {
    out << "m=" << b.m.get_str() << " rho=" << rho_text << '\n';
  }
  return kExitOk;
}

int cmd_tnpk(const RunConfig& cfg, std::ostream& out) {
  const TSequence seq = t_sequence(cfg.n, cfg.p, cfg.k);
  auto pow_p = [&](std::size_t j) { return std::pow(seq.values[j], seq.p); };
  if (cfg.format == "json") {
    Json values = Json::array();
    for (std::size_t j = 0; j < seq.values.size(); ++j) {
      if (seq.exact.empty()) {
        values.push_back(seq.values[j]);
      } else {
        values.push_back(to_string(seq.exact[j]));
      }
    }
    out << Json{{"n", seq.n}, {"p", seq.p}, {"values", std::move(values)}}.dump() << '\n';
    return kExitOk;
  }
  if (cfg.format == "csv") out << "k,t,t_pow_p\n";
  for (std::size_t j = 0; j < seq.values.size(); ++j) {
    const std::string t = seq.exact.empty() ? real(seq.values[j]) : to_string(seq.exact[j]);
    if (cfg.format == "csv") {
      out << j << ',' << t << ',' << real(pow_p(j)) << '\n';
    } else {
      out << "k=" << j << " t=" << t << " t^p=" << real(pow_p(j)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_constants(const RunConfig& cfg, std::ostream& out) {
  const GrowthConstants g = growth_constants();
  if (cfg.format == "json") {
    Json doc{{"c1", g.c1},
             {"c3", g.c3},
             {"c4", g.c4},
             {"residuals", {{"c1", g.residual_c1}, {"c3", g.residual_c3}, {"c4", g.residual_c4}}},
             {"c4_alt_max", g.c4_alt_max}};
    if (g.c4_alt) {
      doc["c4_alt_root"] = *g.c4_alt;
    } else {
      doc["c4_alt_root"] = nullptr;
    }
    out << doc.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "name,value,residual\n"
        << "c1," << real(g.c1) << ',' << real(g.residual_c1) << '\n'
        << "c3," << real(g.c3) << ',' << real(g.residual_c3) << '\n'
        << "c4," << real(g.c4) << ',' << real(g.residual_c4) << '\n';
  } else {
    out << "c1=" << real(g.c1) << '\n' << "c3=" << real(g.c3) << '\n' << "c4=" << real(g.c4) << '\n';
  }
  return kExitOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_list.empty()) throw std::invalid_argument("converge: --n-list is required");
  const auto rows = convergence_table(kBodies.at(cfg.body), cfg.n_list, cfg.p);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"n", r.n}, {"k", r.k}, {"ratio", r.ratio}, {"bound", r.bound}});
    out << Json{{"body", cfg.body}, {"p", cfg.p}, {"rows", std::move(arr)}}.dump() << '\n';
    return kExitOk;
  }
  const char sep = cfg.format == "csv" ? ',' : ' ';
  if (cfg.format == "csv") out << "n,k,ratio,bound\n";
  for (const auto& r : rows) {
    out << r.n << sep << r.k << sep << real(r.ratio) << sep << real(r.bound) << '\n';
  }
  return kExitOk;
}

int cmd_rz(const RunConfig& cfg, std::ostream& out) {
  const auto variant = cfg.variant == "intro" ? RogersZongVariant::Intro : RogersZongVariant::Remark;
  const double value = rogers_zong_bound(cfg.n, cfg.r, variant);
  if (cfg.format == "json") {
    out << Json{{"n", cfg.n}, {"r", cfg.r}, {"variant", variant_name(variant)}, {"bound", value}}.dump() << '\n';
  } else if (cfg.format == "csv") {
    out << "n,r,variant,bound\n" << cfg.n << ',' << real(cfg.r) << ',' << variant_name(variant) << ','
        << real(value) << '\n';
  } else {
    out << real(value) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lattice coverings and covering-functional bounds for simplices, cross-polytopes and l_p balls",
               "hcover"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto bodies = CLI::IsMember({"simplex", "crosspolytope", "qlp", "lp"});
  auto sets = CLI::IsMember({"m1", "m2"});
  auto formats = CLI::IsMember({"json", "csv", "plain"});

  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", cfg.format)->check(formats); };
  auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "dimension")->required();
    sub->add_option("--k", cfg.k, "translation budget")->required();
  };

  std::map<CLI::App*, std::function<int(const RunConfig&, std::ostream&)>> handlers;

  auto* count = app.add_subcommand("count", "size of M1(n, k) or M2(n, k)");
  add_nk(count);
  count->add_option("--set", cfg.set)->check(sets);
  count->add_option("--method", cfg.method, "m2 route")->check(CLI::IsMember({"closed", "recurrence"}));
  add_format(count);
  handlers[count] = cmd_count;

  auto* enumerate = app.add_subcommand("enumerate", "list M1(n, k) or M2(n, k) in lexicographic order");
  add_nk(enumerate);
  enumerate->add_option("--set", cfg.set)->check(sets);
  add_format(enumerate);
  handlers[enumerate] = cmd_enumerate;

  auto* verify = app.add_subcommand("verify-cover", "check the lattice covering by sampling");
  add_nk(verify);
  verify->add_option("--body", cfg.body)->check(bodies);
  verify->add_option("--p", cfg.p);
  verify->add_option("--samples", cfg.samples);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--tol", cfg.tol);
  verify->add_flag("--corrupt-witness", cfg.corrupt_witness)->group("");
  add_format(verify);
  handlers[verify] = cmd_verify;

  auto* gamma = app.add_subcommand("gamma-bound", "translate count and covering-functional bound");
  add_nk(gamma);
  gamma->add_option("--body", cfg.body)->check(bodies);
  gamma->add_option("--p", cfg.p);
  add_format(gamma);
  handlers[gamma] = cmd_gamma;

  auto* tnpk = app.add_subcommand("tnpk", "scale sequence t_{n,p,0..k}");
  add_nk(tnpk);
  tnpk->add_option("--p", cfg.p);
  add_format(tnpk);
  handlers[tnpk] = cmd_tnpk;

  auto* constants = app.add_subcommand("constants", "growth constants c1, c3, c4");
  add_format(constants);
  handlers[constants] = cmd_constants;

  auto* converge = app.add_subcommand("converge", "2^n threshold table");
  converge->add_option("--body", cfg.body)->check(bodies);
  converge->add_option("--n-list", cfg.n_list)->delimiter(',')->required();
  converge->add_option("--p", cfg.p);
  add_format(converge);
  handlers[converge] = cmd_converge;

  auto* rz = app.add_subcommand("rz-bound", "Rogers-Zong translate-count bound");
  rz->add_option("--n", cfg.n)->required();
  rz->add_option("--r", cfg.r);
  rz->add_option("--variant", cfg.variant)->check(CLI::IsMember({"remark", "intro"}));
  add_format(rz);
  handlers[rz] = cmd_rz;

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInvalidInput;
  }

  try {
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(cfg, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "defect: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  err << app.help();
  return kExitInvalidInput;
}

}  // namespace hcover::cli
