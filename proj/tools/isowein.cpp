/* Copyright 2026 The isowein Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// isowein: command-line front end.
//
//   isowein eval          --surface EXPR --at X,Y
//   isowein scan          --surface EXPR --residual lw|euler|jacobian [--a A --b B --c C]
//   isowein verify-family --spec FILE.json
//   isowein ode           --rhs eq311|eq318 ... [--out traj.csv]
//   isowein mesh          (--surface EXPR | --spec FILE.json) --out mesh.obj
//
// Every command prints exactly one JSON report on stdout. Exit status is 0 on
// success, 1 when a tolerance-gated check fails and 2 on any error.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "isowein/curvature.hpp"
#include "isowein/errors.hpp"
#include "isowein/expr.hpp"
#include "isowein/families.hpp"
#include "isowein/grid.hpp"
#include "isowein/io.hpp"
#include "isowein/jet_eval.hpp"
#include "isowein/mesh.hpp"
#include "isowein/ode.hpp"
#include "isowein/weingarten.hpp"

namespace {

using isowein::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

class UsageError : public isowein::Error {
 public:
  using isowein::Error::Error;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> out;
  std::string_view rest = text;
  for (;;) {
    const std::size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size() ||
        !std::isfinite(v))
      throw UsageError(std::string(flag) + ": malformed number '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.size() != expected)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(expected) +
                     " comma-separated values");
  return out;
}

struct DomainFlags {
  std::string domain = "-1,1,-1,1";
  std::string grid = "101,101";
  double exclusion = 1e-2;
  std::vector<double> singular_x;

  void attach(CLI::App* cmd) {
    cmd->add_option("--domain", domain, "xmin,xmax,ymin,ymax")->capture_default_str();
    cmd->add_option("--grid", grid, "nx,ny")->capture_default_str();
    cmd->add_option("--exclusion", exclusion, "exclusion radius around singular loci")
        ->capture_default_str();
    cmd->add_option("--singular-x", singular_x, "declare a singular vertical line x=v");
  }

  isowein::GridDomain build() const {
    const auto b = parse_list(domain, 4, "--domain");
    const auto g = parse_list(grid, 2, "--grid");
    isowein::GridDomain d;
    d.x_min = b[0];
    d.x_max = b[1];
    d.y_min = b[2];
    d.y_max = b[3];
    if (g[0] != std::floor(g[0]) || g[1] != std::floor(g[1]) || g[0] > 1e6 || g[1] > 1e6)
      throw UsageError("--grid: node counts must be integers");
    d.nx = static_cast<int>(g[0]);
    d.ny = static_cast<int>(g[1]);
    d.exclusion_radius = exclusion;
    for (double v : singular_x) d.singular_loci.push_back(isowein::VerticalLine{v});
    d.validate();
    return d;
  }
};

json new_report(const std::string& command) {
  json r = json::object();
  r["schema_version"] = isowein::kSchemaVersion;
  r["command"] = command;
  r["surface"] = nullptr;
  r["params"] = json::object();
  r["result"] = nullptr;
  r["pass"] = nullptr;
  r["tolerances"] = json::object();
  return r;
}

int emit(const json& report) {
  std::cout << report.dump(2) << '\n';
  if (report["pass"].is_boolean() && !report["pass"].get<bool>()) return kExitCheckFailed;
  return kExitOk;
}

std::string error_kind(const std::exception& e) {
  using namespace isowein;
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
  if (dynamic_cast<const MixedVariableError*>(&e)) return "MixedVariableError";
  if (dynamic_cast<const DegenerateError*>(&e)) return "DegenerateError";
  if (dynamic_cast<const InvalidSpec*>(&e)) return "InvalidSpec";
  if (dynamic_cast<const NoConstantPrediction*>(&e)) return "NoConstantPrediction";
  if (dynamic_cast<const EmptyDomain*>(&e)) return "EmptyDomain";
  if (dynamic_cast<const SingularPoint*>(&e)) return "SingularPoint";
  if (dynamic_cast<const DegenerateODE*>(&e)) return "DegenerateODE";
  if (dynamic_cast<const StepTooLarge*>(&e)) return "StepTooLarge";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  if (dynamic_cast<const json::exception*>(&e)) return "JsonError";
  return "Error";
}

int emit_error(const std::string& command, const std::exception& e) {
  json r = new_report(command);
  json err = {{"kind", error_kind(e)}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const isowein::ParseError*>(&e)) err["offset"] = pe->offset();
  if (const auto* de = dynamic_cast<const isowein::DegenerateODE*>(&e)) err["t"] = de->t();
  r["error"] = err;
  std::cout << r.dump(2) << '\n';
  std::cerr << "isowein " << command << ": " << e.what() << '\n';
  return kExitError;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return json::parse(buf.str());
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
  std::string surface;
  std::string at;
};

int run_eval(const EvalArgs& args) {
  const isowein::Expr z = isowein::parse(args.surface);
  const auto at = parse_list(args.at, 2, "--at");
  const isowein::Point2 p{at[0], at[1]};
  const isowein::Jet2 j = isowein::eval_jet(z, p);
  const isowein::CurvaturePair k = isowein::curvatures(j);

  json r = new_report("eval");
  r["surface"] = isowein::print(z);
  r["params"] = {{"at", isowein::to_json(p)}};
  r["result"] = {{"jet", isowein::to_json(j)},
                 {"K", k.K},
                 {"H", k.H},
                 {"h2_minus_k", k.H * k.H - k.K},
                 {"euler_residual", isowein::euler_residual(j)}};
  return emit(r);
}

// ---- scan ------------------------------------------------------------------

struct ScanArgs {
  std::string surface;
  std::string residual = "lw";
  double a = 0, b = 0, c = 0;
  std::optional<double> tol;
  double h = 1e-3;
  DomainFlags domain;
};

int run_scan(const ScanArgs& args) {
  const isowein::Expr z = isowein::parse(args.surface);
  const isowein::GridDomain d = args.domain.build();
  json r = new_report("scan");
  r["surface"] = isowein::print(z);
  json params = {{"residual", args.residual}, {"domain", isowein::to_json(d)}};

  isowein::ResidualKind kind;
  double tol = 1e-9;
  if (args.residual == "lw") {
    const isowein::LWParams lw{args.a, args.b, args.c};
    lw.validate();
    params["lw"] = isowein::to_json(lw);
    if (lw.b != 0) {
      const auto n = isowein::normalize(lw);
      params["normalized"] = {{"m0", n.m0}, {"n0", n.n0}};
    }
    kind = isowein::LWResidual{lw};
  } else if (args.residual == "euler") {
    kind = isowein::EulerResidual{};
  } else {
    kind = isowein::JacobianResidual{args.h};
    params["h"] = args.h;
    tol = 1e-6;
  }
  if (args.tol) tol = *args.tol;

  const isowein::ResidualReport rep = isowein::scan_grid(z, d, kind);
  r["params"] = params;
  r["result"] = isowein::to_json(rep);
  r["pass"] = rep.max_abs <= tol;
  r["tolerances"] = {{"max_abs", tol}};
  return emit(r);
}

// ---- verify-family ---------------------------------------------------------

struct VerifyArgs {
  std::string spec_path;
  double tol = 1e-9;
  DomainFlags domain;
};

int run_verify_family(const VerifyArgs& args) {
  const json spec_json = read_json_file(args.spec_path);
  const isowein::FamilySpec spec = isowein::family_spec_from_json(spec_json, {"n0"});
  const isowein::GridDomain d = args.domain.build();
  const isowein::Expr z = isowein::build(spec);

  json r = new_report("verify-family");
  r["surface"] = isowein::print(z);
  r["params"] = {{"spec", isowein::to_json(spec)}, {"domain", isowein::to_json(d)}};

  if (const auto* c31 = std::get_if<isowein::Case31Candidate>(&spec)) {
    double n0 = 0;
    if (spec_json.contains("n0")) n0 = isowein::detail::number_field(spec_json, "n0");
    r["params"]["n0"] = n0;
    isowein::GridDomain line = d;
    for (const auto& l : isowein::singular_loci(spec)) line.singular_loci.push_back(l);
    std::vector<double> xs;
    for (int i = 0; i < line.nx; ++i) {
      const isowein::Point2 p{line.x_at(i), line.y_min};
      if (!line.excluded(p)) xs.push_back(p.x);
    }
    const isowein::ResidualReport rep = isowein::case31_contradiction_scan(*c31, n0, xs);
    json samples = json::array();
    for (double x : xs) samples.push_back({x, isowein::case31_residual(*c31, n0, x)});
    r["result"] = {{"lw_residual_in_x", isowein::to_json(rep)}, {"samples", samples}};
    r["pass"] = isowein::case31_rejected(rep);
    r["tolerances"] = {{"min_samples", 3}, {"std_dev_strictly_positive", true}};
    return emit(r);
  }

  const isowein::FamilyVerification v = isowein::verify_family(spec, d, args.tol);
  json result = {{"prediction", isowein::to_json(v.prediction)},
                 {"deviation", isowein::to_json(v.report)}};
  bool pass = v.pass;
  if (v.prediction.lw) {
    const auto lw = isowein::scan_grid(z, d, isowein::LWResidual{*v.prediction.lw});
    result["lw_residual"] = isowein::to_json(lw);
    pass = pass && lw.max_abs <= args.tol;
  }
  r["result"] = result;
  r["pass"] = pass;
  r["tolerances"] = {{"max_abs", args.tol}};
  return emit(r);
}

// ---- ode -------------------------------------------------------------------

struct OdeArgs {
  std::string rhs = "eq318";
  double c3 = 1, m0 = 0, c5 = 1, d10 = 0;
  double t0 = 0, t_end = 1, step = 1e-3;
  double f0 = 1, fp0 = 0;
  bool f0_given = false, fp0_given = false;
  std::string oracle_312;
  std::string out;
  double tol = 1e-6;
};

int run_ode(const OdeArgs& args) {
  isowein::IVP ivp;
  ivp.t0 = args.t0;
  ivp.t_end = args.t_end;
  ivp.step = args.step;
  ivp.y0 = args.f0;
  ivp.yp0 = args.fp0;

  json params = {{"rhs", args.rhs}, {"t0", args.t0}, {"t_end", args.t_end}, {"step", args.step}};
  std::optional<std::pair<double, double>> oracle312;
  if (args.rhs == "eq311") {
    ivp.rhs = isowein::Eq311{args.c3, args.m0};
    params["c3"] = args.c3;
    params["m0"] = args.m0;
    if (!args.oracle_312.empty()) {
      const auto cd = parse_list(args.oracle_312, 2, "--oracle-312");
      oracle312 = {cd[0], cd[1]};
      params["oracle_312"] = {{"c4", cd[0]}, {"d9", cd[1]}};
      const auto jet0 = isowein::closed_form_312_jet(args.c3, cd[0], cd[1], args.m0, args.t0);
      if (!args.f0_given) ivp.y0 = jet0.f;
      if (!args.fp0_given) ivp.yp0 = jet0.fp;
    }
  } else if (args.rhs == "eq318") {
    ivp.rhs = isowein::Eq318{args.c5, args.d10};
    params["c5"] = args.c5;
    params["d10"] = args.d10;
  } else {
    throw UsageError("--rhs must be eq311 or eq318");
  }
  params["f0"] = ivp.y0;
  params["fp0"] = ivp.yp0;

  json r = new_report("ode");
  r["params"] = params;
  const isowein::Trajectory traj = isowein::integrate(ivp);

  json result = {{"n_nodes", traj.size()},
                 {"final", {{"t", traj.back().t}, {"f", traj.back().f}, {"fp", traj.back().fp}}},
                 {"oracle", nullptr}};
  std::optional<double> max_dev;
  if (args.rhs == "eq318" && args.d10 == 0) {
    result["oracle"] = "linear";
    double dev = 0;
    for (const auto& p : traj) {
      const auto exact = isowein::closed_form_318_linear(args.c5, ivp.t0, ivp.y0, ivp.yp0, p.t);
      dev = std::fmax(dev, std::fmax(std::fabs(p.f - exact.f), std::fabs(p.fp - exact.fp)));
    }
    max_dev = dev;
  } else if (oracle312) {
    result["oracle"] = "closed_form_312";
    double dev = 0;
    for (const auto& p : traj) {
      const auto exact =
          isowein::closed_form_312_jet(args.c3, oracle312->first, oracle312->second, args.m0, p.t);
      dev = std::fmax(dev, std::fmax(std::fabs(p.f - exact.f), std::fabs(p.fp - exact.fp)));
    }
    max_dev = dev;
  }
  if (max_dev) {
    result["max_deviation"] = *max_dev;
    r["pass"] = *max_dev <= args.tol;
    r["tolerances"] = {{"max_deviation", args.tol}};
  }
  if (!args.out.empty()) {
    std::ofstream csv(args.out);
    if (!csv) throw UsageError("cannot write '" + args.out + "'");
    isowein::write_trajectory_csv(csv, traj);
    result["csv"] = args.out;
  }
  r["result"] = result;
  return emit(r);
}

// ---- mesh ------------------------------------------------------------------

struct MeshArgs {
  std::string surface;
  std::string spec_path;
  std::string out;
  DomainFlags domain;
};

int run_mesh(const MeshArgs& args) {
  isowein::GridDomain d = args.domain.build();
  isowein::Expr z;
  json params = json::object();
  if (!args.spec_path.empty()) {
    const isowein::FamilySpec spec =
        isowein::family_spec_from_json(read_json_file(args.spec_path), {"n0"});
    z = isowein::build(spec);
    for (const auto& l : isowein::singular_loci(spec)) d.singular_loci.push_back(l);
    params["spec"] = isowein::to_json(spec);
  } else if (!args.surface.empty()) {
    z = isowein::parse(args.surface);
  } else {
    throw UsageError("mesh needs --surface or --spec");
  }
  params["domain"] = isowein::to_json(d);

  const isowein::Mesh mesh = isowein::build_mesh(z, d);
  std::ofstream obj(args.out);
  if (!obj) throw UsageError("cannot write '" + args.out + "'");
  isowein::write_obj(obj, mesh);
  obj.close();
  if (!obj) throw UsageError("write to '" + args.out + "' failed");

  json r = new_report("mesh");
  r["surface"] = isowein::print(z);
  r["params"] = params;
  r["result"] = {{"vertices", mesh.vertices.size()},
                 {"triangles", mesh.triangles.size()},
                 {"out", args.out}};
  return emit(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isotropic curvature invariants and linear Weingarten checks for graph surfaces"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "jet, K, H and Euler residual at a point");
  eval_cmd->add_option("--surface", eval_args.surface, "z(x,y)")->required();
  eval_cmd->add_option("--at", eval_args.at, "x,y")->required();

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "residual statistics over a grid");
  scan_cmd->add_option("--surface", scan_args.surface, "z(x,y)")->required();
  scan_cmd->add_option("--residual", scan_args.residual, "lw | euler | jacobian")
      ->check(CLI::IsMember({"lw", "euler", "jacobian"}))
      ->capture_default_str();
  scan_cmd->add_option("--a", scan_args.a, "coefficient on H");
  scan_cmd->add_option("--b", scan_args.b, "coefficient on K");
  scan_cmd->add_option("--c", scan_args.c, "right-hand side");
  scan_cmd->add_option("--tol", scan_args.tol, "pass threshold on max |residual|");
  scan_cmd->add_option("--fd-step", scan_args.h, "finite-difference step of the jacobian residual");
  scan_args.domain.attach(scan_cmd);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-family", "check a classified family");
  verify_cmd->add_option("--spec", verify_args.spec_path, "family spec JSON file")->required();
  verify_cmd->add_option("--tol", verify_args.tol)->capture_default_str();
  verify_args.domain.attach(verify_cmd);

  OdeArgs ode_args;
  auto* ode_cmd = app.add_subcommand("ode", "integrate Eq311 / Eq318 with RK4");
  ode_cmd->add_option("--rhs", ode_args.rhs, "eq311 | eq318")
      ->check(CLI::IsMember({"eq311", "eq318"}))
      ->capture_default_str();
  ode_cmd->add_option("--c3", ode_args.c3)->capture_default_str();
  ode_cmd->add_option("--m0", ode_args.m0)->capture_default_str();
  ode_cmd->add_option("--c5", ode_args.c5)->capture_default_str();
  ode_cmd->add_option("--d10", ode_args.d10)->capture_default_str();
  ode_cmd->add_option("--t0", ode_args.t0)->capture_default_str();
  ode_cmd->add_option("--t-end", ode_args.t_end)->capture_default_str();
  ode_cmd->add_option("--step", ode_args.step)->capture_default_str();
  auto* f0_opt = ode_cmd->add_option("--f0", ode_args.f0, "f(t0)")->capture_default_str();
  auto* fp0_opt = ode_cmd->add_option("--fp0", ode_args.fp0, "f'(t0)")->capture_default_str();
  ode_cmd->add_option("--oracle-312", ode_args.oracle_312,
                      "c4,d9: compare an eq311 run with the closed form");
  ode_cmd->add_option("--out", ode_args.out, "trajectory CSV path");
  ode_cmd->add_option("--tol", ode_args.tol)->capture_default_str();

  MeshArgs mesh_args;
  auto* mesh_cmd = app.add_subcommand("mesh", "write the graph as a Wavefront OBJ");
  mesh_cmd->add_option("--surface", mesh_args.surface, "z(x,y)");
  mesh_cmd->add_option("--spec", mesh_args.spec_path, "family spec JSON file");
  mesh_cmd->add_option("--out", mesh_args.out, "OBJ path")->required();
  mesh_args.domain.attach(mesh_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  std::string command = "unknown";
  try {
    if (*eval_cmd) {
      command = "eval";
      return run_eval(eval_args);
    }
    if (*scan_cmd) {
      command = "scan";
      return run_scan(scan_args);
    }
    if (*verify_cmd) {
      command = "verify-family";
      return run_verify_family(verify_args);
    }
    if (*ode_cmd) {
      command = "ode";
      ode_args.f0_given = f0_opt->count() > 0;
      ode_args.fp0_given = fp0_opt->count() > 0;
      return run_ode(ode_args);
    }
    command = "mesh";
    return run_mesh(mesh_args);
  } catch (const std::exception& e) {
    return emit_error(command, e);
  }
}
