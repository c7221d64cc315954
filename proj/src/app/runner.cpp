#include "vms/app/runner.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "vms/app/io.hpp"
#include "vms/mesh.hpp"

namespace vms::app {

namespace {

std::string sweep_label(const RunConfig& cfg) {
  if (cfg.scenario == "weak_const") {
    return "weak_const_re" + std::to_string(static_cast<long>(cfg.re));
  }
  return cfg.scenario;
}

}  // namespace

ConvergenceResult run_convergence(const RunConfig& cfg) {
  ConvergenceResult result;
  result.label = sweep_label(cfg);
  const ManufacturedCase mc = case_from_config(cfg);

  InitialCondition init;
  const ManufacturedSolution exact = mc.exact;
  init.u1 = [exact](double x, double y, double t) { return exact.u1(x, y, t).v; };
  init.u2 = [exact](double x, double y, double t) { return exact.u2(x, y, t).v; };
  init.p = [exact](double x, double y, double t) { return exact.p(x, y, t).v; };
  init.c = [exact](double x, double y, double t) { return exact.c(x, y, t).v; };

  std::vector<std::pair<int, ErrorReport>> reports;
  for (int n_div : cfg.ndiv) {
    const double dt = cfg.dt > 0.0 ? cfg.dt : 1.0 / n_div;
    try {
      const Mesh mesh = build_structured_mesh(n_div);
      TransientOptions opts;
      opts.dt = dt;
      opts.T = cfg.T;
      opts.stab = cfg.stab;
      opts.linear = linear_options_for(cfg, n_div);
      opts.n_picard = cfg.n_picard;
      opts.retain_trajectory = true;
      const TransientRun run = run_transient(mesh, mc.coeffs, init, opts);
      reports.emplace_back(n_div, trajectory_error_norms(mesh, run, mc.exact, dt));
    } catch (const std::exception& e) {
      result.failures.push_back("n_div=" + std::to_string(n_div) + ": " + e.what());
      std::fprintf(stderr, "[%s] refinement n_div=%d failed: %s\n", result.label.c_str(), n_div,
                   e.what());
    }
  }
  if (reports.empty()) {
    throw std::runtime_error("convergence sweep '" + result.label + "': every refinement failed");
  }

  result.rows = roc_table(reports, result.label);
  const std::string dir = resolve_out_dir(cfg.out_dir);
  result.csv_path = dir + "/convergence_" + result.label + ".csv";
  write_convergence_csv(result.csv_path, result.rows);
  print_convergence_table(result.rows);
  return result;
}

std::vector<CavityCaseResult> run_cavity(const RunConfig& cfg) {
  if (cfg.cavity_re.empty()) throw std::invalid_argument("cavity: Re list must not be empty");
  const std::string dir = resolve_out_dir(cfg.out_dir);
  const Mesh mesh = build_structured_mesh(cfg.cavity_grid);

  std::vector<CavityCaseResult> results;
  for (double re : cfg.cavity_re) {
    if (re <= 0.0) throw std::invalid_argument("cavity: Re must be positive");
    CoefficientSet coeffs;
    coeffs.rho = cfg.rho;
    coeffs.alpha = 0.0;
    coeffs.D1 = constant_field(cfg.d_const);
    coeffs.D2 = constant_field(cfg.d_const);
    coeffs.viscosity.variant = ViscosityVariant::constant;
    coeffs.viscosity.eta_bar = cfg.rho / re;
    coeffs.viscosity.tau_y = cfg.tau_y;
    coeffs.bc_u1 = [](double /*x*/, double y, double /*t*/) { return y >= 1.0 ? 1.0 : 0.0; };

    SteadyOptions opts;
    opts.pseudo_dt = cfg.pseudo_dt;
    opts.tol_steady = cfg.tol_steady;
    opts.max_steps = cfg.max_steps;
    opts.stab = cfg.stab;
    opts.linear = linear_options_for(cfg, cfg.cavity_grid);

    const SteadyResult steady = run_steady_cavity(mesh, coeffs, opts);

    CavityCaseResult out;
    out.re = re;
    out.converged = steady.converged;
    out.steps = steady.steps;
    const std::string tag = "re" + std::to_string(static_cast<long>(re));
    if (!steady.converged) {
      std::fprintf(stderr, "cavity %s: no steady state within %d pseudo-steps\n", tag.c_str(),
                   steady.steps);
      results.push_back(out);
      continue;
    }

    const StreamFunctionField psi = compute_streamfunction(mesh, steady.state, opts.linear);
    out.extremum_value = psi.extremum_value;
    out.extremum_xy = psi.extremum_xy;
    out.extremum_distance = std::hypot(psi.extremum_xy[0] - 0.5, psi.extremum_xy[1] - 0.5);

    out.vtk_path = dir + "/cavity_" + tag + ".vtk";
    out.psi_csv_path = dir + "/cavity_" + tag + "_psi.csv";
    out.centerline_csv_path = dir + "/cavity_" + tag + "_centerline.csv";
    emit_vtk(mesh, steady.state, out.vtk_path);
    write_streamfunction_csv(mesh, psi, out.psi_csv_path);
    write_centerline_csv(centerline_profiles(mesh, steady.state), out.centerline_csv_path);

    std::printf("cavity %s: converged in %d steps, psi extremum %.6e at (%.4f, %.4f)\n",
                tag.c_str(), steady.steps, psi.extremum_value, psi.extremum_xy[0],
                psi.extremum_xy[1]);
    results.push_back(out);
  }
  return results;
}

int run_config(const RunConfig& cfg) {
  if (cfg.command == "convergence" || cfg.command == "solve") {
    const ConvergenceResult res = run_convergence(cfg);
    return res.failures.empty() ? 0 : 3;
  }
  if (cfg.command == "cavity") {
    const auto results = run_cavity(cfg);
    for (const auto& r : results) {
      if (!r.converged) return 3;
    }
    return 0;
  }
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace vms::app
