// wqed: command-line front end for the waveguide-QED VQE toolkit.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "wqed/analysis.hpp"
#include "wqed/ansatz.hpp"
#include "wqed/config.hpp"
#include "wqed/expfit.hpp"
#include "wqed/hamiltonians.hpp"
#include "wqed/harness.hpp"
#include "wqed/spectral.hpp"
#include "wqed/version.hpp"

namespace {

int cmd_run(const std::string& config_path, bool force, int jobs, long memory_mb) {
  const wqed::ExperimentConfig cfg = wqed::load_config(config_path);
  wqed::HarnessOptions opts;
  opts.force = force;
  opts.jobs = jobs;
  opts.memory_budget_mb = memory_mb;
  const wqed::HarnessResult res = wqed::run_experiment(cfg, opts);
  std::cout << "output: " << res.dir.string() << "\n"
            << "computed: " << res.computed << "  skipped: " << res.skipped
            << "  failed: " << res.failed << "\n";
  return res.failed > 0 ? 1 : 0;
}

int cmd_report(const std::string& dir, const std::string& figure) {
  const std::vector<std::filesystem::path> files = wqed::report_figure(dir, figure, std::cerr);
  for (const auto& f : files) std::cout << f.string() << "\n";
  return 0;
}

int cmd_ed(const std::string& model, int n, double delta, double g, double alpha, double theta,
           const std::string& boundary, int k, const std::string& method) {
  wqed::ModelSpec spec;
  spec.kind = wqed::model_kind_from_name(model);
  spec.n_qubits = n;
  spec.delta = delta;
  spec.g = g;
  spec.alpha = alpha;
  spec.theta = theta;

  if (boundary.empty()) {
    spec.boundary =
        spec.kind == wqed::ModelKind::XXZ ? wqed::Boundary::PERIODIC : wqed::Boundary::OPEN;
  } else if (boundary == "open") {
    spec.boundary = wqed::Boundary::OPEN;
  } else if (boundary == "periodic") {
    spec.boundary = wqed::Boundary::PERIODIC;
  } else {
    throw std::invalid_argument("boundary must be open or periodic, got '" + boundary + "'");
  }
  if (spec.kind == wqed::ModelKind::LRTFIM && spec.boundary == wqed::Boundary::PERIODIC)
    throw std::invalid_argument("the long-range Ising chain is defined on open boundaries only");

  if (spec.kind == wqed::ModelKind::LRTFIM && spec.theta < 0.0) {
    spec.theta = wqed::critical_theta(n, alpha);
    std::cout << "critical theta: " << wqed::format_double(spec.theta) << "\n";
  }

  wqed::EigMethod eig = wqed::EigMethod::AUTO;
  if (method == "dense")
    eig = wqed::EigMethod::DENSE;
  else if (method == "lanczos")
    eig = wqed::EigMethod::LANCZOS;
  else if (method != "auto")
    throw std::invalid_argument("method must be auto, dense or lanczos, got '" + method + "'");

  const wqed::PauliOperator h = wqed::build_model(spec);
  const wqed::Spectrum spec_k = wqed::ground_space(h, k, eig, /*want_vectors=*/false);
  for (std::size_t i = 0; i < spec_k.eigenvalues.size(); ++i)
    std::cout << "E[" << i << "] = " << wqed::format_double(spec_k.eigenvalues[i]) << "\n";
  std::cout << "ground degeneracy (within returned levels): " << spec_k.ground_degeneracy << "\n";
  return 0;
}

int cmd_fit_powerlaw(double alpha, int rmax, int nexp) {
  const wqed::ExpFitResult fit = wqed::fit_powerlaw(alpha, rmax, nexp);
  for (std::size_t i = 0; i < fit.terms.size(); ++i)
    std::cout << "term " << i << ": J = " << wqed::format_double(fit.terms[i].j)
              << "  L = " << wqed::format_double(fit.terms[i].l) << "\n";
  std::cout << "max relative residual: " << wqed::format_double(fit.max_rel_residual) << "\n";
  return 0;
}

int cmd_spectrum(const std::string& ansatz, int n, int depth, int samples, std::uint64_t seed,
                 double alpha, int nexp, bool freeze_fit, const std::string& out_dir) {
  wqed::AnsatzOptions opts;
  opts.alpha = alpha;
  opts.n_exp = nexp;
  opts.freeze_fit = freeze_fit;
  const wqed::Circuit circuit = wqed::build_ansatz(ansatz, n, depth, opts);
  const wqed::SpectrumSamples samples_out = wqed::entanglement_spectrum(circuit, samples, seed);
  std::cout << "samples: " << samples_out.n_samples
            << "  pooled eigenvalues: " << samples_out.eigenvalues.size() << "\n"
            << "ks distance to Marchenko-Pastur: "
            << wqed::format_double(samples_out.ks_distance) << "\n";
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path path = std::filesystem::path(out_dir) /
                                       ("spectrum_" + ansatz + "_n" + std::to_string(n) + "_d" +
                                        std::to_string(depth) + ".json");
    nlohmann::json j;
    j["type"] = "spectrum";
    j["schema_version"] = wqed::kSchemaVersion;
    j["ansatz"] = ansatz;
    j["n"] = n;
    j["depth"] = depth;
    j["samples"] = samples;
    j["seed"] = seed;
    j["ks_distance"] = samples_out.ks_distance;
    j["eigenvalues"] = samples_out.eigenvalues;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
    file << j.dump() << "\n";
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational quantum eigensolvers with tunable-range waveguide entanglers"};
  app.set_version_flag("--version", std::string(wqed::kVersion));
  app.require_subcommand(1);

  // run
  std::string config_path;
  bool force = false;
  int jobs = 0;
  long memory_mb = 3000;
  CLI::App* run = app.add_subcommand("run", "Execute the experiment grid of a JSON config");
  run->add_option("config", config_path, "experiment config file")->required();
  run->add_flag("--force", force, "recompute records that already exist");
  run->add_option("--jobs", jobs,
                  "worker count (default: WQED_NUM_WORKERS, then hardware concurrency)");
  run->add_option("--memory-mb", memory_mb, "memory budget that caps the worker pool");

  // report
  std::string report_dir, figure;
  CLI::App* report = app.add_subcommand("report", "Write figure-ready CSV tables from records");
  report->add_option("dir", report_dir, "experiment output directory")->required();
  report
      ->add_option("--figure", figure,
                   "one of fig2a, fig2b, fig2c, fig2d, fig3, fig4, sm_spectrum")
      ->required();

  // ed
  std::string model = "tfim", boundary, method = "auto";
  int n = 8, k = 1;
  double delta = 1.0, g = 1.0, alpha = 1.0, theta = -1.0;
  CLI::App* ed = app.add_subcommand("ed", "Exact low-lying spectrum of a model Hamiltonian");
  ed->add_option("--model", model, "xxz, tfim or lrtfim")->required();
  ed->add_option("--n", n, "chain length")->required();
  ed->add_option("--delta", delta, "XXZ anisotropy");
  ed->add_option("--g", g, "transverse field");
  ed->add_option("--alpha", alpha, "long-range interaction exponent");
  ed->add_option("--theta", theta, "long-range mixing angle; negative locates the critical point");
  ed->add_option("--boundary", boundary, "open or periodic (default: periodic for xxz, else open)");
  ed->add_option("--k", k, "number of eigenvalues")->check(CLI::PositiveNumber);
  ed->add_option("--method", method, "auto, dense or lanczos");

  // fit-powerlaw
  double fit_alpha = 1.0;
  int rmax = 0, nexp = 2;
  CLI::App* fit = app.add_subcommand("fit-powerlaw",
                                     "Exponential-sum fit of a power-law coupling profile");
  fit->add_option("--alpha", fit_alpha, "power-law exponent")->required();
  fit->add_option("--rmax", rmax, "largest distance in the fit window")
      ->required()
      ->check(CLI::PositiveNumber);
  fit->add_option("--nexp", nexp, "number of exponentials")->check(CLI::PositiveNumber);

  // spectrum
  std::string sp_ansatz, sp_out;
  int sp_n = 8, sp_depth = 1, sp_samples = 100;
  std::uint64_t sp_seed = 7;
  double sp_alpha = 1.0;
  int sp_nexp = 2;
  bool sp_freeze = false;
  CLI::App* sp = app.add_subcommand(
      "spectrum", "Half-chain entanglement spectrum of an ansatz at random parameters");
  sp->add_option("--ansatz", sp_ansatz, "ansatz id (e.g. hea, brick, wqed-i)")->required();
  sp->add_option("--n", sp_n, "qubit count (even)")->required();
  sp->add_option("--depth", sp_depth, "circuit depth")->required()->check(CLI::PositiveNumber);
  sp->add_option("--samples", sp_samples, "parameter draws")->check(CLI::PositiveNumber);
  sp->add_option("--seed", sp_seed, "sampling seed");
  sp->add_option("--alpha", sp_alpha, "power-law exponent (wqed-powerlaw only)");
  sp->add_option("--nexp", sp_nexp, "exponentials per layer (wqed-powerlaw only)");
  sp->add_flag("--freeze-fit", sp_freeze, "pin the fitted coupling shape (wqed-powerlaw only)");
  sp->add_option("--out", sp_out, "directory to write the spectrum record into");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, force, jobs, memory_mb);
    if (report->parsed()) return cmd_report(report_dir, figure);
    if (ed->parsed()) return cmd_ed(model, n, delta, g, alpha, theta, boundary, k, method);
    if (fit->parsed()) return cmd_fit_powerlaw(fit_alpha, rmax, nexp);
    if (sp->parsed())
      return cmd_spectrum(sp_ansatz, sp_n, sp_depth, sp_samples, sp_seed, sp_alpha, sp_nexp,
                          sp_freeze, sp_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
