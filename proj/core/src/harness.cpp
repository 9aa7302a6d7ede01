#include "wqed/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "wqed/analysis.hpp"
#include "wqed/ansatz.hpp"
#include "wqed/noise.hpp"
#include "wqed/version.hpp"

namespace wqed {

namespace {

using json = nlohmann::json;

// Everything about one (model, n) pair that metric evaluation needs; built
// once, serially, then shared read-only across workers.
struct EdEntry {
  PauliOperator h0{1};
  PauliOperator htarget{1};
  double s_end = 1.0;
  double theta = 0.0;  // resolved long-range angle; unused otherwise
  Eigen::MatrixXcd gs_basis;
  double e0 = 0.0;
  double emax = 0.0;
  int degeneracy = 1;
};

struct RunJob {
  AnsatzSweep sweep;
  int n = 0;
  int depth = 0;
  std::uint64_t seed = 0;
  std::filesystem::path file;
};

struct SpectrumTask {
  std::string ansatz_id;
  int n = 0;
  int depth = 0;
  std::filesystem::path file;
};

std::string run_file_name(const std::string& ansatz, int n, int depth, std::uint64_t seed) {
  return ansatz + "_n" + std::to_string(n) + "_d" + std::to_string(depth) + "_s" +
         std::to_string(seed) + ".json";
}

std::string spectrum_file_name(const std::string& ansatz, int n, int depth) {
  return "spectrum_" + ansatz + "_n" + std::to_string(n) + "_d" + std::to_string(depth) +
         ".json";
}

std::string iso_utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int resolve_jobs(const HarnessOptions& opts) {
  if (opts.jobs > 0) return opts.jobs;
  if (const char* env = std::getenv(kWorkerEnvVar)) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Rough per-run working-set estimate, used only to shrink the worker pool.
long run_memory_mb(int n, bool noisy) {
  const double dim = std::pow(2.0, n);
  const double bytes = noisy ? 4.0 * dim * dim * 16.0 : 70.0 * dim * 16.0;
  return static_cast<long>(bytes / (1024.0 * 1024.0)) + 1;
}

Circuit build_run_circuit(const ExperimentConfig& cfg, const AnsatzSweep& sweep, int n,
                          int depth) {
  AnsatzOptions options;
  options.n_exp = sweep.n_exp;
  options.freeze_fit = sweep.freeze_fit;
  options.alpha = cfg.model.kind == ModelKind::LRTFIM ? cfg.model.alpha : 1.0;
  options.initial_state = model_initial_state(cfg.model.kind);
  return build_ansatz(sweep.id, n, depth, options);
}

EdEntry build_ed_entry(const ExperimentConfig& cfg, int n) {
  EdEntry entry;
  ModelSpec spec = cfg.model;
  spec.n_qubits = n;
  if (spec.kind == ModelKind::LRTFIM && spec.theta < 0)
    spec.theta = critical_theta(n, spec.alpha);
  entry.theta = spec.theta;
  entry.h0 = build_h0(spec);
  if (spec.kind == ModelKind::LRTFIM) {
    // Interpolate from the field term towards the pure coupling term; the
    // endpoint below makes the final cost proportional to the model at the
    // resolved angle, so its ground space is the model's.
    entry.htarget = build_lrtfim(n, spec.alpha, std::numbers::pi / 2);
    entry.s_end = cfg.s_end_explicit
                      ? cfg.schedule.s_end
                      : std::sin(spec.theta) / (std::sin(spec.theta) + std::cos(spec.theta));
  } else {
    entry.htarget = build_model(spec);
    entry.s_end = cfg.s_end_explicit ? cfg.schedule.s_end : 1.0;
  }
  const PauliOperator hfinal = build_cost(entry.s_end, entry.h0, entry.htarget);
  const Spectrum ground = ground_space_complete(hfinal);
  entry.degeneracy = ground.ground_degeneracy;
  entry.e0 = ground.eigenvalues.front();
  entry.gs_basis.resize(ground.eigenvectors.front().size(), entry.degeneracy);
  for (int k = 0; k < entry.degeneracy; ++k) entry.gs_basis.col(k) = ground.eigenvectors[k];
  std::tie(entry.e0, entry.emax) = spectral_extent(hfinal);
  return entry;
}

void fill_metrics(RunRecord& record, const Circuit& circuit, const EdEntry& ed,
                  const ExperimentConfig& cfg) {
  if (record.failed || record.steps.empty()) return;
  const Eigen::VectorXd& best = record.steps.back().best_params;
  record.exact_energy = ed.e0;
  record.ground_degeneracy = ed.degeneracy;
  if (cfg.noise) {
    const DensityMatrix dm = noisy_apply_circuit(circuit, best, *cfg.noise);
    record.infidelity = mixed_infidelity(dm, ed.gs_basis);
  } else {
    const StateVector psi = apply_circuit(circuit, best);
    record.infidelity = infidelity(psi, ed.gs_basis);
  }
  if (record.energy) record.residual_energy = residual_energy(*record.energy, ed.e0, ed.emax);
}

RunRecord execute_run(const ExperimentConfig& cfg, const RunJob& job, const EdEntry& ed,
                      const std::string& hash) {
  const Circuit circuit = build_run_circuit(cfg, job.sweep, job.n, job.depth);
  Schedule sched = cfg.schedule;
  sched.s_end = ed.s_end;

  ModelSpec spec = cfg.model;
  spec.n_qubits = job.n;
  if (spec.kind == ModelKind::LRTFIM) spec.theta = ed.theta;

  RunRecord record = aavqe(spec, ed.h0, ed.htarget, circuit, sched, cfg.optimizer, job.seed);
  record.config_hash = hash;
  if (cfg.noise && !record.failed) {
    const PauliOperator hfinal = build_cost(ed.s_end, ed.h0, ed.htarget);
    const double noiseless_wall = record.wall_seconds;
    RunRecord noisy = noisy_vqe(hfinal, circuit, record, *cfg.noise, cfg.optimizer);
    noisy.config_hash = hash;
    noisy.noise_preset = cfg.noise_preset;
    noisy.wall_seconds += noiseless_wall;
    record = std::move(noisy);
  }
  fill_metrics(record, circuit, ed, cfg);
  return record;
}

json spectrum_record_json(const SpectrumTask& task, const SpectrumSamples& samples,
                          const SpectrumJob& jobcfg, const std::string& hash) {
  json j;
  j["type"] = "spectrum";
  j["schema_version"] = kSchemaVersion;
  j["config_hash"] = hash;
  j["ansatz"] = task.ansatz_id;
  j["n"] = task.n;
  j["depth"] = task.depth;
  j["samples"] = jobcfg.n_samples;
  j["seed"] = jobcfg.seed;
  j["ks_distance"] = samples.ks_distance;
  j["eigenvalues"] = samples.eigenvalues;
  return j;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// ---- summary table --------------------------------------------------------

std::string summary_csv(std::vector<RunRecord> records) {
  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.ansatz_id, a.n_qubits, a.depth, a.seed, a.noise_preset) <
           std::tie(b.ansatz_id, b.n_qubits, b.depth, b.seed, b.noise_preset);
  });
  std::string out =
      "ansatz,n,depth,seed,noise,energy,exact_energy,infidelity,residual_energy,"
      "ground_degeneracy,iters,failed\n";
  for (const RunRecord& r : records) {
    out += r.ansatz_id;
    out += ',' + std::to_string(r.n_qubits) + ',' + std::to_string(r.depth) + ',' +
           std::to_string(r.seed) + ',';
    out += r.noise_preset;
    out += ',';
    if (r.energy) out += format_double(*r.energy);
    out += ',';
    if (r.exact_energy) out += format_double(*r.exact_energy);
    out += ',';
    if (r.infidelity) out += format_double(*r.infidelity);
    out += ',';
    if (r.residual_energy) out += format_double(*r.residual_energy);
    out += ',';
    if (r.ground_degeneracy) out += std::to_string(*r.ground_degeneracy);
    out += ',' + std::to_string(r.total_iters()) + ',' + (r.failed ? std::string("true") : std::string("false")) +
           '\n';
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<RunRecord> load_all_records(const std::filesystem::path& dir) {
  const std::filesystem::path records_dir = dir / "records";
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(records_dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(records_dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string name = entry.path().filename().string();
      if (name.size() < 5 || name.substr(name.size() - 5) != ".json") continue;
      if (name.rfind("spectrum_", 0) == 0) continue;
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<RunRecord> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_record(f));
  return out;
}

HarnessResult run_experiment(const ExperimentConfig& cfg, const HarnessOptions& opts) {
  std::ostream& log = opts.log ? *opts.log : std::cerr;
  const std::string hash = config_hash(cfg);

  HarnessResult result;
  result.dir = cfg.output_dir;
  const std::filesystem::path records_dir = result.dir / "records";
  std::filesystem::create_directories(records_dir);

  // Resolve models and diagonalize once per qubit count (serial: the dense
  // path at n = 12 alone costs hundreds of MB).
  std::map<int, EdEntry> ed;
  for (int n : cfg.qubits) {
    log << "[ed] model=" << model_kind_name(cfg.model.kind) << " n=" << n << "...\n";
    ed.emplace(n, build_ed_entry(cfg, n));
  }

  std::vector<RunJob> jobs;
  for (const AnsatzSweep& sweep : cfg.ansatzes)
    for (int n : cfg.qubits)
      for (int depth = sweep.depth_min; depth <= sweep.depth_max; ++depth)
        for (std::uint64_t seed : cfg.seeds)
          jobs.push_back({sweep, n, depth, seed,
                          records_dir / run_file_name(sweep.id, n, depth, seed)});

  std::vector<SpectrumTask> spectrum_tasks;
  if (cfg.spectrum)
    for (const std::string& id : cfg.spectrum->ansatz_ids)
      for (int n : cfg.qubits)
        for (int depth = cfg.spectrum->depth_min; depth <= cfg.spectrum->depth_max; ++depth)
          spectrum_tasks.push_back({id, n, depth, records_dir / spectrum_file_name(id, n, depth)});

  // Worker pool sizing: honor the memory budget given the largest run.
  int jobs_n = resolve_jobs(opts);
  long worst_mb = 1;
  for (int n : cfg.qubits) worst_mb = std::max(worst_mb, run_memory_mb(n, cfg.noise.has_value()));
  const long budget = std::max(opts.memory_budget_mb, worst_mb);
  jobs_n = static_cast<int>(std::min<long>(jobs_n, std::max(1L, budget / worst_mb)));

  std::mutex mu;
  std::size_t next_job = 0, next_spectrum = 0;
  std::map<std::string, std::string> statuses;  // file name -> status

  auto worker = [&]() {
    for (;;) {
      RunJob job;
      SpectrumTask task;
      bool have_job = false, have_task = false;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next_job < jobs.size()) {
          job = jobs[next_job++];
          have_job = true;
        } else if (next_spectrum < spectrum_tasks.size()) {
          task = spectrum_tasks[next_spectrum++];
          have_task = true;
        }
      }
      if (!have_job && !have_task) return;

      if (have_job) {
        const std::string name = job.file.filename().string();
        if (!opts.force && std::filesystem::exists(job.file)) {
          bool reusable = false;
          try {
            reusable = load_record(job.file).config_hash == hash;
          } catch (const std::exception&) {
            reusable = false;  // partial or foreign file: recompute
          }
          if (reusable) {
            std::lock_guard<std::mutex> lock(mu);
            ++result.skipped;
            statuses[name] = "skipped";
            log << "[skip] " << name << "\n";
            continue;
          }
        }
        RunRecord record;
        try {
          record = execute_run(cfg, job, ed.at(job.n), hash);
        } catch (const std::exception& e) {
          record = RunRecord{};
          record.config_hash = hash;
          record.ansatz_id = job.sweep.id;
          record.n_qubits = job.n;
          record.depth = job.depth;
          record.model = cfg.model;
          record.model.n_qubits = job.n;
          record.seed = job.seed;
          if (cfg.noise) {
            record.noise_preset = cfg.noise_preset;
            record.noise_p1 = cfg.noise->p1;
            record.noise_p2 = cfg.noise->p2;
          }
          record.failed = true;
          record.fail_reason = e.what();
        }
        save_record(job.file, record);
        std::lock_guard<std::mutex> lock(mu);
        if (record.failed) {
          ++result.failed;
          statuses[name] = "failed";
          log << "[fail] " << name << ": " << record.fail_reason << "\n";
        } else {
          ++result.computed;
          statuses[name] = "computed";
          log << "[done] " << name << " energy=" << (record.energy ? *record.energy : 0.0)
              << " infidelity=" << (record.infidelity ? *record.infidelity : -1.0) << "\n";
        }
      } else {
        const std::string name = task.file.filename().string();
        if (!opts.force && std::filesystem::exists(task.file)) {
          std::lock_guard<std::mutex> lock(mu);
          ++result.skipped;
          statuses[name] = "skipped";
          continue;
        }
        try {
          const Circuit circuit = build_run_circuit(
              cfg, AnsatzSweep{task.ansatz_id, task.depth, task.depth, 2, false}, task.n,
              task.depth);
          const SpectrumSamples samples =
              entanglement_spectrum(circuit, cfg.spectrum->n_samples, cfg.spectrum->seed);
          atomic_write(task.file,
                       spectrum_record_json(task, samples, *cfg.spectrum, hash).dump() + "\n");
          std::lock_guard<std::mutex> lock(mu);
          ++result.computed;
          statuses[name] = "computed";
          log << "[done] " << name << " ks=" << samples.ks_distance << "\n";
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(mu);
          ++result.failed;
          statuses[name] = "failed";
          log << "[fail] " << name << ": " << e.what() << "\n";
        }
      }
    }
  };

  const int pool = std::max(1, std::min<int>(jobs_n, static_cast<int>(jobs.size() + spectrum_tasks.size())));
  std::vector<std::thread> threads;
  threads.reserve(pool);
  for (int i = 0; i < pool; ++i) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();

  // Manifest: every record file exactly once, statuses from this invocation.
  json manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["config_hash"] = hash;
  manifest["code_version"] = kVersion;
  manifest["written_at"] = iso_utc_now();
  manifest["config"] = json::parse(serialize_config(cfg));
  json files = json::array();
  for (const auto& [name, status] : statuses)
    files.push_back({{"file", "records/" + name}, {"status", status}});
  manifest["records"] = std::move(files);
  atomic_write(result.dir / "manifest.json", manifest.dump(2) + "\n");

  atomic_write(result.dir / "summary.csv", summary_csv(load_all_records(result.dir)));
  return result;
}

// ---- report tables --------------------------------------------------------

namespace {

bool is_noiseless(const RunRecord& r) { return r.noise_preset.empty(); }

// best-of-seeds infidelity per (ansatz, n, depth), with hole detection
struct FigureRows {
  // key: ansatz, n, depth -> best (lowest) infidelity
  std::map<std::tuple<std::string, int, int>, double> best;
  std::vector<std::string> gaps;
};

FigureRows collect_best(const std::vector<RunRecord>& records) {
  FigureRows rows;
  std::map<std::pair<std::string, int>, std::set<int>> depths_seen;
  for (const RunRecord& r : records) {
    if (r.failed || !r.infidelity) {
      rows.gaps.push_back(run_file_name(r.ansatz_id, r.n_qubits, r.depth, r.seed) +
                          (r.failed ? " (failed)" : " (no metrics)"));
      continue;
    }
    const auto key = std::make_tuple(r.ansatz_id, r.n_qubits, r.depth);
    auto [it, fresh] = rows.best.emplace(key, *r.infidelity);
    if (!fresh) it->second = std::min(it->second, *r.infidelity);
    depths_seen[{r.ansatz_id, r.n_qubits}].insert(r.depth);
  }
  for (const auto& [key, depths] : depths_seen)
    for (int d = *depths.begin(); d <= *depths.rbegin(); ++d)
      if (!depths.count(d))
        rows.gaps.push_back(key.first + " n=" + std::to_string(key.second) + " depth " +
                            std::to_string(d) + " missing");
  return rows;
}

std::string infidelity_table(const std::vector<RunRecord>& records, std::ostream& warn,
                             const std::string& figure) {
  const FigureRows rows = collect_best(records);
  for (const std::string& gap : rows.gaps) warn << "[" << figure << "] gap: " << gap << "\n";
  std::string out = "ansatz,n,depth,infidelity\n";
  for (const auto& [key, inf] : rows.best) {
    const auto& [ansatz, n, depth] = key;
    out += ansatz + ',' + std::to_string(n) + ',' + std::to_string(depth) + ',' +
           format_double(inf) + '\n';
  }
  return out;
}

std::string dmin_table(const std::vector<RunRecord>& records, std::ostream& warn,
                       const std::string& figure) {
  const auto entries = min_depth_sweep(records, 0.99);
  std::string out = "ansatz,n,d_min\n";
  for (const DepthSweepEntry& e : entries) {
    for (int d : e.missing_depths)
      warn << "[" << figure << "] " << e.ansatz_id << " n=" << e.n_qubits << " depth " << d
           << " missing\n";
    out += e.ansatz_id + ',' + std::to_string(e.n_qubits) + ',' +
           (e.reached ? std::to_string(e.d_min) : std::string("NOT_REACHED")) + '\n';
  }
  return out;
}

std::vector<RunRecord> filter_records(const std::vector<RunRecord>& records, ModelKind kind,
                                      bool noiseless) {
  std::vector<RunRecord> out;
  for (const RunRecord& r : records)
    if (r.model.kind == kind && is_noiseless(r) == noiseless) out.push_back(r);
  return out;
}

const std::set<double>& fig3_alphas() {
  static const std::set<double> alphas = {0.5, 1.0, 3.0};
  return alphas;
}

}  // namespace

std::vector<std::filesystem::path> report_figure(const std::filesystem::path& dir,
                                                 const std::string& figure,
                                                 std::ostream& warn) {
  const std::vector<RunRecord> all = load_all_records(dir);
  const std::filesystem::path tables = dir / "tables";
  std::filesystem::create_directories(tables);
  std::vector<std::filesystem::path> written;

  const auto emit = [&](const std::string& name, const std::string& content) {
    const std::filesystem::path path = tables / name;
    atomic_write(path, content);
    written.push_back(path);
  };

  if (figure == "fig2a" || figure == "fig2c") {
    const ModelKind kind = figure == "fig2a" ? ModelKind::XXZ : ModelKind::TFIM;
    const auto records = filter_records(all, kind, /*noiseless=*/true);
    if (records.empty()) warn << "[" << figure << "] no matching records in " << dir << "\n";
    emit(figure + ".csv", infidelity_table(records, warn, figure));
  } else if (figure == "fig2b" || figure == "fig2d") {
    const ModelKind kind = figure == "fig2b" ? ModelKind::XXZ : ModelKind::TFIM;
    const auto records = filter_records(all, kind, /*noiseless=*/true);
    if (records.empty()) warn << "[" << figure << "] no matching records in " << dir << "\n";
    emit(figure + ".csv", dmin_table(records, warn, figure));
  } else if (figure == "fig3") {
    auto records = filter_records(all, ModelKind::LRTFIM, /*noiseless=*/true);
    std::map<double, std::vector<RunRecord>> by_alpha;
    for (RunRecord& r : records) {
      if (!fig3_alphas().count(r.model.alpha)) {
        warn << "[fig3] dropping record with alpha=" << r.model.alpha
             << " (table covers 0.5, 1, 3)\n";
        continue;
      }
      by_alpha[r.model.alpha].push_back(std::move(r));
    }
    if (by_alpha.empty()) warn << "[fig3] no matching records in " << dir << "\n";
    std::string inf_out = "alpha,ansatz,n,depth,infidelity\n";
    std::string dmin_out = "alpha,ansatz,n,d_min\n";
    for (const auto& [alpha, recs] : by_alpha) {
      const FigureRows rows = collect_best(recs);
      for (const std::string& gap : rows.gaps)
        warn << "[fig3] alpha=" << format_double(alpha) << " gap: " << gap << "\n";
      for (const auto& [key, inf] : rows.best) {
        const auto& [ansatz, n, depth] = key;
        inf_out += format_double(alpha) + ',' + ansatz + ',' + std::to_string(n) + ',' +
                   std::to_string(depth) + ',' + format_double(inf) + '\n';
      }
      for (const DepthSweepEntry& e : min_depth_sweep(recs, 0.99))
        dmin_out += format_double(alpha) + ',' + e.ansatz_id + ',' +
                    std::to_string(e.n_qubits) + ',' +
                    (e.reached ? std::to_string(e.d_min) : std::string("NOT_REACHED")) + '\n';
    }
    emit("fig3_infidelity.csv", inf_out);
    emit("fig3_dmin.csv", dmin_out);
  } else if (figure == "fig4") {
    std::vector<RunRecord> noisy;
    for (const RunRecord& r : all)
      if (!is_noiseless(r) && r.model.kind == ModelKind::TFIM) noisy.push_back(r);
    if (noisy.empty()) warn << "[fig4] no noisy records in " << dir << "\n";
    std::map<std::string, std::vector<RunRecord>> grouped;
    for (RunRecord& r : noisy) grouped[r.noise_preset].push_back(std::move(r));
    std::string out = "noise,ansatz,n,depth,infidelity\n";
    for (const auto& [preset, recs] : grouped) {
      const FigureRows rows = collect_best(recs);
      for (const std::string& gap : rows.gaps)
        warn << "[fig4] preset=" << preset << " gap: " << gap << "\n";
      for (const auto& [key, inf] : rows.best) {
        const auto& [ansatz, n, depth] = key;
        out += preset + ',' + ansatz + ',' + std::to_string(n) + ',' + std::to_string(depth) +
               ',' + format_double(inf) + '\n';
      }
    }
    emit("fig4.csv", out);
  } else if (figure == "sm_spectrum") {
    std::vector<std::filesystem::path> files;
    const std::filesystem::path records_dir = dir / "records";
    if (std::filesystem::is_directory(records_dir)) {
      for (const auto& entry : std::filesystem::directory_iterator(records_dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.rfind("spectrum_", 0) == 0) files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) warn << "[sm_spectrum] no spectrum records in " << dir << "\n";
    std::string out = "ansatz,n,depth,samples,ks_distance\n";
    for (const auto& f : files) {
      std::ifstream in(f, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      const json j = json::parse(buf.str());
      out += j.at("ansatz").get<std::string>() + ',' + std::to_string(j.at("n").get<int>()) +
             ',' + std::to_string(j.at("depth").get<int>()) + ',' +
             std::to_string(j.at("samples").get<int>()) + ',' +
             format_double(j.at("ks_distance").get<double>()) + '\n';
    }
    emit("sm_spectrum.csv", out);
  } else {
    throw std::invalid_argument(
        "unknown figure '" + figure +
        "' (expected fig2a, fig2b, fig2c, fig2d, fig3, fig4 or sm_spectrum)");
  }
  return written;
}

}  // namespace wqed
