#include "wqed/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wqed {

namespace {

using json = nlohmann::json;

const std::set<std::string>& known_ansatz_ids() {
  static const std::set<std::string> ids = {"wqed-xx", "wqed-i", "wqed-powerlaw",
                                            "ata-xx",  "ata-i",  "hea",
                                            "brick",   "hva-tfim", "hva-xxz"};
  return ids;
}

std::pair<int, int> location_of(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Best-effort source position of a key: the first occurrence of its quoted
// text. Good enough for the flat grammar this file parses.
std::string key_location(const std::string& text, const std::string& key) {
  const std::size_t pos = text.find("\"" + key + "\"");
  if (pos == std::string::npos) return "";
  const auto [line, col] = location_of(text, pos);
  return " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("config: " + msg); }

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& where, const std::string& text) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      fail("unknown key '" + item.key() + "' in " + where + key_location(text, item.key()));
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) fail(where + ": missing required key '" + std::string(key) + "'");
  return obj.at(key);
}

double require_number(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) fail(where + "." + key + " must be a number");
  return v.get<double>();
}

void parse_model(const json& jm, const std::string& text, ModelSpec& model) {
  const std::string kind_name =
      require(jm, "kind", "model").is_string() ? jm["kind"].get<std::string>() : "";
  try {
    model.kind = model_kind_from_name(kind_name);
  } catch (const std::exception&) {
    fail("unknown model kind '" + kind_name + "'" + key_location(text, "kind"));
  }
  switch (model.kind) {
    case ModelKind::XXZ:
      check_keys(jm, {"kind", "boundary", "delta"}, "model", text);
      model.boundary = Boundary::PERIODIC;
      if (jm.contains("delta")) model.delta = require_number(jm, "delta", "model");
      break;
    case ModelKind::TFIM:
      check_keys(jm, {"kind", "boundary", "g"}, "model", text);
      model.boundary = Boundary::OPEN;
      if (jm.contains("g")) model.g = require_number(jm, "g", "model");
      break;
    case ModelKind::LRTFIM: {
      check_keys(jm, {"kind", "boundary", "alpha", "theta"}, "model", text);
      model.boundary = Boundary::OPEN;
      model.alpha = require_number(jm, "alpha", "model");
      if (model.alpha <= 0) fail("model.alpha must be positive" + key_location(text, "alpha"));
      model.theta = -1.0;
      if (jm.contains("theta")) {
        const json& jt = jm["theta"];
        if (jt.is_string() && jt.get<std::string>() == "critical")
          model.theta = -1.0;
        else if (jt.is_number())
          model.theta = jt.get<double>();
        else
          fail("model.theta must be a number or \"critical\"" + key_location(text, "theta"));
      }
      break;
    }
  }
  if (jm.contains("boundary")) {
    const std::string b = jm["boundary"].get<std::string>();
    if (b == "open")
      model.boundary = Boundary::OPEN;
    else if (b == "periodic")
      model.boundary = Boundary::PERIODIC;
    else
      fail("model.boundary must be \"open\" or \"periodic\"" + key_location(text, "boundary"));
    if (model.kind == ModelKind::LRTFIM && model.boundary == Boundary::PERIODIC)
      fail("the long-range Ising model is defined on an open chain" +
           key_location(text, "boundary"));
  }
}

std::pair<int, int> parse_depth_range(const json& j, const std::string& where,
                                      const std::string& text) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(where + ".depths must be a [min, max] pair of integers" + key_location(text, "depths"));
  const int lo = j[0].get<int>(), hi = j[1].get<int>();
  if (lo < 1 || hi < lo)
    fail(where + ".depths range is empty or starts below 1" + key_location(text, "depths"));
  return {lo, hi};
}

void parse_ansatz_entry(const json& ja, const std::string& text, AnsatzSweep& sweep) {
  const std::string where = "ansatzes entry";
  const json& jid = require(ja, "id", where);
  if (!jid.is_string()) fail(where + ".id must be a string");
  sweep.id = jid.get<std::string>();
  if (!known_ansatz_ids().count(sweep.id))
    fail("unknown ansatz id '" + sweep.id + "'" + key_location(text, sweep.id));
  if (sweep.id == "wqed-powerlaw")
    check_keys(ja, {"id", "depths", "n_exp", "freeze_fit"}, where, text);
  else
    check_keys(ja, {"id", "depths"}, where, text);
  std::tie(sweep.depth_min, sweep.depth_max) =
      parse_depth_range(require(ja, "depths", where), where, text);
  if (ja.contains("n_exp")) {
    sweep.n_exp = ja["n_exp"].get<int>();
    if (sweep.n_exp < 1) fail("n_exp must be >= 1" + key_location(text, "n_exp"));
  }
  if (ja.contains("freeze_fit")) sweep.freeze_fit = ja["freeze_fit"].get<bool>();
}

void parse_optimizer(const json& jo, const std::string& text, OptimizerConfig& opt) {
  check_keys(jo,
             {"learning_rate", "beta1", "beta2", "eps", "max_iters", "cost_tol", "grad_step"},
             "optimizer", text);
  if (jo.contains("learning_rate")) opt.learning_rate = jo["learning_rate"].get<double>();
  if (jo.contains("beta1")) opt.beta1 = jo["beta1"].get<double>();
  if (jo.contains("beta2")) opt.beta2 = jo["beta2"].get<double>();
  if (jo.contains("eps")) opt.eps = jo["eps"].get<double>();
  if (jo.contains("max_iters")) opt.max_iters = jo["max_iters"].get<int>();
  if (jo.contains("cost_tol")) opt.cost_tol = jo["cost_tol"].get<double>();
  if (jo.contains("grad_step")) opt.grad_step = jo["grad_step"].get<double>();
  if (opt.learning_rate <= 0) fail("optimizer.learning_rate must be positive");
  if (opt.beta1 < 0 || opt.beta1 >= 1 || opt.beta2 < 0 || opt.beta2 >= 1)
    fail("optimizer.beta1/beta2 must lie in [0, 1)");
  if (opt.eps <= 0) fail("optimizer.eps must be positive");
  if (opt.max_iters < 1) fail("optimizer.max_iters must be >= 1");
  if (opt.cost_tol <= 0) fail("optimizer.cost_tol must be positive");
  if (opt.grad_step <= 0) fail("optimizer.grad_step must be positive");
}

void parse_schedule(const json& js, const std::string& text, Schedule& sched,
                    bool& s_end_explicit) {
  check_keys(js, {"s_start", "delta_s", "s_end"}, "schedule", text);
  if (js.contains("s_start")) sched.s_start = js["s_start"].get<double>();
  if (js.contains("delta_s")) sched.delta_s = js["delta_s"].get<double>();
  if (js.contains("s_end")) {
    const json& je = js["s_end"];
    if (je.is_string() && je.get<std::string>() == "auto") {
      s_end_explicit = false;
    } else if (je.is_number()) {
      sched.s_end = je.get<double>();
      s_end_explicit = true;
    } else {
      fail("schedule.s_end must be a number or \"auto\"" + key_location(text, "s_end"));
    }
  }
  if (sched.s_start < 0 || sched.s_start > 1)
    fail("schedule.s_start must lie in [0, 1]" + key_location(text, "s_start"));
  if (sched.delta_s < 0)
    fail("schedule.delta_s must be >= 0 (0 = auto)" + key_location(text, "delta_s"));
  if (s_end_explicit && (sched.s_end < sched.s_start || sched.s_end > 1))
    fail("schedule.s_end must lie in [s_start, 1]" + key_location(text, "s_end"));
}

void parse_noise(const json& jn, const std::string& text, ExperimentConfig& cfg) {
  if (jn.is_null()) return;
  if (jn.is_string()) {
    const std::string name = jn.get<std::string>();
    try {
      cfg.noise = noise_preset(name);
    } catch (const std::exception&) {
      fail("noise preset must be \"low\" or \"high\"" + key_location(text, "noise"));
    }
    cfg.noise_preset = name;
    return;
  }
  if (!jn.is_object()) fail("noise must be null, a preset name, or {p1, p2}");
  check_keys(jn, {"p1", "p2"}, "noise", text);
  NoiseModel nm;
  nm.p1 = require_number(jn, "p1", "noise");
  nm.p2 = require_number(jn, "p2", "noise");
  if (nm.p1 < 0 || nm.p1 > 1 || nm.p2 < 0 || nm.p2 > 1)
    fail("noise probabilities must lie in [0, 1]" + key_location(text, "noise"));
  cfg.noise = nm;
  cfg.noise_preset = "custom";
}

void parse_spectrum(const json& js, const std::string& text, SpectrumJob& job) {
  check_keys(js, {"ansatzes", "depths", "samples", "seed"}, "spectrum", text);
  const json& ja = require(js, "ansatzes", "spectrum");
  if (!ja.is_array() || ja.empty()) fail("spectrum.ansatzes must be a nonempty array");
  for (const json& j : ja) {
    const std::string id = j.get<std::string>();
    if (!known_ansatz_ids().count(id)) fail("unknown ansatz id '" + id + "' in spectrum");
    job.ansatz_ids.push_back(id);
  }
  std::tie(job.depth_min, job.depth_max) =
      parse_depth_range(require(js, "depths", "spectrum"), "spectrum", text);
  if (js.contains("samples")) {
    job.n_samples = js["samples"].get<int>();
    if (job.n_samples < 1) fail("spectrum.samples must be >= 1");
  }
  if (js.contains("seed")) job.seed = js["seed"].get<std::uint64_t>();
}

void validate_cross_fields(const ExperimentConfig& cfg) {
  for (int n : cfg.qubits) {
    if (n < 2 || n > 16) fail("qubits entries must lie in [2, 16]");
    if (cfg.noise && n > cfg.max_noisy_qubits)
      fail("qubits entry " + std::to_string(n) + " exceeds max_noisy_qubits (" +
           std::to_string(cfg.max_noisy_qubits) + ") for a noisy experiment");
  }
  std::set<int> seen(cfg.qubits.begin(), cfg.qubits.end());
  if (seen.size() != cfg.qubits.size()) fail("qubits entries must be distinct");
  std::set<std::uint64_t> seed_set(cfg.seeds.begin(), cfg.seeds.end());
  if (seed_set.size() != cfg.seeds.size()) fail("seeds must be distinct");

  for (const AnsatzSweep& a : cfg.ansatzes) {
    const bool needs_even = a.id == "brick" || a.id == "hva-xxz";
    for (int n : cfg.qubits) {
      if (needs_even && n % 2 != 0)
        fail("ansatz '" + a.id + "' needs an even qubit count, got " + std::to_string(n));
      if (a.id == "hva-xxz" && n < 4) fail("hva-xxz needs at least 4 qubits");
      if (a.id == "wqed-powerlaw" && n - 1 < 2 * a.n_exp)
        fail("wqed-powerlaw with n_exp=" + std::to_string(a.n_exp) +
             " needs a chain of at least " + std::to_string(2 * a.n_exp + 1) + " qubits");
    }
  }
  if (cfg.spectrum) {
    for (int n : cfg.qubits)
      if (n % 2 != 0) fail("spectrum sampling needs even qubit counts (half-chain cut)");
  }
  if (cfg.model.kind == ModelKind::XXZ) {
    for (const AnsatzSweep& a : cfg.ansatzes)
      if (a.id == "hva-tfim") fail("hva-tfim targets the transverse-field model only");
  }
}

json model_json(const ModelSpec& m) {
  json j;
  j["kind"] = model_kind_name(m.kind);
  j["boundary"] = m.boundary == Boundary::PERIODIC ? "periodic" : "open";
  switch (m.kind) {
    case ModelKind::XXZ: j["delta"] = m.delta; break;
    case ModelKind::TFIM: j["g"] = m.g; break;
    case ModelKind::LRTFIM:
      j["alpha"] = m.alpha;
      if (m.theta < 0)
        j["theta"] = "critical";
      else
        j["theta"] = m.theta;
      break;
  }
  return j;
}

json content_json(const ExperimentConfig& cfg) {
  json root;
  root["schema_version"] = cfg.schema_version;
  root["model"] = model_json(cfg.model);
  root["qubits"] = cfg.qubits;
  json ansatzes = json::array();
  for (const AnsatzSweep& a : cfg.ansatzes) {
    json ja;
    ja["id"] = a.id;
    ja["depths"] = {a.depth_min, a.depth_max};
    if (a.id == "wqed-powerlaw") {
      ja["n_exp"] = a.n_exp;
      ja["freeze_fit"] = a.freeze_fit;
    }
    ansatzes.push_back(std::move(ja));
  }
  root["ansatzes"] = std::move(ansatzes);
  root["seeds"] = cfg.seeds;
  root["optimizer"] = {{"learning_rate", cfg.optimizer.learning_rate},
                       {"beta1", cfg.optimizer.beta1},
                       {"beta2", cfg.optimizer.beta2},
                       {"eps", cfg.optimizer.eps},
                       {"max_iters", cfg.optimizer.max_iters},
                       {"cost_tol", cfg.optimizer.cost_tol},
                       {"grad_step", cfg.optimizer.grad_step}};
  json sched;
  sched["s_start"] = cfg.schedule.s_start;
  sched["delta_s"] = cfg.schedule.delta_s;
  if (cfg.s_end_explicit)
    sched["s_end"] = cfg.schedule.s_end;
  else
    sched["s_end"] = "auto";
  root["schedule"] = std::move(sched);
  if (!cfg.noise) {
    root["noise"] = nullptr;
  } else if (cfg.noise_preset == "low" || cfg.noise_preset == "high") {
    root["noise"] = cfg.noise_preset;
  } else {
    root["noise"] = {{"p1", cfg.noise->p1}, {"p2", cfg.noise->p2}};
  }
  if (cfg.spectrum) {
    json js;
    js["ansatzes"] = cfg.spectrum->ansatz_ids;
    js["depths"] = {cfg.spectrum->depth_min, cfg.spectrum->depth_max};
    js["samples"] = cfg.spectrum->n_samples;
    js["seed"] = cfg.spectrum->seed;
    root["spectrum"] = std::move(js);
  }
  return root;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = location_of(text, e.byte > 0 ? e.byte - 1 : 0);
    fail("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!root.is_object()) fail("top level must be an object");
  check_keys(root,
             {"schema_version", "model", "qubits", "ansatzes", "seeds", "optimizer",
              "schedule", "noise", "max_noisy_qubits", "output_dir", "spectrum"},
             "top level", text);

  ExperimentConfig cfg;
  if (root.contains("schema_version")) {
    cfg.schema_version = root["schema_version"].get<int>();
    if (cfg.schema_version != kSchemaVersion)
      fail("unsupported schema_version " + std::to_string(cfg.schema_version) +
           " (this build reads version " + std::to_string(kSchemaVersion) + ")");
  }
  parse_model(require(root, "model", "top level"), text, cfg.model);

  const json& jq = require(root, "qubits", "top level");
  if (!jq.is_array() || jq.empty())
    fail("qubits must be a nonempty array" + key_location(text, "qubits"));
  for (const json& j : jq) cfg.qubits.push_back(j.get<int>());

  const json& jas = require(root, "ansatzes", "top level");
  if (!jas.is_array() || jas.empty())
    fail("ansatzes must be a nonempty array" + key_location(text, "ansatzes"));
  for (const json& ja : jas) {
    AnsatzSweep sweep;
    parse_ansatz_entry(ja, text, sweep);
    cfg.ansatzes.push_back(std::move(sweep));
  }

  const json& jseeds = require(root, "seeds", "top level");
  if (!jseeds.is_array() || jseeds.empty())
    fail("seeds must be a nonempty array" + key_location(text, "seeds"));
  for (const json& j : jseeds) cfg.seeds.push_back(j.get<std::uint64_t>());

  if (root.contains("optimizer")) parse_optimizer(root["optimizer"], text, cfg.optimizer);
  if (root.contains("schedule"))
    parse_schedule(root["schedule"], text, cfg.schedule, cfg.s_end_explicit);
  if (root.contains("noise")) parse_noise(root["noise"], text, cfg);
  if (root.contains("max_noisy_qubits")) {
    cfg.max_noisy_qubits = root["max_noisy_qubits"].get<int>();
    if (cfg.max_noisy_qubits < 2 || cfg.max_noisy_qubits > 12)
      fail("max_noisy_qubits must lie in [2, 12]" + key_location(text, "max_noisy_qubits"));
  }
  const json& jout = require(root, "output_dir", "top level");
  if (!jout.is_string() || jout.get<std::string>().empty())
    fail("output_dir must be a nonempty string" + key_location(text, "output_dir"));
  cfg.output_dir = jout.get<std::string>();
  if (root.contains("spectrum") && !root["spectrum"].is_null()) {
    SpectrumJob job;
    parse_spectrum(root["spectrum"], text, job);
    cfg.spectrum = std::move(job);
  }

  validate_cross_fields(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("config: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  json root = content_json(cfg);
  root["max_noisy_qubits"] = cfg.max_noisy_qubits;
  root["output_dir"] = cfg.output_dir;
  return root.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string config_hash(const ExperimentConfig& cfg) {
  const std::string canonical = content_json(cfg).dump();
  const std::uint64_t h = fnv1a64(canonical);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace wqed
