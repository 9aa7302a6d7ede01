#include "wqed/records.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wqed {

namespace {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted

json vec_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Eigen::VectorXd vec_from_json(const json& a) {
  Eigen::VectorXd v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
  return v;
}

json model_to_json(const ModelSpec& m) {
  json j;
  j["kind"] = model_kind_name(m.kind);
  j["n"] = m.n_qubits;
  j["boundary"] = m.boundary == Boundary::PERIODIC ? "periodic" : "open";
  switch (m.kind) {
    case ModelKind::XXZ: j["delta"] = m.delta; break;
    case ModelKind::TFIM: j["g"] = m.g; break;
    case ModelKind::LRTFIM:
      j["alpha"] = m.alpha;
      j["theta"] = m.theta;
      break;
  }
  return j;
}

ModelSpec model_from_json(const json& j) {
  ModelSpec m;
  m.kind = model_kind_from_name(j.at("kind").get<std::string>());
  m.n_qubits = j.at("n").get<int>();
  m.boundary = j.at("boundary").get<std::string>() == "periodic" ? Boundary::PERIODIC
                                                                 : Boundary::OPEN;
  if (j.contains("delta")) m.delta = j["delta"].get<double>();
  if (j.contains("g")) m.g = j["g"].get<double>();
  if (j.contains("alpha")) m.alpha = j["alpha"].get<double>();
  if (j.contains("theta")) m.theta = j["theta"].get<double>();
  return m;
}

json header_json(const RunRecord& r, bool with_wall) {
  json j;
  j["type"] = "run";
  j["schema_version"] = r.schema_version;
  j["config_hash"] = r.config_hash;
  j["ansatz"] = r.ansatz_id;
  j["n"] = r.n_qubits;
  j["depth"] = r.depth;
  j["model"] = model_to_json(r.model);
  j["seed"] = r.seed;
  if (!r.noise_preset.empty()) {
    j["noise_preset"] = r.noise_preset;
    if (r.noise_p1) j["noise_p1"] = *r.noise_p1;
    if (r.noise_p2) j["noise_p2"] = *r.noise_p2;
  }
  if (r.energy) j["energy"] = *r.energy;
  if (r.exact_energy) j["exact_energy"] = *r.exact_energy;
  if (r.infidelity) j["infidelity"] = *r.infidelity;
  if (r.residual_energy) j["residual_energy"] = *r.residual_energy;
  if (r.ground_degeneracy) j["ground_degeneracy"] = *r.ground_degeneracy;
  if (with_wall) j["wall_seconds"] = r.wall_seconds;
  j["failed"] = r.failed;
  if (!r.fail_reason.empty()) j["fail_reason"] = r.fail_reason;
  return j;
}

json step_json(const StepRecord& s) {
  json j;
  j["type"] = "step";
  j["s"] = s.s;
  j["init_params"] = vec_to_json(s.init_params);
  j["best_params"] = vec_to_json(s.best_params);
  j["best_energy"] = s.best_energy;
  j["iters"] = s.iters;
  return j;
}

std::string serialize(const RunRecord& r, bool with_wall) {
  std::string out = header_json(r, with_wall).dump();
  out.push_back('\n');
  for (const StepRecord& s : r.steps) {
    out += step_json(s).dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace

int RunRecord::total_iters() const {
  int total = 0;
  for (const StepRecord& s : steps) total += s.iters;
  return total;
}

std::string RunRecord::content_json() const { return serialize(*this, /*with_wall=*/false); }

std::string to_jsonl(const RunRecord& record) { return serialize(record, /*with_wall=*/true); }

RunRecord from_jsonl(const std::string& text) {
  RunRecord r;
  bool have_header = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    const std::string type = j.at("type").get<std::string>();
    if (type == "run") {
      if (have_header) throw std::runtime_error("record: duplicate run header line");
      have_header = true;
      r.schema_version = j.at("schema_version").get<int>();
      r.config_hash = j.at("config_hash").get<std::string>();
      r.ansatz_id = j.at("ansatz").get<std::string>();
      r.n_qubits = j.at("n").get<int>();
      r.depth = j.at("depth").get<int>();
      r.model = model_from_json(j.at("model"));
      r.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("noise_preset")) r.noise_preset = j["noise_preset"].get<std::string>();
      if (j.contains("noise_p1")) r.noise_p1 = j["noise_p1"].get<double>();
      if (j.contains("noise_p2")) r.noise_p2 = j["noise_p2"].get<double>();
      if (j.contains("energy")) r.energy = j["energy"].get<double>();
      if (j.contains("exact_energy")) r.exact_energy = j["exact_energy"].get<double>();
      if (j.contains("infidelity")) r.infidelity = j["infidelity"].get<double>();
      if (j.contains("residual_energy")) r.residual_energy = j["residual_energy"].get<double>();
      if (j.contains("ground_degeneracy"))
        r.ground_degeneracy = j["ground_degeneracy"].get<int>();
      if (j.contains("wall_seconds")) r.wall_seconds = j["wall_seconds"].get<double>();
      r.failed = j.at("failed").get<bool>();
      if (j.contains("fail_reason")) r.fail_reason = j["fail_reason"].get<std::string>();
    } else if (type == "step") {
      StepRecord s;
      s.s = j.at("s").get<double>();
      s.init_params = vec_from_json(j.at("init_params"));
      s.best_params = vec_from_json(j.at("best_params"));
      s.best_energy = j.at("best_energy").get<double>();
      s.iters = j.at("iters").get<int>();
      r.steps.push_back(std::move(s));
    } else {
      throw std::runtime_error("record: unknown line type '" + type + "'");
    }
  }
  if (!have_header) throw std::runtime_error("record: missing run header line");
  return r;
}

void save_record(const std::filesystem::path& path, const RunRecord& record) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << to_jsonl(record);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

RunRecord load_record(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open record " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_jsonl(buf.str());
}

}  // namespace wqed
