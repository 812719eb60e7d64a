// Copyright 2026 The qkolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qkolab/canonical_output.hpp"
#include "qkolab/circuit_encoding.hpp"
#include "qkolab/complexity.hpp"
#include "qkolab/demon.hpp"
#include "qkolab/errors.hpp"
#include "qkolab/fingerprint.hpp"
#include "qkolab/linear_code.hpp"
#include "qkolab/measures.hpp"
#include "qkolab/parallel.hpp"
#include "qkolab/random.hpp"
#include "qkolab/smp.hpp"

namespace qkolab::cli {
namespace {

using json = nlohmann::json;
using codes::BitString;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  json report;
  std::optional<Table> table;
  /// Printed to stdout when the report itself goes to a file.
  std::string summary;
};

// Options shared by all subcommands.
struct Common {
  std::string out;
  std::string format = "json";
};

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return io::format_double(v.get<double>());
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::map<std::string, std::string>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (v.is_array()) {
    bool scalars = true;
    for (const auto& e : v) scalars = scalars && !e.is_structured();
    if (!scalars) return;
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? ";" : "") + scalar_text(v[i]);
    out[prefix] = joined;
  } else {
    out[prefix] = scalar_text(v);
  }
}

std::string render(const Output& o, const std::string& format) {
  if (format == "json") return io::canonical_json(o.report);
  std::map<std::string, std::string> config;
  flatten(o.report.at("config"), "config", config);
  Table t;
  if (o.table) {
    t = *o.table;
  } else {
    std::map<std::string, std::string> flat;
    json body = o.report;
    body.erase("config");
    flatten(body, "", flat);
    t.rows.emplace_back();
    for (const auto& [k, v] : flat) {
      t.header.push_back(k);
      t.rows.back().push_back(v);
    }
  }
  for (const auto& [k, v] : config) {
    t.header.push_back(k);
    for (auto& row : t.rows) row.push_back(v);
  }
  return io::to_csv(t.header, t.rows);
}

// Typed echo of an option value.
json option_value(const CLI::Option* opt) {
  std::string text;
  if (opt->count() > 0) {
    const auto& results = opt->results();
    text = results.empty() ? "" : results.back();
    if (opt->get_type_size() == 0 && text.empty()) text = "true";
  } else {
    text = opt->get_default_str();
  }
  if (opt->get_type_size() == 0) {
    return text == "true" || text == "1" || text == "on" || text == "yes";
  }
  try {
    std::size_t used = 0;
    const long long i = std::stoll(text, &used, 0);
    if (used == text.size()) return i;
  } catch (const std::exception&) {
  }
  try {
    std::size_t used = 0;
    const double d = std::stod(text, &used);
    if (used == text.size()) return d;
  } catch (const std::exception&) {
  }
  return text;
}

json effective_config(const CLI::App* sub) {
  json config = json::object();
  std::string path;
  for (const CLI::App* a = sub; a != nullptr && a->get_parent() != nullptr; a = a->get_parent()) {
    path = path.empty() ? a->get_name() : a->get_name() + " " + path;
  }
  config["command"] = path;
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name.rfind("help", 0) == 0 || name == "out" || name == "format") continue;
    config[name] = option_value(opt);
  }
  return config;
}

BitString parse_bits(const std::string& text, std::size_t n, const char* what) {
  BitString b = BitString::from_string(text);
  if (b.size() != n) {
    throw InputError(std::string(what) + " must have " + std::to_string(n) + " bits, got " +
                     std::to_string(b.size()));
  }
  return b;
}

BitString random_bits(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  BitString b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng.bit());
  return b;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  io::write_file_atomic(path, std::string(bytes.begin(), bytes.end()));
}

// --- subcommand bodies ------------------------------------------------------

struct CodeOptions {
  std::string code = "hadamard";
  std::size_t n = 3;
  std::size_t c = 4;
};

void add_code_options(CLI::App* sub, CodeOptions& o) {
  sub->add_option("--code", o.code, "hadamard | simplex | concatenated")
      ->check(CLI::IsMember({"hadamard", "simplex", "concatenated"}))
      ->capture_default_str();
  sub->add_option("--n", o.n, "message length")->capture_default_str();
  sub->add_option("--c", o.c, "rate of the concatenated code")->capture_default_str();
}

struct VerifyOptions {
  CodeOptions code;
  std::string mode = "auto";
  std::size_t samples = 256;
  std::uint64_t seed = 0x5eed;
};

Output codes_verify(const VerifyOptions& o) {
  codes::LinearCode code = codes::code_by_name(o.code.code, o.code.n, o.code.c);
  if (o.mode != "auto") {
    const auto check = o.mode == "exhaustive" ? codes::DistanceCheck::exhaustive()
                                              : codes::DistanceCheck::sampled(o.samples, o.seed);
    code = code.with_verification(codes::verify_distance(code, check));
  }
  const auto& v = *code.verification();
  Output out;
  out.report = {{"descriptor", codes::code_descriptor(code)},
                {"delta", v.delta},
                {"min_distance", v.min_distance},
                {"verification_mode", codes::to_string(v.mode)},
                {"codewords_checked", v.codewords_checked},
                {"m", code.m()},
                {"n", code.n()}};
  out.summary = "delta = " + io::format_double(v.delta) + " (" + codes::to_string(v.mode) +
                ", min distance " + std::to_string(v.min_distance) + " of " +
                std::to_string(code.m()) + ")\n";
  return out;
}

struct EqualityOptions {
  std::string protocol = "quantum";
  CodeOptions code{"hadamard", 4, 4};
  int k = 1;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t s = 0;
  double eps = 1.0 / 4096.0;
  std::string sim_mode = "threshold";
  std::string inputs = "unequal";
};

Output equality(const EqualityOptions& o) {
  smp::ExperimentConfig cfg;
  cfg.n = o.code.n;
  cfg.code = o.code.code;
  cfg.rate_c = o.code.c;
  cfg.protocol = smp::protocol_from_string(o.protocol);
  cfg.trials = o.trials;
  cfg.master_seed = o.seed;
  cfg.k = o.k;
  cfg.s = o.s;
  cfg.eps_a = o.eps;
  cfg.sim_mode =
      o.sim_mode == "sampled" ? smp::SimulationMode::kSampled : smp::SimulationMode::kThreshold;
  cfg.inputs = smp::input_mode_from_string(o.inputs);
  const smp::ErrorReport r = smp::monte_carlo(cfg);
  Output out;
  out.report = r.to_json();
  out.report.erase("config");
  out.table = Table{
      {"protocol", "n", "trials", "decided", "restarts", "error_rate", "wilson_lo", "wilson_hi",
       "false_equal", "false_not_equal", "mean_bits", "mean_qubits"},
      {{o.protocol, std::to_string(cfg.n), std::to_string(r.trials), std::to_string(r.decided),
        std::to_string(r.restarts), io::format_double(r.error_rate),
        io::format_double(r.wilson_99.lo), io::format_double(r.wilson_99.hi),
        std::to_string(r.false_equal), std::to_string(r.false_not_equal),
        io::format_double(r.mean_bits), io::format_double(r.mean_qubits)}}};
  out.summary = "error_rate = " + io::format_double(r.error_rate) + " wilson_99 = [" +
                io::format_double(r.wilson_99.lo) + ", " + io::format_double(r.wilson_99.hi) +
                "]\n";
  return out;
}

struct ComplexityOptions {
  std::string subject = "bell";
  std::size_t n = 4;
  std::string x;
  int q = 6;
  double eps = 1.0 / 65536.0;
  std::uint64_t seed = 0;
  std::size_t corpus = 200;
  double a = 64.0;
  double b = 1.0;
  double d = 512.0;
  std::string circuit_out;
};

json step_rows(const std::vector<complexity::StepReport>& steps) {
  json rows = json::array();
  for (const auto& s : steps) {
    rows.push_back({{"t", s.t},
                    {"knet_upper_bits", s.knet_upper_bits},
                    {"bound_bits", s.bound_bits},
                    {"exceeds", s.exceeds}});
  }
  return rows;
}

Output complexity_report(const ComplexityOptions& o) {
  Output out;
  json& r = out.report;
  std::optional<qsim::Circuit> circuit;
  if (o.subject == "bell") {
    circuit = complexity::bell_pair_circuit(o.n);
    r["report"] = complexity::knet_upper(*circuit).to_json();
    if (2 * o.n <= 10) {
      const auto s = qsim::apply_circuit(*circuit, qsim::StateVector::zero(circuit->q()));
      std::vector<int> keep;
      for (std::size_t i = 0; i < o.n; ++i) keep.push_back(static_cast<int>(2 * i));
      const auto reduced = qsim::partial_trace(s, keep);
      const auto dim = static_cast<Eigen::Index>(reduced.dim());
      const Eigen::MatrixXcd target =
          Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
      r["reduced_max_deviation"] = (reduced.matrix() - target).cwiseAbs().maxCoeff();
    }
  } else if (o.subject == "hadamard-only" || o.subject == "fingerprint") {
    const auto code = codes::hadamard_code(o.n);
    BitString x = o.subject == "hadamard-only" ? BitString(o.n)
                  : o.x.empty()                ? random_bits(o.n, o.seed)
                                               : parse_bits(o.x, o.n, "--x");
    const auto hx = fingerprint::build_hx_circuit(code, x);
    circuit = hx.circuit;
    r["report"] = complexity::knet_upper(hx.circuit).to_json();
    r["x"] = x.to_string();
    r["m"] = code.m();
    r["gate_count"] = hx.circuit.size();
    r["decomposition_id"] = hx.decomposition_id;
    r["kcl_codeword_bits"] = codes::kcl_upper(code.encode(x)).compressed_length_bits;
    r["cbe"] =
        complexity::cbe_upper(fingerprint::build_fingerprint(code, x).state, o.eps).to_json();
  } else if (o.subject == "haar") {
    Rng rng(o.seed);
    r["report"] = complexity::cbe_upper(qsim::StateVector::haar_random(o.q, rng), o.eps).to_json();
  } else if (o.subject == "observation1") {
    const auto report =
        complexity::observation1_experiment(codes::hadamard_code(o.n), o.corpus, o.seed);
    r = report.to_json();
    Table t{{"family", "x", "kcl_x_bits", "kcl_ex_bits"}, {}};
    for (const auto& e : report.entries) {
      t.rows.push_back(
          {e.family, e.x.to_string(), std::to_string(e.kx_bits), std::to_string(e.kex_bits)});
    }
    out.table = std::move(t);
    out.summary = "spearman = " + io::format_double(report.spearman) + "\n";
  } else if (o.subject == "stepwise") {
    circuit = complexity::bell_pair_circuit(o.n);
    const auto steps = complexity::track_stepwise(*circuit, {o.a, o.b, o.d});
    r["steps"] = step_rows(steps);
    Table t{{"t", "knet_upper_bits", "bound_bits", "exceeds"}, {}};
    for (const auto& s : steps) {
      t.rows.push_back({std::to_string(s.t), std::to_string(s.knet_upper_bits),
                        io::format_double(s.bound_bits), s.exceeds ? "true" : "false"});
    }
    out.table = std::move(t);
  } else {
    throw InputError("unknown subject '" + o.subject + "'");
  }
  if (!o.circuit_out.empty()) {
    if (!circuit) throw InputError("--circuit-out needs a circuit subject");
    write_bytes(o.circuit_out, complexity::to_container(complexity::encode_circuit(*circuit)));
  }
  if (out.summary.empty() && r.contains("report")) {
    const json& rep = r["report"];
    out.summary = rep.at("knet_upper_bits").get<std::size_t>() > 0
                      ? "knet_upper_bits = " + rep.at("knet_upper_bits").dump() + "\n"
                      : "cbe_upper_bits = " + rep.at("cbe_upper_bits").dump() + "\n";
  }
  return out;
}

struct FingerprintOptions {
  CodeOptions code{"hadamard", 2, 4};
  std::string x;
  std::string state;
  double min_fidelity = -1.0;
  double eps = -1.0;
  bool correct = false;
  std::string circuit_out;
};

Output fingerprint_build(const FingerprintOptions& o) {
  const auto code = codes::code_by_name(o.code.code, o.code.n, o.code.c);
  const BitString x = parse_bits(o.x, code.n(), "--x");
  const auto fp = fingerprint::build_fingerprint(code, x);
  Output out;
  out.report = {{"x", x.to_string()},
                {"codeword", fp.codeword.to_string()},
                {"index_qubits", fp.index_qubits},
                {"state", fp.state.to_json()}};
  const std::size_t m = code.m();
  if (std::has_single_bit(m) && std::countr_zero(m) <= fingerprint::kMaxCircuitIndexQubits) {
    const auto hx = fingerprint::build_hx_circuit(code, x);
    out.report["circuit"] = {
        {"qubits", hx.circuit.q()},
        {"work_qubits", hx.work_qubits},
        {"gate_count", hx.circuit.size()},
        {"decomposition_id", hx.decomposition_id},
        {"knet_upper_bits", complexity::knet_upper(hx.circuit).knet_upper_bits}};
    if (!o.circuit_out.empty()) {
      write_bytes(o.circuit_out, complexity::to_container(complexity::encode_circuit(hx.circuit)));
    }
  } else if (!o.circuit_out.empty()) {
    throw InputError("no preparation circuit: m is not a power of two up to 2^6");
  }
  out.summary = "codeword = " + fp.codeword.to_string() + "\n";
  return out;
}

Output fingerprint_extract(const FingerprintOptions& o) {
  const auto code = codes::code_by_name(o.code.code, o.code.n, o.code.c);
  json j;
  try {
    j = json::parse(read_text(o.state));
  } catch (const json::parse_error& e) {
    throw InputError("state file '" + o.state + "' is not JSON: " + e.what());
  }
  const auto state = qsim::StateVector::from_json(j.is_object() ? j.at("state") : j);
  fingerprint::ExtractionOptions opts;
  if (o.min_fidelity >= 0.0) {
    opts.min_fidelity = o.min_fidelity;
  } else if (o.eps >= 0.0) {
    opts.min_fidelity = fingerprint::exclusion_fidelity(*code.delta_verified(), o.eps);
  }
  opts.correct = o.correct;
  const auto res = fingerprint::extract_codeword(state, code, opts);
  Output out;
  out.report = {{"status", fingerprint::to_string(res.status)},
                {"word", res.word.to_string()},
                {"message", res.message ? json(res.message->to_string()) : json(nullptr)}};
  out.summary = "status = " + fingerprint::to_string(res.status) + "\n";
  return out;
}

struct DemonOptions {
  std::size_t n = 2;
  std::size_t m = 4;
  std::uint64_t seed = 0;
  double kb = demon::kBoltzmann;
  double temperature = 300.0;
  std::size_t runs = 1;
  double eps = 1.0 / 16.0;
  std::string mode = "formula";
  std::string setting = "single";
};

Output demon_run(const DemonOptions& o) {
  if (o.runs < 1) throw InputError("--runs must be >= 1");
  std::vector<demon::DemonStep> steps;
  steps.reserve(o.runs);
  for (std::size_t i = 0; i < o.runs; ++i) {
    steps.push_back(
        demon::demon_step(o.m, o.runs == 1 ? o.seed : derive_seed(o.seed, i), o.kb, o.temperature));
  }
  std::size_t ones = 0;
  json runs = json::array();
  for (const auto& s : steps) {
    ones += static_cast<std::size_t>(s.record.outcome_bit);
    if (o.runs <= 1000) {
      runs.push_back({{"r", s.record.r.to_string()},
                      {"theta", s.theta},
                      {"outcome_bit", s.record.outcome_bit},
                      {"full_record", s.record.full_record.to_string()},
                      {"post_state", s.post_state.to_json()},
                      {"ledger", s.ledger.to_json()}});
    }
  }
  Output out;
  out.report = {
      {"runs", runs},
      {"outcome_counts", {o.runs - ones, ones}},
      {"outcome0_frequency", static_cast<double>(o.runs - ones) / static_cast<double>(o.runs)},
      {"ledger", steps.front().ledger.to_json()}};
  out.summary = "delta_total_bits = " + io::format_double(steps.front().ledger.delta_total()) +
                " work_joules = " + io::format_double(steps.front().ledger.work()) + "\n";
  return out;
}

Output demon_multi(const DemonOptions& o) {
  demon::MultiphotonParams p;
  p.n = o.n;
  p.m = o.m;
  p.eps = o.eps;
  p.mode = demon::ledger_mode_from_string(o.mode);
  p.kb = o.kb;
  p.temperature = o.temperature;
  p.seed = o.seed;
  const auto cmp = demon::multiphoton_comparison(p);
  Output out;
  out.report = cmp.to_json();
  out.summary = "product = " + io::format_double(cmp.product.delta_total()) +
                " entangled = " + io::format_double(cmp.entangled.delta_total()) + "\n";
  return out;
}

Output demon_background(const DemonOptions& o) {
  const auto r = demon::background_information_report(demon::setting_from_string(o.setting), o.n,
                                                      o.m, o.eps, o.seed);
  Output out;
  out.report = r.to_json();
  out.summary = "descriptor_bits = " + std::to_string(r.descriptor_bits) + "\n";
  return out;
}

struct SweepOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 10;
  int p = 16;
  int k = 1;
};

Output sweep(const SweepOptions& o) {
  const auto rows = smp::communication_report(o.n_min, o.n_max, o.p, o.k);
  Output out;
  json table = json::array();
  Table t{{"protocol", "n", "q", "classical_bits", "qubits", "ratio"}, {}};
  for (const auto& row : rows) {
    table.push_back({{"protocol", row.protocol},
                     {"n", row.n},
                     {"q", row.q},
                     {"classical_bits", row.classical_bits},
                     {"qubits", row.qubits},
                     {"ratio", row.ratio}});
    t.rows.push_back({row.protocol, std::to_string(row.n), std::to_string(row.q),
                      std::to_string(row.classical_bits), std::to_string(row.qubits),
                      io::format_double(row.ratio)});
  }
  out.report = {{"rows", table}};
  out.table = std::move(t);
  return out;
}

// Inserts config-file entries as --key=value flags after the subcommand path,
// skipping keys already given on the command line.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ArgumentMismatch("--config needs a file path");
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return rest;
  std::size_t split = 0;
  while (split < rest.size() && rest[split].rfind("-", 0) != 0) ++split;
  std::vector<std::string> merged(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(split));
  for (const auto& [key, value] : read_config_file(config_path)) {
    const std::string flag = "--" + key;
    const bool given = std::any_of(rest.begin(), rest.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (!given) merged.push_back(flag + "=" + value);
  }
  merged.insert(merged.end(), rest.begin() + static_cast<std::ptrdiff_t>(split), rest.end());
  return merged;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(f, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qkolab: fingerprinting, complexity surrogates and demon ledgers", "qkolab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::deque<Common> commons;
  std::function<Output()> action;
  CLI::App* selected = nullptr;
  const Common* common = nullptr;
  auto bind = [&](CLI::App* sub, std::function<Output()> fn, const char* default_format = "json") {
    Common& c = commons.emplace_back();
    c.format = default_format;
    sub->add_option("--out", c.out, "output file (default: standard output)");
    sub->add_option("--format", c.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->callback([&, sub, fn, cp = &c] {
      selected = sub;
      action = fn;
      common = cp;
    });
  };

  // codes verify
  VerifyOptions verify;
  auto* codes_cmd = app.add_subcommand("codes", "linear codes")->require_subcommand(1);
  auto* verify_cmd = codes_cmd->add_subcommand("verify", "measure the code distance");
  add_code_options(verify_cmd, verify.code);
  verify_cmd->add_option("--mode", verify.mode, "auto | exhaustive | sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}))
      ->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples, "sampled-mode codewords")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "sampled-mode seed")->capture_default_str();
  bind(verify_cmd, [&] { return codes_verify(verify); });

  // equality
  EqualityOptions eq;
  auto* eq_cmd = app.add_subcommand("equality", "Monte Carlo of an SMP equality protocol");
  eq_cmd->add_option("--protocol", eq.protocol, "classical | quantum | classical-sim")
      ->check(CLI::IsMember({"classical", "quantum", "classical-sim"}))
      ->capture_default_str();
  add_code_options(eq_cmd, eq.code);
  eq_cmd->add_option("--k", eq.k, "copies / SWAP-test rounds")->capture_default_str();
  eq_cmd->add_option("--trials", eq.trials, "number of trials")->capture_default_str();
  eq_cmd->add_option("--seed", eq.seed, "master seed")->capture_default_str();
  eq_cmd->add_option("--s", eq.s, "indices per party (classical; 0 = single index)")
      ->capture_default_str();
  eq_cmd->add_option("--eps", eq.eps, "amplitude precision (classical-sim)")
      ->default_str(io::format_double(eq.eps));
  eq_cmd->add_option("--sim-mode", eq.sim_mode, "threshold | sampled")
      ->check(CLI::IsMember({"threshold", "sampled"}))
      ->capture_default_str();
  eq_cmd->add_option("--inputs", eq.inputs, "unequal | equal | mixed")
      ->check(CLI::IsMember({"unequal", "equal", "mixed"}))
      ->capture_default_str();
  bind(eq_cmd, [&] { return equality(eq); });

  // complexity report
  ComplexityOptions cx;
  auto* cx_cmd = app.add_subcommand("complexity", "complexity surrogates")->require_subcommand(1);
  auto* report_cmd = cx_cmd->add_subcommand("report", "report one subject");
  report_cmd
      ->add_option("--subject", cx.subject,
                   "bell | hadamard-only | fingerprint | haar | observation1 | stepwise")
      ->check(CLI::IsMember(
          {"bell", "hadamard-only", "fingerprint", "haar", "observation1", "stepwise"}))
      ->capture_default_str();
  report_cmd->add_option("--n", cx.n, "pairs (bell, stepwise) or message bits")
      ->capture_default_str();
  report_cmd->add_option("--x", cx.x, "message for the fingerprint subject (default: PRNG)");
  report_cmd->add_option("--q", cx.q, "qubits (haar)")->capture_default_str();
  report_cmd->add_option("--eps", cx.eps, "amplitude precision")
      ->default_str(io::format_double(cx.eps));
  report_cmd->add_option("--seed", cx.seed, "seed")->capture_default_str();
  report_cmd->add_option("--corpus", cx.corpus, "corpus size (observation1)")
      ->capture_default_str();
  report_cmd->add_option("--a", cx.a, "bound a * t^b + d (stepwise)")
      ->default_str(io::format_double(cx.a));
  report_cmd->add_option("--b", cx.b, "bound exponent")->default_str(io::format_double(cx.b));
  report_cmd->add_option("--d", cx.d, "bound offset")->default_str(io::format_double(cx.d));
  report_cmd->add_option("--circuit-out", cx.circuit_out, "write the circuit as a QKCE file");
  bind(report_cmd, [&] { return complexity_report(cx); });

  // fingerprint build | extract
  FingerprintOptions fp;
  auto* fp_cmd = app.add_subcommand("fingerprint", "fingerprint states")->require_subcommand(1);
  auto* build_cmd = fp_cmd->add_subcommand("build", "build |h_x>");
  add_code_options(build_cmd, fp.code);
  build_cmd->add_option("--x", fp.x, "message bits")->required();
  build_cmd->add_option("--circuit-out", fp.circuit_out, "write the preparation circuit (QKCE)");
  bind(build_cmd, [&] { return fingerprint_build(fp); });
  auto* extract_cmd = fp_cmd->add_subcommand("extract", "read a codeword off a state");
  add_code_options(extract_cmd, fp.code);
  extract_cmd->add_option("--state", fp.state, "state JSON file")->required();
  extract_cmd->add_option("--min-fidelity", fp.min_fidelity, "acceptance fidelity (-1 = off)")
      ->default_str(io::format_double(fp.min_fidelity));
  extract_cmd
      ->add_option("--eps", fp.eps,
                   "promised infidelity to the true fingerprint; sets the exclusion threshold")
      ->default_str(io::format_double(fp.eps));
  extract_cmd->add_flag("--correct", fp.correct, "snap to the nearest codeword");
  bind(extract_cmd, [&] { return fingerprint_extract(fp); });

  // demon run | multi | background
  DemonOptions dm;
  auto* demon_cmd = app.add_subcommand("demon", "demon ledger")->require_subcommand(1);
  auto add_thermal = [&](CLI::App* sub) {
    sub->add_option("--kB", dm.kb, "Boltzmann constant (J/K)")
        ->default_str(io::format_double(dm.kb));
    sub->add_option("--T", dm.temperature, "temperature (K)")
        ->default_str(io::format_double(dm.temperature));
  };
  auto* run_cmd = demon_cmd->add_subcommand("run", "single-photon demon steps");
  run_cmd->add_option("--m", dm.m, "record bits")->capture_default_str();
  run_cmd->add_option("--seed", dm.seed, "seed")->capture_default_str();
  run_cmd->add_option("--runs", dm.runs, "independent runs")->capture_default_str();
  add_thermal(run_cmd);
  bind(run_cmd, [&] { return demon_run(dm); });
  auto* multi_cmd = demon_cmd->add_subcommand("multi", "product vs entangled ledgers");
  multi_cmd->add_option("--n", dm.n, "photons")->capture_default_str();
  multi_cmd->add_option("--m", dm.m, "record bits per photon")->capture_default_str();
  multi_cmd->add_option("--eps", dm.eps, "precision")->default_str(io::format_double(dm.eps));
  multi_cmd->add_option("--mode", dm.mode, "formula | simulated")
      ->check(CLI::IsMember({"formula", "simulated"}))
      ->capture_default_str();
  multi_cmd->add_option("--seed", dm.seed, "seed (simulated mode)")->capture_default_str();
  add_thermal(multi_cmd);
  bind(multi_cmd, [&] { return demon_multi(dm); });
  auto* bg_cmd = demon_cmd->add_subcommand("background", "background-information descriptors");
  bg_cmd->add_option("--setting", dm.setting, "single | multi-product | multi-projection")
      ->check(CLI::IsMember({"single", "multi-product", "multi-projection"}))
      ->capture_default_str();
  bg_cmd->add_option("--n", dm.n, "photons")->capture_default_str();
  bg_cmd->add_option("--m", dm.m, "record bits")->capture_default_str();
  bg_cmd->add_option("--eps", dm.eps, "target precision")->default_str(io::format_double(dm.eps));
  bg_cmd->add_option("--seed", dm.seed, "target seed")->capture_default_str();
  bind(bg_cmd, [&] { return demon_background(dm); });

  // sweep
  SweepOptions sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "communication table over a range of n");
  sweep_cmd->add_option("--n-min", sw.n_min, "first n")->capture_default_str();
  sweep_cmd->add_option("--n-max", sw.n_max, "last n")->capture_default_str();
  sweep_cmd->add_option("--p", sw.p, "bits per amplitude component")->capture_default_str();
  sweep_cmd->add_option("--k", sw.k, "quantum copies")->capture_default_str();
  bind(sweep_cmd, [&] { return sweep(sw); }, "csv");

  try {
    std::vector<std::string> argv = merge_config(args);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "qkolab: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InputError& e) {
    err << "qkolab: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    Output result = action();
    json config = effective_config(selected);
    result.report["config"] = config;
    const std::string text = render(result, common->format);
    if (common->out.empty()) {
      out << text;
    } else {
      io::write_file_atomic(common->out, text);
      out << result.summary;
    }
    return kExitOk;
  } catch (const CapError& e) {
    err << "qkolab: resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const InputError& e) {
    err << "qkolab: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    err << "qkolab: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace qkolab::cli
