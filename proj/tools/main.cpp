// granular: batch workbench over the core library. Every run is a pure
// function of its flags; output bytes are deterministic for a fixed config.

#include <CLI11.hpp>
#include <array>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "granular/acceptance.hpp"
#include "granular/epr.hpp"
#include "granular/errors.hpp"
#include "granular/hypercomplex.hpp"
#include "granular/qubits.hpp"

using json = nlohmann::ordered_json;
using namespace granular;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitConfigError = 2;

struct CommonConfig {
  unsigned n = 8;
  std::uint64_t offset = 0;
  std::string mode = "strict";
  std::string format;
};

Exactness mode_of(const std::string& mode) {
  if (mode == "strict") return Exactness::strict;
  if (mode == "permissive") return Exactness::permissive;
  throw ParseError("mode must be strict or permissive");
}

json bitstring_json(const BitString& s) {
  return json{{"length", s.size()}, {"hex", s.bits().to_hex()}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- algebra --

int cmd_algebra_verify(const CommonConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 12) throw ParseError("algebra level must be in [1, 12]");
  auto rows = verify_algebra(cfg.n);
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (cfg.format == "json") {
    json checks = json::array();
    for (const auto& r : rows) {
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "algebra verify"},
              {"level", cfg.n},
              {"checks", checks},
              {"all_pass", all}});
  } else {
    for (const auto& r : rows) {
      std::cout << (r.pass ? "[ ok ] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << " at level " << cfg.n << "\n";
  }
  return all ? 0 : kExitSuiteFailure;
}

// ------------------------------------------------------------------ angle --

int cmd_angle(const CommonConfig& cfg, const std::string& cos_text, const std::string& pi_text) {
  json out{{"schema_version", kSchemaVersion}, {"command", "angle"}};
  std::string line;
  if (!cos_text.empty()) {
    AngleCos a = AngleCos::parse(cos_text);
    auto converted = angle_to_pi(a);
    out["input"] = a.str();
    out["representation"] = "cosine";
    if (converted) {
      out["angle_pi"] = converted->str();
      line = a.str() + " -> " + converted->str();
    } else {
      out["angle_pi"] = nullptr;
      out["classification"] = "Incommensurable";
      line = a.str() + " -> Incommensurable (no dyadic multiple of pi has this cosine)";
    }
  } else {
    AnglePi a = AnglePi::parse(pi_text);
    auto c = cos_exact(a);
    out["input"] = a.str();
    out["representation"] = "pi-multiple";
    if (c) {
      out["cos"] = c->str();
      line = a.str() + " -> cos = " + c->str();
    } else {
      out["cos"] = nullptr;
      out["classification"] = "NotDyadic";
      line = a.str() + " -> NotDyadic (cosine of this angle is not a dyadic rational)";
    }
  }
  if (cfg.format == "json") {
    emit(out);
  } else {
    std::cout << line << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ qubit --

BitString make_base(unsigned level, const std::string& base, std::uint64_t offset) {
  if (base == "ones") return BitString::ones(std::size_t(1) << level);
  if (base == "champernowne") return to_spin(champernowne_bits(std::size_t(1) << level, offset));
  throw ParseError("base must be ones or champernowne");
}

json triple_json(const QuaternionTriple& t) {
  return json{{"level", t.e.level}, {"e", t.e.index}, {"a", t.a.index}, {"b", t.b.index}};
}

int cmd_qubit_superpose(const CommonConfig& cfg, std::uint32_t triple_index,
                        const std::string& cos_text, const std::string& base_kind) {
  QuaternionTriple t = quaternion_triple({cfg.n, triple_index});
  AngleCos theta = AngleCos::parse(cos_text);
  BitString base = make_base(cfg.n, base_kind, cfg.offset);
  Superposition s = superpose(t.a, t.b, theta, base, mode_of(cfg.mode));
  BitString a_img = build_operator(t.a).apply(base);
  Dyadic measured = correlation(s.value, a_img);
  json out{{"schema_version", kSchemaVersion},
           {"command", "qubit superpose"},
           {"triple", triple_json(t)},
           {"theta", theta.str()},
           {"base", base_kind},
           {"rounded", s.rounded},
           {"value", bitstring_json(s.value)},
           {"correlation_with_ea", measured.str()},
           {"cos_theta", theta.cos().str()},
           {"exact", measured == theta.cos()}};
  if (cfg.format == "text") {
    std::cout << s.value.bits().to_text() << "\n";
  } else {
    emit(out);
  }
  return 0;
}

int cmd_qubit_scan(const CommonConfig& cfg, std::uint32_t triple_index,
                   const std::vector<std::string>& extra, const std::string& base_kind) {
  QuaternionTriple t = quaternion_triple({cfg.n, triple_index});
  std::vector<AngleCos> grid = {AngleCos(Dyadic(1), 0), AngleCos(Dyadic(0), 1),
                                AngleCos(Dyadic(-1), 0), AngleCos(Dyadic(0), -1)};
  for (const auto& text : extra) grid.push_back(AngleCos::parse(text));
  BitString base = make_base(cfg.n, base_kind, cfg.offset);
  auto scan = class_scan(t, grid, base, mode_of(cfg.mode));
  json rows = json::array();
  for (const auto& entry : scan) {
    json row{{"theta", entry.theta.str()}, {"in_class", entry.witness.has_value()}};
    row["witness_alpha"] = entry.witness ? json(entry.witness->str()) : json(nullptr);
    rows.push_back(row);
  }
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "qubit scan"},
            {"triple", triple_json(t)},
            {"base", base_kind},
            {"grid", rows}});
  return 0;
}

int cmd_qubit_entangle(const CommonConfig& cfg, std::uint32_t a_index, std::uint32_t d_index,
                       const std::string& cos_text) {
  AngleCos theta = AngleCos::parse(cos_text);
  EntangledPair p = entangle_pair({cfg.n, a_index}, {cfg.n, d_index}, theta, mode_of(cfg.mode));
  Dyadic measured = correlation(p.s1, p.s2);
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "qubit entangle"},
            {"level", cfg.n},
            {"a", a_index},
            {"d", d_index},
            {"theta", theta.str()},
            {"s1", bitstring_json(p.s1)},
            {"s2", bitstring_json(p.s2)},
            {"correlation", measured.str()},
            {"cos_theta", theta.cos().str()},
            {"exact", measured == theta.cos()},
            {"rounded", p.rounded}});
  return 0;
}

// -------------------------------------------------------------------- epr --

int cmd_epr_curve(const CommonConfig& cfg, const std::string& thetas_text) {
  std::vector<AngleCos> thetas;
  std::size_t pos = 0;
  while (pos <= thetas_text.size()) {
    std::size_t comma = thetas_text.find(',', pos);
    std::string piece = thetas_text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
    if (!piece.empty()) thetas.push_back(AngleCos::parse(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (thetas.empty()) throw ParseError("no orientations given");
  SpinFunction s0 = build_s0(cfg.n, cfg.offset);
  auto curve = corr_curve(s0, thetas, mode_of(cfg.mode));
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& p : curve) {
      rows.push_back({{"cos_theta", p.theta.cos().str()},
                      {"C_measured", p.measured.str()},
                      {"C_expected", p.expected.str()},
                      {"exact", p.exact}});
    }
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "epr curve"},
              {"level", cfg.n},
              {"offset", cfg.offset},
              {"points", rows}});
  } else {
    std::cout << "cos_theta,C_measured,C_expected,exact_flag\n";
    for (const auto& p : curve) {
      std::cout << p.theta.cos().str() << "," << p.measured.str() << "," << p.expected.str()
                << "," << (p.exact ? 1 : 0) << "\n";
    }
  }
  return 0;
}

int cmd_epr_bell(const CommonConfig& cfg, const std::string& cos_text,
                 const std::string& lambda_text) {
  AngleCos theta_a = AngleCos::parse(cos_text);
  AnglePi lambda = lambda_text.empty() ? AnglePi(1, cfg.n) : AnglePi::parse(lambda_text);

  DefinednessReport def = definedness(lambda, PerturbationRequest::align(theta_a),
                                      PerturbationRequest::exact(AnglePi::zero()), theta_a,
                                      cfg.n);
  RealityConditionReport rc = reality_condition_check(theta_a, cfg.n, cfg.offset);

  AngleCos theta3 = triple_angle(theta_a);
  std::array<AngleCos, 4> settings = {theta_a, theta3, theta_a, theta_a};
  ChshResult bell = chsh(settings, cfg.n, cfg.offset, Exactness::permissive);

  json reasons = json::array();
  for (const auto& r : def.reasons) reasons.push_back(r);
  json runs = json::array();
  for (const auto& run : bell.runs) {
    runs.push_back({{"cos_theta", run.theta.cos().str()},
                    {"C_law", run.c_law.str()},
                    {"C_measured", run.c_measured.str()},
                    {"exact", run.exact}});
  }
  emit(json{
      {"schema_version", kSchemaVersion},
      {"command", "epr bell"},
      {"level", cfg.n},
      {"offset", cfg.offset},
      {"definedness",
       {{"lambda", def.lambda.str()},
        {"delta1", def.d1},
        {"delta2", def.d2},
        {"theta", def.theta.str()},
        {"sp1_defined", def.sp1_defined},
        {"sp2_defined", def.sp2_defined},
        {"relative_cos_dyadic", def.relative_cos_dyadic},
        {"relative", def.relative ? json(def.relative->str()) : json(nullptr)},
        {"reasons", reasons}}},
      {"reality_condition",
       {{"grid_points", rc.grid_points},
        {"defined_points", rc.defined_points},
        {"defined_fraction", rc.defined_fraction.str()},
        {"derivation_blocked", rc.derivation_blocked}}},
      {"chsh",
       {{"settings", "theta, 3*theta, theta, theta"},
        {"runs", runs},
        {"S_law", bell.s_law.str()},
        {"S_measured", bell.s_measured.str()},
        {"all_exact", bell.all_exact}}}});
  return 0;
}

int cmd_epr_cauchy(const CommonConfig& cfg, const std::string& cos_text,
                   const std::string& lambda_text, unsigned j_min, unsigned j_max) {
  AngleCos theta = AngleCos::parse(cos_text);
  AnglePi lambda = AnglePi::parse(lambda_text);
  unsigned level = cfg.n >= j_max ? cfg.n : j_max;
  SpinFunction s0 = build_s0(level, cfg.offset);
  CauchyProbe probe = cauchy_probe(theta, lambda, j_min, j_max, s0);
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < probe.values.size(); ++i) {
      rows.push_back({{"scale", probe.scales[i]},
                      {"approximant", probe.approximants[i].str()},
                      {"value", probe.values[i]}});
    }
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "epr cauchy"},
              {"level", level},
              {"theta", theta.str()},
              {"lambda", lambda.str()},
              {"tail_constant", probe.tail_constant()},
              {"sequence", rows}});
  } else {
    for (std::size_t i = 0; i < probe.values.size(); ++i) {
      std::cout << probe.scales[i] << "\t" << probe.values[i] << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- report --

int cmd_report(const CommonConfig& cfg, bool strict) {
  AcceptanceOptions options;
  options.strict = strict;
  AcceptanceReport report = run_acceptance(options);
  if (cfg.format == "json") {
    json criteria = json::array();
    for (const auto& c : report.criteria) {
      criteria.push_back(
          {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    json sweeps = json::array();
    for (const auto& s : report.sweep_summaries) {
      sweeps.push_back({{"level", s.level},
                        {"combos", s.combos},
                        {"exact", s.exact},
                        {"deviations", s.deviations}});
    }
    json deviations = json::array();
    for (const auto& d : report.deviation_sample) {
      deviations.push_back({{"level", d.level},
                            {"triple", d.triple_index},
                            {"theta", d.theta.str()},
                            {"measured", d.measured.str()},
                            {"expected", d.expected.str()}});
    }
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "report"},
              {"strict", strict},
              {"criteria", criteria},
              {"superpose_sweep", sweeps},
              {"deviation_total", report.deviation_total},
              {"deviation_sample", deviations},
              {"all_pass", report.all_pass()}});
  } else {
    for (const auto& c : report.criteria) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": "
                << c.detail << "\n";
    }
    std::size_t passed = 0;
    for (const auto& c : report.criteria) passed += c.pass;
    std::cout << passed << "/" << report.criteria.size() << " criteria passed\n";
  }
  return report.all_pass() ? 0 : kExitSuiteFailure;
}

// ------------------------------------------------------------------ config --

// Flags override an optional JSON config file, which overrides built-ins.
void apply_config_file(const std::string& path, CommonConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  json j = json::parse(in, nullptr, true);
  if (j.contains("n")) cfg.n = j["n"].get<unsigned>();
  if (j.contains("offset")) cfg.offset = j["offset"].get<std::uint64_t>();
  if (j.contains("mode")) cfg.mode = j["mode"].get<std::string>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bit-string kinematics workbench"};
  app.require_subcommand(1);

  CommonConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags take precedence)");

  // pre-scan so config-file values become defaults the flags can override
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        apply_config_file(argv[i + 1], cfg);
      } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
      }
    }
  }

  auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--n", cfg.n, "level N (string length 2^N)");
    cmd->add_option("--offset", cfg.offset, "Champernowne bit offset");
    cmd->add_option("--mode", cfg.mode, "strict | permissive");
    cmd->add_flag_callback("--strict", [&cfg]() { cfg.mode = "strict"; });
    cmd->add_flag_callback("--permissive", [&cfg]() { cfg.mode = "permissive"; });
    cmd->add_option("--format", cfg.format, "output format");
  };

  // flag > config file > per-command default
  auto with_format = [&cfg](const char* fallback) {
    CommonConfig c = cfg;
    if (c.format.empty()) c.format = fallback;
    return c;
  };

  int rc = 0;
  auto guard = [&rc](auto&& fn) {
    return [&rc, fn]() {
      try {
        rc = fn();
      } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        rc = kExitConfigError;
      } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        rc = kExitConfigError;
      } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << "\n";
        rc = kExitConfigError;
      } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = kExitConfigError;
      }
    };
  };

  // algebra
  auto* algebra = app.add_subcommand("algebra", "signed-permutation algebra checks");
  auto* verify = algebra->add_subcommand("verify", "run the invariant suite");
  add_common(verify);
  verify->callback(guard([&]() { return cmd_algebra_verify(with_format("text")); }));

  // angle
  auto* angle = app.add_subcommand("angle", "classify exact angle encodings");
  std::string angle_cos, angle_pi;
  angle->add_option("--cos", angle_cos, "angle given by its dyadic cosine");
  angle->add_option("--pi", angle_pi, "angle given as a dyadic multiple of pi");
  add_common(angle);
  angle->callback(guard([&]() {
    if (angle_cos.empty() == angle_pi.empty()) {
      throw ParseError("give exactly one of --cos or --pi");
    }
    return cmd_angle(with_format("text"), angle_cos, angle_pi);
  }));

  // qubit
  auto* qubit = app.add_subcommand("qubit", "equivalence classes and superpositions");
  std::uint32_t triple_index = 2;
  std::uint32_t a_index = 2;
  std::uint32_t d_index = 3;
  std::string qubit_cos = "1/2";
  std::string base_kind = "champernowne";
  std::vector<std::string> scan_extra;

  auto check_qubit_level = [&cfg]() {
    if (cfg.n < 2 || cfg.n > 12) throw ParseError("qubit level must be in [2, 12]");
  };

  auto* superpose_cmd = qubit->add_subcommand("superpose", "blend two root images");
  superpose_cmd->add_option("--triple", triple_index, "index j of the quaternion triple");
  superpose_cmd->add_option("--cos", qubit_cos, "cos(theta) as dyadic text");
  superpose_cmd->add_option("--base", base_kind, "ones | champernowne");
  add_common(superpose_cmd);
  superpose_cmd->callback(guard([&]() {
    check_qubit_level();
    return cmd_qubit_superpose(with_format("json"), triple_index, qubit_cos, base_kind);
  }));

  auto* scan_cmd = qubit->add_subcommand("scan", "class membership over an angle grid");
  scan_cmd->add_option("--triple", triple_index, "index j of the quaternion triple");
  scan_cmd->add_option("--cos", scan_extra, "extra grid angles (beyond the four points)");
  scan_cmd->add_option("--base", base_kind, "ones | champernowne");
  add_common(scan_cmd);
  scan_cmd->callback(guard([&]() {
    check_qubit_level();
    return cmd_qubit_scan(with_format("json"), triple_index, scan_extra, base_kind);
  }));

  auto* entangle_cmd = qubit->add_subcommand("entangle", "correlated pair from one base");
  entangle_cmd->add_option("--a", a_index, "index of E_A");
  entangle_cmd->add_option("--d", d_index, "index of E_D");
  entangle_cmd->add_option("--cos", qubit_cos, "cos(theta) as dyadic text");
  add_common(entangle_cmd);
  entangle_cmd->callback(guard([&]() {
    check_qubit_level();
    return cmd_qubit_entangle(with_format("json"), a_index, d_index, qubit_cos);
  }));

  // epr
  auto* epr = app.add_subcommand("epr", "spin-function model runs");
  std::string thetas_text = "0,1/4,1/2,3/4,1";
  std::string epr_cos = "3/4";
  std::string lambda_text;
  unsigned j_min = 1;
  unsigned j_max = 20;

  auto* curve_cmd = epr->add_subcommand("curve", "correlation curve C(theta)");
  curve_cmd->add_option("--thetas", thetas_text, "comma list of dyadic cosines");
  add_common(curve_cmd);
  curve_cmd->callback(guard([&]() {
    if (cfg.n > 24) throw ParseError("epr level must be at most 24");
    return cmd_epr_curve(with_format("csv"), thetas_text);
  }));

  auto* bell_cmd = epr->add_subcommand("bell", "definedness report plus CHSH table");
  bell_cmd->add_option("--cos", epr_cos, "cos(theta_A) as dyadic text");
  bell_cmd->add_option("--lambda", lambda_text, "grid angle for the definedness report");
  add_common(bell_cmd);
  auto bell_fn = [&]() {
    if (cfg.n > 24) throw ParseError("epr level must be at most 24");
    return cmd_epr_bell(with_format("json"), epr_cos, lambda_text);
  };
  bell_cmd->callback(guard(bell_fn));

  auto* cauchy_cmd = epr->add_subcommand("cauchy", "perturbation approximation sequence");
  cauchy_cmd->add_option("--cos", epr_cos, "cos(theta_A) as dyadic text");
  cauchy_cmd->add_option("--lambda", lambda_text, "pair label as 'm/2^k pi'")->required();
  cauchy_cmd->add_option("--jmin", j_min, "coarsest approximation scale");
  cauchy_cmd->add_option("--jmax", j_max, "finest approximation scale");
  add_common(cauchy_cmd);
  cauchy_cmd->callback(guard([&]() {
    if (cfg.n > 24 || j_max > 24) throw ParseError("epr level must be at most 24");
    if (cfg.n < j_max) cfg.n = j_max;
    return cmd_epr_cauchy(with_format("tsv"), epr_cos, lambda_text, j_min, j_max);
  }));

  // top-level bell alias
  auto* bell_alias = app.add_subcommand("bell", "alias for `epr bell`");
  bell_alias->add_option("--cos", epr_cos, "cos(theta_A) as dyadic text");
  bell_alias->add_option("--lambda", lambda_text, "grid angle for the definedness report");
  add_common(bell_alias);
  bell_alias->callback(guard(bell_fn));

  // report
  auto* report_cmd = app.add_subcommand("report", "run the acceptance suite");
  bool report_strict = false;
  report_cmd->add_flag("--strict", report_strict, "sweep deviations fail the run");
  report_cmd->add_option("--format", cfg.format, "output format");
  report_cmd->callback(guard([&]() { return cmd_report(with_format("text"), report_strict); }));

  // let top-level options (--config) appear after subcommand names
  auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
    for (CLI::App* sub : node->get_subcommands({})) {
      sub->fallthrough();
      self(sub, self);
    }
  };
  enable_fallthrough(&app, enable_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  }
  return rc;
}
