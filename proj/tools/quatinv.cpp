#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "quatinv/decompose.hpp"
#include "quatinv/errors.hpp"
#include "quatinv/json_io.hpp"
#include "quatinv/sampling.hpp"
#include "quatinv/scramble.hpp"
#include "suite.hpp"

using namespace quatinv;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::string field;
  std::string format = "json";
  std::string out;
  bool timing = false;
};

struct Report {
  Json body;
  bool ok = true;
};

std::optional<Field> field_override(const RunConfig& cfg) {
  if (cfg.field.empty()) return std::nullopt;
  return parse_field(cfg.field);
}

Json load_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw CLI::ValidationError("input", "command needs an input file");
  return read_json_file(cfg.input);
}

Report run_gauge_check(const RunConfig& cfg) {
  Json in = load_input(cfg);
  TowerNames names = tower_from_json(in);
  auto P = share(presentation_from_json(in, field_override(cfg)));
  ArmatureGauge G(P);
  Rng rng(cfg.seed);
  std::vector<std::pair<ArmatureElement, ArmatureElement>> pairs;
  std::vector<ArmatureElement> singles;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    pairs.emplace_back(random_element(P, rng), random_element(P, rng));
    singles.push_back(pairs.back().first);
  }
  GaugeCheckReport sm = check_surmultiplicative(G, pairs);
  GaugeCheckReport sp = check_special(G, singles);
  Report r;
  r.body["presentation"] = presentation_to_json(*P, names);
  r.body["surmultiplicative"] = gauge_report_to_json(sm);
  r.body["special"] = gauge_report_to_json(sp);
  r.body["homomorphism_law"] = G.homomorphism_law();
  r.body["anisotropy_assumed"] = G.anisotropy_assumed();
  r.ok = sm.ok() && sp.ok() && G.homomorphism_law();
  return r;
}

Json quaternion_json(const QuatAlg& H, int twist, const TowerNames& names) {
  return {{"symbol", H.symbol(names)}, {"a", H.a.to_string(names)}, {"b", H.b.to_string(names)},
          {"twist", twist_name(twist)}, {"split", is_split(H)}};
}

Report run_exchange(const RunConfig& cfg) {
  Json in = load_input(cfg);
  auto part = [&](const char* key) {
    Json j = in.at(key);
    if (!j.contains("tower") && in.contains("tower")) j["tower"] = in["tower"];
    return quat_from_json(j, field_override(cfg));
  };
  QuatInput h1 = part("h1"), h2 = part("h2");
  ExchangeResult ex = lemma32_exchange(h1.algebra, h1.twist, h2.algebra, h2.twist);
  const TowerNames& names = h1.names;
  WitnessReport rep = verify(ex.witness);
  bool brauer = brauer_class_over_K({h1.algebra, h2.algebra}) == brauer_class_over_K({ex.h1, ex.h2});
  Report r;
  r.body["input"] = {quaternion_json(h1.algebra, h1.twist, names), quaternion_json(h2.algebra, h2.twist, names)};
  r.body["output"] = {quaternion_json(ex.h1, ex.twist1, names), quaternion_json(ex.h2, ex.twist2, names)};
  r.body["identity"] = ex.identity;
  r.body["witness"] = witness_to_json(ex.witness, names);
  r.body["witness_failures"] = rep.failures;
  r.body["brauer_class_preserved"] = brauer;
  r.ok = rep.ok() && brauer;
  return r;
}

// Witness over the lifted tower: explicit, or a scrambled lift of "base".
struct PipelineInput {
  std::optional<DecompositionWitness> base;
  DecompositionWitness lifted;
  TowerNames names;
  Json scramble_log;
};

PipelineInput pipeline_input(const RunConfig& cfg, const Json& in, bool over_q) {
  PipelineInput pi;
  if (in.contains("witness")) {
    pi.lifted = witness_from_json(in.at("witness"), field_override(cfg));
    pi.names = tower_from_json(in.at("witness").at("source"));
    return pi;
  }
  auto S = share(presentation_from_json(in.at("base"), field_override(cfg)));
  if (S->arity() != 0) throw DomainError("base presentation must be over the base field");
  pi.base = standard_witness(S);
  std::size_t moves = in.value("moves", std::size_t{10});
  ScrambleLog log;
  if (over_q) {
    int twist = in.value("twist", 0);
    auto lifted = share(lift_q(*S, twist));
    pi.lifted = scramble(lift_witness(*pi.base, lifted), cfg.seed, moves, ScrambleTarget::Q, &log);
    pi.names = default_tower_names(2);
  } else {
    auto lifted = share(lift_ad_t(*S));
    pi.lifted = scramble(lift_witness(*pi.base, lifted), cfg.seed, moves, ScrambleTarget::AdT, &log);
    pi.names = default_tower_names(1);
  }
  pi.scramble_log = {{"moves", log.moves}, {"rejected", log.rejected}};
  return pi;
}

Json prop31_json(const Prop31Result& P, const TowerNames& names) {
  Json j;
  j["status"] = P.status == Prop31Status::Normalized ? "normalized" : "contradiction";
  j["exchanges"] = P.exchanges;
  j["split_history"] = P.split_history;
  j["message"] = P.message;
  if (P.status == Prop31Status::Normalized) {
    j["a_prime"] = P.a_prime.to_string();
    j["residual_index"] = P.residual_index;
  }
  j["witness"] = witness_to_json(P.witness, names);
  return j;
}

Report run_normalize(const RunConfig& cfg, bool descend) {
  Json in = load_input(cfg);
  PipelineInput pi = pipeline_input(cfg, in, false);
  Report r;
  WitnessReport input_rep = verify(pi.lifted);
  r.body["input"] = witness_to_json(pi.lifted, pi.names);
  if (!pi.scramble_log.is_null()) r.body["scramble"] = pi.scramble_log;
  if (!input_rep.ok()) {
    r.body["input_failures"] = input_rep.failures;
    r.ok = false;
    return r;
  }
  Prop31Result P = prop31_normalize(pi.lifted);
  r.body["normalize"] = prop31_json(P, pi.names);
  WitnessReport rep = verify(P.witness);
  r.body["normalize"]["witness_failures"] = rep.failures;
  r.ok = rep.ok();
  if (!descend) return r;
  if (P.status != Prop31Status::Normalized) {
    r.ok = false;
    return r;
  }
  DecompositionWitness D = thm1_descend(P.witness);
  WitnessReport drep = verify(D);
  r.body["descend"] = witness_to_json(D, {});
  r.body["descend"]["witness_failures"] = drep.failures;
  r.body["descend"]["split_in"] = pi.lifted.split_count();
  r.ok = r.ok && drep.ok() && D.split_count() + 1 == pi.lifted.split_count();
  if (pi.base) {
    bool same = *D.source == *pi.base->source;
    r.body["descend"]["source_matches_base"] = same;
    r.ok = r.ok && same;
  }
  return r;
}

Report run_descend_q(const RunConfig& cfg) {
  Json in = load_input(cfg);
  PipelineInput pi = pipeline_input(cfg, in, true);
  Report r;
  r.body["input"] = witness_to_json(pi.lifted, pi.names);
  if (!pi.scramble_log.is_null()) r.body["scramble"] = pi.scramble_log;
  Thm2Result T = thm2_descend(pi.lifted);
  WitnessReport rep = verify(T.witness);
  Json lambdas = Json::array();
  for (const auto& l : T.lambdas) lambdas.push_back(l.to_string());
  r.body["lambdas"] = lambdas;
  r.body["remainder"] = {{"twist", twist_name(T.remainder.twist)},
                         {"zeta", {T.remainder.zeta1, T.remainder.zeta2}},
                         {"residue", presentation_to_json(T.remainder.residue, {})}};
  r.body["descend"] = witness_to_json(T.witness, {});
  r.body["descend"]["witness_failures"] = rep.failures;
  r.body["descend"]["split_in"] = T.input_split;
  r.ok = rep.ok() && T.witness.split_count() == T.input_split;
  if (pi.base) {
    bool same = *T.witness.source == *pi.base->source;
    r.body["descend"]["source_matches_base"] = same;
    r.ok = r.ok && same;
  }
  return r;
}

Report run_residue(const RunConfig& cfg) {
  Json in = load_input(cfg);
  TowerNames names = tower_from_json(in);
  auto P = share(presentation_from_json(in, field_override(cfg)));
  ArmatureGauge G(P);
  ResidueReport R = kernel_and_residue(G);
  Report r;
  r.body = residue_to_json(G, R, names);
  bool semisimple = check_semisimple_degree0(R);
  r.body["semisimple_degree0"] = semisimple;
  auto idem = find_central_idempotent(R.residue);
  if (idem) {
    Json z = Json::array();
    for (const auto& c : idem->z) z.push_back(c.to_string());
    r.body["central_idempotent"] = {{"radical_class", idem->radical_class}, {"mu", idem->mu.to_string()}, {"z", z}};
  } else {
    r.body["central_idempotent"] = nullptr;
  }
  r.ok = semisimple && R.cardinality_law();
  return r;
}

Report run_factorize(const RunConfig& cfg) {
  Json in = load_input(cfg);
  TowerNames names = tower_from_json(in);
  auto P = share(presentation_from_json(in, field_override(cfg)));
  DecompositionWitness w;
  w.source = P;
  Json base = Json::array();
  for (const ArmatureFactor& f : factorize(*P)) {
    base.push_back({f.a, f.b});
    w.factors.push_back(make_factor(ArmatureElement::basis(P, f.a), ArmatureElement::basis(P, f.b)));
  }
  WitnessReport rep = verify(w);
  Report r;
  r.body["symplectic_base"] = base;
  r.body["witness"] = witness_to_json(w, names);
  r.body["witness_failures"] = rep.failures;
  r.ok = rep.ok();
  return r;
}

Report run_selftest(const RunConfig& cfg, std::vector<std::string>& lines) {
  Report r;
  Json cases = Json::array();
  for (int id = 1; id <= selftest::kCriterionCount; ++id) {
    auto c = selftest::run_criterion(id, cfg.seed);
    lines.push_back(selftest::format_line(c, cfg.timing));
    Json j = {{"criterion", c.id}, {"name", c.name}, {"pass", c.pass}, {"message", c.message}};
    if (cfg.timing) j["seconds"] = c.seconds;
    cases.push_back(j);
    r.ok = r.ok && c.pass;
  }
  r.body["criteria"] = cases;
  r.body["seed"] = cfg.seed;
  return r;
}

void render_text(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render_text(*it, path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) render_text(j[k], path + "[" + std::to_string(k) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& cfg, const Json& body, const std::vector<std::string>& lines) {
  std::ostringstream text;
  if (cfg.format == "json") {
    text << body.dump(2) << "\n";
  } else if (!lines.empty()) {
    for (const auto& l : lines) text << l << "\n";
  } else {
    render_text(body, "", text);
  }
  if (cfg.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text.str();
  }
}

int run(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  std::vector<std::string> lines;
  if (!cfg.field.empty()) parse_field(cfg.field);
  if (cfg.command == "gauge-check") {
    r = run_gauge_check(cfg);
  } else if (cfg.command == "exchange") {
    r = run_exchange(cfg);
  } else if (cfg.command == "normalize") {
    r = run_normalize(cfg, false);
  } else if (cfg.command == "descend-t") {
    r = run_normalize(cfg, true);
  } else if (cfg.command == "descend-q") {
    r = run_descend_q(cfg);
  } else if (cfg.command == "residue") {
    r = run_residue(cfg);
  } else if (cfg.command == "factorize") {
    r = run_factorize(cfg);
  } else {
    r = run_selftest(cfg, lines);
  }
  r.body["command"] = cfg.command;
  r.body["ok"] = r.ok;
  if (cfg.timing) {
    r.body["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  emit(cfg, r.body, lines);
  return r.ok ? 0 : 1;
}

// A scalar error names its literal in quotes; find it in the input file so
// the report can point at a line and column.
void locate_literal(const std::string& path, const std::string& message, Json& extra) {
  auto close = message.rfind('"');
  auto open = close == std::string::npos || close == 0 ? std::string::npos : message.rfind('"', close - 1);
  if (open == std::string::npos || path.empty()) return;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto at = text.find(message.substr(open, close - open + 1));
  if (at == std::string::npos) return;
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < at; ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  extra["line"] = line;
  extra["column"] = col + 1 + extra["position"].get<std::size_t>();
}

void report_error(const std::string& kind, const std::string& what, const Json& extra = {}) {
  Json j = {{"error", kind}, {"message", what}, {"ok", false}};
  if (!extra.is_null()) j.update(extra);
  std::cerr << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quatinv: quaternion decompositions with involution over Laurent towers"};
  app.require_subcommand(1);
  RunConfig cfg;
  const char* commands[][2] = {
      {"gauge-check", "surmultiplicativity, invariance and specialness of the armature gauge"},
      {"exchange", "exchange two ramified quaternion factors"},
      {"normalize", "normalize a decomposition over F((t))"},
      {"descend-t", "normalize and descend from S (x) Ad<<t>> to S"},
      {"descend-q", "descend from S (x) (t1, t2) to S"},
      {"residue", "gauge kernel, residue presentation and semisimplicity"},
      {"factorize", "symplectic base and quaternion factors of a presentation"},
      {"selftest", "run the acceptance criteria"},
  };
  for (auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (std::string(name) != "selftest") sub->add_option("input", cfg.input, "JSON input file")->required();
    sub->add_option("--seed", cfg.seed, "seed for all sampling");
    sub->add_option("--samples", cfg.samples, "random samples per check");
    sub->add_option("--field", cfg.field, "base field: q or fp:<p>");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out, "write the report here");
    sub->add_flag("--timing", cfg.timing, "add wall-clock timings to the report");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (cfg.command == "selftest" && cfg.format == "json" && !app.get_subcommand("selftest")->count("--format")) {
    cfg.format = "text";
  }
  try {
    return run(cfg);
  } catch (const ParseError& e) {
    Json extra = {{"position", e.position()}};
    if (e.line() == 0) locate_literal(cfg.input, e.what(), extra);
    if (e.line() != 0) {
      extra["line"] = e.line();
      extra["column"] = e.column();
    }
    report_error("parse", e.what(), extra);
    return 2;
  } catch (const Json::exception& e) {
    report_error("schema", e.what());
    return 2;
  } catch (const DegeneratePairing& e) {
    report_error("degenerate pairing", e.what(), {{"radical", e.radical()}, {"detail", e.detail()}});
    return 1;
  } catch (const ContractViolation& e) {
    report_error("contract violation", e.what(), {{"detail", e.detail()}});
    return 1;
  } catch (const CLI::Error& e) {
    report_error("usage", e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error("input", e.what());
    return 2;
  }
}
