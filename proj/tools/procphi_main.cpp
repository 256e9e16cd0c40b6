// procphi: command-line front end for the IIT engine.
//
//   procphi validate SPEC
//   procphi phi SPEC [--state 1,0] [--mode iit3] [--cut directional] [--threads 4]
//   procphi qshape SPEC
//   procphi concept SPEC --mechanism A,B
//   procphi repertoire SPEC --mechanism A --purview B --direction cause
//
// Exit codes: 0 ok, 1 validation failure, 2 parse error, 3 resource limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "procphi/classical/theory.hpp"
#include "procphi/engine.hpp"
#include "procphi/io/canonical_json.hpp"
#include "procphi/io/report.hpp"
#include "procphi/io/spec.hpp"
#include "procphi/quantum/theory.hpp"

namespace {

using namespace procphi;
using io::Json;

enum Exit { kOk = 0, kInvalid = 1, kParse = 2, kResource = 3 };

struct Options {
  std::string command;
  std::string spec_path;
  std::optional<std::string> mode;
  std::optional<std::string> cut;
  std::optional<std::string> state;
  std::string mechanism;
  std::string purview;
  std::string direction = "cause";
  std::optional<std::string> mechanism_split;
  std::optional<std::string> purview_split;
  std::size_t threads = 1;
  std::size_t max_elements = 4;
  std::string output;
  io::Tolerances tol;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const Json& j) {
  const std::string text = io::dump_canonical(j);
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw io::ParseError("cannot write " + o.output);
  out << text;
}

Json header(const io::SystemSpec& spec, const Options& o) {
  Json j;
  j["engine"] = io::engine_json();
  j["tolerances"] = io::tolerances_json(o.tol);
  j["input"] = spec.source;
  return j;
}

template <class T>
int run(const io::SystemSpec& spec, const Options& o) {
  using Process = typename T::Process;
  std::optional<Process> reverse;
  if (spec.reverse) reverse = std::get<Process>(*spec.reverse);
  const System<T> sys(spec.object, std::get<Process>(*spec.dynamics), reverse, o.tol.causal);
  if (!spec.state) throw io::ParseError("no state given (use \"state\" in the spec or --state)");
  const Process& s = std::get<Process>(*spec.state);

  EngineOptions eo;
  eo.variant = spec.mode;
  eo.cut = spec.cut;
  eo.tol_zero = o.tol.zero;
  eo.threads = o.threads;

  if (o.command == "phi") {
    emit(o, io::phi_report(spec, o.tol, major_complex(sys, s, eo)));
    return kOk;
  }

  Repertoires<T> reps(sys, s, spec.mode, o.tol.zero);
  Json j = header(spec, o);
  if (o.command == "qshape") {
    j["qshape"] = io::qshape_json(spec, qshape(reps));
  } else if (o.command == "concept") {
    const auto m = io::parse_elements(spec, o.mechanism);
    if (m.empty()) throw io::ParseError("--mechanism must name at least one element");
    j["mechanism"] = io::elements_json(spec, m);
    const auto c = concept_of(reps, m);
    j["concept"] = c ? io::concept_json(spec, *c) : Json(nullptr);
  } else {
    const auto m = io::parse_elements(spec, o.mechanism);
    const auto p = io::parse_elements(spec, o.purview);
    Direction dir;
    if (o.direction == "cause") dir = Direction::cause;
    else if (o.direction == "effect") dir = Direction::effect;
    else throw io::ParseError("--direction must be cause or effect");
    const auto& v = reps.value(dir, m, p);
    const auto ext = reps.extended(dir, m, p);
    j["direction"] = io::to_string(dir);
    j["mechanism"] = io::elements_json(spec, m);
    j["purview"] = io::elements_json(spec, p);
    j["zero"] = v.zero;
    j["lambda"] = v.lambda;
    j["repertoire"] = io::state_json(v.state);
    j["extended"] = io::state_json(ext.state);
    if (o.mechanism_split || o.purview_split) {
      const auto k = io::parse_elements(spec, o.mechanism_split.value_or(""));
      const auto l = io::parse_elements(spec, o.purview_split.value_or(""));
      if (!k.subset_of(m) || !l.subset_of(p))
        throw io::ParseError("split parts must lie inside the mechanism and purview");
      const auto dec = reps.decomposed(dir, m, p, k, l);
      Json d;
      d["mechanism"] = {io::elements_json(spec, k), io::elements_json(spec, m.minus(k))};
      d["purview"] = {io::elements_json(spec, l), io::elements_json(spec, p.minus(l))};
      d["repertoire"] = io::state_json(dec.state);
      d["distance"] = T::distance(ext.state, dec.state);
      j["decomposed"] = std::move(d);
    }
  }
  emit(o, j);
  return kOk;
}

int execute(Options& o) {
  io::SystemSpec spec = io::parse_spec(io::read_json_file(o.spec_path));
  if (o.mode) {
    if (*o.mode == "generic") io::set_mode(spec, Variant::generic);
    else if (*o.mode == "iit3") io::set_mode(spec, Variant::iit3);
    else throw io::ParseError("--mode must be generic or iit3");
  }
  if (o.cut) {
    if (*o.cut == "symmetric") io::set_cut(spec, CutKind::symmetric);
    else if (*o.cut == "directional") io::set_cut(spec, CutKind::directional);
    else throw io::ParseError("--cut must be symmetric or directional");
  }
  if (o.state) {
    std::error_code ec;
    const bool is_file = std::filesystem::is_regular_file(*o.state, ec);
    io::set_state(spec, is_file ? io::read_json_file(*o.state) : Json(*o.state));
  }
  // Validation is polynomial; only the searches are capped.
  if (o.command != "validate" && spec.object.num_factors() > o.max_elements)
    throw ResourceLimit(std::to_string(spec.object.num_factors()) + " elements exceed the exhaustive-search limit of " +
                        std::to_string(o.max_elements) + " (raise it with --max-elements)");

  const auto violations = io::validate(spec, o.tol);
  if (o.command == "validate") {
    for (const auto& v : violations) std::cout << "invalid: " << v << "\n";
    if (violations.empty()) std::cout << "ok\n";
    return violations.empty() ? kOk : kInvalid;
  }
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << "invalid: " << v << "\n";
    return kInvalid;
  }
  return spec.backend == io::Backend::classical ? run<classical::Theory>(spec, o) : run<quantum::Theory>(spec, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrated information of systems in classical and quantum process theories"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(PROCPHI_VERSION));
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("spec", o.spec_path, "System specification (or a report to re-run)")->required();
    sub->add_option("--mode", o.mode, "Repertoire variant: generic or iit3");
    sub->add_option("--cut", o.cut, "Cut kind: symmetric or directional");
    sub->add_option("--state", o.state, "Per-element label such as 1,0, or a JSON state file");
    sub->add_option("--threads", o.threads, "Worker threads for the subsystem scan (0 = all cores)");
    sub->add_option("--max-elements", o.max_elements, "Largest system searched exhaustively");
    sub->add_option("--output", o.output, "Write the report here instead of stdout");
    sub->add_option("--tol-causal", o.tol.causal, "Causality tolerance");
    sub->add_option("--tol-zero", o.tol.zero, "Mass below which a repertoire counts as zero");
  };
  auto* validate = app.add_subcommand("validate", "Check a specification");
  auto* phi = app.add_subcommand("phi", "Major complex, Phi and the full Q-shape");
  auto* qs = app.add_subcommand("qshape", "Q-shape of the whole system");
  auto* concept_cmd = app.add_subcommand("concept", "Concept of one mechanism");
  auto* rep = app.add_subcommand("repertoire", "Repertoire values of one mechanism and purview");
  for (auto* sub : {validate, phi, qs, concept_cmd, rep}) common(sub);
  concept_cmd->add_option("--mechanism", o.mechanism, "Comma list of element names or indices")->required();
  rep->add_option("--mechanism", o.mechanism, "Comma list of element names or indices (empty for none)");
  rep->add_option("--purview", o.purview, "Comma list of element names or indices (empty for none)");
  rep->add_option("--direction", o.direction, "cause or effect");
  rep->add_option("--mechanism-split", o.mechanism_split, "First part of the mechanism split");
  rep->add_option("--purview-split", o.purview_split, "First part of the purview split");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  for (auto* sub : {validate, phi, qs, concept_cmd, rep})
    if (sub->parsed()) o.command = sub->get_name();

  try {
    return execute(o);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const UnsupportedError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
}
