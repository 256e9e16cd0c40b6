#include "procphi/io/spec.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "procphi/classical/cuts.hpp"
#include "procphi/classical/theory.hpp"
#include "procphi/quantum/eigen.hpp"
#include "procphi/quantum/theory.hpp"

namespace procphi::io {
namespace {

using AnyProcess = std::variant<classical::Process, quantum::Process>;

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

double get_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

std::size_t get_count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw ParseError(where + ": expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

quantum::Complex get_complex(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ParseError(where + ": expected a number or [re, im]");
}

std::vector<double> real_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  std::vector<double> out;
  out.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + ": row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out.push_back(get_number(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
  }
  return out;
}

quantum::CMatrix complex_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  quantum::CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(where + ": row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = get_complex(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

std::string label_of(const Object& s, std::size_t x) {
  std::string out;
  for (auto d : s.digits(x)) {
    if (!out.empty()) out += ",";
    out += std::to_string(d);
  }
  return out;
}

/// Returns nothing (and records a violation) when entries break positivity.
std::optional<AnyProcess> parse_dynamics(const Json& j, Backend backend, const Object& s, const std::string& where,
                                         std::vector<std::string>& violations) {
  const std::size_t d = s.dim();
  const Json* tpm = nullptr;
  if (j.is_array()) tpm = &j;
  else if (j.is_object() && j.contains("tpm")) tpm = &j.at("tpm");

  if (tpm) {
    auto table = real_matrix(*tpm, d, d, where);
    for (std::size_t k = 0; k < table.size(); ++k)
      if (!(table[k] >= 0.0)) {
        violations.push_back(where + " row " + std::to_string(k / d) + " (state " + label_of(s, k / d) +
                             ") has a negative entry");
        return std::nullopt;
      }
    classical::Process p(s, s, std::move(table));
    if (backend == Backend::classical) return AnyProcess(std::move(p));
    return AnyProcess(quantum::from_classical(p));
  }
  if (backend == Backend::classical) throw ParseError(where + ": classical dynamics must be a TPM");
  if (j.is_object() && j.contains("kraus")) {
    const auto& list = j.at("kraus");
    if (!list.is_array() || list.empty()) throw ParseError(where + ".kraus: expected a list of matrices");
    std::vector<quantum::CMatrix> ks;
    for (std::size_t i = 0; i < list.size(); ++i)
      ks.push_back(complex_matrix(list[i], d, d, where + ".kraus[" + std::to_string(i) + "]"));
    return AnyProcess(quantum::from_kraus(s, s, ks));
  }
  if (j.is_object() && j.contains("choi"))
    return AnyProcess(quantum::Process(s, s, complex_matrix(j.at("choi"), d * d, d * d, where + ".choi")));
  throw ParseError(where + ": expected a TPM, {\"tpm\"}, {\"kraus\"} or {\"choi\"}");
}

Variant parse_mode(const Json& j) {
  const auto s = get_string(j, "mode");
  if (s == "generic") return Variant::generic;
  if (s == "iit3") return Variant::iit3;
  throw ParseError("mode: expected \"generic\" or \"iit3\"");
}

CutKind parse_cut(const Json& j) {
  const auto s = get_string(j, "cut");
  if (s == "symmetric") return CutKind::symmetric;
  if (s == "directional") return CutKind::directional;
  throw ParseError("cut: expected \"symmetric\" or \"directional\"");
}

std::vector<std::size_t> parse_label(const SystemSpec& spec, const Json& j) {
  std::vector<std::size_t> digits;
  if (j.is_string()) {
    std::stringstream ss(j.get<std::string>());
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        digits.push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw ParseError("state: bad label entry \"" + tok + "\"");
      }
    }
  } else {
    for (const auto& e : j) {
      if (!e.is_number_integer() || e.get<long long>() < 0) throw ParseError("state: label entries must be integers");
      digits.push_back(static_cast<std::size_t>(e.get<long long>()));
    }
  }
  if (digits.size() != spec.object.num_factors())
    throw ParseError("state: label needs one entry per element");
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] >= spec.object.factor(i).dim)
      throw ParseError("state: label entry for " + spec.names[i] + " out of range");
  return digits;
}

template <class Theory>
std::vector<std::string> weak_causality_violations(const System<Theory>& sys, Variant mode) {
  std::vector<std::string> out;
  const auto all = ElementSet::all(sys.size());
  for (auto m : all.subsets())
    for (auto p : all.subsets())
      for (auto dir : {Direction::cause, Direction::effect})
        if (!check_weak_causality(sys, mode, dir, m, p))
          out.push_back(to_string(dir) + " repertoire for mechanism bits " + std::to_string(m.bits()) +
                        ", purview bits " + std::to_string(p.bits()) + " is not weakly causal");
  return out;
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::generic ? "generic" : "iit3"; }
std::string to_string(CutKind c) { return c == CutKind::symmetric ? "symmetric" : "directional"; }
std::string to_string(Direction d) { return d == Direction::cause ? "cause" : "effect"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

SystemSpec parse_spec(const Json& doc_in) {
  const Json& doc = (doc_in.is_object() && doc_in.contains("input") && !doc_in.contains("elements"))
                        ? doc_in.at("input")
                        : doc_in;
  if (!doc.is_object()) throw ParseError("specification must be a JSON object");
  SystemSpec spec;
  spec.source = doc;

  const auto backend = get_string(require(doc, "backend", "spec"), "backend");
  if (backend == "classical") spec.backend = Backend::classical;
  else if (backend == "quantum") spec.backend = Backend::quantum;
  else throw ParseError("backend: expected \"classical\" or \"quantum\"");
  const bool classical = spec.backend == Backend::classical;

  ProductMetric product = ProductMetric::sum;
  if (doc.contains("product_metric")) {
    const auto pm = get_string(doc.at("product_metric"), "product_metric");
    if (pm == "sum") product = ProductMetric::sum;
    else if (pm == "max") product = ProductMetric::max;
    else throw ParseError("product_metric: expected \"sum\" or \"max\"");
  }

  const auto& elems = require(doc, "elements", "spec");
  if (!elems.is_array()) throw ParseError("elements: expected a list");
  if (elems.size() > 16) throw ParseError("elements: at most 16 elements are supported");
  std::vector<std::size_t> dims;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::string where = "elements[" + std::to_string(i) + "]";
    const auto name = get_string(require(elems[i], "name", where), where + ".name");
    if (!seen.insert(name).second) throw ParseError(where + ": duplicate element name " + name);
    const char* key = elems[i].contains("size") ? "size" : "dim";
    dims.push_back(get_count(require(elems[i], key, where), where + "." + key));
    spec.names.push_back(name);
  }

  std::vector<Factor> factors;
  for (auto d : dims) factors.push_back(Factor{d, nullptr});
  if (doc.contains("metric")) {
    const auto& m = doc.at("metric");
    if (m.is_string()) {
      if (m.get<std::string>() != "point") throw ParseError("metric: expected \"point\" or a table spec");
    } else {
      if (!classical) throw ParseError("metric: ground metric tables apply to the classical backend only");
      if (get_string(require(m, "kind", "metric"), "metric.kind") != "table")
        throw ParseError("metric.kind: expected \"table\"");
      const auto& tables = require(m, "tables", "metric");
      if (!tables.is_object()) throw ParseError("metric.tables: expected an object keyed by element name");
      for (auto it = tables.begin(); it != tables.end(); ++it) {
        std::size_t i = 0;
        while (i < spec.names.size() && spec.names[i] != it.key()) ++i;
        if (i == spec.names.size()) throw ParseError("metric.tables: unknown element " + it.key());
        factors[i].metric = std::make_shared<const std::vector<double>>(
            real_matrix(it.value(), dims[i], dims[i], "metric.tables." + it.key()));
      }
    }
  }
  spec.object = Object(std::move(factors), product);

  spec.dynamics = parse_dynamics(require(doc, "dynamics", "spec"), spec.backend, spec.object, "dynamics",
                                 spec.violations);
  if (doc.contains("reverse_dynamics"))
    spec.reverse = parse_dynamics(doc.at("reverse_dynamics"), spec.backend, spec.object, "reverse_dynamics",
                                  spec.violations);
  if (doc.contains("mode")) spec.mode = parse_mode(doc.at("mode"));
  if (doc.contains("cut")) spec.cut = parse_cut(doc.at("cut"));
  if (doc.contains("state")) {
    try {
      spec.state = parse_state(spec, doc.at("state"));
    } catch (const DomainError& e) {
      spec.violations.push_back(std::string("state: ") + e.what());
    }
  }
  return spec;
}

std::variant<classical::Process, quantum::Process> parse_state(const SystemSpec& spec, const Json& j) {
  const Object& s = spec.object;
  const bool classical = spec.backend == Backend::classical;
  if (j.is_string() || j.is_array()) {
    const auto x = s.index(parse_label(spec, j));
    if (classical) return classical::point_state(s, x);
    return quantum::point_state(s, x);
  }
  if (j.is_object() && j.contains("distribution")) {
    const auto& w = j.at("distribution");
    if (!w.is_array() || w.size() != s.dim())
      throw ParseError("state.distribution: expected " + std::to_string(s.dim()) + " weights");
    std::vector<double> p;
    for (std::size_t i = 0; i < w.size(); ++i) p.push_back(get_number(w[i], "state.distribution"));
    if (classical) return classical::state(s, std::move(p));
    for (double v : p)
      if (!(v >= 0.0)) throw DomainError("distribution entries must be nonnegative");
    return quantum::state(s, quantum::CMatrix::diagonal(p));
  }
  if (j.is_object() && j.contains("density")) {
    if (classical) throw ParseError("state.density: density matrices need the quantum backend");
    return quantum::state(s, complex_matrix(j.at("density"), s.dim(), s.dim(), "state.density"));
  }
  throw ParseError("state: expected a label, {\"distribution\"} or {\"density\"}");
}

void set_state(SystemSpec& spec, const Json& state) {
  spec.state = parse_state(spec, state);
  if (!state.is_string()) {
    spec.source["state"] = state;
    return;
  }
  // A "1,0" label is stored in its array form.
  Json digits = Json::array();
  std::stringstream ss(state.get<std::string>());
  std::string tok;
  while (std::getline(ss, tok, ',')) digits.push_back(std::stoul(tok));
  spec.source["state"] = digits;
}

void set_mode(SystemSpec& spec, Variant mode) {
  spec.mode = mode;
  spec.source["mode"] = to_string(mode);
}

void set_cut(SystemSpec& spec, CutKind cut) {
  spec.cut = cut;
  spec.source["cut"] = to_string(cut);
}

ElementSet parse_elements(const SystemSpec& spec, const std::string& list) {
  ElementSet out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t i = 0;
    while (i < spec.names.size() && spec.names[i] != tok) ++i;
    if (i == spec.names.size()) {
      std::size_t used = 0;
      try {
        i = std::stoul(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || i >= spec.names.size()) throw ParseError("unknown element \"" + tok + "\"");
    }
    out = out | ElementSet::single(i);
  }
  return out;
}

std::vector<std::string> validate(const SystemSpec& spec, const Tolerances& tol) {
  std::vector<std::string> out = spec.violations;
  const bool classical = spec.backend == Backend::classical;
  if (!classical && spec.mode == Variant::iit3) out.push_back("mode iit3 requires the classical backend");
  if (!classical && spec.cut == CutKind::directional)
    out.push_back("directional cuts require the classical backend");
  if (!spec.object.metric_is_valid()) out.push_back("metric: a ground metric table is not a metric");

  bool dynamics_ok = spec.dynamics.has_value();
  if (spec.dynamics) {
    if (const auto* t = std::get_if<classical::Process>(&*spec.dynamics)) {
      for (std::size_t x = 0; x < t->rows(); ++x) {
        double sum = 0.0;
        for (double v : t->row(x)) sum += v;
        if (std::abs(sum - 1.0) > tol.causal) {
          std::ostringstream msg;
          msg.precision(17);
          msg << "dynamics row " << x << " (state " << label_of(spec.object, x) << ") sums to " << sum
              << ", not 1";
          out.push_back(msg.str());
          dynamics_ok = false;
        }
      }
      const bool needs_ci = spec.mode == Variant::iit3 || spec.cut == CutKind::directional;
      if (dynamics_ok && needs_ci && !classical::is_conditionally_independent(*t)) {
        out.push_back("dynamics is not conditionally independent across elements (needed by " +
                      std::string(spec.mode == Variant::iit3 ? "iit3 mode" : "directional cuts") + ")");
        dynamics_ok = false;
      }
    } else {
      const auto& q = std::get<quantum::Process>(*spec.dynamics);
      if (!quantum::is_cp(q, tol.channel)) {
        out.push_back("dynamics is not completely positive (Choi matrix not positive semi-definite)");
        dynamics_ok = false;
      }
      if (!quantum::is_causal(q, tol.channel)) {
        out.push_back("dynamics is not trace preserving");
        dynamics_ok = false;
      }
    }
  }
  if (spec.reverse) {
    if (const auto* q = std::get_if<quantum::Process>(&*spec.reverse); q && !quantum::is_cp(*q, tol.channel)) {
      out.push_back("reverse_dynamics is not completely positive");
      dynamics_ok = false;
    }
    if (const auto* r = std::get_if<classical::Process>(&*spec.reverse);
        r && spec.cut == CutKind::directional && !classical::is_conditionally_independent(*r)) {
      out.push_back("reverse_dynamics is not conditionally independent (needed by directional cuts)");
      dynamics_ok = false;
    }
  }

  if (spec.state) {
    if (const auto* s = std::get_if<classical::Process>(&*spec.state)) {
      if (!classical::is_causal(*s, tol.causal)) out.push_back("state: weights do not sum to 1");
    } else {
      const auto& rho = std::get<quantum::Process>(*spec.state);
      if (!quantum::is_density(rho.density(), tol.channel)) out.push_back("state: not a positive semi-definite matrix");
      if (!quantum::is_causal(rho, tol.causal)) out.push_back("state: trace is not 1");
    }
  }

  const bool mode_ok = classical || (spec.mode == Variant::generic && spec.cut == CutKind::symmetric);
  if (dynamics_ok && mode_ok) {
    std::vector<std::string> weak;
    if (classical) {
      const auto& t = std::get<classical::Process>(*spec.dynamics);
      std::optional<classical::Process> r;
      if (spec.reverse) r = std::get<classical::Process>(*spec.reverse);
      weak = weak_causality_violations(System<classical::Theory>(spec.object, t, r, tol.causal), spec.mode);
    } else {
      const auto& t = std::get<quantum::Process>(*spec.dynamics);
      std::optional<quantum::Process> r;
      if (spec.reverse) r = std::get<quantum::Process>(*spec.reverse);
      weak = weak_causality_violations(System<quantum::Theory>(spec.object, t, r, tol.channel), spec.mode);
    }
    out.insert(out.end(), weak.begin(), weak.end());
  }
  return out;
}

}  // namespace procphi::io
