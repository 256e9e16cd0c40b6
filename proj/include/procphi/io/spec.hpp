#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "procphi/classical/process.hpp"
#include "procphi/engine.hpp"
#include "procphi/io/canonical_json.hpp"
#include "procphi/quantum/process.hpp"

// System specification files.
//
//   {
//     "backend": "classical" | "quantum",
//     "elements": [{"name": "A", "size": 2}, ...],      ("dim" for quantum)
//     "dynamics": [[...], ...] | {"tpm": ...} | {"kraus": [...]} | {"choi": ...},
//     "reverse_dynamics": <same forms>,                  (optional)
//     "metric": "point" | {"kind": "table", "tables": {"A": [[...]]}},
//     "product_metric": "sum" | "max",
//     "mode": "generic" | "iit3",
//     "cut": "symmetric" | "directional",
//     "state": [1, 0] | "1,0" | {"distribution": [...]} | {"density": [[...]]}
//   }
//
// Basis states are indexed little-endian: the first element varies fastest,
// so TPM row x of a 2-bit system is the state (x % 2, x / 2). Complex
// entries are written [re, im]. For the quantum backend a "tpm" is embedded
// as the corresponding classical-basis channel.

namespace procphi::io {

enum class Backend { classical, quantum };

/// Malformed input: bad JSON, wrong structure, unknown names.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double causal = 1e-9;
  double zero = kZeroTolerance;
  double channel = 1e-8;
};

struct SystemSpec {
  Backend backend = Backend::classical;
  std::vector<std::string> names;
  Object object;
  std::optional<std::variant<classical::Process, quantum::Process>> dynamics;
  std::optional<std::variant<classical::Process, quantum::Process>> reverse;
  Variant mode = Variant::generic;
  CutKind cut = CutKind::symmetric;
  std::optional<std::variant<classical::Process, quantum::Process>> state;
  /// The effective specification, ready to be embedded in a report.
  Json source;
  /// Invariant violations found while reading (negative entries and the like).
  std::vector<std::string> violations;
};

/// Accepts a specification or a report produced from one (its "input").
SystemSpec parse_spec(const Json& doc);

/// Parse a state description against the spec's object: a per-element label
/// list ("1,0" or [1, 0]), {"distribution": ...} or {"density": ...}.
std::variant<classical::Process, quantum::Process> parse_state(const SystemSpec& spec, const Json& j);

/// Replace the state, mode or cut of a spec, keeping `source` in step.
void set_state(SystemSpec& spec, const Json& state);
void set_mode(SystemSpec& spec, Variant mode);
void set_cut(SystemSpec& spec, CutKind cut);

/// All invariant violations: causality of the dynamics (naming rows),
/// complete positivity, metric axioms, conditional independence for iit3,
/// mode/backend compatibility, causality of the state and weak causality of
/// the configured repertoires. Empty means valid.
std::vector<std::string> validate(const SystemSpec& spec, const Tolerances& tol);

/// Element subset from a comma list of element names or indices.
ElementSet parse_elements(const SystemSpec& spec, const std::string& list);

std::string to_string(Variant v);
std::string to_string(CutKind c);
std::string to_string(Direction d);

Json read_json_file(const std::string& path);

}  // namespace procphi::io
