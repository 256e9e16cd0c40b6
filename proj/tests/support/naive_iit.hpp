#pragma once

// Straightforward re-implementation of classical IIT on raw arrays, used as
// a test oracle. Shares no code with the library: its own index arithmetic,
// conditioning and cut formulas, and a min-cost-flow transport solver.

#include <cstdint>
#include <vector>

namespace oracle {

struct Net {
  std::vector<std::size_t> dims;
  /// Row-major N x N transition table, little-endian state indexing.
  std::vector<double> tpm;
  /// Ground metric on states: sum (Hamming) or max (point) of element metrics.
  bool max_metric = false;

  std::size_t n() const { return dims.size(); }
  std::size_t size() const;
};

struct Options {
  bool iit3 = false;
  bool directional = false;
};

struct Concept {
  std::uint32_t mechanism = 0;
  std::uint32_t cause_purview = 0;
  std::uint32_t effect_purview = 0;
  double phi = 0.0;
  double cause_phi = 0.0;
  double effect_phi = 0.0;
  std::vector<double> cause;
  std::vector<double> effect;
};

struct Major {
  std::uint32_t complex = 0;
  double phi = 0.0;
  /// Φ of every nonempty subsystem, indexed by subset bitmask.
  std::vector<double> subsystem_phi;
};

/// Min-cost transport between two weight vectors (equal total) under cost.
double transport(const std::vector<double>& a, const std::vector<double>& b, const std::vector<double>& cost);

std::vector<double> repertoire(const Net& net, const std::vector<double>& state, const Options& opt, bool cause,
                               std::uint32_t mech, std::uint32_t purview);
double phi(const Net& net, const std::vector<double>& state, const Options& opt, bool cause, std::uint32_t mech,
           std::uint32_t purview);
std::vector<Concept> qshape(const Net& net, const std::vector<double>& state, const Options& opt);
double system_phi(const Net& net, const std::vector<double>& state, const Options& opt);
/// Cut TPM: symmetric along {part, rest} or directional from `part`.
std::vector<double> cut(const Net& net, std::uint32_t part, bool directional);
Net subsystem(const Net& net, const std::vector<double>& state, std::uint32_t part);
std::vector<double> marginal(const Net& net, const std::vector<double>& state, std::uint32_t part);
Major major_complex(const Net& net, const std::vector<double>& state, const Options& opt);

}  // namespace oracle
