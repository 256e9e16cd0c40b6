#pragma once

#include <string>
#include <vector>

#include "procphi/classical/process.hpp"
#include "procphi/engine.hpp"
#include "procphi/io/canonical_json.hpp"
#include "procphi/io/spec.hpp"
#include "procphi/quantum/process.hpp"

// Report fragments. Every number is copied from an engine result; nothing
// here does arithmetic on them.

namespace procphi::io {

/// Weights of a classical state, or the density matrix of a quantum state
/// with entries [re, im].
Json state_json(const classical::Process& s);
Json state_json(const quantum::Process& s);

Json elements_json(const SystemSpec& spec, ElementSet set);
Json tolerances_json(const Tolerances& tol);
Json engine_json();

inline Json split_json(const SystemSpec& spec, const std::optional<Split>& split) {
  if (!split) return nullptr;
  Json j;
  j["mechanism"] = elements_json(spec, split->mechanism_part);
  j["purview"] = elements_json(spec, split->purview_part);
  return j;
}

inline Json cut_json(const SystemSpec& spec, const std::optional<Cut>& cut) {
  if (!cut) return nullptr;
  Json j;
  j["kind"] = to_string(cut->kind);
  j["part"] = elements_json(spec, cut->part);
  return j;
}

inline Json phi_json(const SystemSpec& spec, const PhiResult& r) {
  Json j;
  j["phi"] = r.value;
  j["zero_repertoire"] = r.zero_repertoire;
  j["minimizing_split"] = split_json(spec, r.split);
  return j;
}

template <class Concept>
Json concept_json(const SystemSpec& spec, const Concept& c) {
  Json j;
  j["mechanism"] = elements_json(spec, c.mechanism);
  j["phi"] = c.phi;
  Json cause = phi_json(spec, c.cause_core.phi);
  cause["purview"] = elements_json(spec, c.cause_core.purview);
  cause["repertoire"] = state_json(c.cause);
  Json effect = phi_json(spec, c.effect_core.phi);
  effect["purview"] = elements_json(spec, c.effect_core.purview);
  effect["repertoire"] = state_json(c.effect);
  j["cause"] = std::move(cause);
  j["effect"] = std::move(effect);
  return j;
}

template <class QShapeT>
Json qshape_json(const SystemSpec& spec, const QShapeT& q) {
  Json arr = Json::array();
  for (const auto& c : q.concepts) arr.push_back(concept_json(spec, c));
  return arr;
}

template <class SystemPhiT>
Json system_phi_json(const SystemSpec& spec, const SystemPhiT& r) {
  Json j;
  j["phi"] = r.value;
  j["minimizing_cut"] = cut_json(spec, r.cut);
  return j;
}

/// Full report of the phi command.
template <class ExperienceT>
Json phi_report(const SystemSpec& spec, const Tolerances& tol, const ExperienceT& e) {
  Json j;
  j["engine"] = engine_json();
  j["tolerances"] = tolerances_json(tol);
  j["input"] = spec.source;
  // The whole system is the last subsystem in increasing subset order.
  const auto& whole = e.subsystems.back().result;
  j["qshape"] = qshape_json(spec, whole.qshape);
  j["system_phi"] = system_phi_json(spec, whole);
  Json subs = Json::array();
  for (const auto& s : e.subsystems) {
    Json row;
    row["elements"] = elements_json(spec, s.elements);
    row["phi"] = s.result.value;
    row["minimizing_cut"] = cut_json(spec, s.result.cut);
    row["concepts"] = s.result.qshape.concepts.size();
    subs.push_back(std::move(row));
  }
  j["subsystems"] = std::move(subs);
  Json mc;
  mc["elements"] = elements_json(spec, e.complex);
  mc["Phi"] = e.phi;
  mc["minimizing_cut"] = cut_json(spec, e.cut);
  mc["qshape"] = qshape_json(spec, e.qshape);
  j["major_complex"] = std::move(mc);
  return j;
}

}  // namespace procphi::io
