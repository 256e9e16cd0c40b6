#include "procphi/io/report.hpp"

namespace procphi::io {

Json state_json(const classical::Process& s) {
  Json arr = Json::array();
  for (double v : s.weights()) arr.push_back(v);
  return arr;
}

Json state_json(const quantum::Process& s) {
  const auto& rho = s.density();
  Json rows = Json::array();
  for (std::size_t i = 0; i < rho.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < rho.cols(); ++k) row.push_back(Json::array({rho(i, k).real(), rho(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json elements_json(const SystemSpec& spec, ElementSet set) {
  Json arr = Json::array();
  for (auto i : set.indices()) arr.push_back(spec.names.at(i));
  return arr;
}

Json tolerances_json(const Tolerances& tol) {
  Json j;
  j["causal"] = tol.causal;
  j["zero"] = tol.zero;
  j["channel"] = tol.channel;
  j["phi_floor"] = kPhiFloor;
  j["tie"] = kTieTolerance;
  return j;
}

Json engine_json() {
  Json j;
  j["name"] = "procphi";
  j["version"] = PROCPHI_VERSION;
  j["state_indexing"] = "little-endian (first element varies fastest)";
  return j;
}

}  // namespace procphi::io
