#include "fixtures.hpp"

#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace fixtures {

std::string path(const std::string& name) { return std::string(PROCPHI_FIXTURE_DIR) + "/" + name + ".json"; }

procphi::io::SystemSpec load(const std::string& name) {
  return procphi::io::parse_spec(procphi::io::read_json_file(path(name)));
}

oracle::Net net(const std::string& name) {
  std::ifstream in(path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  const auto doc = nlohmann::json::parse(in);
  oracle::Net out;
  for (const auto& e : doc.at("elements")) out.dims.push_back(e.at("size").get<std::size_t>());
  for (const auto& row : doc.at("dynamics"))
    for (const auto& v : row) out.tpm.push_back(v.get<double>());
  return out;
}

procphi::System<procphi::classical::Theory> classical_system(const procphi::io::SystemSpec& spec) {
  return {spec.object, std::get<procphi::classical::Process>(*spec.dynamics)};
}

std::vector<double> basis(std::size_t dim, std::size_t x) {
  std::vector<double> v(dim, 0.0);
  v[x] = 1.0;
  return v;
}

}  // namespace fixtures
