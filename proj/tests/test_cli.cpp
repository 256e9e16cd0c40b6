#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "naive_iit.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(PROCPHI_CLI) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return fixtures::path(name); }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("procphi_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, ValidateOk) {
  const auto r = run("validate " + fixture("copy_swap"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok\n");
  EXPECT_EQ(run("validate " + fixture("quantum_cnot")).code, 0);
}

TEST(Cli, ValidateNamesTheBadRow) {
  const auto r = run("validate " + fixture("invalid_row"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("row 1"), std::string::npos) << r.out;
}

TEST(Cli, ValidateFlagsCorrelatedNoiseInIit3) {
  const auto r = run("validate " + fixture("correlated_noise"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("conditionally independent"), std::string::npos) << r.out;
  // The same table is fine for generic repertoires.
  EXPECT_EQ(run("validate --mode generic " + fixture("correlated_noise")).code, 0);
}

TEST(Cli, UnsupportedCombination) {
  EXPECT_EQ(run("validate --mode iit3 " + fixture("quantum_cnot")).code, 1);
  EXPECT_EQ(run("phi --cut directional " + fixture("quantum_cnot")).code, 1);
}

TEST(Cli, ParseErrors) {
  TempDir tmp;
  EXPECT_EQ(run("validate " + tmp.path("missing.json")).code, 2);
  EXPECT_EQ(run("validate " + tmp.file("bad.json", "{\"backend\": ")).code, 2);
  EXPECT_EQ(run("validate " + tmp.file("nodyn.json", R"({"backend":"classical","elements":[{"name":"A","size":2}]})"))
                .code,
            2);
  EXPECT_EQ(run("phi --mode sideways " + fixture("copy_swap")).code, 2);
  EXPECT_EQ(run("repertoire " + fixture("copy_swap") + " --mechanism Z --purview A").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, ElementLimit) {
  TempDir tmp;
  json spec = {{"backend", "classical"}, {"elements", json::array()}};
  for (int i = 0; i < 5; ++i) spec["elements"].push_back({{"name", std::string(1, char('A' + i))}, {"size", 2}});
  json rows = json::array();
  for (int x = 0; x < 32; ++x) {
    json row = json::array();
    for (int y = 0; y < 32; ++y) row.push_back(x == y ? 1 : 0);
    rows.push_back(row);
  }
  spec["dynamics"] = rows;
  spec["state"] = {0, 0, 0, 0, 0};
  const auto path = tmp.file("five.json", spec.dump());
  const auto r = run("phi " + path);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("--max-elements"), std::string::npos) << r.out;
  EXPECT_EQ(run("validate " + path).code, 0);
}

TEST(Cli, CopySwapPhiMatchesOracle) {
  const auto r = run("phi " + fixture("copy_swap"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  const auto om = oracle::major_complex(fixtures::net("copy_swap"), fixtures::basis(4, 3), {});
  EXPECT_NEAR(j["major_complex"]["Phi"].get<double>(), om.phi, 1e-12);
  EXPECT_EQ(j["major_complex"]["elements"], json({"A", "B"}));
  EXPECT_GT(om.phi, 0.0);
  for (const auto& c : j["qshape"]) EXPECT_GE(c["phi"].get<double>(), 0.0);
}

TEST(Cli, ProductAndTrivialSpecsHaveZeroPhi) {
  for (const char* name : {"product2", "product3"}) {
    const auto j = json::parse(run("phi " + fixture(name)).out);
    EXPECT_EQ(j["major_complex"]["Phi"].get<double>(), 0.0) << name;
  }
  const auto j = json::parse(run("phi " + fixture("single_noise")).out);
  EXPECT_EQ(j["major_complex"]["Phi"].get<double>(), 0.0);
  EXPECT_TRUE(j["qshape"].empty());
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  const auto first = run("phi --threads 1 " + fixture("noisy_network"));
  ASSERT_EQ(first.code, 0);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(run("phi --threads 1 " + fixture("noisy_network")).out, first.out);
  EXPECT_EQ(run("phi --threads 4 " + fixture("noisy_network")).out, first.out);
}

TEST(Cli, ReportReproducesItself) {
  TempDir tmp;
  const auto report = tmp.path("report.json");
  ASSERT_EQ(run("phi --mode iit3 --cut directional --state 0,1,1 --output " + report + " " + fixture("or_and_xor")).code,
            0);
  const auto again = tmp.path("again.json");
  ASSERT_EQ(run("phi --output " + again + " " + report).code, 0);
  EXPECT_EQ(slurp(report), slurp(again));
  const auto j = json::parse(slurp(report));
  EXPECT_EQ(j["input"]["mode"], "iit3");
  EXPECT_EQ(j["input"]["state"], json({0, 1, 1}));
}

TEST(Cli, StateOverrideFromFile) {
  TempDir tmp;
  const auto st = tmp.file("state.json", R"({"distribution": [0.25, 0.25, 0.25, 0.25]})");
  const auto r = run("phi --state " + st + " " + fixture("copy_swap"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["input"]["state"]["distribution"].size(), 4u);
}

TEST(Cli, RepertoireAndGateCause) {
  const auto r = run("repertoire " + fixture("and_or") + " --mechanism A --purview A,B --direction cause");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["repertoire"], json({0.0, 0.0, 0.0, 1.0}));
  EXPECT_EQ(j["lambda"].get<double>(), 2.0);
}

TEST(Cli, RepertoireEmptyMechanismAndSplit) {
  const auto r = run("repertoire " + fixture("copy_swap") + " --purview A,B --direction effect");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["repertoire"], json({0.25, 0.25, 0.25, 0.25}));
  const auto s = run("repertoire " + fixture("copy_swap") +
                     " --mechanism A,B --purview A,B --direction effect --mechanism-split A --purview-split B");
  ASSERT_EQ(s.code, 0) << s.out;
  EXPECT_TRUE(json::parse(s.out).contains("decomposed")) << s.out;
}

TEST(Cli, IdentityDynamicsEchoesState) {
  TempDir tmp;
  const auto path = tmp.file("id.json", R"({"backend":"classical","elements":[{"name":"A","size":2},{"name":"B","size":2}],
    "dynamics":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],"state":{"distribution":[0.1,0.2,0.3,0.4]}})");
  const auto r = run("repertoire " + path + " --mechanism A,B --purview A,B --direction effect");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto rep = json::parse(r.out)["repertoire"];
  const std::vector<double> want = {0.1, 0.2, 0.3, 0.4};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(rep[i].get<double>(), want[i], 1e-15);
}

TEST(Cli, ConceptAndQShape) {
  const auto c = run("concept " + fixture("copy_swap") + " --mechanism A");
  ASSERT_EQ(c.code, 0) << c.out;
  EXPECT_FALSE(json::parse(c.out)["concept"].is_null());
  const auto q = run("qshape " + fixture("copy_swap"));
  ASSERT_EQ(q.code, 0) << q.out;
  EXPECT_EQ(json::parse(q.out)["qshape"].size(), 2u);
}

TEST(Cli, QuantumPhi) {
  const auto r = run("phi " + fixture("quantum_cnot"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_GE(json::parse(r.out)["major_complex"]["Phi"].get<double>(), 0.0);
}

}  // namespace
