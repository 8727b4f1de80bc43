#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lindyn/runner.hpp"
#include "lindyn/spectral.hpp"

using namespace lindyn;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f{path};
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempDir {
  std::string path;
  explicit TempDir(std::string p) : path(std::move(p)) {}
  ~TempDir() { std::filesystem::remove_all(path); }
};

ExperimentConfig base_cfg(const std::string& out) {
  ExperimentConfig cfg;
  cfg.set("common", "weights", "constant(2)");
  cfg.set("common", "out", out);
  cfg.set("common", "seed", "7");
  return cfg;
}

}  // namespace

TEST_CASE("witness run: certificate report with exit 0") {
  TempDir dir{"run_test_witness"};
  ExperimentConfig cfg = base_cfg(dir.path);
  cfg.set("witness", "gamma", "1.5");
  cfg.set("witness", "m", "5");
  const RunResult res = run("witness", cfg);
  CHECK(res.exit_status == 0);
  CHECK(res.pass);

  const json rep = json::parse(slurp(res.report_path));
  CHECK(rep["schema_version"] == 1);
  CHECK(rep["command"] == "witness");
  CHECK(rep["seed"] == 7);
  CHECK(rep["result"]["pass"] == true);
  CHECK(rep["result"]["witness_support"] == 6);
  CHECK(rep["result"]["decay_index"] == 6);
  CHECK(rep["result"]["orbit_norms"].size() == 7);
  CHECK(rep["result"]["gamma"] == 1.5);

  const std::string csv = slurp(res.data_path);
  CHECK(csv.rfind("i,norm\n0,1\n1,2\n", 0) == 0);
}

TEST_CASE("witness run: gamma beyond the radius fails with the module message") {
  TempDir dir{"run_test_witness_fail"};
  ExperimentConfig cfg = base_cfg(dir.path);
  cfg.set("witness", "gamma", "3");
  cfg.set("witness", "m", "5");
  const RunResult res = run("witness", cfg);
  CHECK(res.exit_status != 0);
  CHECK(res.message.find("gamma exceeds eigen disk radius") != std::string::npos);
}

TEST_CASE("identical configs produce byte-identical reports") {
  TempDir dir1{"run_test_det1"};
  TempDir dir2{"run_test_det2"};
  for (const char* cmd : {"witness"}) {
    ExperimentConfig a = base_cfg(dir1.path);
    a.set(cmd, "gamma", "1.5");
    a.set(cmd, "m", "7");
    ExperimentConfig b = base_cfg(dir2.path);
    b.set(cmd, "gamma", "1.5");
    b.set(cmd, "m", "7");
    const RunResult ra = run(cmd, a);
    const RunResult rb = run(cmd, b);
    CHECK(slurp(ra.report_path) == slurp(rb.report_path));
    CHECK(slurp(ra.data_path) == slurp(rb.data_path));
  }
}

TEST_CASE("scramble run: construction and pair checks all pass") {
  TempDir dir{"run_test_scramble"};
  ExperimentConfig cfg = base_cfg(dir.path);
  cfg.set("scramble", "gamma", "1.5");
  cfg.set("scramble", "K", "4");
  cfg.set("scramble", "P", "2");
  const RunResult res = run("scramble", cfg);
  CHECK(res.exit_status == 0);
  const json rep = json::parse(slurp(res.report_path));
  CHECK(rep["result"]["construction"]["checks"]["all"] == true);
  CHECK(rep["result"]["pairs"].size() == 1);
  CHECK(rep["result"]["pairs"][0]["all_pass"] == true);
  CHECK(rep["result"]["construction"]["stages"][1]["N_prime"] == 11);
  CHECK(rep["result"]["construction"]["stages"][1]["N"] == 23);
  const std::string csv = slurp(res.data_path);
  CHECK(csv.rfind("n,tau,F\n", 0) == 0);
}

TEST_CASE("orbit, radius, eigen, mixing, periodic, stats runs") {
  TempDir dir{"run_test_misc"};

  ExperimentConfig orbit_cfg = base_cfg(dir.path + "/orbit");
  orbit_cfg.set("orbit", "basis", "3");
  orbit_cfg.set("orbit", "n_max", "5");
  CHECK(run("orbit", orbit_cfg).exit_status == 0);
  {
    const json rep = json::parse(slurp(dir.path + "/orbit/report.json"));
    CHECK(rep["result"]["orbit"].size() == 6);
    CHECK(rep["result"]["orbit"][3] == 8.0);
  }

  ExperimentConfig radius_cfg = base_cfg(dir.path + "/radius");
  radius_cfg.set("common", "weights", "ratio_plus_one");
  CHECK(run("radius", radius_cfg).exit_status == 0);
  {
    const json rep = json::parse(slurp(dir.path + "/radius/report.json"));
    const double r = rep["result"]["radius"];
    CHECK(r >= 0.95);
    CHECK(r <= 1.05);
  }

  ExperimentConfig eigen_cfg = base_cfg(dir.path + "/eigen");
  eigen_cfg.set("eigen", "omega_re", "0.5");
  eigen_cfg.set("eigen", "trunc_len", "32");
  CHECK(run("eigen", eigen_cfg).exit_status == 0);
  {
    const json rep = json::parse(slurp(dir.path + "/eigen/report.json"));
    CHECK(rep["result"]["pass"] == true);
  }

  ExperimentConfig mix_cfg = base_cfg(dir.path + "/mixing");
  mix_cfg.set("mixing", "x_part", "0.5,0:1,0");
  mix_cfg.set("mixing", "y_part", "1.5,0:1,0");
  CHECK(run("mixing", mix_cfg).exit_status == 0);
  {
    const json rep = json::parse(slurp(dir.path + "/mixing/report.json"));
    CHECK(rep["result"]["N"] == 13);
    CHECK(rep["result"]["checks"].size() == 11);
  }

  ExperimentConfig per_cfg = base_cfg(dir.path + "/periodic");
  per_cfg.set("periodic", "p", "1");
  per_cfg.set("periodic", "q", "4");
  CHECK(run("periodic", per_cfg).exit_status == 0);
  {
    const json rep = json::parse(slurp(dir.path + "/periodic/report.json"));
    CHECK(rep["result"]["period"] == 4);
    CHECK(rep["result"]["pass"] == true);
  }

  ExperimentConfig stats_cfg = base_cfg(dir.path + "/stats");
  stats_cfg.set("stats", "x", "[[1,0],[0,0],[0,0],[1,0]]");
  stats_cfg.set("stats", "y", "[[1,0]]");
  stats_cfg.set("stats", "tau", "0.5,2");
  stats_cfg.set("stats", "window", "4,8");
  CHECK(run("stats", stats_cfg).exit_status == 0);
  {
    const json rep = json::parse(slurp(dir.path + "/stats/report.json"));
    CHECK(rep["result"]["stats"].size() == 2);
  }
}

TEST_CASE("exit-status contract: failing certified check yields exit 1") {
  TempDir dir{"run_test_failcheck"};
  // a genuine order-1 generalized eigenvector is not periodic, so the
  // periodic report fails its certification
  const ShiftOperator T{WeightSequence::constant(2.0)};
  const TruncatedVector tgt = gen_eigenvector(T, cplx{1, 0}, 1, 64).vector;
  ExperimentConfig cfg = base_cfg(dir.path);
  cfg.set("periodic", "p", "0");
  cfg.set("periodic", "q", "1");
  cfg.set("periodic", "depth", "2");
  cfg.set("periodic", "trunc_len", "64");
  cfg.set("periodic", "target", to_json_array(tgt));
  const RunResult res = run("periodic", cfg);
  CHECK(res.exit_status == 1);
  CHECK_FALSE(res.pass);
  const json rep = json::parse(slurp(res.report_path));
  CHECK(rep["result"]["pass"] == false);
}

TEST_CASE("config errors exit 2 and name the field") {
  ExperimentConfig cfg;  // no weights at all
  const RunResult res = run("witness", cfg);
  CHECK(res.exit_status == 2);
  CHECK(res.message.find("common.weights") != std::string::npos);

  ExperimentConfig bad = base_cfg("run_test_badfield");
  bad.set("witness", "gamma", "soup");
  const RunResult res2 = run("witness", bad);
  CHECK(res2.exit_status == 2);
  CHECK(res2.message.find("witness.gamma") != std::string::npos);

  const RunResult res3 = run("nonsense", base_cfg("run_test_unknown"));
  CHECK(res3.exit_status == 2);
}

TEST_CASE("declared_sup override participates in lazy weight validation") {
  TempDir dir{"run_test_declared_sup"};
  ExperimentConfig cfg = base_cfg(dir.path);
  cfg.set("common", "declared_sup", "1.5");  // below the actual weights
  cfg.set("orbit", "basis", "2");
  const RunResult res = run("orbit", cfg);
  CHECK(res.exit_status == 1);
  CHECK(res.message.find("exceeds declared sup") != std::string::npos);
}
