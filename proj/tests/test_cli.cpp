#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "tgaudin/suites.hpp"

using namespace tgaudin;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / "tgaudin_cli_test";
  fs::create_directories(d);
  return d;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(TGAUDIN_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("point lists") {
  const auto p = parse_points("1, 3,-1/2");
  REQUIRE(p.size() == 3);
  CHECK(p[2] == Rational(-1, 2));
  CHECK_THROWS_AS(parse_points("1,x"), ConfigError);
  CHECK_THROWS_AS(parse_points(""), ConfigError);
  CHECK(default_points(3) == std::vector<Rational>{Rational(1), Rational(3), Rational(5)});
}

TEST_CASE("config validation") {
  JobConfig c;
  CHECK_NOTHROW(c.validate());
  c.points = {Rational(1), Rational(1)};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.points = {Rational(0)};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = JobConfig();
  c.suite = "bogus";
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = JobConfig();
  c.m_max = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  // the worker count never reaches the report
  JobConfig a, b;
  b.workers = 8;
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("config files") {
  const fs::path f = scratch_dir() / "job.cfg";
  std::ofstream(f) << "# comment\nn = 3\nm_max=2   # trailing\n\npoints=1/2,4\n";
  const auto kv = read_config_file(f.string());
  CHECK(kv.at("n") == "3");
  CHECK(kv.at("m-max") == "2");
  CHECK(kv.at("points") == "1/2,4");
  std::ofstream(f) << "no equals sign\n";
  CHECK_THROWS_AS(read_config_file(f.string()), ConfigError);
  CHECK_THROWS_AS(read_config_file((scratch_dir() / "missing.cfg").string()), ConfigError);
}

TEST_CASE("rational strings are exact") {
  CHECK(rational_string(Rational(3)) == "3/1");
  CHECK(rational_string(Rational(-2, 6)) == "-1/3");
}

TEST_CASE("hamiltonian export") {
  JobConfig c;
  c.m_max = 1;
  const Json j = hamiltonians_json(c);
  CHECK(j["operators"].size() == j["count"].get<std::size_t>());
  for (const auto& op : j["operators"]) {
    CHECK(op["m"] == 1);
    CHECK(op["dim"] == 4);
    for (const auto& e : op["entries"]) CHECK(e[2].get<std::string>().find('/') != std::string::npos);
  }
  // the quadratic family contains the residues of tr L(u)^2 up to scalars
  // coming from -2u tr L'(u)
  c.m_max = 2;
  const GaudinRep rep(2, c.points);
  const auto fam = extract_family(rep, 2, false);
  for (const auto& rc : quad_residue_check(rep)) {
    bool found = false;
    for (const auto& h : fam)
      if (h.m == 2 && h.k == 0 && h.where == Location{Location::Kind::pole, rc.site, 1}) {
        const QOp diff = h.op - rc.residue;
        found = diff == scale_by(QOp::identity(rep.space()), diff.at(0, 0));
      }
    CHECK(found);
  }
  c.n = 1;
  for (const auto& op : hamiltonians_json(c)["operators"]) CHECK(op["dim"] == 1);
}

TEST_CASE("suite reports") {
  JobConfig c;
  const Report q = run_suite("quadham", c);
  CHECK(q.records.size() == 4);
  CHECK(q.failures() == 2);  // the literal form of the residue identity fails
  const Report routes = run_suite("theta-routes", c);
  CHECK(routes.pass());
  const Json j = report_json(routes, c.to_json());
  CHECK(j["summary"]["status"] == "pass");
  CHECK(j["records"].size() == routes.records.size());
  CHECK_THROWS_AS(run_suite("nope", c), ConfigError);

  const Report inv = run_suite("pbw-invariance", c);
  CHECK(inv.pass());
  bool has_info = false;
  for (const auto& r : inv.records) has_info = has_info || r.status == Status::info;
  CHECK(has_info);

  JobConfig big;
  big.n = 4;
  big.points = {Rational(1)};
  const Report skipped = run_suite("pbw-commut", big);
  REQUIRE(skipped.records.size() == 1);
  CHECK(skipped.records[0].status == Status::info);
}

TEST_CASE("command line exit codes and output files") {
  const fs::path d = scratch_dir();
  const fs::path out = d / "family.json";
  fs::remove(out);
  CHECK(run_cli("hamiltonians --n 2 --points 1,3 --m-max 2 --out " + out.string()) == 0);
  CHECK(fs::exists(out));
  CHECK(Json::parse(slurp(out))["count"].get<int>() > 0);

  const fs::path bad = d / "bad.json";
  fs::remove(bad);
  CHECK(run_cli("hamiltonians --points 1,1 --out " + bad.string()) == 2);
  CHECK_FALSE(fs::exists(bad));
  CHECK(run_cli("hamiltonians --points 0,2 --out " + bad.string()) == 2);
  CHECK(run_cli("hamiltonians --sites 3 --points 1,2") == 2);
  CHECK_FALSE(fs::exists(bad));

  CHECK(run_cli("verify --suite nope") == 2);
  CHECK(run_cli("verify --suite ybe --bogus-flag") == 2);
  CHECK(run_cli("") == 2);

  const fs::path rep = d / "routes.json";
  CHECK(run_cli("verify --suite theta-routes --out " + rep.string()) == 0);
  CHECK(Json::parse(slurp(rep))["summary"]["status"] == "pass");
  const fs::path quad = d / "quad.json";
  CHECK(run_cli("verify --suite quadham --out " + quad.string()) == 1);
  CHECK(fs::exists(quad));  // written even when checks fail

  CHECK(run_cli("qlimit --m-max 1") == 0);
  CHECK(run_cli("qlimit --m-max 4") == 2);
}

TEST_CASE("flags override the config file") {
  const fs::path d = scratch_dir();
  const fs::path cfg = d / "override.cfg";
  std::ofstream(cfg) << "n=3\npoints=1,2\nm-max=1\n";
  const fs::path out = d / "override.json";
  CHECK(run_cli("hamiltonians --config " + cfg.string() + " --n 2 --out " + out.string()) == 0);
  const Json j = Json::parse(slurp(out));
  CHECK(j["config"]["n"] == 2);
  CHECK(j["config"]["m_max"] == 1);
  CHECK(j["config"]["points"][1] == "2/1");
  std::ofstream(cfg) << "colour=blue\n";
  CHECK(run_cli("hamiltonians --config " + cfg.string()) == 2);
}

TEST_CASE("reports do not depend on the worker count") {
  const fs::path d = scratch_dir();
  for (const char* suite : {"commutativity", "pbw-commut"}) {
    CHECK(run_cli(std::string("verify --suite ") + suite + " --workers 1 --out " + (d / "w1.json").string()) == 0);
    CHECK(run_cli(std::string("verify --suite ") + suite + " --workers 3 --out " + (d / "w3.json").string()) == 0);
    CHECK(slurp(d / "w1.json") == slurp(d / "w3.json"));
  }
}
