#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "doctest.h"
#include "wptk/error.hpp"

namespace fs = std::filesystem;
using namespace wptk::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "wptk-cli-test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Run run_with(const std::string& command, const fs::path& dir, const std::string& body) {
  const fs::path cfg = dir / "config.ini";
  std::ofstream(cfg) << "[output]\ndir = " << (dir / "out").string() << "\n" << body;
  std::ostringstream out, err;
  const int code = run(command, cfg.string(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

const char* kFree =
    "[grid]\nx_min = -32\nx_max = 32\nn_points = 4096\n"
    "[signal]\nkind = gaussian\n"
    "[window]\nb = 0.25\n"
    "[time]\nt = 1\n";

}  // namespace

TEST_CASE("config lookups") {
  Config c = Config::from_string("[a]\nx = 1.5\nlist = 1, 2 ,4\nflag = true\nn = 3\n");
  CHECK(c.real("a.x") == 1.5);
  CHECK(c.reals("a.list") == std::vector<double>{1, 2, 4});
  CHECK(c.flag("a.flag"));
  CHECK(c.integer("a.n") == 3);
  CHECK(c.real("a.missing", 7.0) == 7.0);
  CHECK_NOTHROW(c.check_unused());
  CHECK(c.resolved().get<std::string>("a.missing") == "7");
  CHECK_THROWS_AS(c.real("a.absent"), wptk::ConfigurationError);
}

TEST_CASE("config rejects junk") {
  Config c = Config::from_string("[a]\nx = abc\ny = 2\n");
  CHECK_THROWS_AS(c.real("a.x"), wptk::ConfigurationError);
  CHECK_THROWS_AS(c.check_unused(), wptk::ConfigurationError);
  CHECK_THROWS_AS(Config::from_string("[a\nx=1\n"), wptk::ConfigurationError);
  Config i = Config::from_string("[a]\nn = 2.5\n");
  CHECK_THROWS_AS(i.integer("a.n"), wptk::ConfigurationError);
}

TEST_CASE("verify-free prints a passing summary") {
  const fs::path d = scratch("free");
  const Run r = run_with("verify-free", d, kFree);
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("free_identity max_rel_err ", 0) == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(fs::exists(d / "out" / "identity.csv"));
  const std::string manifest = slurp(d / "out" / "manifest.ini");
  CHECK(manifest.find("b=0.25") != std::string::npos);
  CHECK(manifest.find("command=verify-free") != std::string::npos);
  CHECK(manifest.find("[probes]") != std::string::npos);
}

TEST_CASE("detect on a point mass") {
  const fs::path d = scratch("detect");
  const Run r = run_with("detect", d,
                         "[signal]\nkind = dirac\n[window]\nb = 0.25\nconsensus_order = 1\n"
                         "[detect]\nx0 = -1, 0, 1\n");
  REQUIRE(r.code == kExitOk);
  std::istringstream csv(slurp(d / "out" / "classification.csv"));
  std::string line;
  std::getline(csv, line);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    const bool at_zero = line.rfind("0,", 0) == 0;
    CHECK((line.find("InWavefront") != std::string::npos) == at_zero);
  }
  CHECK(rows == 6);
  const std::string manifest = slurp(d / "out" / "manifest.ini");
  CHECK(manifest.find("theta_regular=-2.5") != std::string::npos);
  CHECK(manifest.find("list=16, 32, 64") != std::string::npos);
}

TEST_CASE("identical configs give identical csv") {
  const fs::path a = scratch("det-a");
  const fs::path b = scratch("det-b");
  const std::string body = "[potential]\nmodel = subquad rho=1\n[flow]\nt = 1\nx = 0.2\nxi = 1\nlambda = 8\n";
  REQUIRE(run_with("flow", a, body).code == kExitOk);
  REQUIRE(run_with("flow", b, body).code == kExitOk);
  CHECK(slurp(a / "out" / "trajectory.csv") == slurp(b / "out" / "trajectory.csv"));
}

TEST_CASE("scale exponent schema") {
  const fs::path d = scratch("b");
  std::string warm = kFree;
  warm.replace(warm.find("b = 0.25"), 8, "b = 0.7");
  const Run w = run_with("verify-free", d, warm);
  CHECK(w.code == kExitOk);
  CHECK(w.err.find("warning: window.b") != std::string::npos);
  std::string bad = kFree;
  bad.replace(bad.find("b = 0.25"), 8, "b = 1.2");
  const Run e = run_with("verify-free", d, bad);
  CHECK(e.code == kExitConfig);
  CHECK(e.err.find("window.b") != std::string::npos);
}

TEST_CASE("configuration errors exit 1") {
  const fs::path d = scratch("errors");
  CHECK(run_with("nonsense", d, kFree).code == kExitConfig);
  CHECK(run_with("verify-free", d, std::string(kFree) + "[extra]\nkey = 1\n").code == kExitConfig);
  CHECK(run_with("verify-flow", d, std::string(kFree) + "[potential]\nmodel = subquad rho=1\n").code ==
        kExitConfig);
  CHECK(run_with("detect", d, "[signal]\nkind = heaviside\n").code == kExitConfig);
  std::ostringstream out, err;
  CHECK(run("wpt", (d / "missing.ini").string(), out, err) == kExitConfig);
  CHECK_FALSE(err.str().empty());
}

TEST_CASE("unwritable output exits 1") {
  const fs::path d = scratch("unwritable");
  std::ofstream(d / "blocker") << "file, not a directory";
  const fs::path cfg = d / "config.ini";
  std::ofstream(cfg) << "[output]\ndir = " << (d / "blocker" / "sub").string() << "\n" << kFree;
  std::ostringstream out, err;
  CHECK(run("verify-free", cfg.string(), out, err) == kExitConfig);
}

TEST_CASE("verification failure exits 2") {
  const fs::path d = scratch("fail");
  const Run r = run_with("verify-free", d, std::string(kFree) + "[tolerance]\nrelative = 1e-20\n");
  CHECK(r.code == kExitVerification);
  CHECK(r.out.find("FAIL") != std::string::npos);
}
