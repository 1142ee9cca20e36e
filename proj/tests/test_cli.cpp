#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SPO_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SPO_DATA_DIR) + "/" + name + ".alg"; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check exit codes") {
    CHECK(run("check " + data("example_2_2")).code == 0);
    CHECK(run("check " + data("pi_pi_1_2")).code == 0);
    CHECK(run("check " + data("pi_i_1_2")).code == 1);
  }

  TEST_CASE("check reports the failing law") {
    Run r = run("--json check " + data("pi_i_1_2"));
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "fail");
    bool jacobi = false;
    for (const auto& v : j["violations"]) jacobi = jacobi || v["law"] == "jacobi";
    CHECK(jacobi);
  }

  TEST_CASE("cohomology dimensions") {
    Run r = run("--json cohomology " + data("example_2_2") + " --degree 1 --complex poisson");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["dimensions"]["even"] == 3);
    CHECK(j["dimensions"]["odd"] == 2);
    CHECK(j["dimensions"]["total"] == 5);
  }

  TEST_CASE("output is deterministic") {
    const std::string args = "--json cohomology " + data("example_1_1") + " --degree 2 --emit-basis";
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("examples") {
    Run r = run("example --list");
    CHECK(r.code == 0);
    CHECK(r.out.find("example_2_2") != std::string::npos);
    Run e = run("example --name example_1_1");
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["basis"].size() == 2);
  }

  TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("cohomology " + data("example_2_2")).code == 2);
    CHECK(run("cohomology " + data("example_2_2") + " --degree 1 --parity sideways").code == 2);
  }
}
