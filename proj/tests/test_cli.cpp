#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"

#if !defined(_WIN32)
#include <sys/wait.h>
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* p = std::getenv("POLEFRAC_BIN");
  if (p == nullptr || *p == '\0')
    throw std::runtime_error("POLEFRAC_BIN is not set");
  return p;
}

RunResult run_cli(const std::string& args) {
  std::string cmd = "\"" + binary_path() + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
#if defined(_WIN32)
  r.exit_code = status;
#else
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
  return r;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("2>/dev/null").exit_code == 2);
  CHECK(run_cli("frobnicate 2>/dev/null").exit_code == 2);
  CHECK(run_cli("pfrac --kind nope 2>/dev/null").exit_code == 2);
  // C outside the window is a parameter error, not a math failure
  CHECK(run_cli("pfrac --kind quadpole --k 2 --C 3 --delta 1/2 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("help exits with 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("coeffs --help").exit_code == 0);
}

TEST_CASE("passing runs exit with 0") {
  CHECK(run_cli("coeffs --n-max 5").exit_code == 0);
  CHECK(run_cli("identities --n-max 6 --b-max 6").exit_code == 0);
  CHECK(run_cli("recover --counterexample").exit_code == 0);
  CHECK(run_cli("bounds --P 2 --denom \"[[\\\"1\\\"]]\" --delta 1/2")
            .exit_code == 0);
}

TEST_CASE("an injected corruption exits with 1") {
  CHECK(run_cli("identities --n-max 6 --b-max 6 --corrupt").exit_code == 1);
}

TEST_CASE("json output is valid and reports clean checks") {
  RunResult r = run_cli("coeffs --n-max 4 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "coeffs");
  CHECK(j["checks_failed"] == 0);
  CHECK(j["checks_passed"].get<long>() > 0);
}

TEST_CASE("json output carries the exact expansion") {
  RunResult r = run_cli("pfrac --kind pm --m 2 --n 1 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("expansion"));
  CHECK(j["expansion"]["a"] == nlohmann::json::parse(R"(["1/4","1/2"])"));
  CHECK(j["expansion"]["b"] == nlohmann::json::parse(R"(["1/4"])"));
}

TEST_CASE("csv output has a header line") {
  RunResult r = run_cli("coeffs --n-max 3 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("n,i,closed,oracle,match", 0) == 0);
}

TEST_CASE("--out writes the payload to a file") {
  std::string path = "cli_out_test.json";
  std::remove(path.c_str());
  RunResult r = run_cli("coeffs --n-max 3 --format json --out " + path);
  REQUIRE(r.exit_code == 0);
  FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string body;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) body.append(buf.data(), n);
  std::fclose(f);
  std::remove(path.c_str());
  nlohmann::json j = nlohmann::json::parse(body);
  CHECK(j["checks_failed"] == 0);
}
