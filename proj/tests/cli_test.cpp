#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PELLCF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/pellcf_cli_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("expand emits degrees, periods and the pell solution") {
  RunResult r = run_cli("--json --steps 3 expand \"t^2+1\"");
  REQUIRE(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["command"] == "expand");
  CHECK(j["input"] == "t^2 + 1");
  CHECK(j["results"]["degree_sequence"] == ordered_json::array({1, 1, 1, 1}));
  CHECK(j["results"]["cf_period"]["preperiod"] == 1);
  CHECK(j["results"]["cf_period"]["period"] == 1);
  CHECK(j["results"]["pell"]["x"] == "2*t^2 + 1");
  CHECK(j["results"]["pell"]["y"] == "2*t");
  CHECK(j["results"]["pell"]["c"] == "1");
  CHECK(j["parameters"]["steps"] == 3);
  CHECK(j["parameters"]["tolerance"] == "1/18446744073709551616");
}

TEST_CASE("human output prints the degree sequence the desk way") {
  RunResult r = run_cli("--steps 10 expand \"1/4096*(t^2-1)*(4*t^2-1)^2*(16*t^2+20*t+13)^2\"");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("5, (1, 2)*") != std::string::npos);
}

TEST_CASE("analyze reports the census") {
  RunResult r = run_cli("--json analyze \"(t^2-1)*(t-2)^2\"");
  REQUIRE(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["results"]["r"] == 0);
  CHECK(j["results"]["pellian"] == false);
  CHECK(j["results"]["is_squarefree"] == true);
  CHECK(j["results"]["c"] == "1");
}

TEST_CASE("pell inconclusive on a non-pellian input") {
  RunResult r = run_cli("--json --steps 40 pell \"(t^2-1)*(t-2)^2\"");
  REQUIRE(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["results"]["found"] == false);
  CHECK(j["results"]["status"] == "inconclusive (window exhausted)");
}

TEST_CASE("json reports round-trip byte-identically") {
  for (const char* args : {"--json --steps 4 expand \"t^2+1\"", "--json analyze \"(t^2-1)*(t-1/2)^2\"",
                           "--json --steps 11 verify \"1/4096*(t^2-1)*(4*t^2-1)^2*(16*t^2+20*t+13)^2\""}) {
    RunResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.out);
    std::string again = j.dump(2) + "\n";
    CHECK(again == r.out);
  }
}

TEST_CASE("identical invocations differ at most in timing") {
  RunResult a = run_cli("--json --steps 6 expand \"(t^2-1)*(t-2)^2\"");
  RunResult b = run_cli("--json --steps 6 expand \"(t^2-1)*(t-2)^2\"");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  ordered_json ja = ordered_json::parse(a.out), jb = ordered_json::parse(b.out);
  ja.erase("timing");
  jb.erase("timing");
  CHECK(ja == jb);
}

TEST_CASE("exit codes: input errors are 1") {
  CHECK(run_cli("expand \"t^^2\"").exit_code == 1);         // parse error
  CHECK(run_cli("expand \"t^2\"").exit_code == 1);          // perfect square
  CHECK(run_cli("expand \"t^3+1\"").exit_code == 1);        // odd degree
  CHECK(run_cli("analyze \"t^2+1\"").exit_code == 1);       // not divisible by t^2 - 1
  CHECK(run_cli("nosuchcommand \"t^2+1\"").exit_code == 1); // unknown command
  CHECK(run_cli("corpus /nonexistent/path.corpus").exit_code == 1);
  CHECK(run_cli("--tolerance bogus verify \"(t^2-1)*(t-2)^2\"").exit_code == 1);
  CHECK(run_cli("gen-example --l 3 --p 2 --q 2 --h 1").exit_code == 1);
}

TEST_CASE("gen-example reproduces the catalogue polynomial") {
  RunResult r = run_cli("--json gen-example --l 3 --p 2 --q 2 --h 2");
  REQUIRE(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["results"]["D_exact"] ==
        "t^10 + 5/2*t^9 + 27/16*t^8 - 55/32*t^7 - 911/256*t^6 - 105/64*t^5 + 379/512*t^4 + "
        "505/512*t^3 + 705/4096*t^2 - 65/512*t - 169/4096");
  CHECK(j["results"]["analysis"]["r"] == 2);
  CHECK(j["results"]["analysis"]["pellian"] == false);
}

TEST_CASE("corpus command collects per-line errors and keeps going") {
  std::string path = temp_file("mixed.corpus",
                               "# comment\n"
                               "euler: t^2+1\n"
                               "bad: t^^2\n"
                               "\n"
                               "cheb: t^2-1\n");
  RunResult r = run_cli("--json --steps 20 corpus " + path);
  REQUIRE(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  REQUIRE(j["results"]["entries"].size() == 2);
  CHECK(j["results"]["entries"][0]["label"] == "euler");
  CHECK(j["results"]["entries"][0]["pellian"] == true);
  CHECK(j["results"]["entries"][0]["agree"] == true);
  CHECK(j["results"]["entries"][1]["label"] == "cheb");
  REQUIRE(j["results"]["parse_errors"].size() == 1);
  CHECK(j["results"]["parse_errors"][0]["line"] == 3);
  CHECK(j["results"]["all_agree"] == true);
}

TEST_CASE("corpus command on a comment-only file warns") {
  std::string path = temp_file("empty.corpus", "# nothing here\n\n");
  RunResult r = run_cli("--json corpus " + path);
  REQUIRE(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["results"]["entries"].empty());
  REQUIRE(!j["warnings"].empty());
}

TEST_CASE("corpus command aborts when every line fails") {
  std::string path = temp_file("allbad.corpus", "a: t^^1\nb: )q(\n");
  CHECK(run_cli("--json corpus " + path).exit_code == 1);
}

TEST_CASE("the shipped corpus file loads cleanly") {
  RunResult r = run_cli(std::string("--json --steps 12 corpus ") + PELLCF_CORPUS_PATH);
  REQUIRE(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["results"]["entries"].size() == 30);
  CHECK(j["results"]["parse_errors"].empty());
}
