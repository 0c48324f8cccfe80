#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + AALPHA_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string("\"") + AALPHA_TEST_DATA + "/" + name + "\""; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("closed-form complete") {
  const Run r = run("closed-form --family complete --params 4 --alpha 0.5");
  CHECK(r.code == 0);
  CHECK(r.out == "3, 1, 1, 1\n");
  const Run j = run("closed-form --family multipartite --params 2,2,2 --alpha 0 --json");
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)[0]["value"].get<double>() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("spectrum") {
  const Run r = run("spectrum --graph " + data("empty3.txt") + " --alpha 0.7");
  CHECK(r.code == 0);
  CHECK(r.out == "0, 0, 0\n");
  const Run s = run("spectrum --graph " + data("star4.txt") + " --alpha 0");
  CHECK(s.out.rfind("1.73205080757", 0) == 0);
  const Run j = run("spectrum --graph " + data("c5.txt") + " --alpha 0.5 --json");
  CHECK(nlohmann::json::parse(j.out)["values"].size() == 5);
  const Run m = run("spectrum --graph " + data("c5.txt") + " --alpha 0.5 --matrix");
  CHECK(nlohmann::json::parse(m.out)["rows"][0][0] == 1.0);
}

TEST_CASE("verify-turan") {
  const Run r = run("verify-turan --n 5 --r 2 --alphas 0,0.8 --json --no-timing");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["status"] == "OK");
  CHECK(j[1]["status"] == "OK");
  CHECK(j[0]["maximizer_edge_lists"][0].size() == 6);  // K_{2,3}
  CHECK(j[1]["maximizer_edge_lists"][0].size() == 4);  // K_{1,4}
  const Run text = run("verify-turan --n 5 --r 2 --alphas 0,0.8");
  CHECK(text.out.find("status OK") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::string turan = "verify-turan --n 6 --r 3 --alphas 0.3,0.9 --json --no-timing";
  CHECK(run(turan).out == run(turan).out);
  CHECK(run(turan).out == run(turan + " --serial").out);
  const std::string sweep = "sweep --graph " + data("c5.txt") + " --grid 0:1:0.1";
  const Run a = run(sweep);
  CHECK(a.code == 0);
  CHECK(a.out == run(sweep).out);
  CHECK(a.out == run(sweep + " --serial").out);
  CHECK(a.out.rfind("alpha,lambda_1,", 0) == 0);
}

TEST_CASE("bounds and psd-threshold") {
  const Run b = run("bounds --graph " + data("c5.txt") + " --alpha 0.3");
  CHECK(b.code == 0);
  CHECK(b.out.find("0 violation(s)") != std::string::npos);
  const Run bj = run("bounds --graph " + data("star4.txt") + " --alpha 0.3 --json");
  CHECK(bj.code == 0);
  CHECK(nlohmann::json::parse(bj.out)["violations"].empty());
  const Run p = run("psd-threshold --graph " + data("c5.txt"));
  CHECK(p.code == 0);
  CHECK(std::abs(std::stod(p.out) - 0.4472135955) <= 1e-8);
}

TEST_CASE("enumerate") {
  CHECK(run("enumerate --n 4 --clique-free 3 --count").out == "41\n");
  CHECK(run("enumerate --n 3 --count").out == "8\n");
  const Run r = run("enumerate --n 2");
  CHECK(r.out == "2 0\n\n2 1\n0 1\n");
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 64);
  CHECK(run("spectrum --alpha 0.5").code == 64);
  CHECK(run("bogus").code == 64);
  CHECK(run("closed-form --family complete --params 4 --alpha 1.5").code == 64);
  CHECK(run("closed-form --family cube --params 4 --alpha 0.5").code == 64);
  CHECK(run("spectrum --graph /nonexistent/g.txt --alpha 0.5").code == 66);
  CHECK(run("spectrum --graph " + data("selfloop.txt") + " --alpha 0.5").code == 65);
  CHECK(run("verify-turan --n 8 --r 2 --alphas 0").code == 65);
  CHECK(run("enumerate --n 9 --count").code == 65);
  CHECK(run("sweep --graph " + data("c5.txt") + " --grid 0:1:0").code == 64);
}

}
