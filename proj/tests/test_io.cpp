#include <doctest.h>

#include <json.hpp>
#include <random>
#include <sstream>

#include "aalpha/bounds.hpp"
#include "aalpha/closed_form.hpp"
#include "aalpha/error.hpp"
#include "aalpha/extremal.hpp"
#include "aalpha/io.hpp"
#include "oracles.hpp"

using namespace aalpha;
using nlohmann::json;

namespace {

std::string parse_message(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# a path\n3 2\n0 1 # first\n1 2\n");
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(parse_edge_list("3 0").order() == 3);
  CHECK(parse_edge_list("0 0").order() == 0);
  CHECK(parse_edge_list("2 1 0 1").size() == 1);
}

TEST_CASE("edge list errors carry line numbers") {
  CHECK(parse_message("3 2\n0 1\n").find("line 2") != std::string::npos);
  CHECK(parse_message("3 1\n0 3\n").find("line 2") != std::string::npos);
  CHECK(parse_message("3 2\n0 1\n\n1 1\n").find("line 4") != std::string::npos);
  CHECK(parse_message("3 2\n0 1\n1 0\n").find("duplicate") != std::string::npos);
  CHECK(parse_message("3 1\nx 1\n").find("line 2") != std::string::npos);
  CHECK(parse_message("-3 0").find("line 1") != std::string::npos);
  CHECK_FALSE(parse_message("").empty());
}

TEST_CASE("files") {
  const Graph c5 = read_edge_list(AALPHA_TEST_DATA "/c5.txt");
  CHECK(c5.size() == 5);
  CHECK(c5.is_regular());
  CHECK(read_edge_list(AALPHA_TEST_DATA "/empty3.txt").size() == 0);
  CHECK_THROWS_AS(read_edge_list(AALPHA_TEST_DATA "/missing.txt"), FileError);
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(131);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(rng, i % 12, 0.4);
    CHECK(parse_edge_list(edge_list_string(g)) == g);
  }
}

TEST_CASE("grid parsing") {
  const auto g = parse_grid("0:1:0.05");
  REQUIRE(g.size() == 21);
  CHECK(g.front().value() == 0.0);
  CHECK(g.back().value() == 1.0);
  CHECK(parse_grid("0:1:0.1").size() == 11);
  CHECK(parse_grid("0.2:0.2:0.1").size() == 1);
  CHECK(parse_grid("0:0.3:0.2").size() == 2);
  CHECK_THROWS_AS(parse_grid("0:1"), ParameterError);
  CHECK_THROWS_AS(parse_grid("0:1:0"), ParameterError);
  CHECK_THROWS_AS(parse_grid("0.5:0.1:0.1"), ParameterError);
  CHECK_THROWS_AS(parse_grid("0:1.5:0.5"), ParameterError);
  CHECK_THROWS_AS(parse_grid("a:1:0.1"), ParameterError);
}

TEST_CASE("lists") {
  const auto a = parse_alpha_list("0, 0.8,1");
  REQUIRE(a.size() == 3);
  CHECK(a[1].value() == 0.8);
  CHECK_THROWS_AS(parse_alpha_list("0,2"), ParameterError);
  CHECK(parse_size_list("3,2,2") == std::vector<std::size_t>{3, 2, 2});
  CHECK_THROWS_AS(parse_size_list("3,-1"), ParameterError);
  CHECK_THROWS_AS(parse_size_list("2.5"), ParameterError);
}

TEST_CASE("formatting") {
  CHECK(format_values({3, 1, 1, 1}) == "3, 1, 1, 1");
  CHECK(format_value(-1e-15) == "0");
  CHECK(format_value(0.5) == "0.5");
  CHECK(format_values({}).empty());
}

TEST_CASE("matrix json is valid and exact") {
  const SymmetricMatrix m = alpha_matrix(build(family::Path{3}), Alpha(0.3));
  const json j = json::parse(matrix_json(m));
  CHECK(j["n"] == 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(j["rows"][r][c].get<double>() == m(r, c));
}

TEST_CASE("json schemas round trip") {
  const Spectrum s = full_spectrum(alpha_matrix(build(family::Cycle{5}), Alpha(0.4)));
  const json js = json::parse(to_json(s).dump());
  CHECK(js["values"].get<std::vector<double>>() == s.values);
  CHECK(js.contains("residual"));

  const json cf = json::parse(to_json(spectrum_complete(4, Alpha(0.5))).dump());
  REQUIRE(cf.size() == 2);
  CHECK(cf[0]["value"] == 3.0);
  CHECK(cf[1]["multiplicity"] == 3);
  CHECK(cf[0]["source"].is_string());

  const BoundReport br = evaluate_all(build(family::Complete{4}), Alpha(0), "k4");
  const json jb = json::parse(to_json(br).dump());
  CHECK(jb["graph"] == "k4");
  CHECK(jb["records"].size() == br.records.size());
  CHECK(jb["violations"].empty());
  for (const json& r : jb["records"]) {
    CHECK(r.contains("name"));
    CHECK(r.contains("side"));
    CHECK(r.contains("holds"));
  }

  const std::vector<Alpha> grid = {Alpha(0), Alpha(0.8), Alpha(1)};
  const TuranReport tr = verify_turan(5, 2, grid);
  const json jt = json::parse(to_json(tr, false).dump());
  REQUIRE(jt.size() == 3);
  CHECK(jt[0]["status"] == "OK");
  CHECK(jt[0]["class"] == "clique_free(3)");
  CHECK(jt[0]["elapsed_ms"] == 0.0);
  CHECK(jt[0]["maximizer_edge_lists"].size() == 1);
  CHECK(jt[0]["maximizer_edge_lists"][0].size() == 6);
  CHECK(jt[1]["maximizer_edge_lists"][0].size() == 4);
  CHECK(jt[2]["status"] == "SKIPPED");
  for (const char* key : {"class", "n", "r", "alpha", "max_radius", "maximizer_edge_lists", "examined", "elapsed_ms"})
    CHECK(jt[0].contains(key));
}

TEST_CASE("sweep csv") {
  const std::vector<Alpha> grid = {Alpha(0), Alpha(0.5), Alpha(1)};
  std::ostringstream out;
  write_sweep_csv(out, alpha_sweep(build(family::Complete{2}), grid));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "alpha,lambda_1,lambda_2");
  const double want[3][3] = {{0, 1, -1}, {0.5, 1, 0}, {1, 1, 1}};
  for (const auto& row : want) {
    REQUIRE(std::getline(in, line));
    std::istringstream cells(line);
    std::string cell;
    for (double w : row) {
      REQUIRE(std::getline(cells, cell, ','));
      CHECK(std::stod(cell) == doctest::Approx(w).epsilon(1e-12));
    }
  }
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("bound table") {
  std::ostringstream out;
  write_bound_table(out, evaluate_all(build(family::Path{3}), Alpha(0.5)));
  const std::string t = out.str();
  CHECK(t.rfind("name", 0) == 0);
  CHECK(t.find("boup") != std::string::npos);
  CHECK(t.find("slack") != std::string::npos);
}

}
