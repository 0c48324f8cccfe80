#include <doctest.h>

#include <cmath>
#include <random>

#include "aalpha/bounds.hpp"
#include "aalpha/error.hpp"
#include "oracles.hpp"

using namespace aalpha;

namespace {

const BoundRecord& get(const BoundReport& r, const std::string& name) {
  const BoundRecord* p = r.find(name);
  REQUIRE(p != nullptr);
  return *p;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("record tolerance and slack sign") {
  const BoundRecord up = make_record("x", Side::upper_on, "lambda_1", 2.0, 2.0 + 1e-10);
  CHECK(up.holds);
  CHECK(up.slack < 0);
  CHECK(up.tolerance == doctest::Approx(2e-9));
  CHECK_FALSE(make_record("x", Side::upper_on, "lambda_1", 2.0, 2.1).holds);
  const BoundRecord lo = make_record("x", Side::lower_on, "lambda_1", 2.0, 3.0);
  CHECK(lo.holds);
  CHECK(lo.slack == 1.0);
  CHECK_FALSE(make_record("x", Side::lower_on, "lambda_1", 2.0, 1.9).holds);
  CHECK(make_record("x", Side::identity, "trace", 1.0, 1.0 + 5e-10).holds);
  CHECK_FALSE(make_record("x", Side::identity, "trace", 1.0, 1.0 - 5e-9).holds);
}

TEST_CASE("radius bound examples") {
  const BoundReport star = evaluate_all(build(family::Star{5}), Alpha(0));
  CHECK(get(star, "lovasz").bound_value == doctest::Approx(2.0));
  CHECK(std::abs(get(star, "lovasz").slack) <= 1e-9);

  for (double a : {0.0, 0.3, 0.8, 1.0}) {
    const BoundReport c = evaluate_all(build(family::Cycle{7}), Alpha(a));
    CHECK(std::abs(get(c, "boup").slack) <= 1e-9);
    CHECK(std::abs(get(c, "merris_upper").slack) <= 1e-9);
    CHECK(std::abs(get(c, "merris_lower").slack) <= 1e-9);
  }

  // K_{1,4} at 0.8: λ_1 = (4 + √6.4)/2 < αΔ + 1 - α = 3.4.
  const BoundReport s8 = evaluate_all(build(family::Star{5}), Alpha(0.8));
  CHECK(get(s8, "corlo").holds);
  CHECK_FALSE(get(s8, "corlo_literal").holds);
  CHECK(get(s8, "corlo_literal").informational);
  CHECK(s8.violations().empty());
  for (std::size_t n = 2; n <= 20; ++n)
    CHECK(std::abs(get(evaluate_all(build(family::Star{n}), Alpha(0.5)), "corlo").slack) <= 1e-9);

  const BoundReport p3 = evaluate_all(build(family::Path{3}), Alpha(0));
  const BoundRecord& d2 = get(p3, "degree[2]");
  CHECK(d2.bound_value == 1.0);
  CHECK(std::abs(d2.spectral_value) <= 1e-12);
  CHECK(d2.holds);
}

TEST_CASE("lambda_min examples") {
  const BoundReport k4 = evaluate_all(build(family::Complete{4}), Alpha(0));
  CHECK(get(k4, "maxcut").bound_value == doctest::Approx(-1.0));
  CHECK(std::abs(get(k4, "maxcut").slack) <= 1e-9);
  // The printed form fails on K_4 for α < 1 and is never counted.
  CHECK_FALSE(get(k4, "maxcut_literal").holds);
  CHECK(get(k4, "maxcut_literal").informational);
  CHECK(k4.violations().empty());

  for (std::size_t n = 2; n <= 8; ++n) {
    const double a = 1.0 / static_cast<double>(n) + 0.01;
    const BoundReport r = evaluate_all(build(family::Complete{n}), Alpha(a));
    CHECK_FALSE(get(r, "hoffman").strict);
    CHECK(get(r, "das").strict);
  }

  const BoundReport e = evaluate_all(edgeless(4), Alpha(0.5));
  CHECK(get(e, "das").bound_value == 0.0);
  CHECK(std::abs(get(e, "das").slack) <= 1e-12);
  CHECK(get(e, "hoffman").skipped);
  CHECK(get(e, "lovasz").skipped);
  CHECK(get(e, "merris_upper").skipped);
  CHECK(e.violations().empty());
}

TEST_CASE("global identity examples") {
  const BoundReport p3 = evaluate_all(build(family::Path{3}), Alpha(0.3));
  CHECK(get(p3, "trace").bound_value == doctest::Approx(1.2));
  CHECK(get(p3, "trace_sq").bound_value == doctest::Approx(2.5));
  CHECK(get(p3, "trace").holds);
  CHECK(get(p3, "trace_sq").holds);

  const Graph k3[] = {build(family::Complete{3}), build(family::Complete{3})};
  const BoundReport two = evaluate_all(disjoint_union(k3), Alpha(0.2));
  CHECK(get(two, "lambda2").bound_value == 2.0);
  CHECK(std::abs(get(two, "lambda2").slack) <= 1e-9);
  CHECK(get(two, "diameter").skipped);

  const BoundReport p4 = evaluate_all(build(family::Path{4}), Alpha(0));
  CHECK(get(p4, "diameter").bound_value == 4.0);
  CHECK(get(p4, "diameter").spectral_value == 4.0);
}

TEST_CASE("dimension mismatch") {
  const Spectrum s = full_spectrum(alpha_matrix(build(family::Path{3}), Alpha(0)));
  CHECK_THROWS_AS(radius_bounds(build(family::Path{4}), Alpha(0), s), DimensionError);
}

TEST_CASE("no violations on random graphs") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 150; ++i) {
    const Graph g = i % 3 ? oracle::random_connected(rng, 2 + i % 11, 0.3) : oracle::random_graph(rng, 1 + i % 11, 0.4);
    for (int k = 0; k <= 10; ++k) {
      const BoundReport r = evaluate_all(g, Alpha(0.1 * k));
      for (const BoundRecord& v : r.violations()) FAIL_CHECK(v.name << " at alpha " << r.alpha);
    }
  }
}

TEST_CASE("strict inequalities have a margin on connected graphs") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_connected(rng, 2 + i % 11, 0.35);
    for (int k = 0; k < 10; ++k) {
      const BoundReport r = evaluate_all(g, Alpha(0.1 * k));
      CHECK(get(r, "das").slack > 1e-12);
      const BoundRecord* h = r.find("hoffman");
      if (h && !h->skipped && h->strict) CHECK(r.find("das")->spectral_value < -1e-12);
    }
  }
}

TEST_CASE("boup is tight exactly on graphs with a max-regular component") {
  const std::vector<Graph> tight = {build(family::Cycle{6}), build(family::Complete{5}),
                                    build(family::CompleteBipartite{3, 3}),
                                    disjoint_union(std::vector<Graph>{build(family::Complete{4}), build(family::Path{3})})};
  const std::vector<Graph> loose = {build(family::Path{5}), build(family::Star{6}),
                                    build(family::CompleteBipartite{2, 4}), build(family::Split{6, 2})};
  for (double a : {0.1, 0.4, 0.7, 0.9}) {
    for (const Graph& g : tight) CHECK(std::abs(get(evaluate_all(g, Alpha(a)), "boup").slack) <= 1e-9);
    for (const Graph& g : loose) CHECK(get(evaluate_all(g, Alpha(a)), "boup").slack > 1e-9);
  }
}

TEST_CASE("Merris bounds") {
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (std::size_t n = 3; n <= 10; ++n) {
      const BoundReport r = evaluate_all(build(family::Cycle{n}), Alpha(a));
      CHECK(std::abs(get(r, "merris_upper").slack) <= 1e-9);
    }
  }
  const BoundReport star = evaluate_all(build(family::Star{6}), Alpha(0.7));
  CHECK(get(star, "merris_upper").slack > 1e-6);
}

TEST_CASE("bipartite graphs have a symmetric adjacency spectrum") {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 30; ++i) {
    const std::size_t a = 1 + i % 5, b = 1 + (i / 5) % 5;
    const Graph g = build(family::CompleteBipartite{a, b});
    const Spectrum s = full_spectrum(alpha_matrix(g, Alpha(0)));
    CHECK(std::abs(s.smallest() + s.largest()) <= 1e-9);
    CHECK(lambda_min_bounds(g, Alpha(0), s).front().holds);
  }
}

TEST_CASE("rotation") {
  // P_4 = 0-1-2-3; rotate {2,3} to {2,0} giving a triangle with a pendant.
  const Graph p4 = build(family::Path{4});
  CHECK(rotation_test(p4, Alpha(0.3), 2, 3, 0));
  CHECK(full_spectrum(alpha_matrix(rotate_edge(p4, 2, 3, 0), Alpha(0.3))).largest() >
        full_spectrum(alpha_matrix(p4, Alpha(0.3))).largest());
  // Moving an edge from the center of a star to a leaf always lowers the quadratic form.
  CHECK_FALSE(rotation_test(build(family::Star{5}), Alpha(0.3), 1, 0, 2));
  CHECK_THROWS_AS(rotation_test(build(family::Star{5}), Alpha(0.3), 0, 1, 2), ParameterError);
  CHECK_THROWS_AS(rotation_test(p4, Alpha(1), 2, 3, 0), ParameterError);
  const Graph two[] = {build(family::Path{2}), build(family::Path{2})};
  CHECK_THROWS_AS(rotation_test(disjoint_union(two), Alpha(0.3), 0, 1, 2), ParameterError);

  std::mt19937_64 rng(113);
  int held = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_connected(rng, 4 + i % 7, 0.25);
    const auto edges = g.edges();
    const Edge e = edges[i % edges.size()];
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == e.u || g.adjacent(e.u, w)) continue;
      if (rotation_test(g, Alpha(0.05 * (i % 20)), e.u, e.v, w)) ++held;
      break;
    }
  }
  CHECK(held > 0);
}

}
