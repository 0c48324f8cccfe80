// aalpha: command-line front end.
//
// Exit codes: 0 ok, 2 bound violation or counterexample, 64 usage error,
// 65 capacity exceeded or malformed input data, 66 input file not found,
// 70 internal failure (solver or consistency error).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aalpha/bounds.hpp"
#include "aalpha/closed_form.hpp"
#include "aalpha/combinatorics.hpp"
#include "aalpha/eigensolver.hpp"
#include "aalpha/enumerate.hpp"
#include "aalpha/error.hpp"
#include "aalpha/extremal.hpp"
#include "aalpha/io.hpp"
#include "aalpha/parallel.hpp"

namespace {

constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

using namespace aalpha;

struct Options {
  std::string graph;
  double alpha = 0.0;
  bool json = false;
  bool matrix = false;
  std::string grid = "0:1:0.05";
  std::string csv;
  std::string family;
  std::string params;
  std::size_t n = 0;
  std::size_t r = 2;
  std::string alphas;
  std::string cls = "clique-free";
  bool no_timing = false;
  bool serial = false;
  double tol = kDefaultPsdTol;
  std::size_t clique_free = 0;
  bool count_only = false;
};

std::string describe(const MaximizerGroup& g) {
  std::string degrees;
  for (std::size_t d : g.degrees) degrees += (degrees.empty() ? "" : ",") + std::to_string(d);
  std::string edges;
  for (const Edge& e : g.graph.edges())
    edges += (edges.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return "degrees " + degrees + " (" + std::to_string(g.labeled_count) + " labeled) edges " + edges;
}

int cmd_spectrum(const Options& o) {
  const Graph g = read_edge_list(o.graph);
  const Alpha a(o.alpha);
  const SymmetricMatrix m = alpha_matrix(g, a);
  if (o.matrix) {
    std::cout << matrix_json(m) << '\n';
    return 0;
  }
  const Spectrum s = full_spectrum(m);
  if (o.json) std::cout << to_json(s).dump() << '\n';
  else std::cout << format_values(s.values) << '\n';
  return 0;
}

int cmd_bounds(const Options& o) {
  const Graph g = read_edge_list(o.graph);
  const BoundReport r = evaluate_all(g, Alpha(o.alpha), o.graph);
  if (o.json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else {
    write_bound_table(std::cout, r);
    std::cout << r.violations().size() << " violation(s)\n";
  }
  return r.violations().empty() ? 0 : kExitViolation;
}

int cmd_sweep(const Options& o) {
  const Graph g = read_edge_list(o.graph);
  const std::vector<Alpha> grid = parse_grid(o.grid);
  const SweepTable t = alpha_sweep(g, grid, o.serial ? Execution::serial : Execution::parallel);
  if (o.csv.empty() || o.csv == "-") {
    write_sweep_csv(std::cout, t);
    return 0;
  }
  std::ofstream out(o.csv);
  if (!out) throw FileError("cannot write '" + o.csv + "'");
  write_sweep_csv(out, t);
  return 0;
}

int cmd_closed_form(const Options& o) {
  const std::vector<std::size_t> p = parse_size_list(o.params);
  const Alpha a(o.alpha);
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw ParameterError("--family " + o.family + " takes " + std::to_string(k) + " parameter(s)");
  };
  ClosedFormSpectrum s;
  if (o.family == "complete") {
    need(1);
    s = spectrum_complete(p[0], a);
  } else if (o.family == "bipartite") {
    need(2);
    s = spectrum_complete_bipartite(p[0], p[1], a);
  } else if (o.family == "star") {
    need(1);
    s = spectrum_star(p[0], a);
  } else {
    s = spectrum_complete_multipartite(p, a);
  }
  if (o.json) std::cout << to_json(s).dump() << '\n';
  else std::cout << format_values(s.expanded()) << '\n';
  return 0;
}

int cmd_verify_turan(const Options& o) {
  const std::vector<Alpha> grid = parse_alpha_list(o.alphas);
  const ClassKind kind = o.cls == "chromatic" ? ClassKind::r_chromatic : ClassKind::clique_free;
  const TuranReport rep =
      verify_turan(o.n, o.r, grid, kind, o.serial ? Execution::serial : Execution::parallel);
  if (o.json) {
    std::cout << to_json(rep, !o.no_timing).dump(2) << '\n';
  } else {
    std::cout << "class " << to_string(rep.cls) << ", n=" << rep.n << ", r=" << rep.r << '\n';
    for (const TuranCheck& c : rep.checks) {
      std::cout << "alpha=" << format_value(c.alpha) << "  expected " << to_string(c.expected);
      if (c.expected == Expectation::skipped) {
        std::cout << "  SKIPPED  " << c.message << '\n';
        continue;
      }
      std::cout << "  " << (c.ok ? "OK" : "COUNTEREXAMPLE")
                << "  max_radius=" << format_value(c.result.max_radius)
                << "  examined=" << c.result.examined << "  " << c.message << '\n';
      for (const MaximizerGroup& g : c.result.maximizers)
        std::cout << "  maximizer: " << describe(g) << '\n';
      for (const Graph& g : c.counterexamples) {
        std::cout << "  counterexample radius="
                  << format_value(full_spectrum(alpha_matrix(g, Alpha(c.alpha))).largest())
                  << " vs expected " << format_value(c.expected_radius) << '\n';
        write_edge_list(std::cout, g);
      }
    }
    std::cout << "status " << (rep.ok() ? "OK" : "COUNTEREXAMPLE") << '\n';
  }
  return rep.ok() ? 0 : kExitViolation;
}

int cmd_psd(const Options& o) {
  const Graph g = read_edge_list(o.graph);
  const double t = psd_threshold(g, o.tol);
  if (o.json) std::cout << nlohmann::json{{"psd_threshold", t}}.dump() << '\n';
  else std::cout << format_value(t) << '\n';
  return 0;
}

int cmd_enumerate(const Options& o) {
  std::optional<GraphFilter> filter;
  if (o.clique_free) {
    if (o.clique_free < 2) throw ParameterError("--clique-free must be >= 2");
    const std::size_t k = o.clique_free;
    filter = [k](const Graph& g) { return is_clique_free(g, k); };
  }
  GraphStream stream(o.n, filter);
  std::uint64_t count = 0;
  bool first = true;
  while (auto g = stream.next()) {
    ++count;
    if (o.count_only) continue;
    if (!first) std::cout << '\n';
    first = false;
    write_edge_list(std::cout, *g);
  }
  if (o.count_only) std::cout << count << '\n';
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"A_alpha = alpha*D + (1-alpha)*A spectra, bounds and extremal checks", "aalpha"};
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "Sorted spectrum of A_alpha(G)");
  spectrum->add_option("--graph", o.graph, "Edge-list file")->required();
  spectrum->add_option("--alpha", o.alpha, "alpha in [0,1]")->required();
  spectrum->add_flag("--json", o.json, "JSON output");
  spectrum->add_flag("--matrix", o.matrix, "Print the matrix as JSON instead");

  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound; exit 2 on a violation");
  bounds->add_option("--graph", o.graph, "Edge-list file")->required();
  bounds->add_option("--alpha", o.alpha, "alpha in [0,1]")->required();
  bounds->add_flag("--json", o.json, "JSON output");

  auto* sweep = app.add_subcommand("sweep", "Spectrum over an alpha grid as CSV");
  sweep->add_option("--graph", o.graph, "Edge-list file")->required();
  sweep->add_option("--grid", o.grid, "start:stop:step (inclusive)")->capture_default_str();
  sweep->add_option("--csv", o.csv, "Output file (default stdout)");
  sweep->add_flag("--serial", o.serial, "Use the serial path");

  auto* closed = app.add_subcommand("closed-form", "Closed-form spectrum of a structured graph");
  closed->add_option("--family", o.family, "complete | bipartite | star | multipartite")
      ->required()
      ->check(CLI::IsMember({"complete", "bipartite", "star", "multipartite"}));
  closed->add_option("--params", o.params, "Comma-separated sizes")->required();
  closed->add_option("--alpha", o.alpha, "alpha in [0,1]")->required();
  closed->add_flag("--json", o.json, "JSON output");

  auto* turan = app.add_subcommand("verify-turan", "Exhaustive spectral Turan check; exit 2 on counterexample");
  turan->add_option("--n", o.n, "Order (<= 7)")->required();
  turan->add_option("--r", o.r, "r (K_{r+1}-free / r-chromatic)")->required();
  turan->add_option("--alphas", o.alphas, "Comma-separated alpha values")->required();
  turan->add_option("--class", o.cls, "clique-free | chromatic")
      ->check(CLI::IsMember({"clique-free", "chromatic"}))
      ->capture_default_str();
  turan->add_flag("--json", o.json, "JSON output");
  turan->add_flag("--no-timing", o.no_timing, "Write elapsed_ms as 0");
  turan->add_flag("--serial", o.serial, "Use the serial path");

  auto* psd = app.add_subcommand("psd-threshold", "Smallest alpha with A_alpha(G) PSD");
  psd->add_option("--graph", o.graph, "Edge-list file")->required();
  psd->add_option("--tol", o.tol, "Bisection tolerance")->capture_default_str();
  psd->add_flag("--json", o.json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "Stream every labeled graph on n vertices");
  enumerate->add_option("--n", o.n, "Order (<= 8)")->required();
  enumerate->add_option("--clique-free", o.clique_free, "Keep only K_R-free graphs (3 = triangle-free)");
  enumerate->add_flag("--count", o.count_only, "Print only the number of graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  configure_threads_from_env();
  if (spectrum->parsed()) return cmd_spectrum(o);
  if (bounds->parsed()) return cmd_bounds(o);
  if (sweep->parsed()) return cmd_sweep(o);
  if (closed->parsed()) return cmd_closed_form(o);
  if (turan->parsed()) return cmd_verify_turan(o);
  if (psd->parsed()) return cmd_psd(o);
  return cmd_enumerate(o);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const FileError& e) {
    std::cerr << "aalpha: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const CapacityError& e) {
    std::cerr << "aalpha: " << e.what() << '\n';
    return kExitData;
  } catch (const aalpha::ParseError& e) {
    std::cerr << "aalpha: " << e.what() << '\n';
    return kExitData;
  } catch (const ParameterError& e) {
    std::cerr << "aalpha: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "aalpha: " << e.what() << '\n';
    return kExitSoftware;
  }
}
