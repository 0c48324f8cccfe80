#include "aalpha/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "aalpha/error.hpp"

namespace aalpha {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back({w, number});
  }
  return out;
}

std::size_t to_size(const Token& t, const char* what) {
  std::size_t v = 0;
  const char* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(t.line) + ": expected " + what + ", got '" + t.text + "'");
  }
  return v;
}

double to_double(std::string_view s, const char* what) {
  const std::size_t a = s.find_first_not_of(" \t");
  const std::size_t b = s.find_last_not_of(" \t");
  if (a == std::string_view::npos) throw ParameterError(std::string("empty ") + what);
  s = s.substr(a, b - a + 1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ParameterError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t at = 0;
  while (true) {
    const std::size_t next = s.find(sep, at);
    out.push_back(s.substr(at, next == std::string_view::npos ? std::string_view::npos : next - at));
    if (next == std::string_view::npos) break;
    at = next + 1;
  }
  return out;
}

std::string printf17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  const std::vector<Token> tok = tokenize(in);
  if (tok.size() < 2) throw ParseError("edge list: missing header 'n m'");
  const std::size_t n = to_size(tok[0], "vertex count");
  const std::size_t m = to_size(tok[1], "edge count");
  if (tok.size() != 2 + 2 * m) {
    throw ParseError("line " + std::to_string(tok.back().line) + ": header declares " +
                     std::to_string(m) + " edges but " +
                     std::to_string(tok.size() - 2) + " endpoint tokens follow");
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < m; ++i) {
    const Token& a = tok[2 + 2 * i];
    const Token& b = tok[3 + 2 * i];
    const std::size_t u = to_size(a, "vertex index");
    const std::size_t v = to_size(b, "vertex index");
    const std::string where = "line " + std::to_string(a.line) + ": ";
    if (u >= n || v >= n) throw ParseError(where + "vertex index out of range");
    if (u == v) throw ParseError(where + "self-loop");
    if (!seen.insert(Edge(u, v)).second) throw ParseError(where + "duplicate edge");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

std::vector<Alpha> parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ParameterError("grid must be start:stop:step");
  const double start = to_double(parts[0], "grid start");
  const double stop = to_double(parts[1], "grid stop");
  const double step = to_double(parts[2], "grid step");
  if (!(step > 0)) throw ParameterError("grid step must be positive");
  if (start > stop + 1e-12) throw ParameterError("grid start exceeds stop");
  std::vector<Alpha> out;
  for (std::size_t i = 0;; ++i) {
    double x = start + static_cast<double>(i) * step;
    if (x > stop + 1e-12) break;
    if (std::abs(x - stop) <= 1e-12) x = stop;
    if (x < 0.0 && x > -1e-12) x = 0.0;
    if (x > 1.0 && x < 1.0 + 1e-12) x = 1.0;
    out.emplace_back(x);
    if (x == stop) break;
  }
  return out;
}

std::vector<Alpha> parse_alpha_list(std::string_view text) {
  std::vector<Alpha> out;
  for (std::string_view s : split(text, ',')) out.emplace_back(to_double(s, "alpha"));
  return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (std::string_view s : split(text, ',')) {
    const double v = to_double(s, "integer");
    if (v < 0 || v != std::floor(v) || v > 1e9)
      throw ParameterError("expected a nonnegative integer, got '" + std::string(s) + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string format_value(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_values(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_value(xs[i]);
  }
  return out;
}

std::string matrix_json(const SymmetricMatrix& m) {
  std::string out = "{\"n\": " + std::to_string(m.dimension()) + ", \"rows\": [";
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j) out += ", ";
      out += printf17(m(i, j));
    }
    out += "]";
  }
  return out + "]}";
}

nlohmann::json to_json(const Spectrum& s) {
  return {{"values", s.values}, {"residual", s.residual_norm}};
}

nlohmann::json to_json(const ClosedFormSpectrum& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const Eigenvalue& e : s.values)
    out.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}, {"source", s.source}});
  return out;
}

nlohmann::json to_json(const BoundRecord& r) {
  nlohmann::json j = {{"name", r.name},
                      {"side", to_string(r.side)},
                      {"target", r.target},
                      {"holds", r.holds},
                      {"strict", r.strict},
                      {"informational", r.informational},
                      {"skipped", r.skipped}};
  if (!r.skipped) {
    j["bound"] = r.bound_value;
    j["value"] = r.spectral_value;
    j["slack"] = r.slack;
    j["tolerance"] = r.tolerance;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const BoundRecord& b : r.records) records.push_back(to_json(b));
  nlohmann::json violations = nlohmann::json::array();
  for (const BoundRecord& b : r.violations()) violations.push_back(b.name);
  return {{"graph", r.graph_id}, {"alpha", r.alpha}, {"records", records}, {"violations", violations}};
}

nlohmann::json edge_list_json(const Graph& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

nlohmann::json to_json(const ExtremalResult& r, bool include_timing) {
  nlohmann::json lists = nlohmann::json::array();
  nlohmann::json counts = nlohmann::json::array();
  for (const MaximizerGroup& g : r.maximizers) {
    lists.push_back(edge_list_json(g.graph));
    counts.push_back(g.labeled_count);
  }
  return {{"class", to_string(r.cls)},
          {"n", r.n},
          {"r", r.cls.r},
          {"alpha", r.alpha},
          {"max_radius", r.max_radius},
          {"maximizer_edge_lists", lists},
          {"labeled_copies", counts},
          {"examined", r.examined},
          {"elapsed_ms", include_timing ? r.elapsed_ms : 0.0}};
}

nlohmann::json to_json(const TuranReport& r, bool include_timing) {
  nlohmann::json out = nlohmann::json::array();
  for (const TuranCheck& c : r.checks) {
    nlohmann::json j;
    if (c.expected == Expectation::skipped) {
      j = {{"class", to_string(r.cls)}, {"n", r.n}, {"r", r.r}, {"alpha", c.alpha}};
      j["status"] = "SKIPPED";
    } else {
      j = to_json(c.result, include_timing);
      j["status"] = c.ok ? "OK" : "COUNTEREXAMPLE";
      j["expected_radius"] = c.expected_radius;
    }
    j["expected"] = to_string(c.expected);
    j["message"] = c.message;
    if (!c.counterexamples.empty()) {
      nlohmann::json bad = nlohmann::json::array();
      for (const Graph& g : c.counterexamples) bad.push_back(edge_list_json(g));
      j["counterexample_edge_lists"] = bad;
    }
    out.push_back(j);
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  const std::size_t n = table.spectra.empty() ? 0 : table.spectra.front().size();
  out << "alpha";
  for (std::size_t k = 1; k <= n; ++k) out << ",lambda_" << k;
  out << '\n';
  for (std::size_t i = 0; i < table.alphas.size(); ++i) {
    out << printf17(table.alphas[i]);
    for (double l : table.spectra[i].values) out << ',' << printf17(l);
    out << '\n';
  }
}

void write_bound_table(std::ostream& out, const BoundReport& r) {
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-9s %-14s %-14s %-14s %s\n", "name", "side", "bound",
                "value", "slack", "holds");
  out << line;
  for (const BoundRecord& b : r.records) {
    if (b.skipped) {
      std::snprintf(line, sizeof line, "%-16s %-9s %-14s %-14s %-14s %s\n", b.name.c_str(),
                    to_string(b.side), "-", "-", "-", ("skipped (" + b.note + ")").c_str());
    } else {
      const char* verdict = b.holds ? "yes" : (b.informational ? "no (informational)" : "NO");
      std::snprintf(line, sizeof line, "%-16s %-9s %-14s %-14s %-14s %s\n", b.name.c_str(),
                    to_string(b.side), format_value(b.bound_value).c_str(),
                    format_value(b.spectral_value).c_str(), format_value(b.slack).c_str(), verdict);
    }
    out << line;
  }
}

}  // namespace aalpha
