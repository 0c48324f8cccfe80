#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aalpha/bounds.hpp"
#include "aalpha/closed_form.hpp"
#include "aalpha/eigensolver.hpp"
#include "aalpha/extremal.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"

namespace aalpha {

// Edge-list text: "n m", then m lines "u v" (0-based). '#' starts a comment
// that runs to the end of the line. Throws ParseError with a line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
// Throws FileError when the file cannot be opened.
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

// "start:stop:step", endpoints inclusive within 1e-12.
std::vector<Alpha> parse_grid(std::string_view text);
// Comma-separated α values.
std::vector<Alpha> parse_alpha_list(std::string_view text);
// Comma-separated nonnegative integers.
std::vector<std::size_t> parse_size_list(std::string_view text);

// Human formatting: %.12g with |x| < 1e-12 printed as 0.
std::string format_value(double x);
std::string format_values(const std::vector<double>& xs);  // "a, b, c"

// {"n": n, "rows": [[...], ...]} with 17 significant digits.
std::string matrix_json(const SymmetricMatrix& m);

nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const ClosedFormSpectrum& s);
nlohmann::json to_json(const BoundRecord& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json edge_list_json(const Graph& g);
// One object per α: {class, n, r, alpha, max_radius, maximizer_edge_lists,
// examined, elapsed_ms, status, ...}. With include_timing = false,
// elapsed_ms is written as 0 so output is reproducible byte for byte.
nlohmann::json to_json(const TuranReport& r, bool include_timing = true);
nlohmann::json to_json(const ExtremalResult& r, bool include_timing = true);

// "alpha,lambda_1,...,lambda_n" then one row per grid point, %.17g.
void write_sweep_csv(std::ostream& out, const SweepTable& table);

// Human table for a bound report: name/side/bound/value/slack/holds.
void write_bound_table(std::ostream& out, const BoundReport& r);

}  // namespace aalpha
