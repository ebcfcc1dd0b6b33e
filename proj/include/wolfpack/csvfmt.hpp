#pragma once

#include <string>
#include <vector>

namespace wolfpack {

// Shortest round-trip decimal form (std::to_chars); deterministic, so files
// built from the same numbers are byte-identical.
std::string fmt_double(double value);

// Split one CSV line on commas (no quoting; the project's formats never emit
// embedded commas).
std::vector<std::string> split_csv_line(const std::string& line);

bool parse_double(const std::string& text, double& out);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace wolfpack
