#pragma once

#include <iosfwd>
#include <string>

#include "tropcomm/matrix.hpp"

namespace tropcomm {

// Text format: first line "rows cols", then one whitespace-separated row per line.
// Tokens: integers, decimals, fractions p/q, or "-inf".
TropMatrix read_matrix(std::istream& in, const std::string& name);
TropMatrix read_matrix_file(const std::string& path);
TropMatrix parse_matrix(const std::string& text, const std::string& name = "matrix");

void write_matrix(std::ostream& out, const TropMatrix& m);
std::string format_matrix(const TropMatrix& m);

} // namespace tropcomm
