#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wedgecert/vecmat.hpp"

namespace wedgecert {

// One row per line, whitespace-separated rational tokens ("p/q" or "p");
// a line whose first nonblank character is '#' is a comment.  Dimensions
// are inferred.  Serialization round-trips exactly.
RationalMatrix read_matrix(std::istream& in);
RationalMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const RationalMatrix& m);
std::string matrix_str(const RationalMatrix& m);

// One pair "m n" per line, same comment rule.
std::vector<std::pair<int, int>> read_pairs(std::istream& in);
std::vector<std::pair<int, int>> read_pairs_file(const std::string& path);

} // namespace wedgecert
