#pragma once

#include <istream>
#include <map>
#include <string>

#include "equispec/matrix.hpp"
#include "equispec/partition.hpp"

namespace equispec {

/// Shortest decimal that round-trips, capped at 12 significant digits; -0 prints as 0.
std::string format_number(double x);
std::string format_complex(Complex z);

/// One row per line, whitespace-separated; blank and '#' lines ignored.
/// Throws ParseError (with line number) on bad tokens, ragged rows or a non-square shape.
Matrix parse_matrix(std::istream& in);
Matrix parse_matrix_string(const std::string& text);
std::string format_matrix(const Matrix& m);

/// One cell per line, 1-based indices. `n` of 0 infers the order from the largest index.
Partition parse_partition(std::istream& in, std::size_t n = 0);
Partition parse_partition_string(const std::string& text, std::size_t n = 0);
/// One cell per line.
std::string format_partition(const Partition& p);

/// "k=v,k=v" (commas or whitespace). Throws InvalidParams.
std::map<std::string, double> parse_params(const std::string& text);

}  // namespace equispec
