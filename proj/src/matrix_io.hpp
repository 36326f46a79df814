#pragma once

// Matrix ingestion and formatting. Two input formats:
//  - dense whitespace/comma-delimited text, one row per line, entries as
//    integers, fractions "p/q", decimals, or scientific notation;
//  - Matrix Market (array or coordinate; real or integer; general or
//    symmetric).
// All token forms parse to exact rationals; numeric mode is chosen by the
// caller (exact stays exact, float converts).

#include <string>
#include <variant>

#include "matrix.hpp"

namespace ginv {

enum class NumericMode { Auto, Exact, Float };

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<double>>;

// Largest dimension for which Auto mode picks exact arithmetic.
inline constexpr int kExactAutoLimit = 12;

Matrix<Rational> parse_matrix_exact(const std::string& text);
AnyMatrix parse_matrix(const std::string& text, NumericMode mode);

std::string format_matrix(const Matrix<Rational>& m);
std::string format_matrix(const Matrix<double>& m);

std::string read_file(const std::string& path);

// FNV-1a 64-bit of the raw bytes, as fixed-width hex.
std::string content_digest(const std::string& bytes);

} // namespace ginv
