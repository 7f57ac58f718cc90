#pragma once

#include <string>

#include "ennomp/core.hpp"

namespace ennomp {

// ENN1 binary matrix format:
//   bytes 0..3   magic "ENN1"
//   bytes 4..7   rows, unsigned 32-bit little-endian
//   bytes 8..11  cols, unsigned 32-bit little-endian
//   then rows*cols IEEE-754 binary64 values, little-endian, column-major.
void write_enn1(const std::string& path, const Matrix& m);
Matrix read_enn1(const std::string& path);

// Text form: one matrix row per line, comma-separated, no header.
// Values are printed with enough digits to round-trip exactly.
// Lines starting with '#' are skipped on read.
void write_matrix_csv(const std::string& path, const Matrix& m);
Matrix read_matrix_csv(const std::string& path);

// Dispatch on extension: ".csv" uses the text form, anything else ENN1.
Matrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const Matrix& m);

// Reads a file as a vector: accepts an r-by-1 or 1-by-c matrix.
Vector read_vector(const std::string& path);

// The learned distortion bound lives next to its embedding as
// "<embedding path>.delta", a single decimal number.
void write_delta_sidecar(const std::string& embed_path, double delta);
double read_delta_sidecar(const std::string& embed_path);

}  // namespace ennomp
