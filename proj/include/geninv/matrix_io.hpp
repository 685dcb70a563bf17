#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "geninv/matrix.hpp"

namespace geninv {

// Matrix file format: a strict JSON document
//   {"rows": m, "cols": n, "data": [[[re, im], ...], ...]}
// with exactly m rows of n entries, every entry a two-element array of finite
// numbers, and no unknown keys. Doubles are written in shortest round-trip
// decimal form, so write -> read is lossless.

ComplexMatrix parse_matrix_json(std::string_view text);
std::string matrix_to_json(const ComplexMatrix& m);

/// Throws ParseError on malformed content, Error on I/O failure.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

} // namespace geninv
