#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sdg/polynomial.hpp"
#include "sdg/sidigraph.hpp"

namespace sdg {

/// Text format:
///
///     # optional comments
///     sidigraph 4
///     1 2 +
///     2 1 -
///
/// Vertices are 1-based in the file. Blank lines and '#' comments are
/// ignored; LF and CRLF line ends are both accepted.
Sidigraph parse_sidigraph(std::string_view text);

/// Canonical rendering (arcs by tail, then head). `comment` lines, if any,
/// are written first with a "# " prefix.
std::string format_sidigraph(const Sidigraph& s, std::string_view comment = {});

Sidigraph read_sidigraph_file(const std::filesystem::path& path);
void write_sidigraph_file(const std::filesystem::path& path, const Sidigraph& s, std::string_view comment = {});

/// Leading-first integer list, e.g. "1 0 -3 2 0" for z^4 - 3z^2 + 2z. Commas
/// are accepted as separators. Throws ParseError.
IntPolynomial parse_polynomial(std::string_view text);

/// Inverse of parse_polynomial.
std::string format_polynomial_list(const IntPolynomial& p);

}  // namespace sdg
