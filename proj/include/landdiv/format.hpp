#pragma once

#include <string>
#include <vector>

namespace landdiv {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

/// RFC-4180 field quoting (only when the field needs it).
std::string csv_escape(const std::string& field);

/// Join fields into one CSV line (no trailing newline).
std::string csv_line(const std::vector<std::string>& fields);

/// Parse one CSV record; handles quoted fields and embedded quotes.
std::vector<std::string> csv_split(const std::string& line);

/// FNV-1a 64-bit digest of a file's bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

} // namespace landdiv
