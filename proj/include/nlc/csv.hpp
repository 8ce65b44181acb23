#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlc/diagnostics.hpp"

namespace nlc {

/// Column names of the diagnostics table, comma separated, no newline.
extern const std::string_view csv_header;

/// One row, values printed with %.17g so they read back bit-exact.
std::string csv_row(const DiagnosticsRecord& r);

/// Appends a row, writing the header first if the file is new or empty.
void append_csv(const std::string& path, const DiagnosticsRecord& r);

/// Reads a table written by append_csv. Throws std::runtime_error on a
/// missing file, a foreign header or a malformed row.
std::vector<DiagnosticsRecord> read_csv(const std::string& path);

}  // namespace nlc
