#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lgrass/contraction.hpp"
#include "lgrass/linalg.hpp"

namespace lgrass {

/// SMS sparse interchange format: a "nrows ncols M" header, one 1-based
/// "i j 1" line per nonzero in row-major order, and a "0 0 0" terminator.
std::string to_sms(const BinaryMatrix& m);
BinaryMatrix read_sms(std::istream& in);

/// Dense comma-separated 0/1 rows.
std::string to_csv(const BinaryMatrix& m);

/// {"nrows": R, "ncols": C, "entries": [[i, j], ...]} with 1-based entries.
std::string to_json(const BinaryMatrix& m);

/// Sparse Plucker vector file: optional leading "char <c>" line declaring
/// the field (default characteristic 0), then one "b_1 ... b_n value" line
/// per coordinate. '#' starts a comment. Parse errors carry line numbers.
PluckerVector read_plucker(std::istream& in, int n);

/// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace lgrass
