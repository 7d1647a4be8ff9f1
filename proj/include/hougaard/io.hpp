#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hougaard/levy_paths.hpp"

namespace hougaard::io {

using MetaLines = std::vector<std::pair<std::string, std::string>>;

/// Formats a double with enough digits to round-trip (shortest %.17g form).
std::string format_double(double x);

/// Writes '#'-prefixed metadata lines, a header row, then comma-separated
/// rows with '.' decimals.
void write_csv(std::ostream& os, const MetaLines& meta, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Ensemble as CSV: one row per path, one column per grid time.
void write_ensemble_csv(std::ostream& os, const PathEnsemble& ens, const MetaLines& extra_meta);

/// Ensemble in the columnar binary layout: 16-byte magic "HOUGAARD-PATHS"
/// padded with NULs, a version byte (1), 7 reserved bytes, then n_paths and
/// n_times as little-endian u64, the grid times, and the values
/// column-major (all little-endian IEEE f64).
void write_ensemble_binary(std::ostream& os, const PathEnsemble& ens);

}  // namespace hougaard::io
