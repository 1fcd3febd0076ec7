#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hmnc/reference_tables.hpp"

namespace hmnc {

struct ReproOptions {
    std::filesystem::path out_dir = ".";
    int decimals = 2;    // display rounding in the table files
    bool tables = true;
    bool figures = true;
};

struct ReproResult {
    std::vector<std::filesystem::path> written;
    int cells_checked = 0;   // printed reference cells recomputed
    int cells_matched = 0;   // within kPrintedTolerance after rounding
    int errata_confirmed = 0;
    bool ok = false;         // every non-erratum cell matched, every erratum confirmed
    std::string summary;     // contents of the summary file
};

/// Regenerates the reference comparison tables (three imbalance settings)
/// and/or the heat-map grid files (7 metrics x 3 settings), writes them under
/// out_dir, and verifies every recomputed table cell against the printed
/// reference value. Output is deterministic: repeated runs produce
/// byte-identical files.
ReproResult run_repro(const ReproOptions& options);

}  // namespace hmnc
