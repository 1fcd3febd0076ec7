#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "hmnc/analysis.hpp"
#include "hmnc/format_util.hpp"
#include "hmnc/heatmap.hpp"
#include "hmnc/repro.hpp"

using namespace hmnc;
using namespace hmnc::reference;
namespace fs = std::filesystem;

namespace {

ConfusionMatrix matrix_of(const ReferenceTable& table, int method) {
    const MethodRow& row = table.methods[static_cast<std::size_t>(method - 1)];
    return ConfusionMatrix(row.tp, row.tn, table.n - row.tn, table.p - row.tp);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("fixture shape") {
    const auto& tables = reference_tables();
    REQUIRE(tables.size() == 3);
    CHECK(tables[0].n == 10);
    CHECK(tables[1].n == 100);
    CHECK(tables[2].n == 250);
    for (const auto& table : tables) {
        CHECK(table.p == 1000);
        CHECK(table.ir == imbalance_ratio(table.p, table.n));
    }
}

TEST_CASE("every printed method cell is reproduced within half a printed digit") {
    for (const auto& table : reference_tables()) {
        for (int method = 1; method <= 4; ++method) {
            const MetricReport report = evaluate_all(matrix_of(table, method));
            const auto& row = table.methods[static_cast<std::size_t>(method - 1)];
            for (std::size_t c = 0; c < kTableMetrics.size(); ++c) {
                const double rounded = detail::round_to(report.value(kTableMetrics[c]), 2);
                CHECK(std::abs(rounded - row.printed[c]) <= kPrintedTolerance + 1e-12);
            }
        }
    }
}

TEST_CASE("every printed delta cell is reproduced, and the one misprint is confirmed") {
    int errata_seen = 0;
    for (const auto& table : reference_tables()) {
        for (const auto& delta_row : table.deltas) {
            const ComparisonReport cmp =
                compare(matrix_of(table, delta_row.left_method),
                        matrix_of(table, delta_row.right_method));
            for (std::size_t c = 0; c < kTableMetrics.size(); ++c) {
                const double rounded = detail::round_to(cmp.delta(kTableMetrics[c]), 2);
                if (static_cast<int>(c) == delta_row.erratum_column) {
                    ++errata_seen;
                    // the recomputed value must match the correction and
                    // visibly contradict the printed cell
                    CHECK(std::abs(rounded - delta_row.corrected_value) <=
                          kPrintedTolerance + 1e-12);
                    CHECK(std::abs(rounded - delta_row.printed[c]) > kPrintedTolerance);
                } else {
                    CHECK(std::abs(rounded - delta_row.printed[c]) <= kPrintedTolerance + 1e-12);
                }
            }
        }
    }
    CHECK(errata_seen == 1);
}

TEST_CASE("repro writes deterministic table and grid files") {
    const fs::path dir = fs::temp_directory_path() / "hmnc_repro_test";
    fs::remove_all(dir);

    ReproOptions options;
    options.out_dir = dir / "run1";
    const ReproResult first = run_repro(options);
    CHECK(first.ok);
    CHECK(first.errata_confirmed == 1);
    CHECK(first.cells_checked > 0);
    CHECK(first.cells_matched == first.cells_checked);
    // 3 tables + summary + 21 grids
    CHECK(first.written.size() == 25);
    CHECK(first.summary.find("result: PASS") != std::string::npos);
    CHECK(first.summary.find("misprint") != std::string::npos);

    options.out_dir = dir / "run2";
    const ReproResult second = run_repro(options);
    REQUIRE(second.written.size() == first.written.size());
    for (std::size_t i = 0; i < first.written.size(); ++i) {
        CHECK(slurp(first.written[i]) == slurp(second.written[i]));
    }

    // the emitted grids parse back to exactly what generate_grid produces
    {
        std::ifstream in(dir / "run1" / "grid_hmnc_ir0.01.csv");
        REQUIRE(in);
        const HeatmapGrid parsed = read_grid(in);
        CHECK(parsed == generate_grid(MetricId::Hmnc, 1000, 10));
    }

    // tables-only mode writes just the tables and the summary
    ReproOptions tables_only;
    tables_only.out_dir = dir / "tables";
    tables_only.figures = false;
    const ReproResult tables = run_repro(tables_only);
    CHECK(tables.written.size() == 4);
    CHECK(tables.ok);

    // higher display precision, same underlying values
    ReproOptions wide;
    wide.out_dir = dir / "wide";
    wide.figures = false;
    wide.decimals = 4;
    run_repro(wide);
    const std::string table1 = slurp(dir / "wide" / "table_ir0.01.csv");
    CHECK(table1.find("0.5014") != std::string::npos);  // method 2 HMNC at 4 decimals

    fs::remove_all(dir);
}

TEST_CASE("table files carry the published layout") {
    const fs::path dir = fs::temp_directory_path() / "hmnc_repro_layout";
    fs::remove_all(dir);
    ReproOptions options;
    options.out_dir = dir;
    options.figures = false;
    run_repro(options);

    const std::string table = slurp(dir / "table_ir0.1.csv");
    CHECK(table.find("method,tp,tn,HMNC,ACC,BACC,MCC,F1,GMEAN,KAPPA") != std::string::npos);
    CHECK(table.find("1,500,50,0.50,0.50,0.50,0.00,0.65,0.50,0.00") != std::string::npos);
    CHECK(table.find("delta,1,2,0.01,0.18,0.10,0.06,0.15,0.09,0.05") != std::string::npos);
    fs::remove_all(dir);
}
