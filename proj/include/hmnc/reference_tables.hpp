#pragma once

#include <array>

#include "hmnc/metrics.hpp"

namespace hmnc::reference {

// Published comparison tables for P=1000 and N in {10, 100, 250}: four
// methods per imbalance setting and five pairwise delta rows each, with
// every printed value rounded to 2 decimals. These constants are the single
// source of truth for the golden tests and for the `repro` command.
//
// Delta cells for MCC and Kappa are on the range-normalized scale (the
// absolute difference divided by those metrics' range width of 2); the
// method rows carry the plain metric values.
//
// Erratum: in the IR=0.01 table the G-mean cell of the |M1-M3| delta row
// prints 0.09, which contradicts the same table's own method rows
// (G-mean 0.5 for M1 and 0.7 for M3, so the delta is 0.2). The cell is
// flagged below and verified against the corrected value.

inline constexpr double kPrintedTolerance = 0.005;  // half of the last printed digit

struct MethodRow {
    Count tp;
    Count tn;
    std::array<double, 7> printed;  // kTableMetrics order
};

struct DeltaRow {
    int left_method;   // 1-based method indices
    int right_method;
    std::array<double, 7> printed;
    int erratum_column;      // index into kTableMetrics, -1 when none
    double corrected_value;  // meaningful only when erratum_column >= 0
};

struct ReferenceTable {
    const char* name;  // "ir0.01", "ir0.1", "ir0.25"
    Count p;
    Count n;
    double ir;
    std::array<MethodRow, 4> methods;
    std::array<DeltaRow, 5> deltas;
};

const std::array<ReferenceTable, 3>& reference_tables();

// Metrics with a published heat-map panel, one grid file each per setting.
inline constexpr std::array<MetricId, 7> kFigureMetrics = {
    MetricId::Hmnc, MetricId::Acc,   MetricId::Bacc, MetricId::F1,
    MetricId::GMean, MetricId::Kappa, MetricId::Mcc,
};

}  // namespace hmnc::reference
