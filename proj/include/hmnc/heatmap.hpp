#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hmnc/metrics.hpp"

namespace hmnc {

/// Metric values over an evenly spaced (tp, tn) lattice for fixed class
/// totals (p, n).
///
/// Axis coordinates are fractional count positions (endpoints 0 and the
/// class total always included), with a fixed 101x101 default resolution
/// regardless of the class totals. Each cell is evaluated on the implied
/// integer-count matrix: tp and tn snap to the nearest count, fp = n - tn,
/// fn = p - tp.
struct HeatmapGrid {
    MetricId metric;
    Count p;
    Count n;
    double ir;
    std::vector<double> tp_axis;               // ascending, [0, p]
    std::vector<double> tn_axis;               // ascending, [0, n]
    std::vector<std::vector<double>> values;   // [tn_index][tp_index]

    friend bool operator==(const HeatmapGrid&, const HeatmapGrid&) = default;
};

HeatmapGrid generate_grid(MetricId metric, Count p, Count n, int tp_steps = 101,
                          int tn_steps = 101);

Count snap_count(double axis_value);

// The integer-count matrix behind one grid cell.
ConfusionMatrix implied_matrix(const HeatmapGrid& grid, std::size_t tp_index,
                               std::size_t tn_index);

/// The locus where the HMNC sensitivity ratio equals 1: tp(tn) = tn*sqrt(p/n),
/// sampled over tn and clipped to the lattice domain. Isolines flip direction
/// across this curve.
struct BoundaryCurve {
    std::vector<std::pair<double, double>> points;  // (tp, tn)
};

BoundaryCurve sensitivity_boundary(Count p, Count n, int samples);

// Long-format serialization: `# key=value` metadata lines (metric, p, n, ir,
// steps), a `tp,tn,value` header, then one row per cell in row-major order.
// Values carry at least 6 significant digits and parse back exactly, so
// read_grid(write_grid(g)) == g.
void write_grid(const HeatmapGrid& grid, std::ostream& out);
std::string grid_to_table(const HeatmapGrid& grid);
HeatmapGrid read_grid(std::istream& in);

// gnuplot script that renders the heat map from an emitted grid file.
std::string gnuplot_script(const std::string& data_path, const HeatmapGrid& grid);

}  // namespace hmnc
