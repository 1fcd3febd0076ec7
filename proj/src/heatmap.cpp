#include "hmnc/heatmap.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hmnc/format_util.hpp"

namespace hmnc {

namespace {

std::vector<double> make_axis(Count total, int steps) {
    std::vector<double> axis(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        axis[static_cast<std::size_t>(i)] =
            static_cast<double>(total) * i / static_cast<double>(steps - 1);
    }
    return axis;
}

}  // namespace

Count snap_count(double axis_value) { return std::llround(axis_value); }

HeatmapGrid generate_grid(MetricId metric, Count p, Count n, int tp_steps, int tn_steps) {
    if (p < 1 || n < 1) {
        throw DomainError("heat map grid requires both class totals >= 1");
    }
    if (tp_steps < 2 || tn_steps < 2) {
        throw DomainError("heat map grid requires at least 2 steps per axis");
    }
    HeatmapGrid grid{metric, p, n, imbalance_ratio(p, n),
                     make_axis(p, tp_steps), make_axis(n, tn_steps), {}};
    grid.values.resize(grid.tn_axis.size());
    // Rows are independent; evaluation order never affects the result.
    for (std::size_t j = 0; j < grid.tn_axis.size(); ++j) {
        auto& row = grid.values[j];
        row.resize(grid.tp_axis.size());
        const Count tn = snap_count(grid.tn_axis[j]);
        for (std::size_t i = 0; i < grid.tp_axis.size(); ++i) {
            const Count tp = snap_count(grid.tp_axis[i]);
            row[i] = metric_value(metric, ConfusionMatrix(tp, tn, n - tn, p - tp));
        }
    }
    return grid;
}

ConfusionMatrix implied_matrix(const HeatmapGrid& grid, std::size_t tp_index,
                               std::size_t tn_index) {
    const Count tp = snap_count(grid.tp_axis.at(tp_index));
    const Count tn = snap_count(grid.tn_axis.at(tn_index));
    return ConfusionMatrix(tp, tn, grid.n - tn, grid.p - tp);
}

BoundaryCurve sensitivity_boundary(Count p, Count n, int samples) {
    if (p < 1 || n < 1) {
        throw DomainError("sensitivity boundary requires both class totals >= 1");
    }
    if (samples < 2) {
        throw DomainError("sensitivity boundary requires at least 2 samples");
    }
    const double slope = std::sqrt(static_cast<double>(p) / static_cast<double>(n));
    // tp(tn) <= p constrains tn to [0, sqrt(p*n)]; for p >= n that is all of [0, n].
    const double tn_max =
        std::min(static_cast<double>(n), std::sqrt(static_cast<double>(p) * static_cast<double>(n)));
    BoundaryCurve curve;
    curve.points.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double tn = tn_max * k / static_cast<double>(samples - 1);
        curve.points.emplace_back(tn * slope, tn);
    }
    return curve;
}

void write_grid(const HeatmapGrid& grid, std::ostream& out) {
    out << "# metric=" << metric_key(grid.metric) << '\n';
    out << "# p=" << grid.p << '\n';
    out << "# n=" << grid.n << '\n';
    out << "# ir=" << detail::shortest(grid.ir) << '\n';
    out << "# tp_steps=" << grid.tp_axis.size() << '\n';
    out << "# tn_steps=" << grid.tn_axis.size() << '\n';
    out << "tp,tn,value\n";
    for (std::size_t j = 0; j < grid.tn_axis.size(); ++j) {
        for (std::size_t i = 0; i < grid.tp_axis.size(); ++i) {
            out << detail::shortest(grid.tp_axis[i]) << ',' << detail::shortest(grid.tn_axis[j])
                << ',' << detail::decimal(grid.values[j][i], 6) << '\n';
        }
    }
}

std::string grid_to_table(const HeatmapGrid& grid) {
    std::ostringstream out;
    write_grid(grid, out);
    return out.str();
}

HeatmapGrid read_grid(std::istream& in) {
    HeatmapGrid grid{};
    std::string metric_name;
    std::size_t tp_steps = 0;
    std::size_t tn_steps = 0;
    bool have_ir = false;

    std::string line;
    long line_no = 0;
    bool saw_header = false;
    std::size_t row_index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            std::string key = line.substr(1, eq - 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            const std::string value = line.substr(eq + 1);
            if (key == "metric") {
                metric_name = value;
            } else if (key == "p") {
                grid.p = std::stoll(value);
            } else if (key == "n") {
                grid.n = std::stoll(value);
            } else if (key == "ir") {
                grid.ir = detail::parse_double(value);
                have_ir = true;
            } else if (key == "tp_steps") {
                tp_steps = static_cast<std::size_t>(std::stoull(value));
            } else if (key == "tn_steps") {
                tn_steps = static_cast<std::size_t>(std::stoull(value));
            }
            continue;
        }
        if (!saw_header) {
            if (line != "tp,tn,value") {
                throw InputError("grid file line " + std::to_string(line_no) +
                                 ": expected header 'tp,tn,value'");
            }
            const auto parsed = parse_metric(metric_name);
            if (!parsed) {
                throw InputError("grid file: missing or unknown '# metric=' line");
            }
            grid.metric = *parsed;
            if (tp_steps < 2 || tn_steps < 2 || grid.p < 1 || grid.n < 1) {
                throw InputError("grid file: incomplete '#' metadata (p, n, steps)");
            }
            if (!have_ir) {
                grid.ir = imbalance_ratio(grid.p, grid.n);
            }
            grid.tp_axis.resize(tp_steps);
            grid.tn_axis.resize(tn_steps);
            grid.values.assign(tn_steps, std::vector<double>(tp_steps));
            saw_header = true;
            continue;
        }

        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
            throw InputError("grid file line " + std::to_string(line_no) +
                             ": expected 'tp,tn,value'");
        }
        if (row_index >= tp_steps * tn_steps) {
            throw InputError("grid file: more data rows than tp_steps*tn_steps");
        }
        const double tp = detail::parse_double(line.substr(0, c1));
        const double tn = detail::parse_double(line.substr(c1 + 1, c2 - c1 - 1));
        const double value = detail::parse_double(line.substr(c2 + 1));
        const std::size_t i = row_index % tp_steps;
        const std::size_t j = row_index / tp_steps;
        if (j == 0) {
            grid.tp_axis[i] = tp;
        } else if (grid.tp_axis[i] != tp) {
            throw InputError("grid file line " + std::to_string(line_no) +
                             ": tp coordinate breaks the row-major lattice");
        }
        if (i == 0) {
            grid.tn_axis[j] = tn;
        } else if (grid.tn_axis[j] != tn) {
            throw InputError("grid file line " + std::to_string(line_no) +
                             ": tn coordinate breaks the row-major lattice");
        }
        grid.values[j][i] = value;
        ++row_index;
    }
    if (!saw_header) {
        throw InputError("empty grid file");
    }
    if (row_index != tp_steps * tn_steps) {
        throw InputError("grid file: expected " + std::to_string(tp_steps * tn_steps) +
                         " data rows, got " + std::to_string(row_index));
    }
    return grid;
}

std::string gnuplot_script(const std::string& data_path, const HeatmapGrid& grid) {
    std::ostringstream out;
    const std::string key(metric_key(grid.metric));
    out << "# renders the " << key << " heat map from " << data_path << '\n';
    out << "set datafile separator comma\n";
    out << "set datafile commentschars '#'\n";
    out << "set view map\n";
    out << "set xlabel 'TP'\n";
    out << "set ylabel 'TN'\n";
    out << "set xrange [0:" << grid.p << "]\n";
    out << "set yrange [0:" << grid.n << "]\n";
    out << "set title '" << key << " (P=" << grid.p << ", N=" << grid.n
        << ", IR=" << detail::shortest(grid.ir) << ")'\n";
    out << "set terminal pngcairo size 800,600\n";
    out << "set output '" << key << "_heatmap.png'\n";
    out << "plot '" << data_path << "' skip 1 using 1:2:3 with image notitle\n";
    return out.str();
}

}  // namespace hmnc
