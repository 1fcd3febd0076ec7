#include "hmnc/render.hpp"

#include <iomanip>
#include <ostream>
#include <string>

#include "json.hpp"

#include "hmnc/format_util.hpp"

namespace hmnc {

namespace {

using nlohmann::json;

// Machine-readable outputs carry at least 12 significant digits; with the
// round-trip padding this is also exact.
constexpr int kCsvSignificantDigits = 12;

std::string csv_value(double x) { return detail::decimal(x, kCsvSignificantDigits); }

json counts_json(const ConfusionMatrix& cm) {
    return json{{"tp", cm.tp()}, {"tn", cm.tn()}, {"fp", cm.fp()}, {"fn", cm.fn()}};
}

json totals_json(const ConfusionMatrix& cm) {
    return json{{"p", cm.p()},           {"n", cm.n()},           {"m", cm.m()},
                {"pred_p", cm.pred_p()}, {"pred_n", cm.pred_n()}};
}

json values_json(const MetricReport& report) {
    json values = json::object();
    for (MetricId id : kAllMetrics) {
        values[std::string(metric_key(id))] = report.value(id);
    }
    return values;
}

void report_text(const MetricReport& report, int decimals, std::ostream& out) {
    const ConfusionMatrix& cm = report.matrix;
    out << "counts: tp=" << cm.tp() << " tn=" << cm.tn() << " fp=" << cm.fp()
        << " fn=" << cm.fn() << '\n';
    out << "totals: P=" << cm.p() << " N=" << cm.n() << " M=" << cm.m()
        << " IR=" << detail::fixed(report.ir, decimals) << '\n';
    for (MetricId id : kAllMetrics) {
        out << std::left << std::setw(8) << metric_label(id)
            << detail::fixed(report.value(id), decimals) << '\n';
    }
}

void report_csv(const MetricReport& report, std::ostream& out) {
    out << "metric,value\n";
    for (MetricId id : kAllMetrics) {
        out << metric_key(id) << ',' << csv_value(report.value(id)) << '\n';
    }
    out << "IR," << csv_value(report.ir) << '\n';
}

void report_json(const MetricReport& report, std::ostream& out) {
    json doc;
    doc["counts"] = counts_json(report.matrix);
    doc["totals"] = totals_json(report.matrix);
    doc["ir"] = report.ir;
    doc["metrics"] = values_json(report);
    out << doc.dump(2) << '\n';
}

std::string verdict_line(const ComparisonReport& report) {
    const bool positive_is_majority = report.p >= report.n;
    const std::string majority = positive_is_majority ? "positive" : "negative";
    const std::string minority = positive_is_majority ? "negative" : "positive";
    switch (report.change_profile) {
        case ChangeProfile::MajorityOnly:
            return "change profile: majority-only (the methods differ only on the majority class: " +
                   majority + ")";
        case ChangeProfile::MinorityOnly:
            return "change profile: minority-only (the methods differ only on the minority class: " +
                   minority + ")";
        case ChangeProfile::Both:
            return "change profile: both (the methods differ on both classes)";
        case ChangeProfile::Neither:
            return "change profile: neither (the methods agree on both correct counts)";
    }
    return {};
}

void comparison_text(const ComparisonReport& report, int decimals, std::ostream& out) {
    out << "P=" << report.p << " N=" << report.n << " IR=" << detail::fixed(report.ir, decimals)
        << '\n';
    const int width = std::max(8, decimals + 4);
    out << std::left << std::setw(10) << "method";
    out << std::left << std::setw(14) << "(tp,tn)";
    for (MetricId id : kTableMetrics) {
        out << std::left << std::setw(width) << metric_label(id);
    }
    out << '\n';
    const auto method_row = [&](const char* name, const MetricReport& side) {
        out << std::left << std::setw(10) << name;
        const std::string counts = "(" + std::to_string(side.matrix.tp()) + "," +
                                   std::to_string(side.matrix.tn()) + ")";
        out << std::left << std::setw(14) << counts;
        for (MetricId id : kTableMetrics) {
            out << std::left << std::setw(width) << detail::fixed(side.value(id), decimals);
        }
        out << '\n';
    };
    method_row("left", report.left);
    method_row("right", report.right);
    out << std::left << std::setw(10) << "|delta|" << std::left << std::setw(14) << "";
    for (MetricId id : kTableMetrics) {
        out << std::left << std::setw(width) << detail::fixed(report.delta(id), decimals);
    }
    out << '\n';
    out << verdict_line(report) << '\n';
}

void comparison_csv(const ComparisonReport& report, std::ostream& out) {
    out << "metric,left,right,delta,raw_delta\n";
    for (MetricId id : kAllMetrics) {
        out << metric_key(id) << ',' << csv_value(report.left.value(id)) << ','
            << csv_value(report.right.value(id)) << ',' << csv_value(report.delta(id)) << ','
            << csv_value(report.raw_delta(id)) << '\n';
    }
    out << "# change_profile=" << change_profile_name(report.change_profile) << '\n';
}

void comparison_json(const ComparisonReport& report, std::ostream& out) {
    json doc;
    doc["p"] = report.p;
    doc["n"] = report.n;
    doc["ir"] = report.ir;
    doc["left"] = {{"counts", counts_json(report.left.matrix)},
                   {"metrics", values_json(report.left)}};
    doc["right"] = {{"counts", counts_json(report.right.matrix)},
                    {"metrics", values_json(report.right)}};
    json deltas = json::object();
    json raw = json::object();
    for (MetricId id : kAllMetrics) {
        deltas[std::string(metric_key(id))] = report.delta(id);
        raw[std::string(metric_key(id))] = report.raw_delta(id);
    }
    doc["deltas"] = deltas;
    doc["raw_deltas"] = raw;
    doc["change_profile"] = std::string(change_profile_name(report.change_profile));
    out << doc.dump(2) << '\n';
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

void render_report(const MetricReport& report, OutputFormat format, int decimals,
                   std::ostream& out) {
    switch (format) {
        case OutputFormat::Text: report_text(report, decimals, out); break;
        case OutputFormat::Csv: report_csv(report, out); break;
        case OutputFormat::Json: report_json(report, out); break;
    }
}

void render_comparison(const ComparisonReport& report, OutputFormat format, int decimals,
                       std::ostream& out) {
    switch (format) {
        case OutputFormat::Text: comparison_text(report, decimals, out); break;
        case OutputFormat::Csv: comparison_csv(report, out); break;
        case OutputFormat::Json: comparison_json(report, out); break;
    }
}

}  // namespace hmnc
