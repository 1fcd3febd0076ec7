#include "hmnc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hmnc {

std::string_view change_profile_name(ChangeProfile profile) {
    switch (profile) {
        case ChangeProfile::MajorityOnly: return "majority-only";
        case ChangeProfile::MinorityOnly: return "minority-only";
        case ChangeProfile::Both: return "both";
        case ChangeProfile::Neither: return "neither";
    }
    return "?";
}

double ComparisonReport::raw_delta(MetricId id) const {
    return std::abs(left.value(id) - right.value(id));
}

ComparisonReport compare(const ConfusionMatrix& left, const ConfusionMatrix& right) {
    if (left.p() != right.p() || left.n() != right.n()) {
        throw DomainError("mismatched populations: compared classifiers must share P and N (got P=" +
                          std::to_string(left.p()) + "/" + std::to_string(right.p()) + ", N=" +
                          std::to_string(left.n()) + "/" + std::to_string(right.n()) + ")");
    }

    ComparisonReport report{evaluate_all(left), evaluate_all(right), {},
                            ChangeProfile::Neither, left.p(), left.n(),
                            imbalance_ratio(left.p(), left.n())};
    for (MetricId id : kAllMetrics) {
        report.deltas[metric_index(id)] =
            std::abs(report.left.value(id) - report.right.value(id)) / metric_range_width(id);
    }

    const bool positive_differs = left.tp() != right.tp();
    const bool negative_differs = left.tn() != right.tn();
    const bool positive_is_majority = left.p() >= left.n();
    if (positive_differs && negative_differs) {
        report.change_profile = ChangeProfile::Both;
    } else if (positive_differs) {
        report.change_profile = positive_is_majority ? ChangeProfile::MajorityOnly
                                                     : ChangeProfile::MinorityOnly;
    } else if (negative_differs) {
        report.change_profile = positive_is_majority ? ChangeProfile::MinorityOnly
                                                     : ChangeProfile::MajorityOnly;
    }
    return report;
}

IdentityCheck identity_check(const ConfusionMatrix& cm, double tol) {
    IdentityCheck check{};
    check.hmnc_value = hmnc(cm);
    check.acc_value = accuracy(cm);
    check.bacc_value = balanced_accuracy(cm);
    check.g_mean_value = g_mean(cm);

    const double values[] = {check.hmnc_value, check.acc_value, check.bacc_value,
                             check.g_mean_value};
    double max_diff = 0.0;
    for (double a : values) {
        for (double b : values) {
            max_diff = std::max(max_diff, std::abs(a - b));
        }
    }
    check.max_difference = max_diff;
    check.holds = max_diff <= tol;
    check.exact_ratio = cm.tp() * cm.n() == cm.tn() * cm.p();
    if (check.exact_ratio) {
        check.common_value = selectivity(cm);
    }
    return check;
}

SensitivityField hmnc_sensitivity(const ConfusionMatrix& cm) {
    if (cm.tp() + cm.tn() == 0) {
        throw DomainError("HMNC sensitivity is undefined at tp+tn = 0");
    }
    const double tp = static_cast<double>(cm.tp());
    const double tn = static_cast<double>(cm.tn());
    const double p = static_cast<double>(cm.p());
    const double n = static_cast<double>(cm.n());
    const double m = static_cast<double>(cm.m());
    const double s = tp + tn;
    const double d_rec = m * tn * tn / (s * s * n);
    const double d_sel = m * tp * tp / (s * s * p);
    // tn = 0 yields +inf: the undefined-ratio signal.
    const double ratio = (tp * tp * n) / (tn * tn * p);
    return SensitivityField{cm.tp(), cm.tn(), d_rec, d_sel, ratio};
}

SensitivityField g_mean_sensitivity(const ConfusionMatrix& cm) {
    if (cm.tp() + cm.tn() == 0) {
        throw DomainError("G-mean sensitivity is undefined at tp+tn = 0");
    }
    const double rec = recall(cm);
    const double sel = selectivity(cm);
    return SensitivityField{cm.tp(), cm.tn(), 0.5 * std::sqrt(sel / rec),
                            0.5 * std::sqrt(rec / sel), rec / sel};
}

std::vector<std::vector<MetricId>> table_row_ranking(std::span<const ComparisonReport> reports,
                                                     std::span<const MetricId> metric_set) {
    if (reports.empty()) {
        throw DomainError("table_row_ranking needs at least one comparison report");
    }
    if (metric_set.empty()) {
        throw DomainError("table_row_ranking needs at least one metric");
    }
    std::vector<std::vector<MetricId>> rankings;
    rankings.reserve(reports.size());
    for (const ComparisonReport& report : reports) {
        std::vector<MetricId> row(metric_set.begin(), metric_set.end());
        std::stable_sort(row.begin(), row.end(), [&](MetricId a, MetricId b) {
            const double da = report.delta(a);
            const double db = report.delta(b);
            if (da != db) {
                return da < db;
            }
            return metric_index(a) < metric_index(b);
        });
        rankings.push_back(std::move(row));
    }
    return rankings;
}

}  // namespace hmnc
