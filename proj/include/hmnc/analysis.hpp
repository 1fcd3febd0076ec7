#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hmnc/metrics.hpp"

namespace hmnc {

// Which class's correct count differs between two compared classifiers.
// The majority class is the larger of P and N; a P = N tie counts the
// positive class as majority.
enum class ChangeProfile { MajorityOnly, MinorityOnly, Both, Neither };

std::string_view change_profile_name(ChangeProfile profile);

/// Pairwise comparison of two classifiers evaluated on the same population.
///
/// `deltas` holds |left - right| scaled by each metric's range width, so a
/// delta of MCC or Kappa (range [-1,1]) counts half of the same gap in a
/// [0,1] metric. That is the scale the published delta rows use and the one
/// on which cross-metric rankings are meaningful; `raw_delta` gives the
/// unscaled difference.
struct ComparisonReport {
    MetricReport left;
    MetricReport right;
    std::array<double, kMetricCount> deltas;
    ChangeProfile change_profile;
    Count p;
    Count n;
    double ir;

    double delta(MetricId id) const { return deltas[metric_index(id)]; }
    double raw_delta(MetricId id) const;
};

// Throws DomainError unless left and right share identical P and N.
ComparisonReport compare(const ConfusionMatrix& left, const ConfusionMatrix& right);

/// Checks the identity of HMNC, ACC, BACC and G-mean, which holds exactly
/// when tp/p = tn/n.
struct IdentityCheck {
    bool holds;  // max pairwise gap among the four measures <= tol
    double max_difference;
    double hmnc_value;
    double acc_value;
    double bacc_value;
    double g_mean_value;
    bool exact_ratio;                    // tp*n == tn*p
    std::optional<double> common_value;  // tn/n, present when exact_ratio
};

IdentityCheck identity_check(const ConfusionMatrix& cm, double tol);

/// Local sensitivity of a measure at (tp, tn), as derivatives with respect
/// to the class-relative fractions tp/p and tn/n.
///
/// For HMNC: d_rec = m*tn^2/((tp+tn)^2*n), d_sel = m*tp^2/((tp+tn)^2*p),
/// ratio = d_sel/d_rec = tp^2*n/(tn^2*p). The ratio is +infinity when
/// tn = 0 (undefined-ratio signal).
struct SensitivityField {
    Count tp;
    Count tn;
    double d_rec;
    double d_sel;
    double ratio;
};

// Requires tp + tn > 0.
SensitivityField hmnc_sensitivity(const ConfusionMatrix& cm);

// Same field for G-mean: d_rec = 0.5*sqrt(sel/rec), d_sel = 0.5*sqrt(rec/sel),
// ratio = rec/sel. Finite only at interior points (tp, tn >= 1); boundary
// values follow the IEEE limits.
SensitivityField g_mean_sensitivity(const ConfusionMatrix& cm);

/// For each report, the metrics of `metric_set` ordered by ascending delta;
/// ties keep MetricId declaration order. front() is the row minimum and
/// back() the row maximum.
std::vector<std::vector<MetricId>> table_row_ranking(std::span<const ComparisonReport> reports,
                                                     std::span<const MetricId> metric_set);

}  // namespace hmnc
