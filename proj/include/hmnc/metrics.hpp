#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "hmnc/confusion_matrix.hpp"

namespace hmnc {

enum class MetricId { Rec, Prc, Sel, Acc, Bacc, F1, GMean, Mcc, Kappa, Hmnc };

inline constexpr std::size_t kMetricCount = 10;

inline constexpr std::array<MetricId, kMetricCount> kAllMetrics = {
    MetricId::Rec,  MetricId::Prc, MetricId::Sel,   MetricId::Acc,   MetricId::Bacc,
    MetricId::F1,   MetricId::GMean, MetricId::Mcc,  MetricId::Kappa, MetricId::Hmnc,
};

// Column order used by the comparison tables and their delta rows.
inline constexpr std::array<MetricId, 7> kTableMetrics = {
    MetricId::Hmnc, MetricId::Acc,   MetricId::Bacc, MetricId::Mcc,
    MetricId::F1,   MetricId::GMean, MetricId::Kappa,
};

constexpr std::size_t metric_index(MetricId id) { return static_cast<std::size_t>(id); }

std::string_view metric_key(MetricId id);    // stable token: "REC", "GMEAN", ...
std::string_view metric_label(MetricId id);  // display form: "G-mean", "Kappa", ...

// Case-insensitive; accepts keys, labels, "g-mean"/"g_mean", and "auc"
// (alias of BACC: the two are equal for hard classifier outputs).
std::optional<MetricId> parse_metric(std::string_view name);

// MCC and Kappa span [-1, 1]; everything else spans [0, 1].
double metric_lower_bound(MetricId id);
constexpr double metric_upper_bound(MetricId) { return 1.0; }
double metric_range_width(MetricId id);

double recall(const ConfusionMatrix& cm);
double precision(const ConfusionMatrix& cm);  // 0 when nothing is predicted positive
double selectivity(const ConfusionMatrix& cm);
double accuracy(const ConfusionMatrix& cm);
double balanced_accuracy(const ConfusionMatrix& cm);
double f1_score(const ConfusionMatrix& cm);
double g_mean(const ConfusionMatrix& cm);
double mcc(const ConfusionMatrix& cm);  // 0 when a predicted class is empty
double kappa(const ConfusionMatrix& cm);

/// HM(a,b) = 2ab/(a+b); 0 when a+b = 0. Requires a, b >= 0.
double harmonic_mean(double a, double b);

/// Harmonic mean of recall and selectivity normalized in the class labels:
/// tp*tn*m / ((tp+tn)*p*n), and 0 when tp+tn = 0. Symmetric under swapping
/// the class roles, i.e. hmnc(tp,tn,fp,fn) = hmnc(tn,tp,fn,fp).
double hmnc(const ConfusionMatrix& cm);

/// min(p,n)/max(p,n), in (0, 1]. 1 means balanced classes.
double imbalance_ratio(Count p, Count n);

// For hard (thresholded) outputs AUC coincides with balanced accuracy, so it
// is exposed only as this alias; there is no ROC construction here.
inline double auc(const ConfusionMatrix& cm) { return balanced_accuracy(cm); }

double metric_value(MetricId id, const ConfusionMatrix& cm);

/// One-shot evaluation of every metric plus the imbalance ratio.
struct MetricReport {
    ConfusionMatrix matrix;
    std::array<double, kMetricCount> values;
    double ir;

    double value(MetricId id) const { return values[metric_index(id)]; }
};

MetricReport evaluate_all(const ConfusionMatrix& cm);

}  // namespace hmnc
