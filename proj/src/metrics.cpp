#include "hmnc/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <string>

namespace hmnc {

namespace {

double as_double(Count c) { return static_cast<double>(c); }

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::string_view metric_key(MetricId id) {
    switch (id) {
        case MetricId::Rec: return "REC";
        case MetricId::Prc: return "PRC";
        case MetricId::Sel: return "SEL";
        case MetricId::Acc: return "ACC";
        case MetricId::Bacc: return "BACC";
        case MetricId::F1: return "F1";
        case MetricId::GMean: return "GMEAN";
        case MetricId::Mcc: return "MCC";
        case MetricId::Kappa: return "KAPPA";
        case MetricId::Hmnc: return "HMNC";
    }
    return "?";
}

std::string_view metric_label(MetricId id) {
    switch (id) {
        case MetricId::GMean: return "G-mean";
        case MetricId::Kappa: return "Kappa";
        default: return metric_key(id);
    }
}

std::optional<MetricId> parse_metric(std::string_view name) {
    const std::string t = lower(name);
    for (MetricId id : kAllMetrics) {
        if (t == lower(metric_key(id)) || t == lower(metric_label(id))) {
            return id;
        }
    }
    if (t == "g-mean" || t == "g_mean" || t == "gm") {
        return MetricId::GMean;
    }
    if (t == "auc") {
        return MetricId::Bacc;
    }
    return std::nullopt;
}

double metric_lower_bound(MetricId id) {
    return (id == MetricId::Mcc || id == MetricId::Kappa) ? -1.0 : 0.0;
}

double metric_range_width(MetricId id) {
    return metric_upper_bound(id) - metric_lower_bound(id);
}

double recall(const ConfusionMatrix& cm) {
    return as_double(cm.tp()) / as_double(cm.p());
}

double precision(const ConfusionMatrix& cm) {
    if (cm.pred_p() == 0) {
        return 0.0;
    }
    return as_double(cm.tp()) / as_double(cm.pred_p());
}

double selectivity(const ConfusionMatrix& cm) {
    return as_double(cm.tn()) / as_double(cm.n());
}

double accuracy(const ConfusionMatrix& cm) {
    return as_double(cm.tp() + cm.tn()) / as_double(cm.m());
}

double balanced_accuracy(const ConfusionMatrix& cm) {
    return 0.5 * (recall(cm) + selectivity(cm));
}

double f1_score(const ConfusionMatrix& cm) {
    const double prc = precision(cm);
    const double rec = recall(cm);
    if (prc + rec == 0.0) {
        return 0.0;
    }
    return 2.0 * prc * rec / (prc + rec);
}

double g_mean(const ConfusionMatrix& cm) {
    return std::sqrt(recall(cm) * selectivity(cm));
}

double mcc(const ConfusionMatrix& cm) {
    if (cm.pred_p() == 0 || cm.pred_n() == 0) {
        return 0.0;
    }
    const double num = as_double(cm.tp()) * as_double(cm.tn()) -
                       as_double(cm.fp()) * as_double(cm.fn());
    const double den = std::sqrt(as_double(cm.pred_p()) * as_double(cm.p()) *
                                 as_double(cm.n()) * as_double(cm.pred_n()));
    return num / den;
}

double kappa(const ConfusionMatrix& cm) {
    const double m = as_double(cm.m());
    const double chance = (as_double(cm.p()) * as_double(cm.pred_p()) +
                           as_double(cm.n()) * as_double(cm.pred_n())) /
                          (m * m);
    // chance < 1 whenever both classes are non-empty, so no branch is needed.
    assert(1.0 - chance > 0.0);
    return (accuracy(cm) - chance) / (1.0 - chance);
}

double harmonic_mean(double a, double b) {
    assert(a >= 0.0 && b >= 0.0);
    if (a + b == 0.0) {
        return 0.0;
    }
    return 2.0 * a * b / (a + b);
}

double hmnc(const ConfusionMatrix& cm) {
    if (cm.tp() + cm.tn() == 0) {
        return 0.0;
    }
    // Grouped so the expression is bit-for-bit symmetric under a class swap.
    const double num = (as_double(cm.tp()) * as_double(cm.tn())) * as_double(cm.m());
    const double den = as_double(cm.tp() + cm.tn()) * (as_double(cm.p()) * as_double(cm.n()));
    return num / den;
}

double imbalance_ratio(Count p, Count n) {
    if (p < 1 || n < 1) {
        throw DomainError("imbalance ratio requires both class totals >= 1 (got p=" +
                          std::to_string(p) + " n=" + std::to_string(n) + ")");
    }
    return as_double(std::min(p, n)) / as_double(std::max(p, n));
}

double metric_value(MetricId id, const ConfusionMatrix& cm) {
    switch (id) {
        case MetricId::Rec: return recall(cm);
        case MetricId::Prc: return precision(cm);
        case MetricId::Sel: return selectivity(cm);
        case MetricId::Acc: return accuracy(cm);
        case MetricId::Bacc: return balanced_accuracy(cm);
        case MetricId::F1: return f1_score(cm);
        case MetricId::GMean: return g_mean(cm);
        case MetricId::Mcc: return mcc(cm);
        case MetricId::Kappa: return kappa(cm);
        case MetricId::Hmnc: return hmnc(cm);
    }
    throw DomainError("unknown metric id");
}

MetricReport evaluate_all(const ConfusionMatrix& cm) {
    MetricReport report{cm, {}, imbalance_ratio(cm.p(), cm.n())};
    for (MetricId id : kAllMetrics) {
        report.values[metric_index(id)] = metric_value(id, cm);
    }
    return report;
}

}  // namespace hmnc
