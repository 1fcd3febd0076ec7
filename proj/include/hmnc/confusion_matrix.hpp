#pragma once

#include <cstdint>

#include "hmnc/errors.hpp"

namespace hmnc {

using Count = std::int64_t;

/// 2x2 outcome table of a hard binary classifier.
///
/// Counts are exact integers; metric code converts to floating point only
/// when a rate is actually computed. Every derived rate divides by a class
/// total, so both classes must be non-empty (p() >= 1 and n() >= 1) and
/// degenerate tables are rejected at construction.
class ConfusionMatrix {
public:
    ConfusionMatrix(Count tp, Count tn, Count fp, Count fn);

    Count tp() const { return tp_; }
    Count tn() const { return tn_; }
    Count fp() const { return fp_; }
    Count fn() const { return fn_; }

    Count p() const { return tp_ + fn_; }       // actual positives
    Count n() const { return tn_ + fp_; }       // actual negatives
    Count m() const { return p() + n(); }       // test set size
    Count pred_p() const { return tp_ + fp_; }  // predicted positives
    Count pred_n() const { return tn_ + fn_; }  // predicted negatives

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

private:
    Count tp_;
    Count tn_;
    Count fp_;
    Count fn_;
};

}  // namespace hmnc
