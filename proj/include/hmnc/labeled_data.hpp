#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hmnc/confusion_matrix.hpp"

namespace hmnc {

/// Raw (actual, predicted) label pairs as read from a prediction file.
/// Labels are arbitrary tokens compared by exact value; the caller declares
/// which token counts as positive (default "1").
struct LabeledPredictions {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string positive_label = "1";
};

/// Tallies the pairs into a confusion matrix.
///
/// The negative label is inferred as the first token that differs from the
/// positive label; a third distinct token is an input error. Both classes
/// must occur among the actual labels.
ConfusionMatrix from_labels(const LabeledPredictions& data);

// Reads the `actual,predicted` CSV format (header line required, one pair
// per data line). Parse errors carry 1-based line numbers.
LabeledPredictions read_predictions_csv(std::istream& in, std::string positive_label = "1");
LabeledPredictions read_predictions_file(const std::string& path, std::string positive_label = "1");

}  // namespace hmnc
