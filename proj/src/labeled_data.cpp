#include "hmnc/labeled_data.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

namespace hmnc {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

ConfusionMatrix from_labels(const LabeledPredictions& data) {
    if (data.pairs.empty()) {
        throw InputError("no prediction pairs to tally");
    }
    const std::string& pos = data.positive_label;
    std::string neg;
    bool have_neg = false;

    auto is_positive = [&](const std::string& label, std::size_t index) {
        if (label == pos) {
            return true;
        }
        if (!have_neg) {
            neg = label;
            have_neg = true;
        }
        if (label != neg) {
            throw InputError("unknown label '" + label + "' at pair " +
                             std::to_string(index + 1) + " (expected '" + pos + "' or '" +
                             neg + "')");
        }
        return false;
    };

    Count tp = 0;
    Count tn = 0;
    Count fp = 0;
    Count fn = 0;
    for (std::size_t i = 0; i < data.pairs.size(); ++i) {
        const bool actual_pos = is_positive(data.pairs[i].first, i);
        const bool predicted_pos = is_positive(data.pairs[i].second, i);
        if (actual_pos) {
            predicted_pos ? ++tp : ++fn;
        } else {
            predicted_pos ? ++fp : ++tn;
        }
    }
    // Degenerate tallies trip the matrix constructor's class checks.
    return ConfusionMatrix(tp, tn, fp, fn);
}

LabeledPredictions read_predictions_csv(std::istream& in, std::string positive_label) {
    LabeledPredictions data;
    data.positive_label = std::move(positive_label);

    std::string line;
    long line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const auto comma = stripped.find(',');
        if (comma == std::string::npos || stripped.find(',', comma + 1) != std::string::npos) {
            throw InputError("line " + std::to_string(line_no) +
                             ": expected two comma-separated fields, got '" + stripped + "'");
        }
        std::string first = trim(std::string_view(stripped).substr(0, comma));
        std::string second = trim(std::string_view(stripped).substr(comma + 1));
        if (!saw_header) {
            if (first != "actual" || second != "predicted") {
                throw InputError("line " + std::to_string(line_no) +
                                 ": expected header 'actual,predicted'");
            }
            saw_header = true;
            continue;
        }
        if (first.empty() || second.empty()) {
            throw InputError("line " + std::to_string(line_no) + ": empty label field");
        }
        data.pairs.emplace_back(std::move(first), std::move(second));
    }
    if (!saw_header) {
        throw InputError("empty prediction file (missing 'actual,predicted' header)");
    }
    if (data.pairs.empty()) {
        throw InputError("prediction file has a header but no data rows");
    }
    return data;
}

LabeledPredictions read_predictions_file(const std::string& path, std::string positive_label) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open prediction file '" + path + "'");
    }
    try {
        return read_predictions_csv(in, std::move(positive_label));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace hmnc
