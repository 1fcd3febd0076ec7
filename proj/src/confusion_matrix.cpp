#include "hmnc/confusion_matrix.hpp"

#include <string>

namespace hmnc {

ConfusionMatrix::ConfusionMatrix(Count tp, Count tn, Count fp, Count fn)
    : tp_(tp), tn_(tn), fp_(fp), fn_(fn) {
    if (tp < 0 || tn < 0 || fp < 0 || fn < 0) {
        throw DomainError("confusion matrix counts must be non-negative (got tp=" +
                          std::to_string(tp) + " tn=" + std::to_string(tn) + " fp=" +
                          std::to_string(fp) + " fn=" + std::to_string(fn) + ")");
    }
    if (tp + fn < 1) {
        throw DomainError("degenerate class: no actual positives (tp+fn = 0)");
    }
    if (tn + fp < 1) {
        throw DomainError("degenerate class: no actual negatives (tn+fp = 0)");
    }
}

}  // namespace hmnc
