#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "hmnc/confusion_matrix.hpp"
#include "hmnc/labeled_data.hpp"
#include "test_util.hpp"

using hmnc::ConfusionMatrix;
using hmnc::Count;
using hmnc::LabeledPredictions;

TEST_CASE("construction and derived totals") {
    const ConfusionMatrix cm(500, 5, 5, 500);
    CHECK(cm.p() == 1000);
    CHECK(cm.n() == 10);
    CHECK(cm.m() == 1010);
    CHECK(cm.pred_p() == 505);
    CHECK(cm.pred_n() == 505);

    const ConfusionMatrix minimal(1, 1, 0, 0);
    CHECK(minimal.p() == 1);
    CHECK(minimal.n() == 1);
    CHECK(minimal.m() == 2);
}

TEST_CASE("degenerate classes and negative counts are rejected") {
    CHECK_THROWS_AS(ConfusionMatrix(0, 5, 5, 0), hmnc::DomainError);   // P = 0
    CHECK_THROWS_AS(ConfusionMatrix(5, 0, 0, 5), hmnc::DomainError);   // N = 0
    CHECK_THROWS_AS(ConfusionMatrix(-1, 5, 5, 5), hmnc::DomainError);
    CHECK_THROWS_AS(ConfusionMatrix(5, 5, 5, -2), hmnc::DomainError);
}

TEST_CASE("count identities hold for random matrices") {
    std::mt19937_64 rng(7001);
    for (int i = 0; i < 2000; ++i) {
        const ConfusionMatrix cm = test_util::random_matrix(rng);
        CHECK(cm.tp() + cm.fn() + cm.tn() + cm.fp() == cm.m());
        CHECK(cm.pred_p() + cm.pred_n() == cm.m());
        CHECK(cm.p() + cm.n() == cm.m());
    }
}

TEST_CASE("from_labels tallies hand-countable sequences") {
    LabeledPredictions data;
    data.positive_label = "+";
    data.pairs = {{"+", "+"}, {"+", "-"}, {"-", "-"}};
    const ConfusionMatrix cm = hmnc::from_labels(data);
    CHECK(cm == ConfusionMatrix(1, 1, 0, 1));

    LabeledPredictions bulk;
    bulk.positive_label = "1";
    for (int i = 0; i < 40; ++i) {
        bulk.pairs.emplace_back("1", "1");
    }
    bulk.pairs.emplace_back("0", "0");
    const ConfusionMatrix tallied = hmnc::from_labels(bulk);
    CHECK(tallied == ConfusionMatrix(40, 1, 0, 0));
}

TEST_CASE("from_labels matches an independent tally on random data") {
    std::mt19937_64 rng(7002);
    std::uniform_int_distribution<int> coin(0, 1);
    LabeledPredictions data;
    data.positive_label = "yes";
    Count tp = 0, tn = 0, fp = 0, fn = 0;
    for (int i = 0; i < 1000; ++i) {
        const bool actual = coin(rng) == 1;
        const bool predicted = coin(rng) == 1;
        data.pairs.emplace_back(actual ? "yes" : "no", predicted ? "yes" : "no");
        if (actual && predicted) ++tp;
        if (actual && !predicted) ++fn;
        if (!actual && predicted) ++fp;
        if (!actual && !predicted) ++tn;
    }
    CHECK(hmnc::from_labels(data) == ConfusionMatrix(tp, tn, fp, fn));
}

TEST_CASE("from_labels is permutation invariant") {
    std::mt19937_64 rng(7003);
    std::uniform_int_distribution<int> coin(0, 1);
    LabeledPredictions data;
    for (int i = 0; i < 500; ++i) {
        data.pairs.emplace_back(coin(rng) ? "1" : "0", coin(rng) ? "1" : "0");
    }
    const ConfusionMatrix before = hmnc::from_labels(data);
    std::shuffle(data.pairs.begin(), data.pairs.end(), rng);
    CHECK(hmnc::from_labels(data) == before);
}

// Exhaustive oracle equivalence over every (actual, predicted) sequence of
// length <= 8: each pair is one of four outcomes, encoded in two bits.
TEST_CASE("from_labels equals direct tallying, exhaustively") {
    for (int length = 1; length <= 8; ++length) {
        const unsigned long combos = 1UL << (2 * length);
        for (unsigned long code = 0; code < combos; ++code) {
            LabeledPredictions data;
            Count tp = 0, tn = 0, fp = 0, fn = 0;
            for (int k = 0; k < length; ++k) {
                const bool actual = (code >> (2 * k)) & 1U;
                const bool predicted = (code >> (2 * k + 1)) & 1U;
                data.pairs.emplace_back(actual ? "1" : "0", predicted ? "1" : "0");
                if (actual && predicted) ++tp;
                if (actual && !predicted) ++fn;
                if (!actual && predicted) ++fp;
                if (!actual && !predicted) ++tn;
            }
            if (tp + fn == 0 || tn + fp == 0) {
                CHECK_THROWS_AS(hmnc::from_labels(data), hmnc::DomainError);
            } else {
                CHECK(hmnc::from_labels(data) == ConfusionMatrix(tp, tn, fp, fn));
            }
        }
    }
}

TEST_CASE("from_labels input errors") {
    CHECK_THROWS_AS(hmnc::from_labels(LabeledPredictions{}), hmnc::InputError);

    LabeledPredictions three_tokens;
    three_tokens.pairs = {{"1", "0"}, {"0", "maybe"}};
    CHECK_THROWS_AS(hmnc::from_labels(three_tokens), hmnc::InputError);

    LabeledPredictions all_positive;
    all_positive.pairs = {{"1", "1"}, {"1", "1"}};
    CHECK_THROWS_AS(hmnc::from_labels(all_positive), hmnc::DomainError);
}
