#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "hmnc/format_util.hpp"
#include "hmnc/labeled_data.hpp"
#include "hmnc/render.hpp"

using namespace hmnc;
namespace fs = std::filesystem;

namespace {

LabeledPredictions parse(const std::string& text, const std::string& positive = "1") {
    std::istringstream in(text);
    return read_predictions_csv(in, positive);
}

}  // namespace

TEST_CASE("prediction csv parsing") {
    const LabeledPredictions data = parse("actual,predicted\n1,1\n1,0\n0,0\n");
    REQUIRE(data.pairs.size() == 3);
    CHECK(data.pairs[0] == std::pair<std::string, std::string>("1", "1"));
    CHECK(from_labels(data) == ConfusionMatrix(1, 1, 0, 1));

    // whitespace and blank lines are tolerated
    const LabeledPredictions spaced = parse("actual, predicted\r\n 1 , 1 \n\n0,1\n");
    REQUIRE(spaced.pairs.size() == 2);
    CHECK(spaced.pairs[1] == std::pair<std::string, std::string>("0", "1"));

    const LabeledPredictions custom = parse("actual,predicted\ncat,cat\ndog,cat\n", "cat");
    CHECK(from_labels(custom) == ConfusionMatrix(1, 0, 1, 0));
}

TEST_CASE("prediction csv errors carry line numbers") {
    CHECK_THROWS_AS(parse(""), InputError);
    CHECK_THROWS_AS(parse("actual,predicted\n"), InputError);  // header only
    CHECK_THROWS_AS(parse("a,b\n1,1\n"), InputError);          // wrong header

    try {
        parse("actual,predicted\n1,1\n1,0,9\n");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    try {
        parse("actual,predicted\n1,\n");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("reading predictions from disk") {
    const fs::path dir = fs::temp_directory_path() / "hmnc_io_test";
    fs::create_directories(dir);
    const fs::path path = dir / "preds.csv";
    {
        std::ofstream out(path);
        out << "actual,predicted\n";
        // tally of (700, 70, 30, 300) shrunk by a factor of ten
        for (int i = 0; i < 70; ++i) out << "1,1\n";
        for (int i = 0; i < 30; ++i) out << "1,0\n";
        for (int i = 0; i < 7; ++i) out << "0,0\n";
        for (int i = 0; i < 3; ++i) out << "0,1\n";
    }
    CHECK(from_labels(read_predictions_file(path.string())) == ConfusionMatrix(70, 7, 3, 30));
    CHECK_THROWS_AS(read_predictions_file((dir / "missing.csv").string()), InputError);
    fs::remove_all(dir);
}

TEST_CASE("ingestion matches a brute-force tally on random files") {
    const fs::path dir = fs::temp_directory_path() / "hmnc_io_random";
    fs::create_directories(dir);
    std::mt19937_64 rng(401);
    for (int file = 0; file < 10; ++file) {
        const int rows = std::uniform_int_distribution<int>(10, 2000)(rng);
        Count tp = 0, tn = 0, fp = 0, fn = 0;
        const fs::path path = dir / ("r" + std::to_string(file) + ".csv");
        {
            std::ofstream out(path);
            out << "actual,predicted\n";
            for (int i = 0; i < rows; ++i) {
                // force both classes into the first two rows
                const bool actual = i == 0 ? true
                                  : i == 1 ? false
                                           : std::bernoulli_distribution(0.8)(rng);
                const bool predicted = std::bernoulli_distribution(0.7)(rng);
                out << (actual ? "pos" : "neg") << ',' << (predicted ? "pos" : "neg") << '\n';
                if (actual && predicted) ++tp;
                if (actual && !predicted) ++fn;
                if (!actual && predicted) ++fp;
                if (!actual && !predicted) ++tn;
            }
        }
        CHECK(from_labels(read_predictions_file(path.string(), "pos")) ==
              ConfusionMatrix(tp, tn, fp, fn));
    }
    fs::remove_all(dir);
}

TEST_CASE("csv report output parses back to the exact values") {
    const MetricReport report = evaluate_all(ConfusionMatrix(700, 70, 30, 300));
    std::ostringstream out;
    render_report(report, OutputFormat::Csv, 2, out);

    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "metric,value");
    int matched = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        const std::string key = line.substr(0, comma);
        const double value = detail::parse_double(line.substr(comma + 1));
        if (key == "IR") {
            CHECK(value == report.ir);
            continue;
        }
        const auto id = parse_metric(key);
        REQUIRE(id.has_value());
        CHECK(value == report.value(*id));
        ++matched;
    }
    CHECK(matched == static_cast<int>(kAllMetrics.size()));
}

TEST_CASE("json report output parses back to the exact values") {
    const MetricReport report = evaluate_all(ConfusionMatrix(700, 7, 3, 300));
    std::ostringstream out;
    render_report(report, OutputFormat::Json, 2, out);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["counts"]["tp"] == 700);
    CHECK(doc["totals"]["m"] == 1010);
    CHECK(doc["ir"].get<double>() == report.ir);
    for (MetricId id : kAllMetrics) {
        CHECK(doc["metrics"][std::string(metric_key(id))].get<double>() == report.value(id));
    }
}

TEST_CASE("text report rounds for display") {
    const MetricReport report = evaluate_all(ConfusionMatrix(500, 5, 5, 500));
    std::ostringstream out;
    render_report(report, OutputFormat::Text, 2, out);
    const std::string text = out.str();
    CHECK(text.find("HMNC    0.50") != std::string::npos);
    CHECK(text.find("ACC     0.50") != std::string::npos);
    CHECK(text.find("MCC     0.00") != std::string::npos);
    CHECK(text.find("IR=0.01") != std::string::npos);
}

TEST_CASE("comparison rendering") {
    const ComparisonReport report =
        compare(ConfusionMatrix(700, 125, 125, 300), ConfusionMatrix(700, 175, 75, 300));

    std::ostringstream text;
    render_comparison(report, OutputFormat::Text, 2, text);
    CHECK(text.str().find("minority-only") != std::string::npos);
    CHECK(text.str().find("|delta|") != std::string::npos);

    std::ostringstream json_out;
    render_comparison(report, OutputFormat::Json, 2, json_out);
    const auto doc = nlohmann::json::parse(json_out.str());
    CHECK(doc["change_profile"] == "minority-only");
    for (MetricId id : kAllMetrics) {
        CHECK(doc["deltas"][std::string(metric_key(id))].get<double>() == report.delta(id));
        CHECK(doc["raw_deltas"][std::string(metric_key(id))].get<double>() ==
              report.raw_delta(id));
    }

    std::ostringstream csv;
    render_comparison(report, OutputFormat::Csv, 2, csv);
    CHECK(csv.str().find("metric,left,right,delta,raw_delta") != std::string::npos);
    CHECK(csv.str().find("# change_profile=minority-only") != std::string::npos);
}

TEST_CASE("display rounding is half away from zero") {
    CHECK(detail::round_to(0.125, 2) == 0.13);
    CHECK(detail::round_to(0.698, 1) == 0.7);
    CHECK(detail::fixed(0.698019, 2) == "0.70");
    CHECK(detail::fixed(0.5, 2) == "0.50");
    CHECK(detail::fixed(-0.00123, 2) == "0.00");
}

TEST_CASE("decimal formatting keeps at least six significant digits and round-trips") {
    CHECK(detail::decimal(0.5, 6) == "0.500000");
    CHECK(detail::parse_double(detail::decimal(0.5, 6)) == 0.5);
    const double third = 1.0 / 3.0;
    CHECK(detail::parse_double(detail::decimal(third, 6)) == third);
    CHECK(detail::parse_double(detail::shortest(0.1)) == 0.1);
    CHECK_THROWS_AS(detail::parse_double("abc"), InputError);
}
