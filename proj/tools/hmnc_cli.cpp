#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hmnc/analysis.hpp"
#include "hmnc/format_util.hpp"
#include "hmnc/heatmap.hpp"
#include "hmnc/labeled_data.hpp"
#include "hmnc/render.hpp"
#include "hmnc/repro.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitDomainError = 3;

struct CountFlags {
    std::optional<std::int64_t> tp;
    std::optional<std::int64_t> tn;
    std::optional<std::int64_t> fp;
    std::optional<std::int64_t> fn;

    bool any() const { return tp || tn || fp || fn; }
    bool all() const { return tp && tn && fp && fn; }
};

struct CommonFlags {
    std::string format = "text";
    int rounding = 2;
    std::string out_path;          // empty: stdout
    std::string positive_label = "1";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--rounding", flags.rounding, "decimal places for text display (default 2)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", flags.out_path, "write output to this file instead of stdout");
}

hmnc::OutputFormat format_of(const CommonFlags& flags) {
    return *hmnc::parse_output_format(flags.format);
}

void emit(const CommonFlags& flags, const std::string& contents) {
    if (flags.out_path.empty()) {
        std::cout << contents;
        return;
    }
    std::ofstream out(flags.out_path, std::ios::binary);
    if (!out) {
        throw hmnc::InputError("cannot write output file '" + flags.out_path + "'");
    }
    out << contents;
}

hmnc::ConfusionMatrix matrix_from_counts(const CountFlags& counts) {
    return hmnc::ConfusionMatrix(*counts.tp, *counts.tn, *counts.fp, *counts.fn);
}

hmnc::ConfusionMatrix matrix_from_csv(const std::string& path, const std::string& positive) {
    return hmnc::from_labels(hmnc::read_predictions_file(path, positive));
}

// "tp,tn,fp,fn"
hmnc::ConfusionMatrix matrix_from_tuple(const std::string& spec) {
    std::vector<std::int64_t> parts;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoll(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw hmnc::InputError("bad count '" + token + "' in '" + spec + "'");
        }
    }
    if (parts.size() != 4) {
        throw hmnc::InputError("expected four counts tp,tn,fp,fn, got '" + spec + "'");
    }
    return hmnc::ConfusionMatrix(parts[0], parts[1], parts[2], parts[3]);
}

int run_compute(const CountFlags& counts, const std::string& csv_path, const CommonFlags& flags) {
    if (counts.any() == !csv_path.empty()) {
        throw hmnc::InputError("compute needs exactly one input mode: --tp/--tn/--fp/--fn or --from-csv");
    }
    if (counts.any() && !counts.all()) {
        throw hmnc::InputError("compute needs all four of --tp --tn --fp --fn");
    }
    const hmnc::ConfusionMatrix cm =
        csv_path.empty() ? matrix_from_counts(counts) : matrix_from_csv(csv_path, flags.positive_label);
    std::ostringstream out;
    hmnc::render_report(hmnc::evaluate_all(cm), format_of(flags), flags.rounding, out);
    emit(flags, out.str());
    return kExitOk;
}

int run_compare(const std::string& left, const std::string& right, const std::string& left_csv,
                const std::string& right_csv, const CommonFlags& flags) {
    const bool tuple_mode = !left.empty() || !right.empty();
    const bool csv_mode = !left_csv.empty() || !right_csv.empty();
    if (tuple_mode == csv_mode) {
        throw hmnc::InputError("compare needs exactly one input mode: --left/--right or --left-csv/--right-csv");
    }
    if (tuple_mode && (left.empty() || right.empty())) {
        throw hmnc::InputError("compare needs both --left and --right");
    }
    if (csv_mode && (left_csv.empty() || right_csv.empty())) {
        throw hmnc::InputError("compare needs both --left-csv and --right-csv");
    }
    const hmnc::ConfusionMatrix lhs =
        tuple_mode ? matrix_from_tuple(left) : matrix_from_csv(left_csv, flags.positive_label);
    const hmnc::ConfusionMatrix rhs =
        tuple_mode ? matrix_from_tuple(right) : matrix_from_csv(right_csv, flags.positive_label);
    std::ostringstream out;
    hmnc::render_comparison(hmnc::compare(lhs, rhs), format_of(flags), flags.rounding, out);
    emit(flags, out.str());
    return kExitOk;
}

int run_heatmap(const std::string& metric_name, std::int64_t p, std::int64_t n, int tp_steps,
                int tn_steps, std::string out_path, const std::string& plot_script_path) {
    const auto metric = hmnc::parse_metric(metric_name);
    if (!metric) {
        throw hmnc::InputError("unknown metric '" + metric_name + "'");
    }
    const hmnc::HeatmapGrid grid = hmnc::generate_grid(*metric, p, n, tp_steps, tn_steps);
    if (out_path.empty()) {
        std::string key(hmnc::metric_key(*metric));
        for (char& c : key) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        out_path = "grid_" + key + "_p" + std::to_string(p) + "_n" + std::to_string(n) + ".csv";
    }
    {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw hmnc::InputError("cannot write output file '" + out_path + "'");
        }
        hmnc::write_grid(grid, out);
    }
    std::cout << "wrote " << out_path << '\n';
    if (!plot_script_path.empty()) {
        std::ofstream script(plot_script_path, std::ios::binary);
        if (!script) {
            throw hmnc::InputError("cannot write plot script '" + plot_script_path + "'");
        }
        script << hmnc::gnuplot_script(out_path, grid);
        std::cout << "wrote " << plot_script_path << '\n';
    }
    return kExitOk;
}

int run_repro_cmd(const std::string& what, const std::string& out_dir, int rounding) {
    hmnc::ReproOptions options;
    options.out_dir = out_dir;
    options.decimals = rounding;
    options.tables = what == "tables" || what == "all";
    options.figures = what == "figures" || what == "all";
    const hmnc::ReproResult result = hmnc::run_repro(options);
    if (!result.summary.empty()) {
        std::cout << result.summary;
    }
    for (const auto& path : result.written) {
        std::cout << "wrote " << path.string() << '\n';
    }
    return result.ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"confusion-matrix metrics for imbalanced binary classification"};
    app.require_subcommand(1);

    CountFlags counts;
    std::string from_csv;
    CommonFlags compute_flags;
    CLI::App* compute = app.add_subcommand("compute", "evaluate all metrics for one classifier");
    compute->add_option("--tp", counts.tp, "true positives");
    compute->add_option("--tn", counts.tn, "true negatives");
    compute->add_option("--fp", counts.fp, "false positives");
    compute->add_option("--fn", counts.fn, "false negatives");
    compute->add_option("--from-csv", from_csv, "tally counts from an actual,predicted CSV file");
    compute->add_option("--positive-label", compute_flags.positive_label,
                        "label counted as positive (default '1')");
    add_common(compute, compute_flags);

    std::string left, right, left_csv, right_csv;
    CommonFlags compare_flags;
    CLI::App* cmp = app.add_subcommand("compare", "pairwise comparison of two classifiers");
    cmp->add_option("--left", left, "left classifier counts as tp,tn,fp,fn");
    cmp->add_option("--right", right, "right classifier counts as tp,tn,fp,fn");
    cmp->add_option("--left-csv", left_csv, "left classifier prediction file");
    cmp->add_option("--right-csv", right_csv, "right classifier prediction file");
    cmp->add_option("--positive-label", compare_flags.positive_label,
                    "label counted as positive (default '1')");
    add_common(cmp, compare_flags);

    std::string metric_name;
    std::int64_t grid_p = 0;
    std::int64_t grid_n = 0;
    int tp_steps = 101;
    int tn_steps = 101;
    std::string grid_out;
    std::string plot_script;
    CLI::App* heatmap = app.add_subcommand("heatmap", "emit a (TP, TN) metric grid file");
    heatmap->add_option("--metric", metric_name, "metric id, e.g. hmnc, acc, g-mean")->required();
    heatmap->add_option("--p", grid_p, "number of actual positives")->required();
    heatmap->add_option("--n", grid_n, "number of actual negatives")->required();
    heatmap->add_option("--tp-steps", tp_steps, "lattice steps along TP (default 101)");
    heatmap->add_option("--tn-steps", tn_steps, "lattice steps along TN (default 101)");
    heatmap->add_option("--out", grid_out, "grid file path (default grid_<metric>_p<p>_n<n>.csv)");
    heatmap->add_option("--plot-script", plot_script, "also write a gnuplot script to this path");

    std::string what = "all";
    std::string repro_out = ".";
    int repro_rounding = 2;
    CLI::App* repro = app.add_subcommand("repro", "regenerate the reference tables and figure data");
    repro->add_option("what", what, "tables, figures or all (default all)")
        ->check(CLI::IsMember({"tables", "figures", "all"}));
    repro->add_option("--out", repro_out, "output directory (default .)");
    repro->add_option("--rounding", repro_rounding, "decimal places in the table files (default 2)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (compute->parsed()) {
            return run_compute(counts, from_csv, compute_flags);
        }
        if (cmp->parsed()) {
            return run_compare(left, right, left_csv, right_csv, compare_flags);
        }
        if (heatmap->parsed()) {
            return run_heatmap(metric_name, grid_p, grid_n, tp_steps, tn_steps, grid_out,
                               plot_script);
        }
        if (repro->parsed()) {
            return run_repro_cmd(what, repro_out, repro_rounding);
        }
    } catch (const hmnc::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const hmnc::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitInputError;
}
