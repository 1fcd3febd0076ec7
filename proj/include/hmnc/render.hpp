#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "hmnc/analysis.hpp"

namespace hmnc {

enum class OutputFormat { Text, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// Text output rounds to `decimals` places for display; csv and json always
// carry full precision (values parse back to the exact doubles).
void render_report(const MetricReport& report, OutputFormat format, int decimals,
                   std::ostream& out);
void render_comparison(const ComparisonReport& report, OutputFormat format, int decimals,
                       std::ostream& out);

}  // namespace hmnc
