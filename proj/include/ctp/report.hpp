#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "ctp/estimation.hpp"
#include "ctp/stats.hpp"

namespace ctp {

struct DatasetDescriptor {
    std::string name;
    std::size_t n = 0;
    double x0_hat = 0.0;
    SixNumberSummary summary;
};

/// Fixed 3-decimal display string matching the paper's table style.
std::string format_3dp(double value);

/// Machine-readable fit report. Keys are emitted in sorted order by the
/// JSON library, so serialization is stable; numeric fields carry full
/// binary precision and each fit also carries 3-decimal display strings.
/// The timestamp is omitted when include_timestamp is false so seeded runs
/// are byte-identical.
nlohmann::json make_fit_report(const DatasetDescriptor& dataset,
                               std::span<const FitResult> fits,
                               const FitConfig& config,
                               bool include_timestamp);

/// The four-criterion comparison table with parenthesized ranks, one row
/// per fitted family, ordered as in the input.
std::string format_comparison_table(std::span<const FitResult> fits);

}  // namespace ctp
