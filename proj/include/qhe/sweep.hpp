#pragma once

// Sweep harness: plain key-value configs, figure presets, deterministic
// parallel execution, CSV emission.

#include <string>
#include <vector>

#include "qhe/cycle.hpp"

namespace qhe {

struct SweepSpec {
    CycleConfig base{};
    std::vector<double> taus;
    std::vector<double> ratios;
    std::vector<double> a_values;
    std::vector<ZProtocolKind> protocols;
    // Zero-work boundary mode (fig2): sweep beta1/beta2 ratios instead of
    // running cycles.
    bool boundary_mode{false};
    std::vector<double> beta_ratios;
    std::string out;   // empty -> caller decides (stdout)
    int workers{0};    // 0 -> QHE_OTTO_WORKERS or hardware concurrency
};

/// One flattened grid point: config scalars plus either a result or a
/// skip reason.
struct SweepRow {
    CycleConfig cfg{};
    bool boundary{false};
    bool has_result{false};
    CycleResult result{};
    std::string skipped_reason;
};

/// Parse a `key = value` document ('#' comments, comma-separated lists,
/// lo:hi:count ranges). Throws ConfigParse with line diagnostics.
SweepSpec parse_config(const std::string& text);

/// Named sweep presets: fig2, fig3, fig4, fig5, fig6, appendixB.
SweepSpec preset(const std::string& name);

struct SweepOutcome {
    int exit_code{};   // 0 clean, 2 when any row was skipped
    long total_rows{};
    long skipped_rows{};
    std::string csv;
    std::vector<SweepRow> rows;
};

/// Expand the grid, run all points (parallel, deterministic output),
/// and render the CSV dataset. Writes to spec.out when set.
SweepOutcome run_sweep(const SweepSpec& spec);

std::string csv_header();
std::string format_row(const SweepRow& row);

const char* to_string(ZProtocolKind k);
ZProtocolKind protocol_from_string(const std::string& s);

} // namespace qhe
