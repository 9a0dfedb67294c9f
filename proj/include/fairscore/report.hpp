#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairscore/fdr.hpp"
#include "fairscore/score_model.hpp"

namespace fairscore {

/// Everything one `evaluate` run produces: the per-grid-point tables, the FDR
/// curve over the grid, and any ingest warnings. Rendered and machine-readable
/// outputs are generated from this single struct so they agree
/// number-for-number.
struct EvaluationReport {
    std::vector<FdrPointDetail> details;
    FdrCurve curve;
    double alpha = 0.5;
    std::optional<double> epsilon;
    std::vector<std::string> warnings;
};

EvaluationReport make_report(const SplitDataset& data, const OperatingPointGrid& grid,
                             double alpha, std::optional<double> epsilon = {},
                             std::vector<std::string> warnings = {});

bool all_degenerate(const EvaluationReport& report);

/// Rates render with 3 decimals; FDR-like values with 4 when the fourth
/// decimal is significant (0.9205), 3 otherwise (0.989).
std::string format_rate(double value);
std::string format_fdr(double value);
std::string format_exponent(double exponent);  // "10^-x"

/// Paper-style "(e-p)" table: FMR block over every ordered pair, FNMR block,
/// FDR row, AUFDR with its exponent range, verdict row iff epsilon is set.
std::string render_evaluation_text(const EvaluationReport& report);
std::string render_evaluation_csv(const EvaluationReport& report);
std::string render_evaluation_json(const EvaluationReport& report);

/// Curve overlays for `fdr-curve`: one labeled FdrCurve per system, shared grid.
std::string render_curves_csv(const std::vector<std::string>& labels,
                              const std::vector<FdrCurve>& curves);
std::string render_curves_svg(const std::vector<std::string>& labels,
                              const std::vector<FdrCurve>& curves);

/// Identification report for `identify`.
struct IdentificationReport {
    std::vector<DemographicLabel> labels;
    std::vector<std::size_t> rank_ns;
    // rank_rates[demo][i] = rank-n rate at rank_ns[i]; absent when the cohort is empty
    std::vector<std::vector<std::optional<double>>> rank_rates;
    std::vector<double> rank_discrepancy;  // C(n) per rank_ns entry

    bool open_set = false;
    std::vector<double> taus;
    std::vector<std::vector<std::optional<double>>> dir_rates;  // [demo][tau]
    std::vector<std::vector<std::optional<double>>> far_rates;  // [demo][tau]
    std::vector<std::optional<double>> fdr_prime_literal;       // per tau
    std::vector<std::optional<double>> fdr_prime_complement;    // per tau
    double alpha = 0.5;
    std::vector<std::string> warnings;
};

std::string render_identification_text(const IdentificationReport& report);
std::string render_identification_csv(const IdentificationReport& report);
std::string render_identification_json(const IdentificationReport& report);

}  // namespace fairscore
