#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fairscore/error.hpp"
#include "fairscore/error_rates.hpp"
#include "fairscore/score_model.hpp"

namespace fairscore {

/// FDR at one operating point: fdr = 1 - (alpha*a_gap + (1-alpha)*b_gap).
struct FdrPoint {
    double exponent = 0.0;
    Threshold threshold;
    double a_gap = 0.0;
    double b_gap = 0.0;
    double fdr = 1.0;
    double alpha = 0.5;
};

/// FDR over an operating grid. aufdr is absent for single-point grids; the
/// exponent range must accompany it wherever it is reported, since areas are
/// only comparable across matching ranges.
struct FdrCurve {
    std::vector<FdrPoint> points;
    double alpha = 0.5;
    std::optional<double> aufdr;
    std::pair<double, double> exponent_range{0.0, 0.0};
};

struct Verdict {
    bool fair = false;
    double epsilon = 0.0;
};

/// Max pairwise |FMR_i - FMR_j| over homogeneous cells only (enroll == probe);
/// cross-demographic cells never enter the gap. 0 for a single demographic.
double a_gap(const RateTable& table);

/// Max pairwise |FNMR_i - FNMR_j|; 0 for a single demographic.
double b_gap(const RateTable& table);

/// 1 - (alpha*a_gap + (1-alpha)*b_gap). All inputs must lie in [0, 1].
double fdr(double a_gap, double b_gap, double alpha);

/// fair iff fdr_value >= 1 - epsilon (boundary inclusive).
Verdict verdict(double fdr_value, double epsilon);

/// One grid point evaluated end to end: threshold calibrated on the pooled
/// dev impostors, rates taken on the test set.
struct FdrPointDetail {
    FdrPoint point;
    RateTable table;
};

std::vector<FdrPointDetail> evaluate_grid(const SplitDataset& data,
                                          const OperatingPointGrid& grid, double alpha);

FdrCurve curve_from_details(const std::vector<FdrPointDetail>& details, double alpha);

FdrCurve fdr_curve(const SplitDataset& data, const OperatingPointGrid& grid, double alpha);

/// Trapezoidal integral of fdr against the exponent, with the exponent axis
/// affinely rescaled so the grid spans [0, 1]. Needs at least two points.
double area_under_fdr(const FdrCurve& curve);

struct AlphaSweepRow {
    double alpha = 0.0;
    double aufdr = 0.0;
};

/// One AUFDR per alpha. Thresholds and gaps do not depend on alpha, so they
/// are computed once and reused across the sweep.
std::vector<AlphaSweepRow> alpha_sweep(const std::vector<FdrPointDetail>& details,
                                       std::span<const double> alphas);
std::vector<AlphaSweepRow> alpha_sweep(const SplitDataset& data, const OperatingPointGrid& grid,
                                       std::span<const double> alphas);

}  // namespace fairscore
