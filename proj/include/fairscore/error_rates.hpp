#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fairscore/error.hpp"
#include "fairscore/score_model.hpp"

namespace fairscore {

/// A decision threshold calibrated at the operating point FMR_{10^-x}.
/// Degenerate thresholds arise when the target is finer than the calibration
/// sample resolution; they reject everything the calibration set could score.
struct Threshold {
    double tau = 0.0;
    double target_exponent = 0.0;
    double achieved_dev_fmr = 0.0;
    bool degenerate = false;
};

struct RateCell {
    double value = 0.0;
    std::size_t count = 0;  // denominator behind the rate
};

/// Per-(enroll, probe) FMR cells and per-demographic FNMR cells at one
/// threshold. Cells with no supporting data are absent, never zero.
struct RateTable {
    std::map<std::pair<DemographicLabel, DemographicLabel>, RateCell> per_pair_fmr;
    std::map<DemographicLabel, RateCell> per_demo_fnmr;
    Threshold threshold;
};

/// Smallest observed impostor score s with FMR(s) <= 10^-x on the pooled
/// calibration impostors (all demographic pairs). Conservative: no
/// interpolation, ties count as false matches. When no observed score meets
/// the target the result is the reject-all sentinel max_score + 1, flagged
/// degenerate, with achieved FMR 0.
Threshold calibrate_threshold(const ScoreSet& calibration, double exponent);

/// Same rule over an already-sorted (ascending) pooled impostor score array.
Threshold calibrate_from_sorted(std::span<const double> sorted_impostors, double exponent);

/// Fraction of impostor scores >= tau.
double fmr(std::span<const double> impostor_scores, double tau);

/// Fraction of genuine scores < tau.
double fnmr(std::span<const double> genuine_scores, double tau);

/// Rates for every ordered demographic pair with impostor data and every
/// demographic with genuine data, at the given threshold.
RateTable rate_table(const ScoreSet& test, const Threshold& threshold);

struct DetPoint {
    double tau = 0.0;
    double fmr = 0.0;
    double fnmr = 0.0;
};

/// DET sweep for one demographic over the sorted union of its homogeneous
/// impostor and genuine scores. Rank-determined: invariant under any strictly
/// increasing transform of that demographic's scores, which is exactly why
/// per-demographic DET comparison cannot expose a shared-threshold bias.
std::vector<DetPoint> det_points(const ScoreSet& set, const DemographicLabel& demo);

}  // namespace fairscore
