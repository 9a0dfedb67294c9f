#include "fairscore/error_rates.hpp"

#include <algorithm>
#include <cmath>

namespace fairscore {

namespace {

std::size_t count_at_or_above(std::span<const double> scores, double tau) {
    std::size_t n = 0;
    for (double s : scores) {
        if (s >= tau) ++n;
    }
    return n;
}

}  // namespace

Threshold calibrate_from_sorted(std::span<const double> sorted_impostors, double exponent) {
    if (sorted_impostors.empty()) {
        throw Error(errc::no_impostors, "calibration set has no impostor scores");
    }
    if (!std::isfinite(exponent) || exponent < 0.0) {
        throw Error(errc::domain_error, "operating-point exponent must be >= 0");
    }
    const std::size_t n = sorted_impostors.size();
    const double target = std::pow(10.0, -exponent);

    Threshold result;
    result.target_exponent = exponent;

    // Largest accepted-impostor count still meeting the target.
    const auto allowed = static_cast<std::size_t>(std::floor(
        target * static_cast<double>(n) + 1e-9));
    if (allowed == 0) {
        result.tau = sorted_impostors.back() + 1.0;
        result.achieved_dev_fmr = 0.0;
        result.degenerate = true;
        return result;
    }

    // Candidate: the allowed-th largest score. Ties below it can push the
    // accepted count over the target, in which case the next strictly larger
    // value is the smallest qualifying threshold.
    std::size_t idx = n - std::min(allowed, n);
    const double candidate = sorted_impostors[idx];
    const std::size_t first_at_candidate =
        std::lower_bound(sorted_impostors.begin(), sorted_impostors.end(), candidate) -
        sorted_impostors.begin();
    if (n - first_at_candidate > allowed) {
        const std::size_t next = std::upper_bound(sorted_impostors.begin(),
                                                  sorted_impostors.end(), candidate) -
                                 sorted_impostors.begin();
        if (next == n) {
            result.tau = sorted_impostors.back() + 1.0;
            result.achieved_dev_fmr = 0.0;
            result.degenerate = true;
            return result;
        }
        idx = next;
    } else {
        idx = first_at_candidate;
    }
    result.tau = sorted_impostors[idx];
    result.achieved_dev_fmr =
        static_cast<double>(n - idx) / static_cast<double>(n);
    return result;
}

Threshold calibrate_threshold(const ScoreSet& calibration, double exponent) {
    std::vector<double> impostors;
    impostors.reserve(calibration.impostor_count());
    for (const ComparisonRecord& rec : calibration.records()) {
        if (rec.kind == Kind::impostor) impostors.push_back(rec.score);
    }
    std::sort(impostors.begin(), impostors.end());
    return calibrate_from_sorted(impostors, exponent);
}

double fmr(std::span<const double> impostor_scores, double tau) {
    if (impostor_scores.empty()) {
        throw Error(errc::empty_cell, "FMR over an empty impostor cell");
    }
    return static_cast<double>(count_at_or_above(impostor_scores, tau)) /
           static_cast<double>(impostor_scores.size());
}

double fnmr(std::span<const double> genuine_scores, double tau) {
    if (genuine_scores.empty()) {
        throw Error(errc::empty_cell, "FNMR over an empty genuine cell");
    }
    std::size_t rejected = 0;
    for (double s : genuine_scores) {
        if (s < tau) ++rejected;
    }
    return static_cast<double>(rejected) / static_cast<double>(genuine_scores.size());
}

RateTable rate_table(const ScoreSet& test, const Threshold& threshold) {
    std::map<std::pair<DemographicLabel, DemographicLabel>, std::pair<std::size_t, std::size_t>>
        impostor_cells;  // (accepted, total)
    std::map<DemographicLabel, std::pair<std::size_t, std::size_t>> genuine_cells;  // (rejected, total)

    for (const ComparisonRecord& rec : test.records()) {
        if (rec.kind == Kind::impostor) {
            auto& [accepted, total] = impostor_cells[{rec.enroll_demo, rec.probe_demo}];
            if (rec.score >= threshold.tau) ++accepted;
            ++total;
        } else {
            auto& [rejected, total] = genuine_cells[rec.enroll_demo];
            if (rec.score < threshold.tau) ++rejected;
            ++total;
        }
    }

    RateTable table;
    table.threshold = threshold;
    for (const auto& [pair, counts] : impostor_cells) {
        table.per_pair_fmr[pair] = RateCell{
            static_cast<double>(counts.first) / static_cast<double>(counts.second),
            counts.second};
    }
    for (const auto& [demo, counts] : genuine_cells) {
        table.per_demo_fnmr[demo] = RateCell{
            static_cast<double>(counts.first) / static_cast<double>(counts.second),
            counts.second};
    }
    return table;
}

std::vector<DetPoint> det_points(const ScoreSet& set, const DemographicLabel& demo) {
    std::vector<double> impostors;
    std::vector<double> genuines;
    for (const ComparisonRecord& rec : set.records()) {
        if (rec.enroll_demo != demo || rec.probe_demo != demo) continue;
        (rec.kind == Kind::impostor ? impostors : genuines).push_back(rec.score);
    }
    if (impostors.empty() || genuines.empty()) {
        throw Error(errc::empty_cell,
                    "DET for '" + demo + "' needs homogeneous impostor and genuine scores");
    }

    std::vector<double> taus;
    taus.reserve(impostors.size() + genuines.size());
    taus.insert(taus.end(), impostors.begin(), impostors.end());
    taus.insert(taus.end(), genuines.begin(), genuines.end());
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

    std::sort(impostors.begin(), impostors.end());
    std::sort(genuines.begin(), genuines.end());

    std::vector<DetPoint> points;
    points.reserve(taus.size());
    for (double tau : taus) {
        const auto imp_below = static_cast<std::size_t>(
            std::lower_bound(impostors.begin(), impostors.end(), tau) - impostors.begin());
        const auto gen_below = static_cast<std::size_t>(
            std::lower_bound(genuines.begin(), genuines.end(), tau) - genuines.begin());
        points.push_back(DetPoint{
            tau,
            static_cast<double>(impostors.size() - imp_below) /
                static_cast<double>(impostors.size()),
            static_cast<double>(gen_below) / static_cast<double>(genuines.size())});
    }
    return points;
}

}  // namespace fairscore
