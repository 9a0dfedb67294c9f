#include "fairscore/fdr.hpp"

#include <algorithm>
#include <cmath>

namespace fairscore {

namespace {

void require_unit(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(errc::domain_error, std::string(name) + " must lie in [0, 1]");
    }
}

double gap(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

/// Test-set scores grouped per cell and sorted, so every grid point is a
/// binary search instead of a rescan.
struct CellIndex {
    std::vector<double> pooled_dev_impostors;  // sorted
    std::map<std::pair<DemographicLabel, DemographicLabel>, std::vector<double>> impostors;
    std::map<DemographicLabel, std::vector<double>> genuines;

    explicit CellIndex(const SplitDataset& data) {
        pooled_dev_impostors.reserve(data.dev.impostor_count());
        for (const ComparisonRecord& rec : data.dev.records()) {
            if (rec.kind == Kind::impostor) pooled_dev_impostors.push_back(rec.score);
        }
        std::sort(pooled_dev_impostors.begin(), pooled_dev_impostors.end());

        for (const ComparisonRecord& rec : data.test.records()) {
            if (rec.kind == Kind::impostor) {
                impostors[{rec.enroll_demo, rec.probe_demo}].push_back(rec.score);
            } else {
                genuines[rec.enroll_demo].push_back(rec.score);
            }
        }
        for (auto& [pair, scores] : impostors) std::sort(scores.begin(), scores.end());
        for (auto& [demo, scores] : genuines) std::sort(scores.begin(), scores.end());
    }

    RateTable table_at(const Threshold& threshold) const {
        RateTable table;
        table.threshold = threshold;
        for (const auto& [pair, scores] : impostors) {
            const auto below = static_cast<std::size_t>(
                std::lower_bound(scores.begin(), scores.end(), threshold.tau) - scores.begin());
            table.per_pair_fmr[pair] =
                RateCell{static_cast<double>(scores.size() - below) /
                             static_cast<double>(scores.size()),
                         scores.size()};
        }
        for (const auto& [demo, scores] : genuines) {
            const auto below = static_cast<std::size_t>(
                std::lower_bound(scores.begin(), scores.end(), threshold.tau) - scores.begin());
            table.per_demo_fnmr[demo] = RateCell{
                static_cast<double>(below) / static_cast<double>(scores.size()), scores.size()};
        }
        return table;
    }
};

}  // namespace

double a_gap(const RateTable& table) {
    std::vector<double> homogeneous;
    for (const auto& [pair, cell] : table.per_pair_fmr) {
        if (pair.first == pair.second) homogeneous.push_back(cell.value);
    }
    if (homogeneous.empty()) {
        throw Error(errc::no_homogeneous_cells, "no homogeneous impostor cells present");
    }
    return gap(homogeneous);
}

double b_gap(const RateTable& table) {
    std::vector<double> rates;
    rates.reserve(table.per_demo_fnmr.size());
    for (const auto& [demo, cell] : table.per_demo_fnmr) rates.push_back(cell.value);
    if (rates.empty()) {
        throw Error(errc::no_genuine_cells, "no genuine cells present");
    }
    return gap(rates);
}

double fdr(double a_gap, double b_gap, double alpha) {
    require_unit(a_gap, "a_gap");
    require_unit(b_gap, "b_gap");
    require_unit(alpha, "alpha");
    return 1.0 - (alpha * a_gap + (1.0 - alpha) * b_gap);
}

Verdict verdict(double fdr_value, double epsilon) {
    require_unit(fdr_value, "fdr");
    require_unit(epsilon, "epsilon");
    return Verdict{fdr_value >= 1.0 - epsilon, epsilon};
}

std::vector<FdrPointDetail> evaluate_grid(const SplitDataset& data,
                                          const OperatingPointGrid& grid, double alpha) {
    require_unit(alpha, "alpha");
    if (data.dev.impostor_count() == 0) {
        throw Error(errc::no_impostors, "dev set has no impostor scores to calibrate on");
    }
    const CellIndex index(data);

    std::vector<FdrPointDetail> details;
    details.reserve(grid.size());
    for (double exponent : grid.exponents()) {
        const Threshold threshold = calibrate_from_sorted(index.pooled_dev_impostors, exponent);
        FdrPointDetail detail;
        detail.table = index.table_at(threshold);
        detail.point.exponent = exponent;
        detail.point.threshold = threshold;
        detail.point.alpha = alpha;
        detail.point.a_gap = a_gap(detail.table);
        detail.point.b_gap = b_gap(detail.table);
        detail.point.fdr = fdr(detail.point.a_gap, detail.point.b_gap, alpha);
        details.push_back(std::move(detail));
    }
    return details;
}

FdrCurve curve_from_details(const std::vector<FdrPointDetail>& details, double alpha) {
    if (details.empty()) {
        throw Error(errc::too_few_points, "no grid points evaluated");
    }
    FdrCurve curve;
    curve.alpha = alpha;
    curve.points.reserve(details.size());
    for (const FdrPointDetail& detail : details) {
        FdrPoint point = detail.point;
        point.alpha = alpha;
        point.fdr = fdr(point.a_gap, point.b_gap, alpha);
        curve.points.push_back(point);
    }
    curve.exponent_range = {curve.points.front().exponent, curve.points.back().exponent};
    if (curve.points.size() >= 2) curve.aufdr = area_under_fdr(curve);
    return curve;
}

FdrCurve fdr_curve(const SplitDataset& data, const OperatingPointGrid& grid, double alpha) {
    return curve_from_details(evaluate_grid(data, grid, alpha), alpha);
}

double area_under_fdr(const FdrCurve& curve) {
    const auto& points = curve.points;
    if (points.size() < 2) {
        throw Error(errc::too_few_points, "area under FDR needs at least two grid points");
    }
    const double span = points.back().exponent - points.front().exponent;
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        area += 0.5 * (points[i].fdr + points[i + 1].fdr) *
                (points[i + 1].exponent - points[i].exponent);
    }
    return area / span;
}

std::vector<AlphaSweepRow> alpha_sweep(const std::vector<FdrPointDetail>& details,
                                       std::span<const double> alphas) {
    std::vector<AlphaSweepRow> rows;
    rows.reserve(alphas.size());
    for (double alpha : alphas) {
        const FdrCurve curve = curve_from_details(details, alpha);
        if (!curve.aufdr.has_value()) {
            throw Error(errc::too_few_points, "alpha sweep needs at least two grid points");
        }
        rows.push_back(AlphaSweepRow{alpha, *curve.aufdr});
    }
    return rows;
}

std::vector<AlphaSweepRow> alpha_sweep(const SplitDataset& data, const OperatingPointGrid& grid,
                                       std::span<const double> alphas) {
    return alpha_sweep(evaluate_grid(data, grid, 0.5), alphas);
}

}  // namespace fairscore
