#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fairscore::svg {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 720;
    int height = 480;
};

/// Plain line chart with linear axes.
std::string line_chart(const std::vector<Series>& series, const ChartOptions& options);

/// DET chart: both axes on the standard normal-deviate (probit) scale.
/// Series points are (fmr, fnmr) in [0, 1]; exact 0/1 values are clamped to
/// the plottable range.
std::string det_chart(const std::vector<Series>& series, const ChartOptions& options);

/// Inverse standard normal CDF (rational approximation, ~1e-9 accurate).
double probit(double p);

}  // namespace fairscore::svg
