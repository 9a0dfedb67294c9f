#include "fairscore/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace fairscore::svg {

namespace {

constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 55;

const char* palette(std::size_t i) {
    static const char* kColors[] = {"#1f6fb2", "#d1495b", "#3a7d44", "#8d6a9f",
                                    "#c77d1e", "#2e8b8b", "#6b6b6b", "#a33b9d"};
    return kColors[i % (sizeof(kColors) / sizeof(kColors[0]))];
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (lo > hi) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double margin = 0.04 * (hi - lo);
        lo -= margin;
        hi += margin;
    }
};

struct Frame {
    Range x;
    Range y;
    int width;
    int height;

    double px(double v) const {
        return kMarginLeft + (v - x.lo) / (x.hi - x.lo) * (width - kMarginLeft - kMarginRight);
    }
    double py(double v) const {
        return height - kMarginBottom -
               (v - y.lo) / (y.hi - y.lo) * (height - kMarginTop - kMarginBottom);
    }
};

std::vector<double> linear_ticks(const Range& range, int count = 5) {
    std::vector<double> ticks;
    const double step = (range.hi - range.lo) / (count - 1);
    for (int i = 0; i < count; ++i) ticks.push_back(range.lo + i * step);
    return ticks;
}

void open_chart(std::ostringstream& out, const ChartOptions& options) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << " "
        << options.height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << options.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">"
        << escape(options.title) << "</text>\n";
}

void draw_axes(std::ostringstream& out, const Frame& frame, const ChartOptions& options,
               const std::vector<std::pair<double, std::string>>& x_ticks,
               const std::vector<std::pair<double, std::string>>& y_ticks) {
    const double x0 = kMarginLeft;
    const double x1 = frame.width - kMarginRight;
    const double y0 = frame.height - kMarginBottom;
    const double y1 = kMarginTop;
    out << "<g stroke=\"#333\" stroke-width=\"1\">"
        << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
        << "\"/>"
        << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
        << "\"/></g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (const auto& [value, label] : x_ticks) {
        const double x = frame.px(value);
        out << "<line x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x << "\" y2=\""
            << y0 + 4 << "\" stroke=\"#333\"/>"
            << "<text x=\"" << x << "\" y=\"" << y0 + 17 << "\" text-anchor=\"middle\">"
            << escape(label) << "</text>\n";
    }
    for (const auto& [value, label] : y_ticks) {
        const double y = frame.py(value);
        out << "<line x1=\"" << x0 - 4 << "\" y1=\"" << y << "\" x2=\"" << x0 << "\" y2=\""
            << y << "\" stroke=\"#333\"/>"
            << "<text x=\"" << x0 - 7 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
            << escape(label) << "</text>\n";
    }
    out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << frame.height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(options.x_label)
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << (y0 + y1) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << (y0 + y1) / 2 << ")\">" << escape(options.y_label) << "</text>\n";
    out << "</g>\n";
}

void draw_series(std::ostringstream& out, const Frame& frame,
                 const std::vector<Series>& series,
                 const std::vector<std::vector<std::pair<double, double>>>& mapped) {
    for (std::size_t s = 0; s < series.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << palette(s)
            << "\" stroke-width=\"1.8\" points=\"";
        for (const auto& [x, y] : mapped[s]) out << num(frame.px(x)) << "," << num(frame.py(y)) << " ";
        out << "\"/>\n";
    }
    // legend
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double y = kMarginTop + 14.0 * static_cast<double>(s);
        out << "<line x1=\"" << frame.width - kMarginRight - 120 << "\" y1=\"" << y
            << "\" x2=\"" << frame.width - kMarginRight - 100 << "\" y2=\"" << y
            << "\" stroke=\"" << palette(s) << "\" stroke-width=\"2\"/>"
            << "<text x=\"" << frame.width - kMarginRight - 95 << "\" y=\"" << y + 4 << "\">"
            << escape(series[s].label) << "</text>\n";
    }
    out << "</g>\n";
}

}  // namespace

double probit(double p) {
    // Acklam's rational approximation to the inverse normal CDF.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    if (!(p > 0.0 && p < 1.0)) {
        return p <= 0.0 ? -std::numeric_limits<double>::infinity()
                        : std::numeric_limits<double>::infinity();
    }
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

std::string line_chart(const std::vector<Series>& series, const ChartOptions& options) {
    Frame frame;
    frame.width = options.width;
    frame.height = options.height;
    std::vector<std::vector<std::pair<double, double>>> mapped;
    for (const Series& s : series) {
        mapped.push_back(s.points);
        for (const auto& [x, y] : s.points) {
            frame.x.add(x);
            frame.y.add(y);
        }
    }
    frame.x.pad();
    frame.y.pad();

    std::vector<std::pair<double, std::string>> x_ticks;
    std::vector<std::pair<double, std::string>> y_ticks;
    for (double t : linear_ticks(frame.x)) x_ticks.emplace_back(t, num(t));
    for (double t : linear_ticks(frame.y)) y_ticks.emplace_back(t, num(t));

    std::ostringstream out;
    open_chart(out, options);
    draw_axes(out, frame, options, x_ticks, y_ticks);
    draw_series(out, frame, series, mapped);
    out << "</svg>\n";
    return out.str();
}

std::string det_chart(const std::vector<Series>& series, const ChartOptions& options) {
    constexpr double kFloor = 1e-6;  // exact 0/1 rates are clamped here for display
    Frame frame;
    frame.width = options.width;
    frame.height = options.height;
    std::vector<std::vector<std::pair<double, double>>> mapped(series.size());
    for (std::size_t s = 0; s < series.size(); ++s) {
        for (const auto& [fmr, fnmr] : series[s].points) {
            const double x = probit(std::clamp(fmr, kFloor, 1.0 - kFloor));
            const double y = probit(std::clamp(fnmr, kFloor, 1.0 - kFloor));
            mapped[s].emplace_back(x, y);
            frame.x.add(x);
            frame.y.add(y);
        }
    }
    frame.x.pad();
    frame.y.pad();

    static const double kTickRates[] = {1e-6, 1e-5, 1e-4, 1e-3, 1e-2,
                                        0.05, 0.2,  0.5,  0.8,  0.95};
    std::vector<std::pair<double, std::string>> x_ticks;
    std::vector<std::pair<double, std::string>> y_ticks;
    for (double rate : kTickRates) {
        const double t = probit(rate);
        if (t >= frame.x.lo && t <= frame.x.hi) x_ticks.emplace_back(t, num(rate));
        if (t >= frame.y.lo && t <= frame.y.hi) y_ticks.emplace_back(t, num(rate));
    }

    std::ostringstream out;
    open_chart(out, options);
    draw_axes(out, frame, options, x_ticks, y_ticks);
    draw_series(out, frame, series, mapped);
    out << "</svg>\n";
    return out.str();
}

}  // namespace fairscore::svg
