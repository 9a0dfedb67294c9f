#include "fairscore/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "fairscore/svg.hpp"
#include "json.hpp"

namespace fairscore {

namespace {

std::string printf_double(const char* fmt, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

/// Shortest round-trip decimal for CSV cells.
std::string csv_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string pad(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

std::vector<std::pair<DemographicLabel, DemographicLabel>> pair_rows(
    const EvaluationReport& report) {
    std::set<std::pair<DemographicLabel, DemographicLabel>> pairs;
    for (const FdrPointDetail& detail : report.details) {
        for (const auto& [pair, cell] : detail.table.per_pair_fmr) pairs.insert(pair);
    }
    return {pairs.begin(), pairs.end()};
}

std::vector<DemographicLabel> fnmr_rows(const EvaluationReport& report) {
    std::set<DemographicLabel> demos;
    for (const FdrPointDetail& detail : report.details) {
        for (const auto& [demo, cell] : detail.table.per_demo_fnmr) demos.insert(demo);
    }
    return {demos.begin(), demos.end()};
}

}  // namespace

EvaluationReport make_report(const SplitDataset& data, const OperatingPointGrid& grid,
                             double alpha, std::optional<double> epsilon,
                             std::vector<std::string> warnings) {
    EvaluationReport report;
    report.details = evaluate_grid(data, grid, alpha);
    report.curve = curve_from_details(report.details, alpha);
    report.alpha = alpha;
    report.epsilon = epsilon;
    report.warnings = std::move(warnings);

    // Absent cells stay out of the gap computations; surface which
    // demographics were skipped rather than treating them as zeros.
    const RateTable& first = report.details.front().table;
    for (const DemographicLabel& demo : data.test.label_universe()) {
        if (first.per_pair_fmr.find({demo, demo}) == first.per_pair_fmr.end()) {
            report.warnings.push_back("demographic '" + demo +
                                      "' has no homogeneous impostor scores; it is absent "
                                      "from the false-match gap");
        }
        if (first.per_demo_fnmr.find(demo) == first.per_demo_fnmr.end()) {
            report.warnings.push_back("demographic '" + demo +
                                      "' has no genuine scores; it is absent from the "
                                      "false-non-match gap");
        }
    }
    return report;
}

bool all_degenerate(const EvaluationReport& report) {
    return std::all_of(report.details.begin(), report.details.end(),
                       [](const FdrPointDetail& d) { return d.point.threshold.degenerate; });
}

std::string format_rate(double value) {
    return printf_double("%.3f", value);
}

std::string format_fdr(double value) {
    const long long scaled = std::llround(value * 10000.0);
    const double quantized = static_cast<double>(scaled) / 10000.0;
    return printf_double(scaled % 10 == 0 ? "%.3f" : "%.4f", quantized);
}

std::string format_exponent(double exponent) {
    const std::string digits = exponent == std::floor(exponent)
                                   ? std::to_string(static_cast<long long>(exponent))
                                   : printf_double("%g", exponent);
    return "10^-" + digits;
}

std::string render_evaluation_text(const EvaluationReport& report) {
    constexpr std::size_t kColWidth = 10;
    const auto pairs = pair_rows(report);
    const auto demos = fnmr_rows(report);

    std::size_t label_width = std::string("tau=FMR_10^-x").size();
    for (const auto& [e, p] : pairs) label_width = std::max(label_width, e.size() + p.size() + 3);
    label_width += 2;

    std::ostringstream out;
    bool any_degenerate = false;

    out << pad("tau=FMR_10^-x", label_width);
    for (const FdrPointDetail& detail : report.details) {
        std::string head = format_exponent(detail.point.exponent);
        if (detail.point.threshold.degenerate) {
            head += "*";
            any_degenerate = true;
        }
        out << pad(head, kColWidth);
    }
    out << "\n";

    if (!pairs.empty()) {
        out << pad("Demog. (e-p)", label_width) << "FMR_x(tau)\n";
        for (const auto& pair : pairs) {
            out << pad(pair.first + " - " + pair.second, label_width);
            for (const FdrPointDetail& detail : report.details) {
                auto it = detail.table.per_pair_fmr.find(pair);
                out << pad(it == detail.table.per_pair_fmr.end() ? "-"
                                                                 : format_rate(it->second.value),
                           kColWidth);
            }
            out << "\n";
        }
    }

    if (!demos.empty()) {
        out << pad("", label_width) << "FNMR_x(tau)\n";
        for (const auto& demo : demos) {
            out << pad(demo + " - " + demo, label_width);
            for (const FdrPointDetail& detail : report.details) {
                auto it = detail.table.per_demo_fnmr.find(demo);
                out << pad(it == detail.table.per_demo_fnmr.end()
                               ? "-"
                               : format_rate(it->second.value),
                           kColWidth);
            }
            out << "\n";
        }
    }

    out << pad("FDR(tau)", label_width);
    for (const FdrPoint& point : report.curve.points) out << pad(format_fdr(point.fdr), kColWidth);
    out << "\n";

    if (report.epsilon.has_value()) {
        out << pad("verdict", label_width);
        for (const FdrPoint& point : report.curve.points) {
            out << pad(verdict(point.fdr, *report.epsilon).fair ? "fair" : "unfair", kColWidth);
        }
        out << "\n";
    }

    const auto [x_min, x_max] = report.curve.exponent_range;
    out << "alpha = " << printf_double("%g", report.alpha) << "\n";
    if (report.curve.aufdr.has_value()) {
        out << "AUFDR[x=" << printf_double("%g", x_min) << ".." << printf_double("%g", x_max)
            << "] = " << format_fdr(*report.curve.aufdr) << "\n";
    } else {
        out << "AUFDR: not defined for a single-point grid\n";
    }
    if (any_degenerate) {
        out << "* degenerate operating point: target finer than the calibration sample "
               "resolution; reject-all threshold\n";
    }
    return out.str();
}

std::string render_evaluation_csv(const EvaluationReport& report) {
    std::ostringstream out;
    out << "metric,enroll_demo,probe_demo,exponent,tau,value,count,rendered\n";
    for (const FdrPointDetail& detail : report.details) {
        const std::string x = printf_double("%g", detail.point.exponent);
        const std::string tau = csv_double(detail.point.threshold.tau);
        for (const auto& [pair, cell] : detail.table.per_pair_fmr) {
            out << "fmr," << pair.first << "," << pair.second << "," << x << "," << tau << ","
                << csv_double(cell.value) << "," << cell.count << ","
                << format_rate(cell.value) << "\n";
        }
        for (const auto& [demo, cell] : detail.table.per_demo_fnmr) {
            out << "fnmr," << demo << "," << demo << "," << x << "," << tau << ","
                << csv_double(cell.value) << "," << cell.count << ","
                << format_rate(cell.value) << "\n";
        }
        out << "a_gap,,," << x << "," << tau << "," << csv_double(detail.point.a_gap) << ",,"
            << format_rate(detail.point.a_gap) << "\n";
        out << "b_gap,,," << x << "," << tau << "," << csv_double(detail.point.b_gap) << ",,"
            << format_rate(detail.point.b_gap) << "\n";
    }
    for (const FdrPoint& point : report.curve.points) {
        out << "fdr,,," << printf_double("%g", point.exponent) << ","
            << csv_double(point.threshold.tau) << "," << csv_double(point.fdr) << ",,"
            << format_fdr(point.fdr) << "\n";
        if (report.epsilon.has_value()) {
            const bool fair = verdict(point.fdr, *report.epsilon).fair;
            out << "verdict,,," << printf_double("%g", point.exponent) << ",,"
                << (fair ? 1 : 0) << ",," << (fair ? "fair" : "unfair") << "\n";
        }
    }
    if (report.curve.aufdr.has_value()) {
        const auto [x_min, x_max] = report.curve.exponent_range;
        out << "aufdr,,," << printf_double("%g", x_min) << ".." << printf_double("%g", x_max)
            << ",," << csv_double(*report.curve.aufdr) << ",," << format_fdr(*report.curve.aufdr)
            << "\n";
    }
    return out.str();
}

std::string render_evaluation_json(const EvaluationReport& report) {
    nlohmann::json doc;
    doc["alpha"] = report.alpha;
    if (report.epsilon.has_value()) {
        doc["epsilon"] = *report.epsilon;
    } else {
        doc["epsilon"] = nullptr;
    }
    doc["grid"] = nlohmann::json::array();
    for (const FdrPointDetail& detail : report.details) {
        doc["grid"].push_back(detail.point.exponent);
    }

    doc["points"] = nlohmann::json::array();
    for (std::size_t i = 0; i < report.details.size(); ++i) {
        const FdrPointDetail& detail = report.details[i];
        const FdrPoint& point = report.curve.points[i];
        nlohmann::json entry;
        entry["exponent"] = point.exponent;
        entry["target_fmr"] = std::pow(10.0, -point.exponent);
        entry["tau"] = point.threshold.tau;
        entry["achieved_dev_fmr"] = point.threshold.achieved_dev_fmr;
        entry["degenerate"] = point.threshold.degenerate;
        nlohmann::json fmr_cells = nlohmann::json::object();
        for (const auto& [pair, cell] : detail.table.per_pair_fmr) {
            fmr_cells[pair.first + "|" + pair.second] = {{"value", cell.value},
                                                         {"count", cell.count},
                                                         {"rendered", format_rate(cell.value)}};
        }
        entry["fmr"] = fmr_cells;
        nlohmann::json fnmr_cells = nlohmann::json::object();
        for (const auto& [demo, cell] : detail.table.per_demo_fnmr) {
            fnmr_cells[demo] = {{"value", cell.value},
                                {"count", cell.count},
                                {"rendered", format_rate(cell.value)}};
        }
        entry["fnmr"] = fnmr_cells;
        entry["a_gap"] = point.a_gap;
        entry["b_gap"] = point.b_gap;
        entry["fdr"] = point.fdr;
        entry["fdr_rendered"] = format_fdr(point.fdr);
        if (report.epsilon.has_value()) {
            entry["verdict"] = verdict(point.fdr, *report.epsilon).fair ? "fair" : "unfair";
        }
        doc["points"].push_back(entry);
    }

    if (report.curve.aufdr.has_value()) {
        doc["aufdr"] = {{"value", *report.curve.aufdr},
                        {"rendered", format_fdr(*report.curve.aufdr)},
                        {"exponent_range", {report.curve.exponent_range.first,
                                            report.curve.exponent_range.second}}};
    } else {
        doc["aufdr"] = nullptr;
    }
    doc["warnings"] = report.warnings;
    return doc.dump(2) + "\n";
}

std::string render_curves_csv(const std::vector<std::string>& labels,
                              const std::vector<FdrCurve>& curves) {
    std::ostringstream out;
    out << "x";
    for (const std::string& label : labels) out << "," << label;
    out << "\n";
    if (curves.empty()) return out.str();
    for (std::size_t i = 0; i < curves.front().points.size(); ++i) {
        out << printf_double("%g", curves.front().points[i].exponent);
        for (const FdrCurve& curve : curves) out << "," << csv_double(curve.points[i].fdr);
        out << "\n";
    }
    return out.str();
}

std::string render_curves_svg(const std::vector<std::string>& labels,
                              const std::vector<FdrCurve>& curves) {
    std::vector<svg::Series> series;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        svg::Series s;
        s.label = labels[i];
        for (const FdrPoint& point : curves[i].points) {
            s.points.emplace_back(point.exponent, point.fdr);
        }
        series.push_back(std::move(s));
    }
    svg::ChartOptions options;
    options.title = "Fairness discrepancy rate across operating points";
    options.x_label = "operating-point exponent x (tau = FMR_10^-x)";
    options.y_label = "FDR(tau)";
    return svg::line_chart(series, options);
}

namespace {

std::string opt_cell(const std::optional<double>& value, const std::string& absent = "-") {
    return value.has_value() ? format_rate(*value) : absent;
}

nlohmann::json opt_json(const std::optional<double>& value) {
    if (value.has_value()) return *value;
    return nullptr;
}

}  // namespace

std::string render_identification_text(const IdentificationReport& report) {
    constexpr std::size_t kColWidth = 10;
    std::size_t label_width = 14;
    for (const auto& label : report.labels) label_width = std::max(label_width, label.size() + 2);

    std::ostringstream out;
    out << pad("rank-n", label_width);
    for (std::size_t n : report.rank_ns) out << pad("n=" + std::to_string(n), kColWidth);
    out << "\n";
    for (std::size_t d = 0; d < report.labels.size(); ++d) {
        out << pad(report.labels[d], label_width);
        for (std::size_t i = 0; i < report.rank_ns.size(); ++i) {
            out << pad(opt_cell(report.rank_rates[d][i]), kColWidth);
        }
        out << "\n";
    }
    out << pad("C(n)", label_width);
    for (double value : report.rank_discrepancy) out << pad(format_rate(value), kColWidth);
    out << "\n";

    if (report.open_set) {
        out << "\n" << pad("tau", label_width);
        for (double tau : report.taus) out << pad(printf_double("%.4g", tau), kColWidth);
        out << "\n";
        for (std::size_t d = 0; d < report.labels.size(); ++d) {
            out << pad("DIR " + report.labels[d], label_width);
            for (std::size_t t = 0; t < report.taus.size(); ++t) {
                out << pad(opt_cell(report.dir_rates[d][t]), kColWidth);
            }
            out << "\n";
        }
        for (std::size_t d = 0; d < report.labels.size(); ++d) {
            out << pad("FAR " + report.labels[d], label_width);
            for (std::size_t t = 0; t < report.taus.size(); ++t) {
                out << pad(opt_cell(report.far_rates[d][t]), kColWidth);
            }
            out << "\n";
        }
        out << pad("FDR'(tau)", label_width);
        for (const auto& value : report.fdr_prime_literal) out << pad(opt_cell(value), kColWidth);
        out << "\n" << pad("1-FDR'(tau)", label_width);
        for (const auto& value : report.fdr_prime_complement) {
            out << pad(opt_cell(value), kColWidth);
        }
        out << "\n";
        out << "alpha = " << printf_double("%g", report.alpha) << "\n";
    }
    return out.str();
}

std::string render_identification_csv(const IdentificationReport& report) {
    std::ostringstream out;
    out << "metric,demographic,n,tau,value\n";
    for (std::size_t d = 0; d < report.labels.size(); ++d) {
        for (std::size_t i = 0; i < report.rank_ns.size(); ++i) {
            if (!report.rank_rates[d][i].has_value()) continue;
            out << "rank_n," << report.labels[d] << "," << report.rank_ns[i] << ",,"
                << csv_double(*report.rank_rates[d][i]) << "\n";
        }
    }
    for (std::size_t i = 0; i < report.rank_ns.size(); ++i) {
        out << "closed_set_discrepancy,," << report.rank_ns[i] << ",,"
            << csv_double(report.rank_discrepancy[i]) << "\n";
    }
    for (std::size_t t = 0; t < report.taus.size(); ++t) {
        const std::string tau = csv_double(report.taus[t]);
        for (std::size_t d = 0; d < report.labels.size(); ++d) {
            if (report.dir_rates[d][t].has_value()) {
                out << "dir," << report.labels[d] << ",," << tau << ","
                    << csv_double(*report.dir_rates[d][t]) << "\n";
            }
            if (report.far_rates[d][t].has_value()) {
                out << "far," << report.labels[d] << ",," << tau << ","
                    << csv_double(*report.far_rates[d][t]) << "\n";
            }
        }
        if (report.fdr_prime_literal[t].has_value()) {
            out << "fdr_prime,,," << tau << "," << csv_double(*report.fdr_prime_literal[t])
                << "\n";
            out << "fdr_prime_complement,,," << tau << ","
                << csv_double(*report.fdr_prime_complement[t]) << "\n";
        }
    }
    return out.str();
}

std::string render_identification_json(const IdentificationReport& report) {
    nlohmann::json doc;
    doc["alpha"] = report.alpha;
    doc["rank_ns"] = report.rank_ns;
    nlohmann::json ranks = nlohmann::json::object();
    for (std::size_t d = 0; d < report.labels.size(); ++d) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& value : report.rank_rates[d]) row.push_back(opt_json(value));
        ranks[report.labels[d]] = row;
    }
    doc["rank_n"] = ranks;
    doc["closed_set_discrepancy"] = report.rank_discrepancy;
    doc["open_set"] = report.open_set;
    if (report.open_set) {
        doc["taus"] = report.taus;
        nlohmann::json dir_rows = nlohmann::json::object();
        nlohmann::json far_rows = nlohmann::json::object();
        for (std::size_t d = 0; d < report.labels.size(); ++d) {
            nlohmann::json dir_row = nlohmann::json::array();
            nlohmann::json far_row = nlohmann::json::array();
            for (const auto& value : report.dir_rates[d]) dir_row.push_back(opt_json(value));
            for (const auto& value : report.far_rates[d]) far_row.push_back(opt_json(value));
            dir_rows[report.labels[d]] = dir_row;
            far_rows[report.labels[d]] = far_row;
        }
        doc["dir"] = dir_rows;
        doc["far"] = far_rows;
        nlohmann::json literal = nlohmann::json::array();
        nlohmann::json complement = nlohmann::json::array();
        for (const auto& value : report.fdr_prime_literal) literal.push_back(opt_json(value));
        for (const auto& value : report.fdr_prime_complement) {
            complement.push_back(opt_json(value));
        }
        doc["fdr_prime"] = literal;
        doc["fdr_prime_complement"] = complement;
    }
    doc["warnings"] = report.warnings;
    return doc.dump(2) + "\n";
}

}  // namespace fairscore
