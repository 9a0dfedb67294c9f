#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairscore/error_rates.hpp"
#include "fairscore/fdr.hpp"
#include "fairscore/ingest.hpp"
#include "fairscore/report.hpp"
#include "fairscore/svg.hpp"
#include "fairscore/synthetic.hpp"

namespace fs = std::filesystem;
using namespace fairscore;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitDegenerate = 3;

struct CommonOptions {
    std::string out_dir = ".";
    std::string formats = "csv,json";
    std::string polarity = "similarity";
    std::string config_path;
};

/// One flat `key = value` config entry bound to a CLI flag. Values apply only
/// when the flag was not given on the command line: flags > config > defaults.
struct ConfigKey {
    std::string key;
    std::string flag;
    std::function<void(const std::string&)> apply;
};

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t");
    return text.substr(begin, end - begin + 1);
}

void apply_config_file(const CLI::App* cmd, const std::string& path,
                       const std::vector<ConfigKey>& keys) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::empty_file, "cannot open config file " + path);
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw Error(errc::malformed_row, "config line is not key=value", line_no);
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const auto it = std::find_if(keys.begin(), keys.end(),
                                     [&](const ConfigKey& k) { return k.key == key; });
        if (it == keys.end()) {
            std::cerr << "warning: " << path << ": ignoring unknown config key '" << key
                      << "'\n";
            continue;
        }
        if (cmd->count(it->flag) == 0) it->apply(value);
    }
}

ConfigKey bind_string(const std::string& key, const std::string& flag, std::string& target) {
    return {key, flag, [&target](const std::string& value) { target = value; }};
}

ConfigKey bind_double(const std::string& key, const std::string& flag, double& target) {
    return {key, flag, [&target, key](const std::string& value) {
                try {
                    target = std::stod(value);
                } catch (const std::exception&) {
                    throw Error(errc::domain_error,
                                "config value for '" + key + "' is not a number");
                }
            }};
}

std::vector<ConfigKey> common_config_keys(CommonOptions& common) {
    return {bind_string("out", "--out", common.out_dir),
            bind_string("format", "--format", common.formats),
            bind_string("polarity", "--polarity", common.polarity)};
}

Polarity parse_polarity(const std::string& text) {
    if (text == "similarity") return Polarity::similarity;
    if (text == "distance") return Polarity::distance;
    throw Error(errc::domain_error, "polarity must be similarity or distance");
}

std::set<std::string> parse_formats(const std::string& text) {
    std::set<std::string> formats;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (token != "csv" && token != "json" && token != "svg") {
            throw Error(errc::domain_error, "format must be a subset of csv,json,svg");
        }
        formats.insert(token);
    }
    return formats;
}

void emit_warnings(const Diagnostics& diag) {
    for (const std::string& warning : diag.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(errc::empty_file, "cannot write " + path.string());
    }
    out << content;
}

std::string sanitize(const std::string& label) {
    std::string out;
    for (char c : label) {
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    }
    return out.empty() ? "_" : out;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            values.push_back(std::stod(token));
        } catch (const std::exception&) {
            throw Error(errc::domain_error, std::string("cannot parse ") + what + " '" +
                                                token + "'");
        }
    }
    if (values.empty()) {
        throw Error(errc::domain_error, std::string("empty ") + what + " list");
    }
    return values;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOptions {
    CommonOptions common;
    std::string dev_path;
    std::string test_path;
    std::string data_path;  // single-file mode with a split column
    std::string grid = "1,2,3,4,5";
    double alpha = 0.5;
    double epsilon = -1.0;  // <0 means unset
};

int run_evaluate(const EvaluateOptions& opt) {
    if (opt.data_path.empty() && (opt.dev_path.empty() || opt.test_path.empty())) {
        throw Error(errc::domain_error, "evaluate needs --dev and --test, or --data");
    }
    Diagnostics diag;
    const Polarity polarity = parse_polarity(opt.common.polarity);
    SplitDataset data = opt.data_path.empty()
                            ? load_split(opt.dev_path, opt.test_path, {}, polarity, &diag)
                            : load_split_single(opt.data_path, {}, polarity, &diag);
    emit_warnings(diag);

    std::optional<double> epsilon;
    if (opt.epsilon >= 0.0) epsilon = opt.epsilon;
    const OperatingPointGrid grid = OperatingPointGrid::parse(opt.grid);
    const EvaluationReport report =
        make_report(data, grid, opt.alpha, epsilon, diag.warnings);
    for (std::size_t i = diag.warnings.size(); i < report.warnings.size(); ++i) {
        std::cerr << "warning: " << report.warnings[i] << "\n";
    }

    const std::set<std::string> formats = parse_formats(opt.common.formats);
    const fs::path out_dir(opt.common.out_dir);
    write_file(out_dir / "evaluate_report.txt", render_evaluation_text(report));
    if (formats.count("csv")) {
        write_file(out_dir / "evaluate_report.csv", render_evaluation_csv(report));
    }
    if (formats.count("json")) {
        write_file(out_dir / "evaluate_report.json", render_evaluation_json(report));
    }
    if (formats.count("svg")) {
        write_file(out_dir / "evaluate_report.svg",
                   render_curves_svg({"system"}, {report.curve}));
    }

    if (all_degenerate(report)) {
        std::cerr << "degenerate calibration: every grid point is finer than the dev impostor "
                     "resolution (reject-all thresholds)\n";
        return kExitDegenerate;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// fdr-curve

struct CurveOptions {
    CommonOptions common;
    std::vector<std::string> dev_paths;
    std::vector<std::string> test_paths;
    std::vector<std::string> labels;
    std::string grid = "1,2,3,4,5";
    double alpha = 0.5;
};

int run_fdr_curve(const CurveOptions& opt) {
    if (opt.dev_paths.empty()) {
        throw Error(errc::domain_error, "fdr-curve needs at least one --dev/--test pair");
    }
    if (opt.dev_paths.size() != opt.test_paths.size()) {
        throw Error(errc::domain_error, "--dev and --test must be given the same number of "
                                        "times (one pair per system)");
    }
    if (!opt.labels.empty() && opt.labels.size() != opt.dev_paths.size()) {
        throw Error(errc::domain_error, "--label count must match the number of systems");
    }
    const Polarity polarity = parse_polarity(opt.common.polarity);
    const OperatingPointGrid grid = OperatingPointGrid::parse(opt.grid);

    std::vector<std::string> labels = opt.labels;
    for (std::size_t i = labels.size(); i < opt.dev_paths.size(); ++i) {
        labels.push_back("system" + std::to_string(i + 1));
    }

    std::vector<FdrCurve> curves;
    bool any_usable_point = false;
    for (std::size_t i = 0; i < opt.dev_paths.size(); ++i) {
        Diagnostics diag;
        SplitDataset data = load_split(opt.dev_paths[i], opt.test_paths[i], {}, polarity, &diag);
        emit_warnings(diag);
        curves.push_back(fdr_curve(data, grid, opt.alpha));
        for (const FdrPoint& point : curves.back().points) {
            any_usable_point |= !point.threshold.degenerate;
        }
    }

    const std::set<std::string> formats = parse_formats(opt.common.formats);
    const fs::path out_dir(opt.common.out_dir);
    if (formats.count("csv")) {
        write_file(out_dir / "fdr_curve.csv", render_curves_csv(labels, curves));
    }
    if (formats.count("svg")) {
        write_file(out_dir / "fdr_curve.svg", render_curves_svg(labels, curves));
    }
    if (!any_usable_point) {
        std::cerr << "degenerate calibration: every grid point of every system is reject-all\n";
        return kExitDegenerate;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// det

struct DetOptions {
    CommonOptions common;
    std::string test_path;
    std::vector<std::string> demos;
};

int run_det(const DetOptions& opt) {
    if (opt.test_path.empty()) {
        throw Error(errc::domain_error, "det needs --test (or a config file providing it)");
    }
    Diagnostics diag;
    const ScoreSet test = load_scores(opt.test_path, {}, parse_polarity(opt.common.polarity),
                                      &diag);
    emit_warnings(diag);

    std::vector<std::string> demos = opt.demos;
    if (demos.empty()) demos = test.label_universe();

    const std::set<std::string> formats = parse_formats(opt.common.formats);
    const fs::path out_dir(opt.common.out_dir);
    std::vector<svg::Series> series;
    std::size_t succeeded = 0;
    for (const std::string& demo : demos) {
        std::vector<DetPoint> points;
        try {
            points = det_points(test, demo);
        } catch (const Error& err) {
            std::cerr << "skipped demographic '" << demo << "': " << err.what() << "\n";
            continue;
        }
        ++succeeded;
        if (formats.count("csv")) {
            std::ostringstream csv;
            csv << "fmr,fnmr\n";
            char buf[64];
            for (const DetPoint& p : points) {
                auto fmr_end = std::to_chars(buf, buf + sizeof(buf), p.fmr).ptr;
                csv.write(buf, fmr_end - buf);
                csv << ',';
                auto fnmr_end = std::to_chars(buf, buf + sizeof(buf), p.fnmr).ptr;
                csv.write(buf, fnmr_end - buf);
                csv << '\n';
            }
            write_file(out_dir / ("det_" + sanitize(demo) + ".csv"), csv.str());
        }
        svg::Series s;
        s.label = demo;
        for (const DetPoint& p : points) s.points.emplace_back(p.fmr, p.fnmr);
        series.push_back(std::move(s));
    }
    if (succeeded == 0) {
        std::cerr << "no requested demographic had usable DET data\n";
        return kExitInputError;
    }
    if (formats.count("svg")) {
        svg::ChartOptions options;
        options.title = "Per-demographic DET curves";
        options.x_label = "FMR";
        options.y_label = "FNMR";
        write_file(out_dir / "det.svg", svg::det_chart(series, options));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// synth

struct SynthOptions {
    std::string preset_name;
    std::string spec_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
};

int run_synth(const SynthOptions& opt) {
    if (opt.preset_name.empty() == opt.spec_path.empty()) {
        throw Error(errc::invalid_spec, "give exactly one of a preset name or --spec FILE");
    }
    SyntheticSpec spec;
    if (!opt.preset_name.empty()) {
        spec = preset(opt.preset_name);
    } else {
        std::ifstream in(opt.spec_path);
        if (!in) {
            throw Error(errc::empty_file, "cannot open " + opt.spec_path);
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        spec = spec_from_json(buffer.str());
    }
    if (opt.seed.has_value()) spec.seed = *opt.seed;

    const SplitDataset data = generate(spec);
    fs::create_directories(opt.out_dir);
    write_scores((fs::path(opt.out_dir) / "dev.csv").string(), data.dev);
    write_scores((fs::path(opt.out_dir) / "test.csv").string(), data.test);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// identify

struct IdentifyOptions {
    CommonOptions common;
    std::string trials_path;
    std::string taus;   // explicit thresholds
    std::string grid;   // or FAR operating points on the out-of-gallery pool
    std::string ranks = "1";
    std::string mode = "both";
    double alpha = 0.5;
};

int run_identify(const IdentifyOptions& opt) {
    if (opt.trials_path.empty()) {
        throw Error(errc::domain_error,
                    "identify needs --trials (or a config file providing it)");
    }
    if (opt.mode != "closed" && opt.mode != "open" && opt.mode != "both") {
        throw Error(errc::domain_error, "mode must be closed, open, or both");
    }
    Diagnostics diag;
    const GallerySet set = load_trials(opt.trials_path, {}, &diag);
    emit_warnings(diag);

    IdentificationReport report;
    report.alpha = opt.alpha;
    report.labels = set.demographics();
    const bool want_closed = opt.mode != "open";
    const bool want_open = opt.mode != "closed";

    if (want_closed) {
        for (double value : parse_double_list(opt.ranks, "rank")) {
            if (value < 1.0 || value != std::floor(value)) {
                throw Error(errc::domain_error, "ranks must be positive integers");
            }
            report.rank_ns.push_back(static_cast<std::size_t>(value));
        }
        for (const DemographicLabel& label : report.labels) {
            std::vector<std::optional<double>> row;
            for (std::size_t n : report.rank_ns) {
                try {
                    row.emplace_back(rank_n_rate(set, n, label));
                } catch (const Error&) {
                    row.emplace_back(std::nullopt);
                }
            }
            report.rank_rates.push_back(std::move(row));
        }
        for (std::size_t n : report.rank_ns) {
            try {
                report.rank_discrepancy.push_back(closed_set_discrepancy(set, n));
            } catch (const Error& err) {
                report.warnings.push_back(std::string("closed-set discrepancy unavailable: ") +
                                          err.what());
                report.rank_discrepancy.push_back(0.0);
            }
        }
    }

    if (want_open) {
        report.open_set = true;
        if (!opt.taus.empty()) {
            report.taus = parse_double_list(opt.taus, "tau");
        } else if (!opt.grid.empty()) {
            // Operating points on the pooled out-of-gallery best-score
            // distribution (the open-set zeroth-effort impostors).
            std::vector<double> best;
            for (const IdentificationTrial& trial : set.trials()) {
                if (trial.in_gallery) continue;
                double top = -std::numeric_limits<double>::infinity();
                for (const auto& [id, score] : trial.gallery_scores) {
                    top = std::max(top, score);
                }
                best.push_back(top);
            }
            if (best.empty()) {
                report.warnings.emplace_back(
                    "EmptyCohort: no out-of-gallery trials; cannot calibrate --grid "
                    "operating points");
            } else {
                std::sort(best.begin(), best.end());
                const OperatingPointGrid grid = OperatingPointGrid::parse(opt.grid);
                for (double x : grid.exponents()) {
                    report.taus.push_back(calibrate_from_sorted(best, x).tau);
                }
            }
        } else {
            throw Error(errc::domain_error, "open-set mode needs --tau or --grid");
        }

        for (const DemographicLabel& label : report.labels) {
            std::vector<std::optional<double>> dir_row;
            std::vector<std::optional<double>> far_row;
            for (double tau : report.taus) {
                try {
                    dir_row.emplace_back(dir(set, tau, label));
                } catch (const Error&) {
                    dir_row.emplace_back(std::nullopt);
                }
                try {
                    far_row.emplace_back(far_open(set, tau, label));
                } catch (const Error&) {
                    far_row.emplace_back(std::nullopt);
                }
            }
            report.dir_rates.push_back(std::move(dir_row));
            report.far_rates.push_back(std::move(far_row));
        }
        bool warned = false;
        for (double tau : report.taus) {
            try {
                report.fdr_prime_literal.emplace_back(fdr_prime(set, tau, opt.alpha));
                report.fdr_prime_complement.emplace_back(
                    fdr_prime_complement(set, tau, opt.alpha));
            } catch (const Error& err) {
                if (!warned) {
                    report.warnings.push_back(std::string("open-set discrepancy unavailable: ") +
                                              err.what());
                    warned = true;
                }
                report.fdr_prime_literal.emplace_back(std::nullopt);
                report.fdr_prime_complement.emplace_back(std::nullopt);
            }
        }
    }

    for (const std::string& warning : report.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }

    const std::set<std::string> formats = parse_formats(opt.common.formats);
    const fs::path out_dir(opt.common.out_dir);
    write_file(out_dir / "identify_report.txt", render_identification_text(report));
    if (formats.count("csv")) {
        write_file(out_dir / "identify_report.csv", render_identification_csv(report));
    }
    if (formats.count("json")) {
        write_file(out_dir / "identify_report.json", render_identification_json(report));
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--out", common.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--format", common.formats, "Comma-separated subset of csv,json,svg")
        ->capture_default_str();
    cmd->add_option("--polarity", common.polarity,
                    "Score orientation of the input files (similarity|distance)")
        ->check(CLI::IsMember({"similarity", "distance"}))
        ->capture_default_str();
    cmd->add_option("--config", common.config_path,
                    "Flat key=value config file; flags take precedence");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fairscore: demographic-fairness evaluation of biometric verification systems\n"
        "from precomputed comparison scores (FDR, AUFDR, DET, rank-n/DIR/FAR extensions)."};
    app.require_subcommand(1);

    EvaluateOptions evaluate_opt;
    CLI::App* evaluate_cmd = app.add_subcommand(
        "evaluate", "Rate tables, FDR per operating point, AUFDR, optional verdicts");
    evaluate_cmd->add_option("--dev", evaluate_opt.dev_path,
                             "Development (calibration) score CSV");
    evaluate_cmd->add_option("--test", evaluate_opt.test_path, "Test score CSV");
    evaluate_cmd->add_option("--data", evaluate_opt.data_path,
                             "Single CSV carrying both partitions in a 'split' column");
    evaluate_cmd->add_option("--grid", evaluate_opt.grid, "FMR-target exponents, e.g. 1,2,3,4,5")
        ->capture_default_str();
    evaluate_cmd->add_option("--alpha", evaluate_opt.alpha, "Weight of the false-match gap")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    evaluate_cmd->add_option("--epsilon", evaluate_opt.epsilon,
                             "Fairness slack; verdicts are rendered only when set")
        ->check(CLI::Range(0.0, 1.0));
    add_common(evaluate_cmd, evaluate_opt.common);

    CurveOptions curve_opt;
    CLI::App* curve_cmd =
        app.add_subcommand("fdr-curve", "FDR-vs-x curves for one or more labeled systems");
    curve_cmd->add_option("--dev", curve_opt.dev_paths, "Dev CSV (repeat per system)");
    curve_cmd->add_option("--test", curve_opt.test_paths, "Test CSV (repeat per system)");
    curve_cmd->add_option("--label", curve_opt.labels, "System label (repeat per system)");
    curve_cmd->add_option("--grid", curve_opt.grid, "Shared FMR-target exponents")
        ->capture_default_str();
    curve_cmd->add_option("--alpha", curve_opt.alpha, "Weight of the false-match gap")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    add_common(curve_cmd, curve_opt.common);

    DetOptions det_opt;
    CLI::App* det_cmd = app.add_subcommand("det", "Per-demographic DET curve data");
    det_cmd->add_option("--test", det_opt.test_path, "Score CSV");
    det_cmd->add_option("--demo", det_opt.demos,
                        "Demographic to plot (repeatable; default: all)");
    add_common(det_cmd, det_opt.common);

    SynthOptions synth_opt;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "Generate a synthetic dev/test score set");
    synth_cmd->add_option("preset", synth_opt.preset_name, "Built-in preset (fair3|unfair3)");
    synth_cmd->add_option("--spec", synth_opt.spec_path, "JSON generator spec file");
    synth_cmd->add_option("--seed", synth_opt.seed, "Override the spec seed");
    synth_cmd->add_option("--out", synth_opt.out_dir, "Output directory")
        ->capture_default_str();

    IdentifyOptions identify_opt;
    CLI::App* identify_cmd = app.add_subcommand(
        "identify", "Closed-set rank-n and open-set DIR/FAR fairness report");
    identify_cmd->add_option("--trials", identify_opt.trials_path,
                             "Identification trial CSV");
    identify_cmd->add_option("--tau", identify_opt.taus, "Comma-separated thresholds");
    identify_cmd->add_option("--grid", identify_opt.grid,
                             "FAR-target exponents calibrated on the out-of-gallery pool");
    identify_cmd->add_option("--rank", identify_opt.ranks, "Comma-separated rank-n values")
        ->capture_default_str();
    identify_cmd->add_option("--mode", identify_opt.mode, "closed|open|both")
        ->check(CLI::IsMember({"closed", "open", "both"}))
        ->capture_default_str();
    identify_cmd->add_option("--alpha", identify_opt.alpha, "Weight of the FAR gap")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    add_common(identify_cmd, identify_opt.common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (evaluate_cmd->parsed()) {
            auto keys = common_config_keys(evaluate_opt.common);
            keys.push_back(bind_string("dev", "--dev", evaluate_opt.dev_path));
            keys.push_back(bind_string("test", "--test", evaluate_opt.test_path));
            keys.push_back(bind_string("data", "--data", evaluate_opt.data_path));
            keys.push_back(bind_string("grid", "--grid", evaluate_opt.grid));
            keys.push_back(bind_double("alpha", "--alpha", evaluate_opt.alpha));
            keys.push_back(bind_double("epsilon", "--epsilon", evaluate_opt.epsilon));
            apply_config_file(evaluate_cmd, evaluate_opt.common.config_path, keys);
            return run_evaluate(evaluate_opt);
        }
        if (curve_cmd->parsed()) {
            auto keys = common_config_keys(curve_opt.common);
            keys.push_back({"dev", "--dev", [&](const std::string& v) {
                                curve_opt.dev_paths.push_back(v);
                            }});
            keys.push_back({"test", "--test", [&](const std::string& v) {
                                curve_opt.test_paths.push_back(v);
                            }});
            keys.push_back({"label", "--label", [&](const std::string& v) {
                                curve_opt.labels.push_back(v);
                            }});
            keys.push_back(bind_string("grid", "--grid", curve_opt.grid));
            keys.push_back(bind_double("alpha", "--alpha", curve_opt.alpha));
            apply_config_file(curve_cmd, curve_opt.common.config_path, keys);
            return run_fdr_curve(curve_opt);
        }
        if (det_cmd->parsed()) {
            auto keys = common_config_keys(det_opt.common);
            keys.push_back(bind_string("test", "--test", det_opt.test_path));
            keys.push_back({"demo", "--demo", [&](const std::string& v) {
                                det_opt.demos.push_back(v);
                            }});
            apply_config_file(det_cmd, det_opt.common.config_path, keys);
            return run_det(det_opt);
        }
        if (synth_cmd->parsed()) return run_synth(synth_opt);
        if (identify_cmd->parsed()) {
            auto keys = common_config_keys(identify_opt.common);
            keys.push_back(bind_string("trials", "--trials", identify_opt.trials_path));
            keys.push_back(bind_string("tau", "--tau", identify_opt.taus));
            keys.push_back(bind_string("grid", "--grid", identify_opt.grid));
            keys.push_back(bind_string("rank", "--rank", identify_opt.ranks));
            keys.push_back(bind_string("mode", "--mode", identify_opt.mode));
            keys.push_back(bind_double("alpha", "--alpha", identify_opt.alpha));
            apply_config_file(identify_cmd, identify_opt.common.config_path, keys);
            return run_identify(identify_opt);
        }
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
