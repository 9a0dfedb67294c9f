#include "fairscore/synthetic.hpp"

#include <cmath>
#include <random>

#include "json.hpp"

namespace fairscore {

namespace {

/// Stable per-cell sub-seed: FNV-1a over (seed, enroll, probe, kind) pushed
/// through splitmix64. Documented contract - changing it changes every
/// generated dataset.
std::uint64_t cell_seed(std::uint64_t seed, const DemographicLabel& enroll,
                        const DemographicLabel& probe, Kind kind) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix_byte = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(seed >> (8 * i)));
    for (unsigned char c : enroll) mix_byte(c);
    mix_byte(0x1f);
    for (unsigned char c : probe) mix_byte(c);
    mix_byte(0x1f);
    mix_byte(kind == Kind::genuine ? 1 : 2);

    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

/// Marsaglia polar normal sampler over mt19937_64. No libm trig, so streams
/// are stable across standard libraries.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next(double mean, double std) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + std * spare_;
        }
        double u = 0.0;
        double v = 0.0;
        double s = 0.0;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return mean + std * u * f;
    }

private:
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

void validate(const SyntheticSpec& spec) {
    if (spec.per_demo.empty()) {
        throw Error(errc::invalid_spec, "at least one demographic is required");
    }
    if (!(spec.dev_fraction > 0.0 && spec.dev_fraction < 1.0)) {
        throw Error(errc::invalid_spec, "dev_fraction must lie in (0, 1)");
    }
    if (!(spec.cross_count_fraction >= 0.0)) {
        throw Error(errc::invalid_spec, "cross_count_fraction must be >= 0");
    }
    for (const auto& [label, params] : spec.per_demo) {
        if (label.empty()) {
            throw Error(errc::invalid_spec, "demographic labels must be non-empty");
        }
        if (!(params.impostor_std > 0.0) || !(params.genuine_std > 0.0)) {
            throw Error(errc::invalid_spec, "'" + label + "': stds must be positive");
        }
        if (!(params.genuine_mean > params.impostor_mean)) {
            throw Error(errc::invalid_spec,
                        "'" + label + "': genuine_mean must exceed impostor_mean");
        }
        if (params.n_impostor == 0 || params.n_genuine == 0) {
            throw Error(errc::invalid_spec, "'" + label + "': counts must be positive");
        }
    }
}

struct Cell {
    DemographicLabel enroll;
    DemographicLabel probe;
    Kind kind = Kind::impostor;
    double mean = 0.0;
    double std = 1.0;
    std::size_t count = 0;
};

void emit_cell(const Cell& cell, const SyntheticSpec& spec,
               std::vector<ComparisonRecord>& dev, std::vector<ComparisonRecord>& test) {
    NormalStream stream(cell_seed(spec.seed, cell.enroll, cell.probe, cell.kind));
    const auto n_dev = static_cast<std::size_t>(
        static_cast<double>(cell.count) * spec.dev_fraction + 0.5);
    for (std::size_t i = 0; i < cell.count; ++i) {
        const double score = stream.next(cell.mean, cell.std);
        auto& sink = i < n_dev ? dev : test;
        sink.push_back(ComparisonRecord{cell.enroll, cell.probe, score, cell.kind});
    }
}

}  // namespace

SplitDataset generate(const SyntheticSpec& spec) {
    validate(spec);

    std::vector<Cell> cells;
    for (const auto& [enroll, ep] : spec.per_demo) {
        for (const auto& [probe, pp] : spec.per_demo) {
            Cell cell;
            cell.enroll = enroll;
            cell.probe = probe;
            cell.kind = Kind::impostor;
            if (enroll == probe) {
                cell.mean = ep.impostor_mean;
                cell.std = ep.impostor_std;
                cell.count = ep.n_impostor;
            } else {
                cell.std = 0.5 * (ep.impostor_std + pp.impostor_std);
                cell.mean = 0.5 * (ep.impostor_mean + pp.impostor_mean) +
                            spec.cross_mean_offset_stds * cell.std;
                cell.count = static_cast<std::size_t>(
                    spec.cross_count_fraction * 0.5 *
                        static_cast<double>(ep.n_impostor + pp.n_impostor) +
                    0.5);
            }
            if (cell.count > 0) cells.push_back(std::move(cell));
        }
    }
    for (const auto& [demo, params] : spec.per_demo) {
        cells.push_back(Cell{demo, demo, Kind::genuine, params.genuine_mean,
                             params.genuine_std, params.n_genuine});
    }

    std::vector<ComparisonRecord> dev;
    std::vector<ComparisonRecord> test;
    for (const Cell& cell : cells) emit_cell(cell, spec, dev, test);
    return SplitDataset{ScoreSet(std::move(dev)), ScoreSet(std::move(test))};
}

SyntheticSpec preset(const std::string& name) {
    SyntheticSpec spec;
    spec.seed = 42;
    constexpr std::size_t kImpostors = 1000000;
    constexpr std::size_t kGenuines = 10000;
    if (name == "fair3") {
        for (const char* demo : {"0", "1", "2"}) {
            spec.per_demo[demo] =
                DemographicScoreParams{0.0, 1.0, 6.0, 1.0, kImpostors, kGenuines};
        }
    } else if (name == "unfair3") {
        spec.per_demo["0"] = DemographicScoreParams{0.0, 1.0, 6.0, 1.0, kImpostors, kGenuines};
        spec.per_demo["1"] = DemographicScoreParams{0.0, 1.0, 5.5, 1.05, kImpostors, kGenuines};
        spec.per_demo["2"] =
            DemographicScoreParams{0.15, 1.05, 5.0, 1.1, kImpostors, kGenuines};
    } else {
        throw Error(errc::unknown_preset, "unknown preset '" + name + "'");
    }
    return spec;
}

SyntheticSpec spec_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& err) {
        throw Error(errc::invalid_spec, std::string("spec is not valid JSON: ") + err.what());
    }
    SyntheticSpec spec;
    try {
        spec.seed = doc.value("seed", std::uint64_t{0});
        spec.dev_fraction = doc.value("dev_fraction", 0.5);
        spec.cross_mean_offset_stds = doc.value("cross_mean_offset_stds", -0.5);
        spec.cross_count_fraction = doc.value("cross_count_fraction", 0.1);
        if (!doc.contains("demographics") || !doc["demographics"].is_object()) {
            throw Error(errc::invalid_spec, "spec needs a 'demographics' object");
        }
        for (const auto& [label, entry] : doc["demographics"].items()) {
            DemographicScoreParams params;
            params.impostor_mean = entry.at("impostor_mean").get<double>();
            params.impostor_std = entry.at("impostor_std").get<double>();
            params.genuine_mean = entry.at("genuine_mean").get<double>();
            params.genuine_std = entry.at("genuine_std").get<double>();
            params.n_impostor = entry.at("n_impostor").get<std::size_t>();
            params.n_genuine = entry.at("n_genuine").get<std::size_t>();
            spec.per_demo[label] = params;
        }
    } catch (const nlohmann::json::exception& err) {
        throw Error(errc::invalid_spec, std::string("malformed spec field: ") + err.what());
    }
    validate(spec);
    return spec;
}

std::string spec_to_json(const SyntheticSpec& spec) {
    nlohmann::json doc;
    doc["seed"] = spec.seed;
    doc["dev_fraction"] = spec.dev_fraction;
    doc["cross_mean_offset_stds"] = spec.cross_mean_offset_stds;
    doc["cross_count_fraction"] = spec.cross_count_fraction;
    nlohmann::json demos = nlohmann::json::object();
    for (const auto& [label, params] : spec.per_demo) {
        demos[label] = {{"impostor_mean", params.impostor_mean},
                        {"impostor_std", params.impostor_std},
                        {"genuine_mean", params.genuine_mean},
                        {"genuine_std", params.genuine_std},
                        {"n_impostor", params.n_impostor},
                        {"n_genuine", params.n_genuine}};
    }
    doc["demographics"] = demos;
    return doc.dump(2);
}

}  // namespace fairscore
