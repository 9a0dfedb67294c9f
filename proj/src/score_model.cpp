#include "fairscore/score_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fairscore {

ScoreSet::ScoreSet(std::vector<ComparisonRecord> records) : records_(std::move(records)) {
    std::set<DemographicLabel> labels;
    for (const ComparisonRecord& rec : records_) {
        if (rec.enroll_demo.empty() || rec.probe_demo.empty()) {
            throw Error(errc::domain_error, "demographic labels must be non-empty");
        }
        if (!std::isfinite(rec.score)) {
            throw Error(errc::domain_error, "scores must be finite");
        }
        if (rec.kind == Kind::genuine && rec.enroll_demo != rec.probe_demo) {
            throw Error(errc::domain_error,
                        "genuine pair with mismatched demographics: " + rec.enroll_demo +
                            " vs " + rec.probe_demo);
        }
        if (rec.kind == Kind::impostor) ++impostor_count_;
        labels.insert(rec.enroll_demo);
        labels.insert(rec.probe_demo);
    }
    labels_.assign(labels.begin(), labels.end());
}

SplitDataset make_split(ScoreSet dev, ScoreSet test, Diagnostics* diag) {
    const auto& dev_labels = dev.label_universe();
    for (const DemographicLabel& label : test.label_universe()) {
        if (!std::binary_search(dev_labels.begin(), dev_labels.end(), label)) {
            warn_to(diag, "test set contains demographic '" + label +
                              "' absent from the dev set; thresholds are demographic-blind, "
                              "so it is evaluated anyway");
        }
    }
    return SplitDataset{std::move(dev), std::move(test)};
}

OperatingPointGrid::OperatingPointGrid(std::vector<double> exponents)
    : exponents_(std::move(exponents)) {
    if (exponents_.empty()) {
        throw Error(errc::domain_error, "operating-point grid must be non-empty");
    }
    double prev = 0.0;
    for (double x : exponents_) {
        if (!std::isfinite(x) || x <= 0.0) {
            throw Error(errc::domain_error, "grid exponents must be positive finite reals");
        }
        if (x <= prev) {
            throw Error(errc::domain_error, "grid exponents must be strictly increasing");
        }
        prev = x;
    }
}

OperatingPointGrid OperatingPointGrid::parse(const std::string& text) {
    std::vector<double> exponents;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            double value = std::stod(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size()) throw std::invalid_argument(token);
            exponents.push_back(value);
        } catch (const std::exception&) {
            throw Error(errc::domain_error, "cannot parse grid exponent '" + token + "'");
        }
    }
    return OperatingPointGrid(std::move(exponents));
}

std::vector<ComparisonRecord> normalize_orientation(std::vector<ComparisonRecord> records,
                                                    Polarity polarity) {
    if (polarity == Polarity::distance) {
        for (ComparisonRecord& rec : records) rec.score = -rec.score;
    }
    return records;
}

}  // namespace fairscore
