#pragma once

// Test-only brute-force oracles. Everything here is a naive O(N) or
// enumeration re-statement of the contracts, kept independent of the
// library's implementation paths.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fairscore/identification.hpp"
#include "fairscore/score_model.hpp"

namespace oracle {

using fairscore::ComparisonRecord;
using fairscore::DemographicLabel;
using fairscore::GallerySet;
using fairscore::IdentificationTrial;
using fairscore::Kind;
using fairscore::ScoreSet;

inline double naive_fmr(const std::vector<double>& impostor_scores, double tau) {
    std::size_t accepted = 0;
    for (double s : impostor_scores) {
        if (s >= tau) ++accepted;
    }
    return static_cast<double>(accepted) / static_cast<double>(impostor_scores.size());
}

inline double naive_fnmr(const std::vector<double>& genuine_scores, double tau) {
    std::size_t rejected = 0;
    for (double s : genuine_scores) {
        if (s < tau) ++rejected;
    }
    return static_cast<double>(rejected) / static_cast<double>(genuine_scores.size());
}

inline std::vector<double> cell_scores(const ScoreSet& set, const DemographicLabel& enroll,
                                       const DemographicLabel& probe, Kind kind) {
    std::vector<double> scores;
    for (const ComparisonRecord& rec : set.records()) {
        if (rec.kind == kind && rec.enroll_demo == enroll && rec.probe_demo == probe) {
            scores.push_back(rec.score);
        }
    }
    return scores;
}

inline double naive_a_gap(const ScoreSet& set, double tau) {
    std::vector<double> rates;
    for (const DemographicLabel& demo : set.label_universe()) {
        const std::vector<double> scores = cell_scores(set, demo, demo, Kind::impostor);
        if (!scores.empty()) rates.push_back(naive_fmr(scores, tau));
    }
    if (rates.size() < 2) return 0.0;
    return *std::max_element(rates.begin(), rates.end()) -
           *std::min_element(rates.begin(), rates.end());
}

inline double naive_b_gap(const ScoreSet& set, double tau) {
    std::vector<double> rates;
    for (const DemographicLabel& demo : set.label_universe()) {
        const std::vector<double> scores = cell_scores(set, demo, demo, Kind::genuine);
        if (!scores.empty()) rates.push_back(naive_fnmr(scores, tau));
    }
    if (rates.size() < 2) return 0.0;
    return *std::max_element(rates.begin(), rates.end()) -
           *std::min_element(rates.begin(), rates.end());
}

inline double naive_fdr(double a, double b, double alpha) {
    return 1.0 - (alpha * a + (1.0 - alpha) * b);
}

/// Smallest observed impostor score whose naive FMR meets the target, by
/// scanning every candidate in ascending order; reject-all sentinel otherwise.
inline std::pair<double, bool> naive_calibrate(std::vector<double> impostors, double exponent) {
    const double target = std::pow(10.0, -exponent);
    std::sort(impostors.begin(), impostors.end());
    std::vector<double> candidates = impostors;
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (double s : candidates) {
        if (naive_fmr(impostors, s) <= target + 1e-12) return {s, false};
    }
    return {impostors.back() + 1.0, true};
}

// --- identification ---

inline std::size_t naive_rank(const IdentificationTrial& trial, bool mate_first) {
    const double mate = trial.gallery_scores.at(*trial.mate_id);
    std::size_t rank = 1;
    for (const auto& [id, score] : trial.gallery_scores) {
        if (id == *trial.mate_id) continue;
        if (mate_first ? score > mate : score >= mate) ++rank;
    }
    return rank;
}

inline std::optional<double> naive_rank_n(const GallerySet& set, std::size_t n,
                                          const std::optional<DemographicLabel>& demo) {
    std::size_t total = 0;
    std::size_t hits = 0;
    for (const IdentificationTrial& trial : set.trials()) {
        if (!trial.in_gallery) continue;
        if (demo.has_value() && trial.probe_demo != *demo) continue;
        ++total;
        if (naive_rank(trial, true) <= n) ++hits;
    }
    if (total == 0) return std::nullopt;
    return static_cast<double>(hits) / static_cast<double>(total);
}

inline std::optional<double> naive_dir(const GallerySet& set, double tau,
                                       const std::optional<DemographicLabel>& demo) {
    std::size_t total = 0;
    std::size_t hits = 0;
    for (const IdentificationTrial& trial : set.trials()) {
        if (!trial.in_gallery) continue;
        if (demo.has_value() && trial.probe_demo != *demo) continue;
        ++total;
        if (naive_rank(trial, true) == 1 && trial.gallery_scores.at(*trial.mate_id) >= tau) {
            ++hits;
        }
    }
    if (total == 0) return std::nullopt;
    return static_cast<double>(hits) / static_cast<double>(total);
}

inline std::optional<double> naive_far(const GallerySet& set, double tau,
                                       const std::optional<DemographicLabel>& demo) {
    std::size_t total = 0;
    std::size_t hits = 0;
    for (const IdentificationTrial& trial : set.trials()) {
        if (trial.in_gallery) continue;
        if (demo.has_value() && trial.probe_demo != *demo) continue;
        ++total;
        double best = trial.gallery_scores.begin()->second;
        for (const auto& [id, score] : trial.gallery_scores) best = std::max(best, score);
        if (best >= tau) ++hits;
    }
    if (total == 0) return std::nullopt;
    return static_cast<double>(hits) / static_cast<double>(total);
}

inline std::optional<double> naive_fdr_prime(const GallerySet& set, double tau, double alpha) {
    std::set<DemographicLabel> demos;
    for (const IdentificationTrial& trial : set.trials()) demos.insert(trial.probe_demo);
    std::vector<double> fars;
    std::vector<double> dirs;
    bool any_both = false;
    for (const DemographicLabel& demo : demos) {
        auto d = naive_dir(set, tau, demo);
        auto f = naive_far(set, tau, demo);
        if (d.has_value()) dirs.push_back(*d);
        if (f.has_value()) fars.push_back(*f);
        if (d.has_value() && f.has_value()) any_both = true;
    }
    if (!any_both) return std::nullopt;
    auto gap = [](const std::vector<double>& v) {
        if (v.size() < 2) return 0.0;
        return *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end());
    };
    return alpha * gap(fars) + (1.0 - alpha) * gap(dirs);
}

// --- random test data (tie-rich lattices so boundary handling is exercised) ---

inline double lattice_score(std::mt19937& rng) {
    std::uniform_int_distribution<int> quarter(-12, 12);
    return static_cast<double>(quarter(rng)) / 4.0;
}

inline ScoreSet random_score_set(std::mt19937& rng, std::size_t max_records = 200,
                                 std::size_t max_demos = 4, bool force_impostor = true) {
    static const char* kLabels[] = {"A", "B", "C", "D"};
    std::uniform_int_distribution<std::size_t> demo_count(1, max_demos);
    const std::size_t n_demos = demo_count(rng);
    std::uniform_int_distribution<std::size_t> record_count(1, max_records);
    std::size_t n_records = record_count(rng);

    std::uniform_int_distribution<std::size_t> pick_demo(0, n_demos - 1);
    std::bernoulli_distribution is_genuine(0.4);
    std::vector<ComparisonRecord> records;
    for (std::size_t i = 0; i < n_records; ++i) {
        ComparisonRecord rec;
        rec.kind = is_genuine(rng) ? Kind::genuine : Kind::impostor;
        rec.enroll_demo = kLabels[pick_demo(rng)];
        rec.probe_demo = rec.kind == Kind::genuine ? rec.enroll_demo : kLabels[pick_demo(rng)];
        rec.score = lattice_score(rng);
        records.push_back(std::move(rec));
    }
    if (force_impostor) {
        const bool has_impostor =
            std::any_of(records.begin(), records.end(),
                        [](const ComparisonRecord& r) { return r.kind == Kind::impostor; });
        if (!has_impostor) {
            records.push_back(ComparisonRecord{"A", "A", lattice_score(rng), Kind::impostor});
        }
    }
    return ScoreSet(std::move(records));
}

inline GallerySet random_gallery(std::mt19937& rng, std::size_t max_identities = 10,
                                 std::size_t max_trials = 50) {
    static const char* kDemos[] = {"X", "Y", "Z"};
    std::uniform_int_distribution<std::size_t> id_count(1, max_identities);
    const std::size_t n_ids = id_count(rng);
    std::vector<std::string> gallery;
    for (std::size_t i = 0; i < n_ids; ++i) gallery.push_back("g" + std::to_string(i));

    std::uniform_int_distribution<std::size_t> trial_count(1, max_trials);
    std::uniform_int_distribution<std::size_t> pick_demo(0, 2);
    std::uniform_int_distribution<std::size_t> pick_id(0, n_ids - 1);
    std::bernoulli_distribution in_gallery(0.6);

    const std::size_t n_trials = trial_count(rng);
    std::vector<IdentificationTrial> trials;
    for (std::size_t i = 0; i < n_trials; ++i) {
        IdentificationTrial trial;
        trial.probe_id = "p" + std::to_string(i);
        trial.probe_demo = kDemos[pick_demo(rng)];
        trial.in_gallery = in_gallery(rng);
        for (const std::string& id : gallery) trial.gallery_scores[id] = lattice_score(rng);
        if (trial.in_gallery) trial.mate_id = gallery[pick_id(rng)];
        trials.push_back(std::move(trial));
    }
    return GallerySet(std::move(trials));
}

}  // namespace oracle
