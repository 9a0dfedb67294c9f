#include "fairscore/identification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fairscore {

namespace {

void require_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(errc::domain_error, "alpha must lie in [0, 1]");
    }
}

bool selected(const IdentificationTrial& trial, const DemoSelector& demo) {
    return !demo.has_value() || trial.probe_demo == *demo;
}

double max_pairwise_gap(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

}  // namespace

GallerySet::GallerySet(std::vector<IdentificationTrial> trials) : trials_(std::move(trials)) {
    for (const IdentificationTrial& trial : trials_) {
        if (trial.gallery_scores.empty()) {
            throw Error(errc::invalid_spec,
                        "trial '" + trial.probe_id + "' has no gallery scores");
        }
        if (trial.probe_demo.empty()) {
            throw Error(errc::invalid_spec,
                        "trial '" + trial.probe_id + "' has an empty demographic label");
        }
        for (const auto& [id, score] : trial.gallery_scores) {
            if (!std::isfinite(score)) {
                throw Error(errc::invalid_spec,
                            "trial '" + trial.probe_id + "' has a non-finite score");
            }
            gallery_ids_.insert(id);
        }
        const bool mate_scored =
            trial.mate_id.has_value() && trial.gallery_scores.count(*trial.mate_id) > 0;
        if (trial.in_gallery != mate_scored) {
            throw Error(errc::invalid_spec,
                        "trial '" + trial.probe_id +
                            "': in_gallery must match the presence of a scored mate");
        }
    }
}

std::vector<DemographicLabel> GallerySet::demographics() const {
    std::set<DemographicLabel> labels;
    for (const IdentificationTrial& trial : trials_) labels.insert(trial.probe_demo);
    return {labels.begin(), labels.end()};
}

std::size_t rank_of(const IdentificationTrial& trial, TieBreak ties) {
    if (!trial.in_gallery || !trial.mate_id.has_value()) {
        throw Error(errc::not_in_gallery, "rank is undefined for out-of-gallery probes");
    }
    const double mate_score = trial.gallery_scores.at(*trial.mate_id);
    std::size_t better = 0;
    for (const auto& [id, score] : trial.gallery_scores) {
        if (id == *trial.mate_id) continue;
        if (ties == TieBreak::mate_first ? score > mate_score : score >= mate_score) ++better;
    }
    return better + 1;
}

double rank_n_rate(const GallerySet& set, std::size_t n, const DemoSelector& demo,
                   TieBreak ties) {
    if (n == 0) throw Error(errc::domain_error, "rank-n requires n >= 1");
    std::size_t cohort = 0;
    std::size_t hits = 0;
    for (const IdentificationTrial& trial : set.trials()) {
        if (!trial.in_gallery || !selected(trial, demo)) continue;
        ++cohort;
        if (rank_of(trial, ties) <= n) ++hits;
    }
    if (cohort == 0) {
        throw Error(errc::empty_cohort, "no in-gallery trials for selector '" +
                                            demo.value_or("all") + "'");
    }
    return static_cast<double>(hits) / static_cast<double>(cohort);
}

double closed_set_discrepancy(const GallerySet& set, std::size_t n, TieBreak ties) {
    std::vector<double> rates;
    for (const DemographicLabel& label : set.demographics()) {
        bool has_in_gallery = false;
        for (const IdentificationTrial& trial : set.trials()) {
            if (trial.in_gallery && trial.probe_demo == label) {
                has_in_gallery = true;
                break;
            }
        }
        if (has_in_gallery) rates.push_back(rank_n_rate(set, n, label, ties));
    }
    if (rates.empty()) {
        throw Error(errc::empty_cohort, "no demographic has in-gallery trials");
    }
    return max_pairwise_gap(rates);
}

double dir(const GallerySet& set, double tau, const DemoSelector& demo, TieBreak ties) {
    std::size_t cohort = 0;
    std::size_t detected = 0;
    for (const IdentificationTrial& trial : set.trials()) {
        if (!trial.in_gallery || !selected(trial, demo)) continue;
        ++cohort;
        const double mate_score = trial.gallery_scores.at(*trial.mate_id);
        if (rank_of(trial, ties) == 1 && mate_score >= tau) ++detected;
    }
    if (cohort == 0) {
        throw Error(errc::empty_cohort, "no in-gallery trials for selector '" +
                                            demo.value_or("all") + "'");
    }
    return static_cast<double>(detected) / static_cast<double>(cohort);
}

double far_open(const GallerySet& set, double tau, const DemoSelector& demo) {
    std::size_t cohort = 0;
    std::size_t alarms = 0;
    for (const IdentificationTrial& trial : set.trials()) {
        if (trial.in_gallery || !selected(trial, demo)) continue;
        ++cohort;
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& [id, score] : trial.gallery_scores) best = std::max(best, score);
        if (best >= tau) ++alarms;
    }
    if (cohort == 0) {
        throw Error(errc::empty_cohort, "no out-of-gallery trials for selector '" +
                                            demo.value_or("all") + "'");
    }
    return static_cast<double>(alarms) / static_cast<double>(cohort);
}

double fdr_prime(const GallerySet& set, double tau, double alpha, TieBreak ties) {
    require_alpha(alpha);
    std::vector<double> far_rates;
    std::vector<double> dir_rates;
    bool any_demo_has_both = false;
    for (const DemographicLabel& label : set.demographics()) {
        bool has_in = false;
        bool has_out = false;
        for (const IdentificationTrial& trial : set.trials()) {
            if (trial.probe_demo != label) continue;
            (trial.in_gallery ? has_in : has_out) = true;
        }
        if (has_in) dir_rates.push_back(dir(set, tau, label, ties));
        if (has_out) far_rates.push_back(far_open(set, tau, label));
        if (has_in && has_out) any_demo_has_both = true;
    }
    if (!any_demo_has_both) {
        throw Error(errc::empty_cohort,
                    "open-set discrepancy needs a demographic with both in-gallery and "
                    "out-of-gallery trials");
    }
    return alpha * max_pairwise_gap(far_rates) + (1.0 - alpha) * max_pairwise_gap(dir_rates);
}

double fdr_prime_complement(const GallerySet& set, double tau, double alpha, TieBreak ties) {
    return 1.0 - fdr_prime(set, tau, alpha, ties);
}

}  // namespace fairscore
