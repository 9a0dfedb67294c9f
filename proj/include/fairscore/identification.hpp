#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fairscore/error.hpp"
#include "fairscore/score_model.hpp"

namespace fairscore {

/// One probe searched against a labeled gallery. For in-gallery probes,
/// mate_id names the gallery identity the probe truly belongs to and must be
/// one of the scored identities.
struct IdentificationTrial {
    std::string probe_id;
    DemographicLabel probe_demo;
    bool in_gallery = false;
    std::optional<std::string> mate_id;
    std::map<std::string, double> gallery_scores;  // gallery identity -> similarity
};

class GallerySet {
public:
    GallerySet() = default;
    explicit GallerySet(std::vector<IdentificationTrial> trials);

    const std::vector<IdentificationTrial>& trials() const noexcept { return trials_; }
    const std::set<std::string>& gallery_ids() const noexcept { return gallery_ids_; }
    std::size_t gallery_size() const noexcept { return gallery_ids_.size(); }
    std::vector<DemographicLabel> demographics() const;

private:
    std::vector<IdentificationTrial> trials_;
    std::set<std::string> gallery_ids_;
};

/// Rank ties are undefined in the usual rank-n formulation; both policies are
/// provided so conclusions can be checked for tie-robustness.
enum class TieBreak {
    mate_first,  // ties rank the mate best (default, documented behaviour)
    mate_last,   // adversarial: ties rank the mate worst
};

/// 1 + number of non-mate gallery identities scoring strictly above the mate
/// (mate_first), or at or above the mate (mate_last).
/// Throws errc::not_in_gallery for out-of-gallery trials.
std::size_t rank_of(const IdentificationTrial& trial, TieBreak ties = TieBreak::mate_first);

/// Cohort selector: a specific demographic, or all trials when empty.
using DemoSelector = std::optional<DemographicLabel>;

/// Fraction of selected in-gallery probes whose mate ranks within the top n.
double rank_n_rate(const GallerySet& set, std::size_t n, const DemoSelector& demo = {},
                   TieBreak ties = TieBreak::mate_first);

/// Max pairwise |rank-n(d_i) - rank-n(d_j)| over demographics with in-gallery
/// trials; 0 for a single demographic.
double closed_set_discrepancy(const GallerySet& set, std::size_t n,
                              TieBreak ties = TieBreak::mate_first);

/// Detection-and-identification rate: fraction of in-gallery probes with
/// rank 1 and mate score >= tau.
double dir(const GallerySet& set, double tau, const DemoSelector& demo = {},
           TieBreak ties = TieBreak::mate_first);

/// Open-set false-alarm rate: fraction of out-of-gallery probes whose best
/// gallery score >= tau.
double far_open(const GallerySet& set, double tau, const DemoSelector& demo = {});

/// alpha * max FAR gap + (1-alpha) * max DIR gap, exactly as combined for
/// open-set identification: a discrepancy score where 0 is perfect parity.
/// Requires at least one demographic with both cohorts populated.
double fdr_prime(const GallerySet& set, double tau, double alpha,
                 TieBreak ties = TieBreak::mate_first);

/// 1 - fdr_prime: complement mode, visually comparable with verification FDR.
double fdr_prime_complement(const GallerySet& set, double tau, double alpha,
                            TieBreak ties = TieBreak::mate_first);

}  // namespace fairscore
