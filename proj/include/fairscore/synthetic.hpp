#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fairscore/error.hpp"
#include "fairscore/score_model.hpp"

namespace fairscore {

/// Gaussian score model for one demographic. The generator refuses inverted
/// systems (genuine mean at or below the impostor mean).
struct DemographicScoreParams {
    double impostor_mean = 0.0;
    double impostor_std = 1.0;
    double genuine_mean = 1.0;
    double genuine_std = 1.0;
    std::size_t n_impostor = 0;
    std::size_t n_genuine = 0;
};

/// Full generator configuration. Identical (spec, seed) reproduce identical
/// record lists; each (demographic pair, kind) cell draws from its own
/// sub-seeded stream, so adding a demographic never perturbs the others.
///
/// Cross-demographic impostor cells are derived: mean = the average of the two
/// homogeneous impostor means shifted by cross_mean_offset_stds standard
/// deviations (cross-demographic false matches are rarer), std = the average
/// of the two stds, count = cross_count_fraction of the average homogeneous
/// impostor count.
struct SyntheticSpec {
    std::map<DemographicLabel, DemographicScoreParams> per_demo;
    std::uint64_t seed = 0;
    double dev_fraction = 0.5;
    double cross_mean_offset_stds = -0.5;
    double cross_count_fraction = 0.1;
};

/// Draws the configured score set and splits it into dev/test. Output order
/// is canonical: impostor cells by sorted (enroll, probe) pair, then genuine
/// cells by sorted demographic, each in draw order.
SplitDataset generate(const SyntheticSpec& spec);

/// Built-in three-demographic systems:
///   fair3   - identical distributions per demographic (impostor N(0,1),
///             genuine N(6,1); 1e6 impostors / 1e4 genuines per homogeneous
///             cell), so any shared threshold treats all groups alike.
///   unfair3 - demographic 0 as in fair3; 1 and 2 drift progressively
///             (genuine N(5.5,1.05) and N(5.0,1.1) with impostor
///             N(0.15,1.05)), so tight operating points reject group 2 far
///             more often than group 0.
SyntheticSpec preset(const std::string& name);

/// JSON spec files mirror SyntheticSpec:
/// {"seed":1,"dev_fraction":0.5,"demographics":{"A":{"impostor_mean":...}}}
SyntheticSpec spec_from_json(const std::string& json_text);
std::string spec_to_json(const SyntheticSpec& spec);

}  // namespace fairscore
