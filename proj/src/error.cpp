#include "fairscore/error.hpp"

namespace fairscore {

const char* errc_name(errc code) {
    switch (code) {
        case errc::malformed_row: return "MalformedRow";
        case errc::non_finite_score: return "NonFiniteScore";
        case errc::empty_file: return "EmptyFile";
        case errc::no_impostors: return "NoImpostors";
        case errc::no_impostors_in_dev: return "NoImpostorsInDev";
        case errc::empty_cell: return "EmptyCell";
        case errc::no_homogeneous_cells: return "NoHomogeneousCells";
        case errc::no_genuine_cells: return "NoGenuineCells";
        case errc::domain_error: return "DomainError";
        case errc::too_few_points: return "TooFewPoints";
        case errc::empty_cohort: return "EmptyCohort";
        case errc::not_in_gallery: return "NotInGallery";
        case errc::unknown_preset: return "UnknownPreset";
        case errc::invalid_spec: return "InvalidSpec";
    }
    return "Error";
}

}  // namespace fairscore
