#pragma once

#include <string>

#include "fairscore/error.hpp"
#include "fairscore/identification.hpp"
#include "fairscore/score_model.hpp"

namespace fairscore {

/// Verification score files are UTF-8 CSV with the header
///   enroll_demo,probe_demo,score,kind
/// plus an optional `split` column (dev|test) when one file carries both
/// partitions. Column names must match exactly; unknown extra columns are
/// ignored with a warning. `kind` values are case-insensitive
/// (genuine|impostor). No quoting: fields must not contain the delimiter.
struct CsvConfig {
    char delimiter = ',';
};

/// Loads and validates one score file. Orientation is normalized so the
/// canonical acceptance rule score >= tau holds. Row order is preserved.
ScoreSet load_scores(const std::string& path, const CsvConfig& format, Polarity polarity,
                     Diagnostics* diag = nullptr);

/// Loads dev and test from two files. Fails with no_impostors_in_dev when the
/// dev file has no impostor rows (calibration would be impossible).
SplitDataset load_split(const std::string& dev_path, const std::string& test_path,
                        const CsvConfig& format, Polarity polarity,
                        Diagnostics* diag = nullptr);

/// Single-file variant: rows are routed by their mandatory `split` column.
SplitDataset load_split_single(const std::string& path, const CsvConfig& format,
                               Polarity polarity, Diagnostics* diag = nullptr);

/// Round-trip writer. Scores are serialized with shortest round-trip decimal
/// precision so reloading reproduces the exact record list.
void write_scores(const std::string& path, const ScoreSet& set, const CsvConfig& format = {});

/// Identification trial files are long-form CSV with the header
///   probe_id,probe_demo,in_gallery,mate_id,gallery_id,score
/// one row per (probe, gallery identity) comparison, grouped by probe_id.
/// mate_id is empty for out-of-gallery probes; in_gallery accepts
/// true/false/1/0 (case-insensitive).
GallerySet load_trials(const std::string& path, const CsvConfig& format = {},
                       Diagnostics* diag = nullptr);

}  // namespace fairscore
