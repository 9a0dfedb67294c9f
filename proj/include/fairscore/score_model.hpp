#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairscore/error.hpp"

namespace fairscore {

/// Demographic group tag. Comparison is exact, case-sensitive string equality.
using DemographicLabel = std::string;

enum class Kind { genuine, impostor };

/// Score orientation of an input source. The canonical in-memory orientation
/// is similarity: a comparison is accepted iff score >= tau. Distance-valued
/// sources are negated on the way in so the same rule applies.
enum class Polarity { similarity, distance };

/// One enroll/probe comparison. Genuine pairs are one identity, so both sides
/// must carry the same demographic label.
struct ComparisonRecord {
    DemographicLabel enroll_demo;
    DemographicLabel probe_demo;
    double score = 0.0;
    Kind kind = Kind::impostor;

    bool operator==(const ComparisonRecord&) const = default;
};

/// Validated, immutable collection of comparison records. Row order is
/// preserved; the label universe is the sorted union of labels seen on either
/// side of any record.
class ScoreSet {
public:
    ScoreSet() = default;
    explicit ScoreSet(std::vector<ComparisonRecord> records);

    const std::vector<ComparisonRecord>& records() const noexcept { return records_; }
    const std::vector<DemographicLabel>& label_universe() const noexcept { return labels_; }

    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }
    std::size_t impostor_count() const noexcept { return impostor_count_; }
    std::size_t genuine_count() const noexcept { return records_.size() - impostor_count_; }

private:
    std::vector<ComparisonRecord> records_;
    std::vector<DemographicLabel> labels_;
    std::size_t impostor_count_ = 0;
};

/// Development (calibration) and test partitions. The dev set supplies the
/// pooled impostor distribution thresholds are calibrated on.
struct SplitDataset {
    ScoreSet dev;
    ScoreSet test;
};

/// Warns (never fails) when the test set carries labels absent from dev.
SplitDataset make_split(ScoreSet dev, ScoreSet test, Diagnostics* diag = nullptr);

/// Ordered FMR-target exponents x; each defines the operating point
/// tau = FMR_{10^-x} on the calibration impostor distribution.
class OperatingPointGrid {
public:
    explicit OperatingPointGrid(std::vector<double> exponents);

    const std::vector<double>& exponents() const noexcept { return exponents_; }
    double min_exponent() const noexcept { return exponents_.front(); }
    double max_exponent() const noexcept { return exponents_.back(); }
    std::size_t size() const noexcept { return exponents_.size(); }

    /// Parses a comma-separated exponent list, e.g. "1,2,3,4,5".
    static OperatingPointGrid parse(const std::string& text);

private:
    std::vector<double> exponents_;
};

/// Negates every score when polarity is distance; identity otherwise.
/// Applying it twice with distance polarity is the identity.
std::vector<ComparisonRecord> normalize_orientation(std::vector<ComparisonRecord> records,
                                                    Polarity polarity);

}  // namespace fairscore
