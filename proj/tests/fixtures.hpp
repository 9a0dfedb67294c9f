#pragma once

// Shared in-memory fixtures for the unit and acceptance suites.

#include <string>
#include <vector>

#include "fairscore/score_model.hpp"

namespace fixtures {

using fairscore::ComparisonRecord;
using fairscore::Kind;
using fairscore::ScoreSet;
using fairscore::SplitDataset;

inline void emit(std::vector<ComparisonRecord>& out, const std::string& enroll,
                 const std::string& probe, Kind kind, double score, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(ComparisonRecord{enroll, probe, score, kind});
    }
}

/// Gender-fragmented benchmark fixture. The dev impostor pool is a ladder
/// placing the calibrated thresholds exactly at tau = 1..5 for x = 1..5; the
/// test cells are tuned so the rendered report reproduces a published
/// gender-fairness table cell for cell, including its FDR row
/// {0.9205, 0.989, 0.997, 0.999, 0.999}.
inline SplitDataset make_gender_split_fixture() {
    std::vector<ComparisonRecord> dev;
    // 100000 pooled impostors; counts at-or-above 1,2,3,4,5 are 10^4..10^0.
    emit(dev, "Male", "Male", Kind::impostor, 0.5, 45000);
    emit(dev, "Female", "Female", Kind::impostor, 0.5, 45000);
    emit(dev, "Male", "Male", Kind::impostor, 1.0, 4500);
    emit(dev, "Female", "Female", Kind::impostor, 1.0, 4500);
    emit(dev, "Male", "Male", Kind::impostor, 2.0, 450);
    emit(dev, "Female", "Female", Kind::impostor, 2.0, 450);
    emit(dev, "Male", "Male", Kind::impostor, 3.0, 45);
    emit(dev, "Female", "Female", Kind::impostor, 3.0, 45);
    emit(dev, "Male", "Male", Kind::impostor, 4.0, 5);
    emit(dev, "Female", "Female", Kind::impostor, 4.0, 4);
    emit(dev, "Male", "Male", Kind::impostor, 5.0, 1);
    emit(dev, "Male", "Male", Kind::genuine, 9.0, 10);
    emit(dev, "Female", "Female", Kind::genuine, 9.0, 10);

    std::vector<ComparisonRecord> test;
    // Male-Male impostors, n=1000: FMR 0.077, 0.006, 0, 0, 0.
    emit(test, "Male", "Male", Kind::impostor, 0.5, 923);
    emit(test, "Male", "Male", Kind::impostor, 1.5, 71);
    emit(test, "Male", "Male", Kind::impostor, 2.5, 6);
    // Female-Female impostors, n=100000: FMR 0.235, 0.027, 0.00445, 0.00049, 0.
    emit(test, "Female", "Female", Kind::impostor, 0.5, 76500);
    emit(test, "Female", "Female", Kind::impostor, 1.5, 20800);
    emit(test, "Female", "Female", Kind::impostor, 2.5, 2255);
    emit(test, "Female", "Female", Kind::impostor, 3.5, 396);
    emit(test, "Female", "Female", Kind::impostor, 4.5, 49);
    // Cross cells, n=1000 each.
    emit(test, "Male", "Female", Kind::impostor, 0.5, 948);
    emit(test, "Male", "Female", Kind::impostor, 1.5, 51);
    emit(test, "Male", "Female", Kind::impostor, 2.5, 1);
    emit(test, "Female", "Male", Kind::impostor, 0.5, 957);
    emit(test, "Female", "Male", Kind::impostor, 1.5, 42);
    emit(test, "Female", "Male", Kind::impostor, 2.5, 1);
    // Male genuines, n=100000: FNMR 0.001, 0.001, 0.00149, 0.00149, 0.002.
    emit(test, "Male", "Male", Kind::genuine, 0.5, 100);
    emit(test, "Male", "Male", Kind::genuine, 2.5, 49);
    emit(test, "Male", "Male", Kind::genuine, 4.5, 51);
    emit(test, "Male", "Male", Kind::genuine, 9.0, 99800);
    // Female genuines, n=1000: FNMR 0 at every threshold.
    emit(test, "Female", "Female", Kind::genuine, 9.0, 1000);

    return SplitDataset{ScoreSet(std::move(dev)), ScoreSet(std::move(test))};
}

/// Three identical demographics, then one of them monotonically transformed.
/// Small enough for unit tests.
inline SplitDataset make_small_fair_split(unsigned seed_offset = 0) {
    (void)seed_offset;
    std::vector<ComparisonRecord> dev;
    std::vector<ComparisonRecord> test;
    // Deterministic arithmetic lattice, identical per demographic.
    for (const std::string demo : {"0", "1", "2"}) {
        for (int i = 0; i < 2000; ++i) {
            const double imp = -3.0 + 6.0 * (static_cast<double>(i) / 1999.0);
            const double gen = 3.0 + 6.0 * (static_cast<double>(i) / 1999.0);
            (i % 2 == 0 ? dev : test)
                .push_back(ComparisonRecord{demo, demo, imp, Kind::impostor});
            (i % 2 == 0 ? dev : test)
                .push_back(ComparisonRecord{demo, demo, gen, Kind::genuine});
        }
    }
    return SplitDataset{ScoreSet(std::move(dev)), ScoreSet(std::move(test))};
}

}  // namespace fixtures
