#include <algorithm>
#include <random>

#include "doctest.h"
#include "fairscore/error_rates.hpp"
#include "oracle.hpp"

using namespace fairscore;

namespace {

ScoreSet impostor_set(const std::vector<double>& scores) {
    std::vector<ComparisonRecord> records;
    for (double s : scores) records.push_back({"A", "A", s, Kind::impostor});
    return ScoreSet(std::move(records));
}

}  // namespace

TEST_CASE("calibration picks the smallest score meeting the target") {
    const ScoreSet ten = impostor_set({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0});

    const Threshold t1 = calibrate_threshold(ten, 1.0);
    CHECK(t1.tau == 1.0);
    CHECK(t1.achieved_dev_fmr == doctest::Approx(0.1));
    CHECK_FALSE(t1.degenerate);

    // x -> 0 accepts everything: tau is the minimum impostor score.
    const Threshold t0 = calibrate_threshold(ten, 0.0);
    CHECK(t0.tau == 0.1);
    CHECK(t0.achieved_dev_fmr == 1.0);

    // Target finer than 1/N: flagged reject-all sentinel.
    const Threshold t3 = calibrate_threshold(ten, 3.0);
    CHECK(t3.degenerate);
    CHECK(t3.tau == 2.0);  // max + 1
    CHECK(t3.achieved_dev_fmr == 0.0);
}

TEST_CASE("calibration handles ties by moving to the next distinct score") {
    const ScoreSet tied = impostor_set({1.0, 1.0, 1.0, 5.0});
    // target 0.5 allows 2 accepted impostors; score 1.0 accepts all 4.
    const Threshold t = calibrate_threshold(tied, 0.30103);  // 10^-0.30103 ~ 0.5
    CHECK(t.tau == 5.0);
    CHECK(t.achieved_dev_fmr == doctest::Approx(0.25));

    // All scores tied and the target below 1: only the sentinel rejects any.
    const ScoreSet all_tied = impostor_set({2.0, 2.0, 2.0});
    const Threshold sentinel = calibrate_threshold(all_tied, 0.5);
    CHECK(sentinel.degenerate);
    CHECK(sentinel.tau == 3.0);

    // Tie spillover at the maximum: one accepted impostor allowed, three tied.
    const Threshold spill = calibrate_threshold(all_tied, 0.39794);  // target ~0.4
    CHECK(spill.degenerate);
    CHECK(spill.tau == 3.0);
    CHECK(spill.achieved_dev_fmr == 0.0);
}

TEST_CASE("calibration requires impostors and a sane exponent") {
    std::vector<ComparisonRecord> genuine_only = {{"A", "A", 0.5, Kind::genuine}};
    CHECK_THROWS_AS(calibrate_threshold(ScoreSet(genuine_only), 1.0), Error);
    CHECK_THROWS_AS(calibrate_threshold(impostor_set({0.1}), -1.0), Error);
}

TEST_CASE("calibration matches the naive smallest-qualifying-score rule") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> exponent(0.0, 3.5);
    for (int round = 0; round < 200; ++round) {
        const ScoreSet set = oracle::random_score_set(rng, 120, 3);
        std::vector<double> impostors;
        for (const auto& rec : set.records()) {
            if (rec.kind == Kind::impostor) impostors.push_back(rec.score);
        }
        const double x = exponent(rng);
        const auto [expected_tau, expected_degenerate] = oracle::naive_calibrate(impostors, x);
        const Threshold t = calibrate_threshold(set, x);
        CHECK(t.tau == expected_tau);
        CHECK(t.degenerate == expected_degenerate);
        if (!t.degenerate) {
            CHECK(oracle::naive_fmr(impostors, t.tau) <= std::pow(10.0, -x) + 1e-12);
        }
    }
}

TEST_CASE("calibration is monotone in the exponent") {
    std::mt19937 rng(102);
    for (int round = 0; round < 50; ++round) {
        const ScoreSet set = oracle::random_score_set(rng, 150, 2);
        double previous = -1e300;
        for (double x : {0.2, 0.5, 1.0, 1.5, 2.0, 3.0}) {
            const double tau = calibrate_threshold(set, x).tau;
            CHECK(tau >= previous);
            previous = tau;
        }
    }
}

TEST_CASE("fmr and fnmr hand counts") {
    const std::vector<double> scores = {0.9, 0.2, 0.3};
    CHECK(fmr(scores, 0.5) == doctest::Approx(1.0 / 3.0));
    CHECK(fnmr(scores, 0.5) == doctest::Approx(2.0 / 3.0));
    CHECK(fmr(scores, 0.95) == 0.0);
    CHECK(fmr(scores, 0.2) == 1.0);
    CHECK(fnmr(scores, 0.2) == 0.0);
    CHECK_THROWS_AS(fmr({}, 0.5), Error);
    CHECK_THROWS_AS(fnmr({}, 0.5), Error);
}

TEST_CASE("fmr/fnmr partition the score set at any tau") {
    std::mt19937 rng(103);
    for (int round = 0; round < 100; ++round) {
        std::vector<double> scores;
        std::uniform_int_distribution<int> n(1, 50);
        const int count = n(rng);
        for (int i = 0; i < count; ++i) scores.push_back(oracle::lattice_score(rng));
        const double tau = oracle::lattice_score(rng);
        CHECK(fnmr(scores, tau) + fmr(scores, tau) == doctest::Approx(1.0));
    }
}

TEST_CASE("fmr non-increasing and fnmr non-decreasing in tau") {
    std::mt19937 rng(104);
    std::vector<double> scores;
    for (int i = 0; i < 80; ++i) scores.push_back(oracle::lattice_score(rng));
    double previous_fmr = 1.0;
    double previous_fnmr = 0.0;
    for (double tau = -4.0; tau <= 4.0; tau += 0.125) {
        const double f = fmr(scores, tau);
        const double g = fnmr(scores, tau);
        CHECK(f <= previous_fmr);
        CHECK(g >= previous_fnmr);
        previous_fmr = f;
        previous_fnmr = g;
    }
}

TEST_CASE("fmr/fnmr match naive counting on random sets") {
    std::mt19937 rng(105);
    for (int round = 0; round < 300; ++round) {
        std::vector<double> scores;
        std::uniform_int_distribution<int> n(1, 60);
        const int count = n(rng);
        for (int i = 0; i < count; ++i) scores.push_back(oracle::lattice_score(rng));
        const double tau = oracle::lattice_score(rng);
        CHECK(fmr(scores, tau) == oracle::naive_fmr(scores, tau));
        CHECK(fnmr(scores, tau) == oracle::naive_fnmr(scores, tau));
    }
}

TEST_CASE("rate_table fragments by ordered pair and demographic") {
    std::vector<ComparisonRecord> records = {
        {"Male", "Male", 0.9, Kind::impostor},   {"Male", "Male", 0.1, Kind::impostor},
        {"Male", "Female", 0.1, Kind::impostor}, {"Female", "Male", 0.9, Kind::impostor},
        {"Female", "Female", 0.2, Kind::impostor}, {"Male", "Male", 0.8, Kind::genuine},
        {"Female", "Female", 0.3, Kind::genuine},
    };
    const Threshold tau{0.5, 1.0, 0.1, false};
    const RateTable table = rate_table(ScoreSet(records), tau);

    CHECK(table.per_pair_fmr.size() == 4);
    CHECK(table.per_pair_fmr.at({"Male", "Male"}).value == doctest::Approx(0.5));
    CHECK(table.per_pair_fmr.at({"Male", "Male"}).count == 2);
    CHECK(table.per_pair_fmr.at({"Male", "Female"}).value == 0.0);
    CHECK(table.per_pair_fmr.at({"Female", "Male"}).value == 1.0);
    CHECK(table.per_demo_fnmr.size() == 2);
    CHECK(table.per_demo_fnmr.at("Male").value == 0.0);
    CHECK(table.per_demo_fnmr.at("Female").value == 1.0);
}

TEST_CASE("rate_table cell counts sum to the partition sizes") {
    std::mt19937 rng(106);
    for (int round = 0; round < 50; ++round) {
        const ScoreSet set = oracle::random_score_set(rng);
        const RateTable table = rate_table(set, Threshold{oracle::lattice_score(rng), 1, 0, false});
        std::size_t impostors = 0;
        std::size_t genuines = 0;
        for (const auto& [pair, cell] : table.per_pair_fmr) impostors += cell.count;
        for (const auto& [demo, cell] : table.per_demo_fnmr) genuines += cell.count;
        CHECK(impostors == set.impostor_count());
        CHECK(genuines == set.genuine_count());
    }
}

TEST_CASE("rate_table leaves empty blocks absent rather than zero") {
    const ScoreSet impostors_only({{"A", "A", 0.5, Kind::impostor}});
    const RateTable table = rate_table(impostors_only, Threshold{0.5, 1, 0, false});
    CHECK(table.per_demo_fnmr.empty());
    CHECK(table.per_pair_fmr.size() == 1);
}

TEST_CASE("det_points hand sweep") {
    const ScoreSet set({{"A", "A", 0.8, Kind::genuine},
                        {"A", "A", 0.9, Kind::genuine},
                        {"A", "A", 0.1, Kind::impostor},
                        {"A", "A", 0.2, Kind::impostor}});
    const auto points = det_points(set, "A");
    REQUIRE(points.size() == 4);
    auto has_point = [&](double f, double n) {
        return std::any_of(points.begin(), points.end(), [&](const DetPoint& p) {
            return p.fmr == doctest::Approx(f) && p.fnmr == doctest::Approx(n);
        });
    };
    CHECK(has_point(1.0, 0.0));
    CHECK(has_point(0.5, 0.0));
    CHECK(has_point(0.0, 0.0));  // disjoint supports expose a perfect threshold
    CHECK(has_point(0.0, 0.5));

    // fnmr non-decreasing as fmr non-increasing along the sweep
    for (std::size_t i = 1; i < points.size(); ++i) {
        CHECK(points[i].fmr <= points[i - 1].fmr);
        CHECK(points[i].fnmr >= points[i - 1].fnmr);
    }
}

TEST_CASE("det_points needs both kinds of homogeneous data") {
    const ScoreSet set({{"A", "A", 0.8, Kind::genuine}, {"A", "B", 0.1, Kind::impostor}});
    CHECK_THROWS_AS(det_points(set, "A"), Error);
    CHECK_THROWS_AS(det_points(set, "B"), Error);
}

TEST_CASE("det_points are invariant under strictly increasing transforms") {
    std::mt19937 rng(107);
    for (int round = 0; round < 30; ++round) {
        std::vector<ComparisonRecord> records;
        std::uniform_int_distribution<int> n(2, 40);
        const int count = n(rng);
        bool has_gen = false;
        bool has_imp = false;
        for (int i = 0; i < count || !has_gen || !has_imp; ++i) {
            const bool genuine = (rng() & 1) != 0;
            has_gen |= genuine;
            has_imp |= !genuine;
            records.push_back(
                {"A", "A", oracle::lattice_score(rng), genuine ? Kind::genuine : Kind::impostor});
        }
        const auto base = det_points(ScoreSet(records), "A");

        auto transformed = records;
        for (auto& rec : transformed) {
            rec.score = 2.5 * rec.score + 0.1 * rec.score * rec.score * rec.score + 1.0;
        }
        const auto mapped = det_points(ScoreSet(transformed), "A");
        REQUIRE(mapped.size() == base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(mapped[i].fmr == base[i].fmr);
            CHECK(mapped[i].fnmr == base[i].fnmr);
        }
    }
}
