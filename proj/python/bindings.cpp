#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fairscore/error_rates.hpp"
#include "fairscore/fdr.hpp"
#include "fairscore/identification.hpp"
#include "fairscore/ingest.hpp"
#include "fairscore/score_model.hpp"
#include "fairscore/synthetic.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace fairscore;

namespace {

ScoreSet scoreset_from_tuples(
    const std::vector<std::tuple<std::string, std::string, double, std::string>>& rows) {
    std::vector<ComparisonRecord> records;
    records.reserve(rows.size());
    for (const auto& [enroll, probe, score, kind] : rows) {
        if (kind != "genuine" && kind != "impostor") {
            throw Error(errc::domain_error, "kind must be 'genuine' or 'impostor'");
        }
        records.push_back(ComparisonRecord{
            enroll, probe, score, kind == "genuine" ? Kind::genuine : Kind::impostor});
    }
    return ScoreSet(std::move(records));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Demographic-fairness evaluation of biometric verification systems "
              "from precomputed comparison scores.";

    py::register_exception<Error>(m, "Error");

    py::enum_<Polarity>(m, "Polarity")
        .value("similarity", Polarity::similarity)
        .value("distance", Polarity::distance);
    py::enum_<Kind>(m, "Kind")
        .value("genuine", Kind::genuine)
        .value("impostor", Kind::impostor);
    py::enum_<TieBreak>(m, "TieBreak")
        .value("mate_first", TieBreak::mate_first)
        .value("mate_last", TieBreak::mate_last);

    py::class_<ComparisonRecord>(m, "ComparisonRecord")
        .def(py::init<DemographicLabel, DemographicLabel, double, Kind>(),
             py::arg("enroll_demo"), py::arg("probe_demo"), py::arg("score"), py::arg("kind"))
        .def_readonly("enroll_demo", &ComparisonRecord::enroll_demo)
        .def_readonly("probe_demo", &ComparisonRecord::probe_demo)
        .def_readonly("score", &ComparisonRecord::score)
        .def_readonly("kind", &ComparisonRecord::kind);

    py::class_<ScoreSet>(m, "ScoreSet")
        .def(py::init(&scoreset_from_tuples), py::arg("rows"),
             "Build from (enroll_demo, probe_demo, score, kind) tuples.")
        .def("records", &ScoreSet::records)
        .def("label_universe", &ScoreSet::label_universe)
        .def("__len__", &ScoreSet::size)
        .def_property_readonly("impostor_count", &ScoreSet::impostor_count)
        .def_property_readonly("genuine_count", &ScoreSet::genuine_count);

    py::class_<SplitDataset>(m, "SplitDataset")
        .def(py::init([](ScoreSet dev, ScoreSet test) {
                 return make_split(std::move(dev), std::move(test));
             }),
             py::arg("dev"), py::arg("test"))
        .def_readonly("dev", &SplitDataset::dev)
        .def_readonly("test", &SplitDataset::test);

    py::class_<OperatingPointGrid>(m, "OperatingPointGrid")
        .def(py::init<std::vector<double>>(), py::arg("exponents"))
        .def("exponents", &OperatingPointGrid::exponents);

    py::class_<Threshold>(m, "Threshold")
        .def_readonly("tau", &Threshold::tau)
        .def_readonly("target_exponent", &Threshold::target_exponent)
        .def_readonly("achieved_dev_fmr", &Threshold::achieved_dev_fmr)
        .def_readonly("degenerate", &Threshold::degenerate);

    py::class_<RateCell>(m, "RateCell")
        .def_readonly("value", &RateCell::value)
        .def_readonly("count", &RateCell::count);

    py::class_<RateTable>(m, "RateTable")
        .def_readonly("per_pair_fmr", &RateTable::per_pair_fmr)
        .def_readonly("per_demo_fnmr", &RateTable::per_demo_fnmr)
        .def_readonly("threshold", &RateTable::threshold);

    py::class_<DetPoint>(m, "DetPoint")
        .def_readonly("tau", &DetPoint::tau)
        .def_readonly("fmr", &DetPoint::fmr)
        .def_readonly("fnmr", &DetPoint::fnmr);

    py::class_<FdrPoint>(m, "FdrPoint")
        .def_readonly("exponent", &FdrPoint::exponent)
        .def_readonly("threshold", &FdrPoint::threshold)
        .def_readonly("a_gap", &FdrPoint::a_gap)
        .def_readonly("b_gap", &FdrPoint::b_gap)
        .def_readonly("fdr", &FdrPoint::fdr)
        .def_readonly("alpha", &FdrPoint::alpha);

    py::class_<FdrCurve>(m, "FdrCurve")
        .def_readonly("points", &FdrCurve::points)
        .def_readonly("alpha", &FdrCurve::alpha)
        .def_readonly("aufdr", &FdrCurve::aufdr)
        .def_readonly("exponent_range", &FdrCurve::exponent_range);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("fair", &Verdict::fair)
        .def_readonly("epsilon", &Verdict::epsilon);

    py::class_<AlphaSweepRow>(m, "AlphaSweepRow")
        .def_readonly("alpha", &AlphaSweepRow::alpha)
        .def_readonly("aufdr", &AlphaSweepRow::aufdr);

    // score model / ingest
    m.def("normalize_orientation", &normalize_orientation, py::arg("records"),
          py::arg("polarity"));
    m.def(
        "load_scores",
        [](const std::string& path, Polarity polarity) {
            return load_scores(path, {}, polarity);
        },
        py::arg("path"), py::arg("polarity") = Polarity::similarity);
    m.def(
        "load_split",
        [](const std::string& dev, const std::string& test, Polarity polarity) {
            return load_split(dev, test, {}, polarity);
        },
        py::arg("dev_path"), py::arg("test_path"), py::arg("polarity") = Polarity::similarity);
    m.def(
        "write_scores",
        [](const std::string& path, const ScoreSet& set) { write_scores(path, set); },
        py::arg("path"), py::arg("scores"));

    // error rates
    m.def("calibrate_threshold", &calibrate_threshold, py::arg("calibration"),
          py::arg("exponent"));
    m.def(
        "fmr", [](const std::vector<double>& scores, double tau) { return fmr(scores, tau); },
        py::arg("impostor_scores"), py::arg("tau"));
    m.def(
        "fnmr", [](const std::vector<double>& scores, double tau) { return fnmr(scores, tau); },
        py::arg("genuine_scores"), py::arg("tau"));
    m.def("rate_table", &rate_table, py::arg("test"), py::arg("threshold"));
    m.def("det_points", &det_points, py::arg("scores"), py::arg("demo"));

    // fdr core
    m.def("a_gap", &a_gap, py::arg("table"));
    m.def("b_gap", &b_gap, py::arg("table"));
    m.def("fdr", &fdr, py::arg("a_gap"), py::arg("b_gap"), py::arg("alpha"));
    m.def("verdict", &verdict, py::arg("fdr_value"), py::arg("epsilon"));
    m.def("fdr_curve", &fdr_curve, py::arg("data"), py::arg("grid"), py::arg("alpha") = 0.5);
    m.def("area_under_fdr", &area_under_fdr, py::arg("curve"));
    m.def(
        "alpha_sweep",
        [](const SplitDataset& data, const OperatingPointGrid& grid,
           const std::vector<double>& alphas) { return alpha_sweep(data, grid, alphas); },
        py::arg("data"), py::arg("grid"), py::arg("alphas"));

    // identification
    py::class_<IdentificationTrial>(m, "IdentificationTrial")
        .def(py::init([](std::string probe_id, std::string probe_demo, bool in_gallery,
                         std::optional<std::string> mate_id,
                         std::map<std::string, double> gallery_scores) {
                 return IdentificationTrial{std::move(probe_id), std::move(probe_demo),
                                            in_gallery, std::move(mate_id),
                                            std::move(gallery_scores)};
             }),
             py::arg("probe_id"), py::arg("probe_demo"), py::arg("in_gallery"),
             py::arg("mate_id"), py::arg("gallery_scores"))
        .def_readonly("probe_id", &IdentificationTrial::probe_id)
        .def_readonly("probe_demo", &IdentificationTrial::probe_demo)
        .def_readonly("in_gallery", &IdentificationTrial::in_gallery)
        .def_readonly("mate_id", &IdentificationTrial::mate_id)
        .def_readonly("gallery_scores", &IdentificationTrial::gallery_scores);

    py::class_<GallerySet>(m, "GallerySet")
        .def(py::init<std::vector<IdentificationTrial>>(), py::arg("trials"))
        .def("trials", &GallerySet::trials)
        .def("demographics", &GallerySet::demographics)
        .def_property_readonly("gallery_size", &GallerySet::gallery_size);

    m.def(
        "load_trials", [](const std::string& path) { return load_trials(path); },
        py::arg("path"));
    m.def("rank_of", &rank_of, py::arg("trial"), py::arg("ties") = TieBreak::mate_first);
    m.def("rank_n_rate", &rank_n_rate, py::arg("set"), py::arg("n"),
          py::arg("demo") = std::nullopt, py::arg("ties") = TieBreak::mate_first);
    m.def("closed_set_discrepancy", &closed_set_discrepancy, py::arg("set"), py::arg("n"),
          py::arg("ties") = TieBreak::mate_first);
    m.def("dir", &dir, py::arg("set"), py::arg("tau"), py::arg("demo") = std::nullopt,
          py::arg("ties") = TieBreak::mate_first);
    m.def("far_open", &far_open, py::arg("set"), py::arg("tau"),
          py::arg("demo") = std::nullopt);
    m.def("fdr_prime", &fdr_prime, py::arg("set"), py::arg("tau"), py::arg("alpha"),
          py::arg("ties") = TieBreak::mate_first);
    m.def("fdr_prime_complement", &fdr_prime_complement, py::arg("set"), py::arg("tau"),
          py::arg("alpha"), py::arg("ties") = TieBreak::mate_first);

    // synthetic
    py::class_<DemographicScoreParams>(m, "DemographicScoreParams")
        .def(py::init([](double impostor_mean, double impostor_std, double genuine_mean,
                         double genuine_std, std::size_t n_impostor, std::size_t n_genuine) {
                 return DemographicScoreParams{impostor_mean, impostor_std, genuine_mean,
                                               genuine_std, n_impostor, n_genuine};
             }),
             py::arg("impostor_mean"), py::arg("impostor_std"), py::arg("genuine_mean"),
             py::arg("genuine_std"), py::arg("n_impostor"), py::arg("n_genuine"))
        .def_readonly("impostor_mean", &DemographicScoreParams::impostor_mean)
        .def_readonly("impostor_std", &DemographicScoreParams::impostor_std)
        .def_readonly("genuine_mean", &DemographicScoreParams::genuine_mean)
        .def_readonly("genuine_std", &DemographicScoreParams::genuine_std)
        .def_readonly("n_impostor", &DemographicScoreParams::n_impostor)
        .def_readonly("n_genuine", &DemographicScoreParams::n_genuine);

    py::class_<SyntheticSpec>(m, "SyntheticSpec")
        .def(py::init([](std::map<DemographicLabel, DemographicScoreParams> per_demo,
                         std::uint64_t seed, double dev_fraction) {
                 SyntheticSpec spec;
                 spec.per_demo = std::move(per_demo);
                 spec.seed = seed;
                 spec.dev_fraction = dev_fraction;
                 return spec;
             }),
             py::arg("per_demo"), py::arg("seed") = 0, py::arg("dev_fraction") = 0.5)
        .def_readwrite("per_demo", &SyntheticSpec::per_demo)
        .def_readwrite("seed", &SyntheticSpec::seed)
        .def_readwrite("dev_fraction", &SyntheticSpec::dev_fraction)
        .def_readwrite("cross_mean_offset_stds", &SyntheticSpec::cross_mean_offset_stds)
        .def_readwrite("cross_count_fraction", &SyntheticSpec::cross_count_fraction);

    m.def("generate", &generate, py::arg("spec"));
    m.def("preset", &preset, py::arg("name"));
    m.def("spec_from_json", &spec_from_json, py::arg("json_text"));
    m.def("spec_to_json", &spec_to_json, py::arg("spec"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
