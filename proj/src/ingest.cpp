#include "fairscore/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace fairscore {

namespace {

std::string to_lower(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return text;
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream stream(line);
    while (std::getline(stream, field, delimiter)) fields.push_back(field);
    if (!line.empty() && line.back() == delimiter) fields.emplace_back();
    return fields;
}

double parse_score(const std::string& text, std::size_t line_no) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw Error(errc::malformed_row, "cannot parse score '" + text + "'", line_no);
    }
    if (!std::isfinite(value)) {
        throw Error(errc::non_finite_score, "score '" + text + "' is not finite", line_no);
    }
    return value;
}

Kind parse_kind(const std::string& text, std::size_t line_no) {
    const std::string lowered = to_lower(text);
    if (lowered == "genuine") return Kind::genuine;
    if (lowered == "impostor") return Kind::impostor;
    throw Error(errc::malformed_row, "kind must be genuine or impostor, got '" + text + "'",
                line_no);
}

struct ColumnMap {
    std::map<std::string, std::size_t> index;
    std::size_t width = 0;

    std::size_t at(const std::string& name, std::size_t line_no) const {
        auto it = index.find(name);
        if (it == index.end()) {
            throw Error(errc::malformed_row, "missing required column '" + name + "'", line_no);
        }
        return it->second;
    }
    bool has(const std::string& name) const { return index.count(name) > 0; }
};

ColumnMap read_header(std::istream& in, char delimiter,
                      const std::vector<std::string>& known, const std::string& path,
                      Diagnostics* diag) {
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(errc::empty_file, path + " is empty");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ColumnMap columns;
    const std::vector<std::string> names = split_fields(line, delimiter);
    columns.width = names.size();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (std::find(known.begin(), known.end(), names[i]) == known.end()) {
            warn_to(diag, path + ": ignoring unknown column '" + names[i] + "'");
        }
        columns.index.emplace(names[i], i);
    }
    return columns;
}

/// Streams data rows, invoking row() with (fields, line number).
template <typename RowFn>
void for_each_row(std::istream& in, char delimiter, std::size_t width,
                  const std::string& path, RowFn&& row) {
    std::string line;
    std::size_t line_no = 1;  // header was line 1
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_fields(line, delimiter);
        if (fields.size() != width) {
            throw Error(errc::malformed_row,
                        path + ": expected " + std::to_string(width) + " fields, got " +
                            std::to_string(fields.size()),
                        line_no);
        }
        row(fields, line_no);
    }
}

ComparisonRecord record_from_fields(const std::vector<std::string>& fields,
                                    const ColumnMap& columns, std::size_t line_no) {
    ComparisonRecord rec;
    rec.enroll_demo = fields[columns.at("enroll_demo", line_no)];
    rec.probe_demo = fields[columns.at("probe_demo", line_no)];
    rec.score = parse_score(fields[columns.at("score", line_no)], line_no);
    rec.kind = parse_kind(fields[columns.at("kind", line_no)], line_no);
    if (rec.enroll_demo.empty() || rec.probe_demo.empty()) {
        throw Error(errc::malformed_row, "demographic labels must be non-empty", line_no);
    }
    if (rec.kind == Kind::genuine && rec.enroll_demo != rec.probe_demo) {
        throw Error(errc::malformed_row,
                    "genuine pair with mismatched demographics: " + rec.enroll_demo + " vs " +
                        rec.probe_demo,
                    line_no);
    }
    return rec;
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::empty_file, "cannot open " + path);
    }
    return in;
}

const std::vector<std::string> kScoreColumns = {"enroll_demo", "probe_demo", "score", "kind",
                                                "split"};

}  // namespace

ScoreSet load_scores(const std::string& path, const CsvConfig& format, Polarity polarity,
                     Diagnostics* diag) {
    std::ifstream in = open_file(path);
    const ColumnMap columns = read_header(in, format.delimiter, kScoreColumns, path, diag);
    std::vector<ComparisonRecord> records;
    for_each_row(in, format.delimiter, columns.width, path,
                 [&](const std::vector<std::string>& fields, std::size_t line_no) {
                     records.push_back(record_from_fields(fields, columns, line_no));
                 });
    if (records.empty()) {
        throw Error(errc::empty_file, path + " has no data rows");
    }
    return ScoreSet(normalize_orientation(std::move(records), polarity));
}

SplitDataset load_split(const std::string& dev_path, const std::string& test_path,
                        const CsvConfig& format, Polarity polarity, Diagnostics* diag) {
    ScoreSet dev = load_scores(dev_path, format, polarity, diag);
    ScoreSet test = load_scores(test_path, format, polarity, diag);
    if (dev.impostor_count() == 0) {
        throw Error(errc::no_impostors_in_dev,
                    dev_path + " has no impostor rows; threshold calibration is impossible");
    }
    return make_split(std::move(dev), std::move(test), diag);
}

SplitDataset load_split_single(const std::string& path, const CsvConfig& format,
                               Polarity polarity, Diagnostics* diag) {
    std::ifstream in = open_file(path);
    const ColumnMap columns = read_header(in, format.delimiter, kScoreColumns, path, diag);
    if (!columns.has("split")) {
        throw Error(errc::malformed_row, path + ": single-file mode needs a 'split' column", 1);
    }
    std::vector<ComparisonRecord> dev_records;
    std::vector<ComparisonRecord> test_records;
    for_each_row(in, format.delimiter, columns.width, path,
                 [&](const std::vector<std::string>& fields, std::size_t line_no) {
                     const std::string split = to_lower(fields[columns.at("split", line_no)]);
                     if (split != "dev" && split != "test") {
                         throw Error(errc::malformed_row,
                                     "split must be dev or test, got '" + split + "'", line_no);
                     }
                     auto& sink = split == "dev" ? dev_records : test_records;
                     sink.push_back(record_from_fields(fields, columns, line_no));
                 });
    if (dev_records.empty() && test_records.empty()) {
        throw Error(errc::empty_file, path + " has no data rows");
    }
    ScoreSet dev(normalize_orientation(std::move(dev_records), polarity));
    ScoreSet test(normalize_orientation(std::move(test_records), polarity));
    if (dev.impostor_count() == 0) {
        throw Error(errc::no_impostors_in_dev,
                    path + " has no dev impostor rows; threshold calibration is impossible");
    }
    return make_split(std::move(dev), std::move(test), diag);
}

void write_scores(const std::string& path, const ScoreSet& set, const CsvConfig& format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(errc::empty_file, "cannot write " + path);
    }
    const char d = format.delimiter;
    out << "enroll_demo" << d << "probe_demo" << d << "score" << d << "kind"
        << "\n";
    char buffer[64];
    for (const ComparisonRecord& rec : set.records()) {
        auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), rec.score);
        out << rec.enroll_demo << d << rec.probe_demo << d;
        out.write(buffer, ptr - buffer);
        out << d << (rec.kind == Kind::genuine ? "genuine" : "impostor") << "\n";
    }
}

GallerySet load_trials(const std::string& path, const CsvConfig& format, Diagnostics* diag) {
    static const std::vector<std::string> kTrialColumns = {"probe_id",  "probe_demo",
                                                           "in_gallery", "mate_id",
                                                           "gallery_id", "score"};
    std::ifstream in = open_file(path);
    const ColumnMap columns = read_header(in, format.delimiter, kTrialColumns, path, diag);

    std::vector<IdentificationTrial> trials;
    std::map<std::string, std::size_t> trial_index;  // probe_id -> position
    for_each_row(in, format.delimiter, columns.width, path,
                 [&](const std::vector<std::string>& fields, std::size_t line_no) {
                     const std::string& probe_id = fields[columns.at("probe_id", line_no)];
                     const std::string& probe_demo = fields[columns.at("probe_demo", line_no)];
                     const std::string in_gallery_text =
                         to_lower(fields[columns.at("in_gallery", line_no)]);
                     const std::string& mate_id = fields[columns.at("mate_id", line_no)];
                     const std::string& gallery_id = fields[columns.at("gallery_id", line_no)];
                     const double score = parse_score(fields[columns.at("score", line_no)],
                                                      line_no);

                     bool in_gallery = false;
                     if (in_gallery_text == "true" || in_gallery_text == "1") {
                         in_gallery = true;
                     } else if (in_gallery_text != "false" && in_gallery_text != "0") {
                         throw Error(errc::malformed_row,
                                     "in_gallery must be true/false/1/0, got '" +
                                         in_gallery_text + "'",
                                     line_no);
                     }
                     if (probe_id.empty() || gallery_id.empty()) {
                         throw Error(errc::malformed_row, "probe_id and gallery_id must be "
                                                          "non-empty", line_no);
                     }

                     auto [it, inserted] = trial_index.emplace(probe_id, trials.size());
                     if (inserted) {
                         IdentificationTrial trial;
                         trial.probe_id = probe_id;
                         trial.probe_demo = probe_demo;
                         trial.in_gallery = in_gallery;
                         if (!mate_id.empty()) trial.mate_id = mate_id;
                         trials.push_back(std::move(trial));
                     }
                     IdentificationTrial& trial = trials[it->second];
                     if (trial.probe_demo != probe_demo || trial.in_gallery != in_gallery ||
                         trial.mate_id != (mate_id.empty()
                                               ? std::optional<std::string>{}
                                               : std::optional<std::string>{mate_id})) {
                         throw Error(errc::malformed_row,
                                     "probe '" + probe_id +
                                         "' has inconsistent metadata across rows",
                                     line_no);
                     }
                     if (!trial.gallery_scores.emplace(gallery_id, score).second) {
                         throw Error(errc::malformed_row,
                                     "probe '" + probe_id + "' scores gallery identity '" +
                                         gallery_id + "' twice",
                                     line_no);
                     }
                 });
    if (trials.empty()) {
        throw Error(errc::empty_file, path + " has no data rows");
    }
    return GallerySet(std::move(trials));
}

}  // namespace fairscore
