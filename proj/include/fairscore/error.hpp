#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairscore {

/// Error categories raised by the toolkit. Parse-time errors carry a 1-based
/// source line; everything else reports line() == 0.
enum class errc {
    malformed_row,
    non_finite_score,
    empty_file,
    no_impostors,
    no_impostors_in_dev,
    empty_cell,
    no_homogeneous_cells,
    no_genuine_cells,
    domain_error,
    too_few_points,
    empty_cohort,
    not_in_gallery,
    unknown_preset,
    invalid_spec,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message, std::size_t line = 0)
        : std::runtime_error(line == 0
                                 ? std::string(errc_name(code)) + ": " + message
                                 : std::string(errc_name(code)) + " (line " +
                                       std::to_string(line) + "): " + message),
          code_(code),
          line_(line) {}

    errc code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    errc code_;
    std::size_t line_;
};

/// Collects non-fatal findings (unknown CSV columns, label-universe drift, ...).
/// Callers that do not care pass nullptr.
struct Diagnostics {
    std::vector<std::string> warnings;

    void warn(std::string message) { warnings.push_back(std::move(message)); }
};

inline void warn_to(Diagnostics* diag, std::string message) {
    if (diag != nullptr) diag->warn(std::move(message));
}

}  // namespace fairscore
