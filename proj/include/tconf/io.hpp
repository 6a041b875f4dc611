#ifndef TCONF_IO_HPP
#define TCONF_IO_HPP

#include <stdexcept>
#include <string>

#include "tconf/scores.hpp"

namespace tconf {

// Malformed input (missing columns, bad numbers, unknown roles). The CLI maps
// this to its data-error exit code.
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Single-file form: header with columns `score` and `role`, role values
// `cal` or `test` (any column order, extra columns ignored). Errors carry
// path and line number.
ScoreSet read_scores_csv(const std::string& path);

// Two-file form: each file has a `score` column; roles are implied.
ScoreSet read_scores_csv(const std::string& cal_path, const std::string& test_path);

// Fixed-format numeric rendering (shortest round-trip) so that re-running a
// command with the same inputs produces byte-identical files.
std::string format_double(double v);

}  // namespace tconf

#endif
