#include "tconf/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace tconf {

namespace {

std::string trim(const std::string& s) {
    auto b = s.begin(), e = s.end();
    while (b != e && std::isspace(static_cast<unsigned char>(*b))) ++b;
    while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
    return std::string(b, e);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

[[noreturn]] void fail(const std::string& path, long line, const std::string& what) {
    std::ostringstream os;
    os << path << ":" << line << ": " << what;
    throw data_error(os.str());
}

double parse_score(const std::string& path, long line_no, const std::string& text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto* first = t.data();
    const auto* last = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) fail(path, line_no, "cannot parse score '" + t + "'");
    if (!std::isfinite(v)) fail(path, line_no, "score must be finite");
    return v;
}

struct Columns {
    long score = -1;
    long role = -1;
};

Columns parse_header(const std::string& path, const std::string& line, bool need_role) {
    Columns cols;
    const auto fields = split_csv_line(line);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "score") cols.score = static_cast<long>(i);
        if (fields[i] == "role") cols.role = static_cast<long>(i);
    }
    if (cols.score < 0) fail(path, 1, "missing required column 'score'");
    if (need_role && cols.role < 0) fail(path, 1, "missing required column 'role'");
    return cols;
}

void read_file(const std::string& path, bool with_role, std::vector<double>& cal,
               std::vector<double>& test) {
    std::ifstream in(path);
    if (!in) throw data_error(path + ": cannot open");
    std::string line;
    long line_no = 0;
    Columns cols;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || line[0] == '#') continue;
        if (!header_seen) {
            cols = parse_header(path, line, with_role);
            header_seen = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        const auto need = static_cast<std::size_t>(std::max(cols.score, cols.role)) + 1;
        if (fields.size() < need) fail(path, line_no, "too few fields");
        const double score = parse_score(path, line_no, fields[static_cast<std::size_t>(cols.score)]);
        if (!with_role) {
            test.push_back(score);  // caller routes the vector
            continue;
        }
        const std::string role = fields[static_cast<std::size_t>(cols.role)];
        if (role == "cal")
            cal.push_back(score);
        else if (role == "test")
            test.push_back(score);
        else
            fail(path, line_no, "role must be 'cal' or 'test', got '" + role + "'");
    }
    if (!header_seen) throw data_error(path + ": empty file (no header)");
}

}  // namespace

ScoreSet read_scores_csv(const std::string& path) {
    ScoreSet scores;
    read_file(path, true, scores.calibration, scores.test);
    if (scores.calibration.empty()) throw data_error(path + ": no rows with role 'cal'");
    if (scores.test.empty()) throw data_error(path + ": no rows with role 'test'");
    return scores;
}

ScoreSet read_scores_csv(const std::string& cal_path, const std::string& test_path) {
    ScoreSet scores;
    std::vector<double> sink;
    read_file(cal_path, false, sink, scores.calibration);
    read_file(test_path, false, sink, scores.test);
    if (scores.calibration.empty()) throw data_error(cal_path + ": no score rows");
    if (scores.test.empty()) throw data_error(test_path + ": no score rows");
    return scores;
}

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    // Shortest representation that round-trips.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace tconf
