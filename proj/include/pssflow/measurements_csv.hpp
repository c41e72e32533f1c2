#pragma once

/**
 * @file measurements_csv.hpp
 * @brief Reading and writing measurement files.
 *
 * Format: UTF-8 text, a header row, then one `v_m_per_s,grad_p_pa_per_m`
 * pair per line with `.` as decimal separator. Blank lines are skipped.
 */

#include <pssflow/errors.hpp>
#include <pssflow/prefit.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pssflow {

inline constexpr std::string_view measurement_header = "v_m_per_s,grad_p_pa_per_m";

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline bool parse_double(std::string_view text, double& out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, out);
    return !text.empty() && res.ec == std::errc() && res.ptr == end;
}

} // namespace detail

/// Parse measurements; row numbers in error messages count the header as row 1.
inline std::vector<FlowMeasurement> read_measurements(std::istream& in) {
    std::string line;
    std::size_t row = 0;
    bool header_seen = false;
    std::vector<FlowMeasurement> out;
    while (std::getline(in, line)) {
        ++row;
        std::string_view view = detail::trim(line);
        if (row == 1 && view.substr(0, 3) == "\xEF\xBB\xBF") {
            view.remove_prefix(3);  // UTF-8 byte order mark
        }
        if (view.empty()) {
            continue;
        }
        if (!header_seen) {
            double probe = 0.0;
            const auto comma = view.find(',');
            if (comma == std::string_view::npos || detail::parse_double(view.substr(0, comma), probe)) {
                throw InputError("measurements: header row `" + std::string(measurement_header) +
                                 "` required (row " + std::to_string(row) + ")");
            }
            header_seen = true;
            continue;
        }
        const auto comma = view.find(',');
        if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
            throw InputError("measurements: row " + std::to_string(row) + " must have exactly 2 columns");
        }
        FlowMeasurement m;
        if (!detail::parse_double(view.substr(0, comma), m.v) ||
            !detail::parse_double(view.substr(comma + 1), m.grad_p)) {
            throw InputError("measurements: row " + std::to_string(row) + " is not numeric");
        }
        if (!(m.v > 0.0) || !std::isfinite(m.v)) {
            throw InputError("measurements: row " + std::to_string(row) + " has non-positive velocity");
        }
        if (!(m.grad_p > 0.0) || !std::isfinite(m.grad_p)) {
            throw InputError("measurements: row " + std::to_string(row) +
                             " has non-positive pressure gradient");
        }
        out.push_back(m);
    }
    if (!header_seen) {
        throw InputError("measurements: file is empty");
    }
    return out;
}

inline std::vector<FlowMeasurement> read_measurements_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("measurements: cannot open " + path);
    }
    return read_measurements(in);
}

/// Scientific notation with 17 significant digits, so values round-trip.
inline std::string format_sci(double x, int significant = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", significant - 1, x);
    return buf;
}

inline void write_measurements(std::ostream& out, std::span<const FlowMeasurement> data) {
    out << measurement_header << '\n';
    for (const auto& m : data) {
        out << format_sci(m.v) << ',' << format_sci(m.grad_p) << '\n';
    }
}

} // namespace pssflow
