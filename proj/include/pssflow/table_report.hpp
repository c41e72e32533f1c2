#pragma once

/**
 * @file table_report.hpp
 * @brief Recompute the published tables and report relative deviations.
 */

#include <pssflow/measurements_csv.hpp>
#include <pssflow/productivity.hpp>
#include <pssflow/reference_tables.hpp>
#include <pssflow/sweep.hpp>

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

namespace pssflow {

inline constexpr double table_deviation_threshold = 0.01;

struct TableComparison {
    ReferenceEntry entry;
    double computed = 0.0;
    double rel_deviation = 0.0;  ///< (computed - published) / published
    bool flagged = false;        ///< |rel_deviation| > threshold
};

/// Scenario behind one published cell.
inline Scenario reference_scenario(const ReferenceEntry& e) {
    Scenario scn;
    scn.geometry = Geometry{e.r_e, 0.3, 10.0};
    scn.params = FlowParameters{};
    scn.params.s = e.s;
    scn.params.v_D = e.v_D;
    scn.params.v_F = 1e-5;
    scn.regime = e.regime;
    scn.q_over_h = e.q_over_h;
    return scn;
}

inline std::vector<TableComparison> compare_table(int table_id, const PiOptions& opt = {},
                                                  unsigned threads = default_thread_count()) {
    if (table_id < 1 || table_id > 4) {
        throw InputError("table: id must be 1, 2, 3 or 4");
    }
    std::vector<ReferenceEntry> entries;
    for (auto& e : reference_entries()) {
        if (e.table == table_id) {
            entries.push_back(std::move(e));
        }
    }
    return parallel_map<TableComparison>(
        entries.size(),
        [&](std::size_t i) {
            TableComparison c;
            c.entry = entries[i];
            c.computed = compute_pi(reference_scenario(c.entry), opt).j_dimensionless;
            c.rel_deviation = (c.computed - c.entry.published) / c.entry.published;
            c.flagged = std::abs(c.rel_deviation) > table_deviation_threshold;
            return c;
        },
        threads);
}

inline void write_table_csv(std::ostream& out, const std::vector<TableComparison>& rows) {
    out << "table,row,regime,s,q_over_h,v_D,r_e,published,computed,rel_deviation,flag,note\n";
    for (const auto& c : rows) {
        const auto& e = c.entry;
        out << e.table << ',' << e.row << ',' << e.regime.name() << ',' << format_sci(e.s, 6) << ','
            << format_sci(e.q_over_h, 6) << ',' << format_sci(e.v_D, 6) << ',' << format_sci(e.r_e, 6)
            << ',' << format_sci(e.published, 6) << ',' << format_sci(c.computed, 10) << ','
            << format_sci(c.rel_deviation, 6) << ',' << (c.flagged ? "DEVIATES" : "ok") << ','
            << e.note << '\n';
    }
}

/// Human-readable summary: counts, every flagged cell and every annotated cell.
inline void write_deviation_report(std::ostream& out, int table_id, const std::vector<TableComparison>& rows) {
    std::size_t flagged = 0;
    double worst = 0.0;
    for (const auto& c : rows) {
        flagged += c.flagged ? 1 : 0;
        worst = std::max(worst, std::abs(c.rel_deviation));
    }
    out << "table " << table_id << ": " << rows.size() << " published values, " << flagged
        << " deviate by more than " << table_deviation_threshold * 100.0 << "%, worst "
        << format_sci(worst * 100.0, 3) << "%\n";
    for (const auto& c : rows) {
        if (!c.flagged && c.entry.note.empty()) {
            continue;
        }
        out << "  " << (c.flagged ? "DEVIATES " : "note     ") << c.entry.row << ' ' << c.entry.regime.name()
            << " s=" << c.entry.s << ": published " << c.entry.published << ", computed "
            << format_sci(c.computed, 6) << " (" << format_sci(c.rel_deviation * 100.0, 3) << "%)";
        if (!c.entry.note.empty()) {
            out << " [" << c.entry.note << ']';
        }
        out << '\n';
    }
}

} // namespace pssflow
