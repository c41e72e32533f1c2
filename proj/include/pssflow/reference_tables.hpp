#pragma once

/**
 * @file reference_tables.hpp
 * @brief Published productivity indices used for regression checks.
 *
 * One row per published cell. Cells printed once for several columns or
 * rows are repeated for each case they cover. Columns:
 *   table, row label, regime, s, Q/h [m^2/s], v_D [m/s], r_e [m],
 *   published dimensionless index, note.
 * All runs share r_w = 0.3, h = 10, alpha = lambda = 1.01e10,
 * beta = 2.4318e11 and v_F = 1e-5. Row labels in Table 1 are Q/h.
 */

#include <pssflow/errors.hpp>
#include <pssflow/measurements_csv.hpp>
#include <pssflow/model.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pssflow {

inline constexpr int reference_tables_version = 1;

inline constexpr std::string_view reference_tables_csv = R"(# reference tables v1
table,row,regime,s,q_over_h,v_D,r_e,published,note
# Table 1: index vs specific flux Q/h for s = 0.7 and s = 0.3 (v_D = 1e-7, v_F = 1e-5, r_e = 1000).
1,Q/h=2e-7,D,0.7,2e-7,1e-7,1000,0.1358,
1,Q/h=2e-7,F,0.7,2e-7,1e-7,1000,0.1358,
1,Q/h=2e-7,FDD,0.7,2e-7,1e-7,1000,0.1358,
1,Q/h=2e-7,DDpD,0.7,2e-7,1e-7,1000,4.5e-8,
1,Q/h=2e-7,FDpD,0.7,2e-7,1e-7,1000,4.5e-8,
1,Q/h=2e-7,DDpD,0.3,2e-7,1e-7,1000,2.9e-4,
1,Q/h=2e-7,FDpD,0.3,2e-7,1e-7,1000,2.9e-4,
1,Q/h=1e-4,D,0.7,1e-4,1e-7,1000,0.1358,
1,Q/h=1e-4,F,0.7,1e-4,1e-7,1000,0.1358,
1,Q/h=1e-4,FDD,0.7,1e-4,1e-7,1000,0.1358,
1,Q/h=1e-4,DDpD,0.7,1e-4,1e-7,1000,5.65e-6,
1,Q/h=1e-4,FDpD,0.7,1e-4,1e-7,1000,5.65e-6,
1,Q/h=1e-4,DDpD,0.3,1e-4,1e-7,1000,5.21e-3,
1,Q/h=1e-4,FDpD,0.3,1e-4,1e-7,1000,5.21e-3,
1,Q/h=1e-3,D,0.7,1e-3,1e-7,1000,0.1358,
1,Q/h=1e-3,F,0.7,1e-3,1e-7,1000,0.1356,
1,Q/h=1e-3,FDD,0.7,1e-3,1e-7,1000,0.1356,
1,Q/h=1e-3,DDpD,0.7,1e-3,1e-7,1000,3.64e-4,
1,Q/h=1e-3,FDpD,0.7,1e-3,1e-7,1000,3.64e-4,
1,Q/h=1e-3,DDpD,0.3,1e-3,1e-7,1000,9.14e-2,
1,Q/h=1e-3,FDpD,0.3,1e-3,1e-7,1000,9.13e-2,
1,Q/h=5.95e-3,D,0.3,5.95e-3,1e-7,1000,0.1358,
1,Q/h=5.95e-3,F,0.3,5.95e-3,1e-7,1000,0.1345,
1,Q/h=5.95e-3,FDD,0.3,5.95e-3,1e-7,1000,0.1345,
1,Q/h=5.95e-3,DDpD,0.3,5.95e-3,1e-7,1000,0.1354,
1,Q/h=5.95e-3,FDpD,0.3,5.95e-3,1e-7,1000,0.134,
1,Q/h=1e-2,D,0.7,1e-2,1e-7,1000,0.1358,
1,Q/h=1e-2,F,0.7,1e-2,1e-7,1000,0.1335,
1,Q/h=1e-2,FDD,0.7,1e-2,1e-7,1000,0.1335,
1,Q/h=1e-2,DDpD,0.7,1e-2,1e-7,1000,0.0873,
1,Q/h=1e-2,FDpD,0.7,1e-2,1e-7,1000,0.0863,inconsistent with Table 2 (0.0864)
1,Q/h=1e-2,DDpD,0.3,1e-2,1e-7,1000,0.1357,
1,Q/h=1e-2,FDpD,0.3,1e-2,1e-7,1000,0.1334,
1,Q/h=3.18e-2,D,0.7,3.18e-2,1e-7,1000,0.1358,
1,Q/h=3.18e-2,F,0.7,3.18e-2,1e-7,1000,0.1287,
1,Q/h=3.18e-2,FDD,0.7,3.18e-2,1e-7,1000,0.1287,
1,Q/h=3.18e-2,DDpD,0.7,3.18e-2,1e-7,1000,0.1335,
1,Q/h=3.18e-2,FDpD,0.7,3.18e-2,1e-7,1000,0.1266,
1,Q/h=1e-1,D,0.7,1e-1,1e-7,1000,0.1358,
1,Q/h=1e-1,F,0.7,1e-1,1e-7,1000,0.1158,
1,Q/h=1e-1,FDD,0.7,1e-1,1e-7,1000,0.1158,
1,Q/h=1e-1,DDpD,0.7,1e-1,1e-7,1000,0.1358,
1,Q/h=1e-1,FDpD,0.7,1e-1,1e-7,1000,0.1157,
1,Q/h=1e-1,DDpD,0.3,1e-1,1e-7,1000,0.1358,
1,Q/h=1e-1,FDpD,0.3,1e-1,1e-7,1000,0.1158,
1,Q/h=1,D,0.7,1,1e-7,1000,0.1358,
1,Q/h=1,F,0.7,1,1e-7,1000,0.0497,
1,Q/h=1,FDD,0.7,1,1e-7,1000,0.0497,
1,Q/h=1,DDpD,0.7,1,1e-7,1000,0.1358,
1,Q/h=1,FDpD,0.7,1,1e-7,1000,0.0497,
1,Q/h=1,DDpD,0.3,1,1e-7,1000,0.1358,
1,Q/h=1,FDpD,0.3,1,1e-7,1000,0.0497,
1,Q/h=1e1,D,0.7,1e1,1e-7,1000,0.1358,
1,Q/h=1e1,F,0.7,1e1,1e-7,1000,7.41e-3,
1,Q/h=1e1,FDD,0.7,1e1,1e-7,1000,7.41e-3,
1,Q/h=1e1,DDpD,0.7,1e1,1e-7,1000,0.1358,
1,Q/h=1e1,FDpD,0.7,1e1,1e-7,1000,7.41e-3,
1,Q/h=1e1,DDpD,0.3,1e1,1e-7,1000,0.1358,
1,Q/h=1e1,FDpD,0.3,1e1,1e-7,1000,7.41e-3,
1,Q/h=1e4,D,0.7,1e4,1e-7,1000,0.1358,
1,Q/h=1e4,F,0.7,1e4,1e-7,1000,7.84e-6,
1,Q/h=1e4,FDD,0.7,1e4,1e-7,1000,7.84e-6,
1,Q/h=1e4,DDpD,0.7,1e4,1e-7,1000,0.1358,
1,Q/h=1e4,FDpD,0.7,1e4,1e-7,1000,7.84e-6,
1,Q/h=1e4,DDpD,0.3,1e4,1e-7,1000,0.1358,
1,Q/h=1e4,FDpD,0.3,1e4,1e-7,1000,7.84e-6,
# Table 2: index vs power s for Q/h = 1e-4 and 1e-2 (v_D = 1e-7, v_F = 1e-5, r_e = 1000).
2,s=0,DDpD,0,1e-4,1e-7,1000,0.1358,
2,s=0,FDpD,0,1e-4,1e-7,1000,0.1358,
2,s=0,DDpD,0,1e-2,1e-7,1000,0.1358,
2,s=0,FDpD,0,1e-2,1e-7,1000,0.1335,
2,s=0.1,DDpD,0.1,1e-4,1e-7,1000,0.0806,
2,s=0.1,FDpD,0.1,1e-4,1e-7,1000,0.0806,
2,s=0.1,DDpD,0.1,1e-2,1e-7,1000,0.1358,
2,s=0.1,FDpD,0.1,1e-2,1e-7,1000,0.1335,
2,s=0.3,DDpD,0.3,1e-4,1e-7,1000,5.21e-3,
2,s=0.3,FDpD,0.3,1e-4,1e-7,1000,5.21e-3,
2,s=0.3,DDpD,0.3,1e-2,1e-7,1000,0.1357,
2,s=0.3,FDpD,0.3,1e-2,1e-7,1000,0.1334,
2,s=0.5,DDpD,0.5,1e-4,1e-7,1000,1.76e-4,
2,s=0.5,FDpD,0.5,1e-4,1e-7,1000,1.76e-4,
2,s=0.5,DDpD,0.5,1e-2,1e-7,1000,0.1331,
2,s=0.5,FDpD,0.5,1e-2,1e-7,1000,0.1309,
2,s=0.7,DDpD,0.7,1e-4,1e-7,1000,5.65e-6,
2,s=0.7,FDpD,0.7,1e-4,1e-7,1000,5.65e-6,
2,s=0.7,DDpD,0.7,1e-2,1e-7,1000,0.0873,
2,s=0.7,FDpD,0.7,1e-2,1e-7,1000,0.0864,inconsistent with Table 1 (0.0863)
2,s=1,DDpD,1,1e-4,1e-7,1000,3.1e-8,
2,s=1,FDpD,1,1e-4,1e-7,1000,3.1e-8,
2,s=1,DDpD,1,1e-2,1e-7,1000,1.66e-3,
2,s=1,FDpD,1,1e-2,1e-7,1000,1.66e-3,
# Table 3: index vs power s and v_D for Q/h = 1e-4 (v_F = 1e-5, r_e = 1000).
3,s=0,DDpD,0,1e-4,1e-9,1000,0.1359,
3,s=0,FDpD,0,1e-4,1e-9,1000,0.1358,
3,s=0,DDpD,0,1e-4,1e-7,1000,0.1359,
3,s=0,FDpD,0,1e-4,1e-7,1000,0.1358,
3,s=0,DDpD,0,1e-4,1e-6,1000,0.1359,
3,s=0,FDpD,0,1e-4,1e-6,1000,0.1358,
3,s=0.1,DDpD,0.1,1e-4,1e-9,1000,0.1359,
3,s=0.1,FDpD,0.1,1e-4,1e-9,1000,0.1358,
3,s=0.1,DDpD,0.1,1e-4,1e-7,1000,0.0806,
3,s=0.1,FDpD,0.1,1e-4,1e-7,1000,0.0806,
3,s=0.1,DDpD,0.1,1e-4,1e-6,1000,0.04941,
3,s=0.1,FDpD,0.1,1e-4,1e-6,1000,0.04941,
3,s=0.2,DDpD,0.2,1e-4,1e-9,1000,0.1358,
3,s=0.2,FDpD,0.2,1e-4,1e-9,1000,0.1358,
3,s=0.2,DDpD,0.2,1e-4,1e-7,1000,0.025,
3,s=0.2,FDpD,0.2,1e-4,1e-7,1000,0.025,
3,s=0.2,DDpD,0.2,1e-4,1e-6,1000,0.012,
3,s=0.2,FDpD,0.2,1e-4,1e-6,1000,0.012,
3,s=0.3,DDpD,0.3,1e-4,1e-9,1000,0.1354,
3,s=0.3,FDpD,0.3,1e-4,1e-9,1000,0.1354,
3,s=0.3,DDpD,0.3,1e-4,1e-7,1000,5.211e-3,
3,s=0.3,FDpD,0.3,1e-4,1e-7,1000,5.211e-3,
3,s=0.3,DDpD,0.3,1e-4,1e-6,1000,2.5398e-3,
3,s=0.3,FDpD,0.3,1e-4,1e-6,1000,2.5398e-3,
3,s=0.5,DDpD,0.5,1e-4,1e-9,1000,0.1128,
3,s=0.5,FDpD,0.5,1e-4,1e-9,1000,0.1128,
3,s=0.5,DDpD,0.5,1e-4,1e-7,1000,1.76052e-4,
3,s=0.5,FDpD,0.5,1e-4,1e-7,1000,1.76052e-4,
3,s=0.5,DDpD,0.5,1e-4,1e-6,1000,1.01204e-4,
3,s=0.5,FDpD,0.5,1e-4,1e-6,1000,1.01204e-4,
3,s=0.7,DDpD,0.7,1e-4,1e-9,1000,9.064e-3,
3,s=0.7,FDpD,0.7,1e-4,1e-9,1000,9.064e-3,
3,s=0.7,DDpD,0.7,1e-4,1e-7,1000,5.652e-6,
3,s=0.7,FDpD,0.7,1e-4,1e-7,1000,5.652e-6,
3,s=0.7,DDpD,0.7,1e-4,1e-6,1000,3.774e-6,
3,s=0.7,FDpD,0.7,1e-4,1e-6,1000,3.774e-6,
3,s=1,DDpD,1,1e-4,1e-9,1000,1.682e-5,
3,s=1,FDpD,1,1e-4,1e-9,1000,1.682e-5,
3,s=1,DDpD,1,1e-4,1e-7,1000,3.105e-8,
3,s=1,FDpD,1,1e-4,1e-7,1000,3.105e-8,
3,s=1,DDpD,1,1e-4,1e-6,1000,2.446e-8,
3,s=1,FDpD,1,1e-4,1e-6,1000,2.446e-8,
# Table 4: FDpD index vs v_D and the all-pre-Darcy index (Q/h = 1e-4, v_F = 1e-5, r_e = 100).
4,s=0.05,FDpD,0.05,1e-4,0,100,0.1976,
4,s=0.05,FDpD,0.05,1e-4,5e-7,100,0.1754,
4,s=0.05,FDpD,0.05,1e-4,1.5e-6,100,0.1502,
4,s=0.05,FDpD,0.05,1e-4,5e-6,100,0.1296,
4,s=0.05,FDpD,0.05,1e-4,9.5e-6,100,0.1214,
4,s=0.05,FDpD,0.05,1e-4,1e-5,100,0.1208,
4,s=0.05,preDarcy,0.05,1e-4,1e-7,100,0.1058,
4,s=0.3,FDpD,0.3,1e-4,0,100,0.1976,
4,s=0.3,FDpD,0.3,1e-4,5e-7,100,0.0173,
4,s=0.3,FDpD,0.3,1e-4,1.5e-6,100,0.0084,
4,s=0.3,FDpD,0.3,1e-4,5e-6,100,0.0058,
4,s=0.3,FDpD,0.3,1e-4,9.5e-6,100,0.0051,
4,s=0.3,FDpD,0.3,1e-4,1e-5,100,0.0051,
4,s=0.3,preDarcy,0.3,1e-4,1e-7,100,0.0042,)";

struct ReferenceEntry {
    int table = 0;
    std::string row;
    RegimeAssignment regime{};
    double s = 0.0;
    double q_over_h = 0.0;
    double v_D = 0.0;
    double r_e = 0.0;
    double published = 0.0;
    std::string note;
};

/// Parsed reference data, in file order.
inline std::vector<ReferenceEntry> reference_entries() {
    std::vector<ReferenceEntry> out;
    std::string_view text = reference_tables_csv;
    bool header_skipped = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = detail::trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        std::vector<std::string_view> cells;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            cells.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (cells.size() != 9) {
            throw std::logic_error("reference tables: malformed row");
        }
        ReferenceEntry e;
        double table = 0.0;
        const auto regime = parse_regime(cells[2]);
        if (!detail::parse_double(cells[0], table) || !regime || !detail::parse_double(cells[3], e.s) ||
            !detail::parse_double(cells[4], e.q_over_h) || !detail::parse_double(cells[5], e.v_D) ||
            !detail::parse_double(cells[6], e.r_e) || !detail::parse_double(cells[7], e.published)) {
            throw std::logic_error("reference tables: malformed row");
        }
        e.table = static_cast<int>(table);
        e.row = std::string(cells[1]);
        e.regime = *regime;
        e.note = std::string(cells[8]);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace pssflow
