#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sccode/errors.hpp"
#include "sccode/qc.hpp"
#include "sccode/tanner.hpp"

namespace sccode {

// Text format: header "proto_rows proto_cols M", then one line per nonzero
// edge copy "row col shift".
inline void write_qc(std::ostream& os, const QCMatrix& qc) {
    os << qc.proto_rows << ' ' << qc.proto_cols << ' ' << qc.M << '\n';
    for (const auto& e : qc.edges) {
        os << e.row << ' ' << e.col << ' ' << e.shift << '\n';
    }
}

inline QCMatrix read_qc(std::istream& is) {
    QCMatrix qc;
    if (!(is >> qc.proto_rows >> qc.proto_cols >> qc.M)) {
        throw SpecError("IOError", "bad matrix header, expected 'rows cols M'");
    }
    if (qc.proto_rows < 1 || qc.proto_cols < 1 || qc.M < 1) {
        throw SpecError("IOError", "matrix header values must be positive");
    }
    QCEdge e;
    while (is >> e.row >> e.col >> e.shift) {
        if (e.row < 0 || e.row >= qc.proto_rows || e.col < 0 || e.col >= qc.proto_cols || e.shift < 0 ||
            e.shift >= qc.M) {
            throw SpecError("IOError", "edge out of range");
        }
        qc.edges.push_back(e);
    }
    return qc;
}

// Dense export: one row of 0/1 characters per lifted check equation.
inline void write_dense(std::ostream& os, const QCMatrix& qc) {
    const auto g = tanner_from_qc(qc);
    std::vector<std::string> rows(static_cast<std::size_t>(g.n_cn), std::string(static_cast<std::size_t>(g.n_vn), '0'));
    for (int e = 0; e < g.n_edges(); ++e) {
        auto& ch = rows[static_cast<std::size_t>(g.cn_of[static_cast<std::size_t>(e)])]
                       [static_cast<std::size_t>(g.vn_of[static_cast<std::size_t>(e)])];
        ch = ch == '0' ? '1' : '0'; // GF(2): parallel edges cancel
    }
    for (const auto& r : rows) os << r << '\n';
}

inline std::string qc_to_string(const QCMatrix& qc) {
    std::ostringstream ss;
    write_qc(ss, qc);
    return ss.str();
}

} // namespace sccode
