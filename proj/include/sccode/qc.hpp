#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "sccode/errors.hpp"
#include "sccode/protograph.hpp"
#include "sccode/rng.hpp"

namespace sccode {

struct QCEdge {
    int row = 0;   // protograph CN type (over the whole coupled matrix)
    int col = 0;   // protograph VN type
    int shift = 0; // circulant shift in {0..M-1}
};

// Quasi-cyclic parity-check matrix: each protograph edge expands to an M x M
// circulant permutation. Lifted CN (row*M + i) connects lifted VN
// (col*M + (i + shift) mod M).
struct QCMatrix {
    int proto_rows = 0;
    int proto_cols = 0;
    int M = 1;
    std::vector<QCEdge> edges;

    long long n_cn() const { return static_cast<long long>(proto_rows) * M; }
    long long n_vn() const { return static_cast<long long>(proto_cols) * M; }
    long long n_edges() const { return static_cast<long long>(edges.size()) * M; }
};

namespace detail {

inline std::vector<QCEdge> proto_edge_sites(const CoupledBaseMatrix& base) {
    std::vector<QCEdge> sites;
    for (int bcol = 0; bcol < base.block_cols(); ++bcol) {
        for (int i = 0; i <= base.m(); ++i) {
            const auto& comp = base.spread.components[static_cast<std::size_t>(i)];
            for (int r = 0; r < base.bc(); ++r) {
                for (int c = 0; c < base.bv(); ++c) {
                    for (int k = 0; k < comp.at(r, c); ++k) {
                        sites.push_back({(bcol + i) * base.bc() + r, bcol * base.bv() + c, 0});
                    }
                }
            }
        }
    }
    return sites;
}

} // namespace detail

// True iff the lifted Tanner graph contains a 4-cycle (or parallel edges,
// which count as one per the girth convention). Works on shift algebra only,
// so it is cheap enough to gate rejection sampling.
inline bool qc_has_4cycle(const QCMatrix& qc) {
    // group edges by protograph row
    std::map<int, std::vector<const QCEdge*>> by_row;
    for (const auto& e : qc.edges) by_row[e.row].push_back(&e);
    // parallel lifted edges: same cell, same shift
    {
        std::map<std::tuple<int, int, int>, int> cell_shift;
        for (const auto& e : qc.edges) {
            if (++cell_shift[{e.row, e.col, e.shift}] > 1) return true;
        }
    }
    // two row-traversals with equal (c1, c2, shift difference) close a 4-cycle
    std::map<std::tuple<int, int, int>, int> keys;
    for (const auto& [row, edges] : by_row) {
        (void)row;
        for (const auto* a : edges) {
            for (const auto* b : edges) {
                if (a == b) continue;
                const int d = ((a->shift - b->shift) % qc.M + qc.M) % qc.M;
                if (++keys[{a->col, b->col, d}] > 1) return true;
            }
        }
    }
    return false;
}

// Lifts a coupled base matrix with explicit circulant shifts, one per edge
// copy in row-major protograph order (multiplicity copies consecutive).
inline QCMatrix lift_explicit(const CoupledBaseMatrix& base, int M, const std::vector<int>& shifts) {
    if (M < 1) throw SpecError("LiftingTooSmall", "lifting factor must be >= 1");
    QCMatrix qc;
    qc.proto_rows = base.block_rows() * base.bc();
    qc.proto_cols = base.block_cols() * base.bv();
    qc.M = M;
    qc.edges = detail::proto_edge_sites(base);
    if (shifts.size() != qc.edges.size()) {
        throw SpecError("LiftingTooSmall", "expected one shift per protograph edge copy (" +
                                               std::to_string(qc.edges.size()) + "), got " +
                                               std::to_string(shifts.size()));
    }
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (shifts[i] < 0 || shifts[i] >= M) throw SpecError("LiftingTooSmall", "shift out of range");
        qc.edges[i].shift = shifts[i];
    }
    return qc;
}

// Seeded pseudo-random lift. Multiplicity copies of one protograph entry get
// pairwise-distinct shifts; candidates are resampled until the lifted graph
// is 4-cycle-free or the retry cap is hit (the last sample is then kept).
inline QCMatrix lift(const CoupledBaseMatrix& base, int M, std::uint64_t seed, int girth6_retries = 1000) {
    if (M < base.spread.sum().max_entry()) {
        throw SpecError("LiftingTooSmall",
                        "lifting factor M=" + std::to_string(M) + " is below the largest base-matrix entry");
    }
    QCMatrix qc;
    qc.proto_rows = base.block_rows() * base.bc();
    qc.proto_cols = base.block_cols() * base.bv();
    qc.M = M;
    auto sites = detail::proto_edge_sites(base);
    Rng rng(derive_seed(seed, 0x71f7));
    for (int attempt = 0; attempt < girth6_retries; ++attempt) {
        qc.edges = sites;
        std::unordered_map<long long, std::vector<int>> used; // per cell
        for (auto& e : qc.edges) {
            const long long cell = static_cast<long long>(e.row) * qc.proto_cols + e.col;
            auto& taken = used[cell];
            int s;
            do {
                s = static_cast<int>(rng.below(static_cast<std::uint64_t>(M)));
            } while (std::find(taken.begin(), taken.end(), s) != taken.end());
            taken.push_back(s);
            e.shift = s;
        }
        if (!qc_has_4cycle(qc)) break;
    }
    return qc;
}

} // namespace sccode
