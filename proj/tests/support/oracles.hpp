#pragma once

// Independent reference implementations used to freeze expected values.
// Everything here must stay decoupled from the library code paths it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <vector>

#include "sccode/tanner.hpp"

namespace oracle {

// Girth by edge deletion: shortest cycle through edge e = 1 + shortest path
// between its endpoints with e removed. Parallel-edge pairs map to 4, the
// same convention the library uses.
inline int girth_by_edge_deletion(const sccode::TannerGraph& g) {
    const int n = g.n_vn + g.n_cn;
    int best = std::numeric_limits<int>::max();
    for (int skip = 0; skip < g.n_edges(); ++skip) {
        const int src = g.vn_of[static_cast<std::size_t>(skip)];
        const int dst = g.cn_of[static_cast<std::size_t>(skip)] + g.n_vn;
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(src)] = 0;
        q.push(src);
        while (!q.empty() && dist[static_cast<std::size_t>(dst)] < 0) {
            const int u = q.front();
            q.pop();
            const auto& adj = u < g.n_vn ? g.vn_edges[static_cast<std::size_t>(u)]
                                         : g.cn_edges[static_cast<std::size_t>(u - g.n_vn)];
            for (int e : adj) {
                if (e == skip) continue;
                const int vn = g.vn_of[static_cast<std::size_t>(e)];
                const int cn = g.cn_of[static_cast<std::size_t>(e)] + g.n_vn;
                const int w = (u == vn) ? cn : vn;
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        if (dist[static_cast<std::size_t>(dst)] >= 0) best = std::min(best, dist[static_cast<std::size_t>(dst)] + 1);
    }
    if (best == std::numeric_limits<int>::max()) return best;
    return best < 4 ? 4 : best;
}

// Scalar density evolution for the uncoupled (3,6) ensemble:
// x' = eps * (1 - (1-x)^5)^2. Returns true iff the recursion dies out.
inline bool scalar_de_36(double eps, int imax = 20000, double tol = 1e-12) {
    double x = eps;
    for (int i = 0; i < imax; ++i) {
        x = eps * std::pow(1.0 - std::pow(1.0 - x, 5), 2);
        if (x < tol) return true;
    }
    return false;
}

inline double scalar_threshold_36(double tol_eps = 1e-6) {
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol_eps) {
        const double mid = 0.5 * (lo + hi);
        (scalar_de_36(mid) ? lo : hi) = mid;
    }
    return lo;
}

// Reference erasure decoding by Gaussian elimination over GF(2): a bit is
// recoverable iff its value is implied by the checks restricted to the
// erasure set. Matches what peeling/BP can achieve at best... peeling can be
// strictly weaker, so this is only used where the graph sizes keep peeling
// optimal (trees) or where equality is the claim under test.
inline std::set<int> unresolvable_by_elimination(const sccode::TannerGraph& g, const std::vector<int>& erased) {
    // build the residual system: rows = checks, cols = erased bits
    std::vector<int> col_of(static_cast<std::size_t>(g.n_vn), -1);
    for (std::size_t i = 0; i < erased.size(); ++i) col_of[static_cast<std::size_t>(erased[i])] = static_cast<int>(i);
    std::vector<std::vector<std::uint8_t>> rows;
    for (int c = 0; c < g.n_cn; ++c) {
        std::vector<std::uint8_t> row(erased.size(), 0);
        bool any = false;
        for (int e : g.cn_edges[static_cast<std::size_t>(c)]) {
            const int v = g.vn_of[static_cast<std::size_t>(e)];
            if (col_of[static_cast<std::size_t>(v)] >= 0) {
                row[static_cast<std::size_t>(col_of[static_cast<std::size_t>(v)])] ^= 1;
                any = true;
            }
        }
        if (any) rows.push_back(std::move(row));
    }
    // forward elimination
    const std::size_t ncols = erased.size();
    std::size_t r = 0;
    std::vector<int> pivot_col;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][c]) {
                for (std::size_t j = c; j < ncols; ++j) rows[i][j] ^= rows[r][j];
            }
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    // a column is determined iff it appears as a pivot of a row with a single 1
    std::set<int> unresolved(erased.begin(), erased.end());
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        int weight = 0;
        for (std::size_t j = 0; j < ncols; ++j) weight += rows[i][j];
        if (weight == 1) unresolved.erase(erased[static_cast<std::size_t>(pivot_col[i])]);
    }
    return unresolved;
}

} // namespace oracle
