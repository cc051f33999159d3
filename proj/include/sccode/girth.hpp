#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "sccode/tanner.hpp"

namespace sccode {

inline constexpr int kGirthInfinity = std::numeric_limits<int>::max();

// Girth of the Tanner graph: length of the shortest cycle, infinity for
// forests. Parallel edges between one VN/CN pair count as a 4-cycle.
inline int girth(const TannerGraph& g) {
    const int n = g.n_vn + g.n_cn; // VNs first, then CNs
    auto adj_of = [&](int node) -> const std::vector<int>& {
        return node < g.n_vn ? g.vn_edges[static_cast<std::size_t>(node)]
                             : g.cn_edges[static_cast<std::size_t>(node - g.n_vn)];
    };
    auto other_end = [&](int edge, int node) {
        const int vn = g.vn_of[static_cast<std::size_t>(edge)];
        const int cn = g.cn_of[static_cast<std::size_t>(edge)] + g.n_vn;
        return node == vn ? cn : vn;
    };

    // parallel edges
    for (int v = 0; v < g.n_vn; ++v) {
        const auto& adj = g.vn_edges[static_cast<std::size_t>(v)];
        std::vector<int> seen;
        for (int e : adj) {
            const int c = g.cn_of[static_cast<std::size_t>(e)];
            for (int s : seen)
                if (s == c) return 4;
            seen.push_back(c);
        }
    }

    int best = kGirthInfinity;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> via_edge(static_cast<std::size_t>(n));
    for (int start = 0; start < n; ++start) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(start)] = 0;
        via_edge[static_cast<std::size_t>(start)] = -1;
        q.push(start);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            if (best != kGirthInfinity && 2 * dist[static_cast<std::size_t>(u)] >= best) continue;
            for (int e : adj_of(u)) {
                if (e == via_edge[static_cast<std::size_t>(u)]) continue;
                const int w = other_end(e, u);
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    via_edge[static_cast<std::size_t>(w)] = e;
                    q.push(w);
                } else {
                    const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
                    if (len < best) best = len;
                }
            }
        }
    }
    if (best == kGirthInfinity) return kGirthInfinity;
    return best < 4 ? 4 : best;
}

inline int girth(const QCMatrix& qc) { return girth(tanner_from_qc(qc)); }

} // namespace sccode
