#pragma once

#include <cstdint>
#include <vector>

#include "sccode/errors.hpp"
#include "sccode/qc.hpp"

namespace sccode {

// Bipartite Tanner graph in CSR form, edge-indexed so decoders can keep one
// message per edge. Multigraphs (parallel edges) are represented faithfully.
struct TannerGraph {
    int n_vn = 0;
    int n_cn = 0;
    // edge e connects vn_of[e] and cn_of[e]
    std::vector<int> vn_of;
    std::vector<int> cn_of;
    // adjacency: edge ids per node
    std::vector<std::vector<int>> vn_edges;
    std::vector<std::vector<int>> cn_edges;

    int n_edges() const { return static_cast<int>(vn_of.size()); }

    void add_edge(int vn, int cn) {
        vn_edges[static_cast<std::size_t>(vn)].push_back(n_edges());
        cn_edges[static_cast<std::size_t>(cn)].push_back(n_edges());
        vn_of.push_back(vn);
        cn_of.push_back(cn);
    }

    static TannerGraph empty(int n_vn, int n_cn) {
        TannerGraph g;
        g.n_vn = n_vn;
        g.n_cn = n_cn;
        g.vn_edges.resize(static_cast<std::size_t>(n_vn));
        g.cn_edges.resize(static_cast<std::size_t>(n_cn));
        return g;
    }

    void validate() const {
        for (const auto& adj : vn_edges)
            if (adj.empty()) throw SpecError("DanglingNode", "VN without edges");
        for (const auto& adj : cn_edges)
            if (adj.empty()) throw SpecError("DanglingNode", "CN without edges");
    }
};

inline TannerGraph tanner_from_qc(const QCMatrix& qc) {
    TannerGraph g = TannerGraph::empty(static_cast<int>(qc.n_vn()), static_cast<int>(qc.n_cn()));
    for (const auto& e : qc.edges) {
        for (int i = 0; i < qc.M; ++i) {
            g.add_edge(e.col * qc.M + (i + e.shift) % qc.M, e.row * qc.M + i);
        }
    }
    return g;
}

// Dense 0/1 matrix entry point for tests and tools.
inline TannerGraph tanner_from_dense(const std::vector<std::vector<int>>& h) {
    const int rows = static_cast<int>(h.size());
    const int cols = rows > 0 ? static_cast<int>(h[0].size()) : 0;
    TannerGraph g = TannerGraph::empty(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            for (int k = 0; k < h[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; ++k) g.add_edge(c, r);
    return g;
}

} // namespace sccode
