#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "sccode/chain.hpp"
#include "sccode/errors.hpp"

namespace sccode {

// Integer base matrix of a protograph: entry (r, c) is the number of parallel
// edges between CN type r and VN type c.
struct ProtographBaseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> mult; // row-major, rows*cols

    ProtographBaseMatrix() = default;
    ProtographBaseMatrix(int r, int c) : rows(r), cols(c), mult(static_cast<std::size_t>(r) * c, 0) {}
    ProtographBaseMatrix(int r, int c, std::vector<int> m) : rows(r), cols(c), mult(std::move(m)) {}

    int& at(int r, int c) { return mult[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return mult[static_cast<std::size_t>(r) * cols + c]; }

    std::vector<int> row_sums() const {
        std::vector<int> s(rows, 0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) s[r] += at(r, c);
        return s;
    }
    std::vector<int> col_sums() const {
        std::vector<int> s(cols, 0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) s[c] += at(r, c);
        return s;
    }
    int max_entry() const {
        int m = 0;
        for (int v : mult) m = v > m ? v : m;
        return m;
    }

    bool operator==(const ProtographBaseMatrix& o) const {
        return rows == o.rows && cols == o.cols && mult == o.mult;
    }
};

inline void validate_base_matrix(const ProtographBaseMatrix& b) {
    if (b.rows < 1 || b.cols < 1 || b.mult.size() != static_cast<std::size_t>(b.rows) * b.cols) {
        throw SpecError("BadBaseMatrix", "base matrix must be a nonempty rows x cols grid");
    }
    for (int v : b.mult) {
        if (v < 0) throw SpecError("BadBaseMatrix", "base matrix entries must be >= 0");
    }
    for (int s : b.row_sums()) {
        if (s == 0) throw SpecError("BadBaseMatrix", "every CN type needs at least one edge");
    }
    for (int s : b.col_sums()) {
        if (s == 0) throw SpecError("BadBaseMatrix", "every VN type needs at least one edge");
    }
}

// Decomposition of a base matrix into m+1 component matrices B_0..B_m that
// distribute the edges over coupling offsets 0..m.
struct EdgeSpreading {
    std::vector<ProtographBaseMatrix> components;

    int memory() const { return static_cast<int>(components.size()) - 1; }
    int bc() const { return components.at(0).rows; }
    int bv() const { return components.at(0).cols; }

    ProtographBaseMatrix sum() const {
        ProtographBaseMatrix s(bc(), bv());
        for (const auto& comp : components)
            for (std::size_t i = 0; i < s.mult.size(); ++i) s.mult[i] += comp.mult[i];
        return s;
    }
};

// Validates that the components reassemble the base matrix entrywise.
inline EdgeSpreading edge_spread(const ProtographBaseMatrix& base, EdgeSpreading components) {
    validate_base_matrix(base);
    if (components.components.empty()) {
        throw SpecError("SpreadSumMismatch", "need at least one component matrix");
    }
    for (const auto& comp : components.components) {
        if (comp.rows != base.rows || comp.cols != base.cols) {
            throw SpecError("SpreadSumMismatch", "component dimensions differ from base");
        }
        for (int v : comp.mult) {
            if (v < 0) throw SpecError("SpreadSumMismatch", "component entries must be >= 0");
        }
    }
    if (!(components.sum() == base)) {
        throw SpecError("SpreadSumMismatch", "components do not sum to the base matrix");
    }
    return components;
}

// Terminated coupled base matrix: L block-columns, L+m block-rows, block
// (t+i, t) = B_i. Stored implicitly through the spreading.
struct CoupledBaseMatrix {
    EdgeSpreading spread;
    int L = 0;

    int m() const { return spread.memory(); }
    int bc() const { return spread.bc(); }
    int bv() const { return spread.bv(); }
    int block_rows() const { return L + m(); }
    int block_cols() const { return L; }

    // Multiplicity of the protograph edge between CN type (block_row br, r)
    // and VN type (block_col bcol, c); zero outside the band.
    int entry(int br, int r, int bcol, int c) const {
        const int i = br - bcol;
        if (i < 0 || i > m()) return 0;
        return spread.components[static_cast<std::size_t>(i)].at(r, c);
    }

    Rational design_rate() const {
        return Rational(1) - Rational(static_cast<long long>(L + m()) * bc(), static_cast<long long>(L) * bv());
    }
    // Rate of the uncoupled ensemble; the L -> infinity limit of design_rate.
    Rational asymptotic_rate() const { return Rational(1) - Rational(bc(), bv()); }
};

inline CoupledBaseMatrix build_coupled_base(const EdgeSpreading& spread, const CoupledChainSpec& chain) {
    validate_chain_spec(chain);
    if (spread.memory() != chain.m) {
        throw SpecError("SpreadSumMismatch",
                        "edge spreading has " + std::to_string(spread.components.size()) +
                            " components but chain memory is m=" + std::to_string(chain.m));
    }
    validate_base_matrix(spread.sum());
    return CoupledBaseMatrix{spread, chain.L};
}

// Design-accounting transcript for an SC-LDPC chain: termination is
// structural (extra check rows), so tail positions record zero extra
// information rather than zero-padded inputs.
inline ChainTranscript scldpc_transcript(const CoupledBaseMatrix& base, int lifting, double puncture_fraction = 0.0) {
    const long long M = lifting;
    const long long interior = static_cast<long long>(base.bv() - base.bc()) * M;
    const long long tail = static_cast<long long>(base.bv() - 2 * base.bc()) * M;
    if (tail < 0) {
        throw SpecError("BadBaseMatrix", "design accounting requires b_v >= 2*b_c");
    }
    ChainTranscript t;
    const long long sent_full = static_cast<long long>(base.bv()) * M;
    const long long punct_total = std::llround(puncture_fraction * double(sent_full * base.L));
    for (int pos = 1; pos <= base.L; ++pos) {
        const long long punct = punct_total / base.L + (pos <= punct_total % base.L ? 1 : 0);
        t.info_bits.push_back(pos <= base.L - base.m() ? interior : tail);
        t.sent_bits.push_back(sent_full - punct);
    }
    return t;
}

// Sub-block locality construction of §-style (d_v, d_c, s)-regular chains:
// B_0 keeps d_v - s all-one rows (local checks) plus s mixed rows, and
// B_1 = 1 - B_0 couples adjacent sub-blocks.
struct SubBlockLocalitySpec {
    int d_v = 0;
    int d_c = 0;
    int s = 0;
    // one pattern per mixed row; empty selects the default
    // "ones in the first ceil(d_c/2) positions".
    std::vector<std::vector<int>> mixed_rows;
};

inline CoupledBaseMatrix subblock_construct(const SubBlockLocalitySpec& spec, const CoupledChainSpec& chain) {
    if (spec.s < 1 || spec.s > spec.d_v - 2) {
        throw SpecError("InvalidLocality",
                        "s must lie in {1..d_v-2}, got s=" + std::to_string(spec.s) + ", d_v=" + std::to_string(spec.d_v));
    }
    if (chain.m != 1) {
        throw SpecError("InvalidLocality", "sub-block locality construction uses T=1 (m=1)");
    }
    std::vector<std::vector<int>> mixed = spec.mixed_rows;
    if (mixed.empty()) {
        std::vector<int> def(spec.d_c, 0);
        for (int c = 0; c < (spec.d_c + 1) / 2; ++c) def[c] = 1;
        mixed.assign(static_cast<std::size_t>(spec.s), def);
    }
    if (static_cast<int>(mixed.size()) != spec.s) {
        throw SpecError("InvalidLocality", "need exactly s mixed-row patterns");
    }
    ProtographBaseMatrix b0(spec.d_v, spec.d_c);
    ProtographBaseMatrix b1(spec.d_v, spec.d_c);
    for (int r = 0; r < spec.d_v; ++r) {
        const bool local = r < spec.d_v - spec.s;
        const std::vector<int>* pat = local ? nullptr : &mixed[static_cast<std::size_t>(r - (spec.d_v - spec.s))];
        int ones = 0, zeros = 0;
        for (int c = 0; c < spec.d_c; ++c) {
            int v = local ? 1 : (*pat)[static_cast<std::size_t>(c)];
            if (v != 0 && v != 1) throw SpecError("InvalidLocality", "mixed rows must be 0/1 patterns");
            (v == 1 ? ones : zeros)++;
            b0.at(r, c) = v;
            b1.at(r, c) = 1 - v;
        }
        if (!local && (ones == 0 || zeros == 0)) {
            throw SpecError("InvalidLocality", "each mixed row needs at least one 1 and one 0");
        }
    }
    EdgeSpreading spread{{b0, b1}};
    ProtographBaseMatrix all_ones(spec.d_v, spec.d_c);
    for (int& v : all_ones.mult) v = 1;
    edge_spread(all_ones, spread);
    return build_coupled_base(spread, chain);
}

} // namespace sccode
