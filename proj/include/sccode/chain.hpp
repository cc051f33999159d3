#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "sccode/errors.hpp"

namespace sccode {

using Rational = boost::rational<long long>;

// Chain parameters shared by every coupled family: L coupled blocks, coupling
// memory m, terminated transmission.
struct CoupledChainSpec {
    int L = 1;
    int m = 0;
    bool terminated = true;
};

inline void validate_chain_spec(const CoupledChainSpec& spec) {
    if (spec.L < 1) {
        throw SpecError("EmptyChain", "coupling length L must be >= 1, got " + std::to_string(spec.L));
    }
    if (spec.m < 0 || spec.m >= spec.L) {
        throw SpecError("MemoryTooLarge",
                        "coupling memory m must satisfy 0 <= m < L, got m=" + std::to_string(spec.m) +
                            ", L=" + std::to_string(spec.L));
    }
    if (!spec.terminated) {
        throw SpecError("Unterminated", "only terminated chains are supported");
    }
}

// Per-position bit accounting of one encoded chain: how many information bits
// each position consumed and how many channel bits it transmitted (after
// puncturing). Positions are 1-based t = 1..L.
struct ChainTranscript {
    std::vector<long long> info_bits;
    std::vector<long long> sent_bits;

    int length() const { return static_cast<int>(info_bits.size()); }

    long long total_info() const {
        long long s = 0;
        for (auto v : info_bits) s += v;
        return s;
    }
    long long total_sent() const {
        long long s = 0;
        for (auto v : sent_bits) s += v;
        return s;
    }
};

inline Rational measured_rate(const ChainTranscript& t) {
    if (t.info_bits.size() != t.sent_bits.size() || t.info_bits.empty()) {
        throw SpecError("IncompleteTranscript", "transcript must cover t = 1..L");
    }
    const long long sent = t.total_sent();
    if (sent == 0) {
        throw SpecError("ZeroTransmitted", "transcript transmits no bits");
    }
    return Rational(t.total_info(), sent);
}

} // namespace sccode
