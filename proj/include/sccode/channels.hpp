#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sccode/errors.hpp"
#include "sccode/rng.hpp"

namespace sccode {

// All decoder arithmetic clips LLRs to +/- this magnitude (natural log).
inline constexpr double kLlrSaturation = 38.0;

inline double clip_llr(double l) {
    if (l > kLlrSaturation) return kLlrSaturation;
    if (l < -kLlrSaturation) return -kLlrSaturation;
    return l;
}

enum class ChannelKind { BEC, BSC, BiAWGN };

struct ChannelSpec {
    ChannelKind kind = ChannelKind::BEC;
    double param = 0.0; // BEC: erasure prob, BSC: crossover prob, BiAWGN: Eb/N0 in dB
    double rate = 1.0;  // code rate, used for BiAWGN noise scaling

    static ChannelSpec bec(double eps) { return {ChannelKind::BEC, eps, 1.0}; }
    static ChannelSpec bsc(double p) { return {ChannelKind::BSC, p, 1.0}; }
    static ChannelSpec biawgn(double snr_db, double rate) { return {ChannelKind::BiAWGN, snr_db, rate}; }

    double noise_sigma() const {
        // unit-energy antipodal mapping, sigma^2 = 1 / (2 R 10^(snr/10))
        return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, param / 10.0)));
    }

    void validate() const {
        switch (kind) {
            case ChannelKind::BEC:
                if (param < 0.0 || param > 1.0) throw SpecError("BadChannel", "BEC erasure probability outside [0,1]");
                break;
            case ChannelKind::BSC:
                if (param < 0.0 || param > 0.5) throw SpecError("BadChannel", "BSC crossover outside [0,1/2]");
                break;
            case ChannelKind::BiAWGN:
                if (rate <= 0.0 || rate > 1.0) throw SpecError("BadChannel", "BiAWGN needs a code rate in (0,1]");
                break;
        }
    }
};

// Channel observation per bit. BEC marks erasures; soft channels carry reals.
inline constexpr int kErased = 2;

struct Observation {
    ChannelKind kind;
    std::vector<int> symbols;   // BEC/BSC: {0,1} plus kErased for BEC
    std::vector<double> values; // BiAWGN only
    std::size_t size() const { return kind == ChannelKind::BiAWGN ? values.size() : symbols.size(); }
};

inline Observation transmit(const std::vector<std::uint8_t>& bits, const ChannelSpec& ch, std::uint64_t seed) {
    ch.validate();
    Rng rng(seed);
    Observation obs;
    obs.kind = ch.kind;
    switch (ch.kind) {
        case ChannelKind::BEC:
            obs.symbols.reserve(bits.size());
            for (auto b : bits) obs.symbols.push_back(rng.bernoulli(ch.param) ? kErased : int(b));
            break;
        case ChannelKind::BSC:
            obs.symbols.reserve(bits.size());
            for (auto b : bits) obs.symbols.push_back(rng.bernoulli(ch.param) ? 1 - int(b) : int(b));
            break;
        case ChannelKind::BiAWGN: {
            const double sigma = ch.noise_sigma();
            obs.values.reserve(bits.size());
            for (auto b : bits) obs.values.push_back((b ? -1.0 : 1.0) + rng.gaussian(0.0, sigma));
            break;
        }
    }
    return obs;
}

// Sign convention: positive LLR favors bit 0.
inline std::vector<double> to_llr(const Observation& obs, const ChannelSpec& ch) {
    std::vector<double> llr;
    llr.reserve(obs.size());
    switch (ch.kind) {
        case ChannelKind::BEC:
            for (int s : obs.symbols) llr.push_back(s == kErased ? 0.0 : (s == 0 ? kLlrSaturation : -kLlrSaturation));
            break;
        case ChannelKind::BSC: {
            const double mag = ch.param <= 0.0 ? kLlrSaturation : clip_llr(std::log((1.0 - ch.param) / ch.param));
            for (int s : obs.symbols) llr.push_back(s == kErased ? 0.0 : (s == 0 ? mag : -mag));
            break;
        }
        case ChannelKind::BiAWGN: {
            const double sigma = ch.noise_sigma();
            const double scale = 2.0 / (sigma * sigma);
            for (double y : obs.values) llr.push_back(clip_llr(scale * y));
            break;
        }
    }
    return llr;
}

// Seeded uniform-random puncturing over the whole frame.
struct PuncturePattern {
    double fraction = 0.0;
    std::vector<std::size_t> indices; // sorted

    static PuncturePattern make(double fraction, std::size_t frame_len, std::uint64_t seed) {
        if (fraction < 0.0 || fraction >= 1.0) throw SpecError("BadPuncture", "fraction must lie in [0,1)");
        PuncturePattern p;
        p.fraction = fraction;
        const auto k = static_cast<std::size_t>(std::llround(fraction * double(frame_len)));
        Rng rng(derive_seed(seed, 0x9c7e));
        p.indices = rng.sample_indices(frame_len, k);
        return p;
    }
};

// Punctured positions become erasures / zero LLRs: never transmitted.
inline void apply_puncture(Observation& obs, const PuncturePattern& p) {
    for (auto i : p.indices) {
        if (i >= obs.size()) throw SpecError("BadPuncture", "puncture index outside frame");
        if (obs.kind == ChannelKind::BiAWGN) {
            obs.values[i] = 0.0;
        } else {
            obs.symbols[i] = kErased;
        }
    }
}

inline void apply_puncture(std::vector<double>& llr, const PuncturePattern& p) {
    for (auto i : p.indices) {
        if (i >= llr.size()) throw SpecError("BadPuncture", "puncture index outside frame");
        llr[i] = 0.0;
    }
}

// Fraction that lifts a design rate to a target rate: R_target = R_design/(1-rho).
inline double puncture_fraction_for_rate(double design_rate, double target_rate) {
    if (target_rate < design_rate) throw SpecError("BadPuncture", "target rate below design rate");
    return 1.0 - design_rate / target_rate;
}

} // namespace sccode
