#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "xstrata/groups.hpp"
#include "xstrata/strata.hpp"
#include "xstrata/xstate.hpp"

namespace xstrata {

/// splitmix64: tiny, seedable, counter-friendly generator.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform_pm1() { return 2.0 * uniform01() - 1.0; }
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Key of the independent stream for one sample: mixing seed and index keeps
/// results identical no matter how samples are distributed over threads.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

enum class SampleMode { UniformBoxRejection, BoundaryShell };

struct SampleConfig {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    double tol = 1e-9;
    SampleMode mode = SampleMode::UniformBoxRejection;
    double shell_epsilon = 0.0; // BoundaryShell only; must be > 0 there
};

namespace detail {
inline void check_config(const SampleConfig& cfg) {
    if (cfg.count < 1) throw std::invalid_argument("sample config: count must be >= 1");
    if (cfg.mode == SampleMode::BoundaryShell && !(cfg.shell_epsilon > 0.0))
        throw std::invalid_argument("sample config: shell mode needs epsilon > 0");
}
} // namespace detail

/// One accepted draw from the box [-1,1]^7, strictly physical (tol 0).  In
/// shell mode the positivity slack min(1 -/+ h15 - radius) must also be at
/// most epsilon.  Rejected proposals are counted into *rejected.
inline XCoords sample_one_physical(std::uint64_t seed, std::uint64_t index, SampleMode mode,
                                   double shell_epsilon, std::uint64_t* rejected = nullptr) {
    SplitMix64 g(stream_key(seed, index));
    for (;;) {
        std::array<double, 7> v;
        for (double& x : v) x = g.uniform_pm1();
        const XCoords h = XCoords::from_array(v);
        const double slack = std::min(1.0 - h.h15 - radius_plus(h), 1.0 + h.h15 - radius_minus(h));
        bool ok = slack >= 0.0;
        if (ok && mode == SampleMode::BoundaryShell) ok = slack <= shell_epsilon;
        if (ok) return h;
        if (rejected) ++*rejected;
    }
}

struct SampleBatch {
    std::vector<XCoords> samples;
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
    double acceptance_rate = 0.0;
};

inline SampleBatch sample_physical(const SampleConfig& cfg) {
    detail::check_config(cfg);
    SampleBatch b;
    b.samples.reserve(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i)
        b.samples.push_back(
            sample_one_physical(cfg.seed, i, cfg.mode, cfg.shell_epsilon, &b.rejected));
    b.accepted = cfg.count;
    b.acceptance_rate =
        static_cast<double>(b.accepted) / static_cast<double>(b.accepted + b.rejected);
    return b;
}

/// Stratum fractions of the sampled measure (Lebesgue on the coordinates,
/// i.e. Hilbert-Schmidt restricted to the X section), both actions, at the
/// configured classification tolerance.
struct MeasureReport {
    std::array<double, 4> global_fractions{}; // indexed by GlobalStratum
    std::array<double, 4> local_fractions{};  // indexed by LocalStratum
    std::uint64_t accepted = 0;
    std::uint64_t rejected = 0;
    double acceptance_rate = 0.0;
};

inline MeasureReport estimate_measures(const SampleConfig& cfg) {
    detail::check_config(cfg);
    MeasureReport r;
    std::array<std::size_t, 4> gc{}, lc{};
    std::uint64_t rejected = 0;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        const XCoords h = sample_one_physical(cfg.seed, i, cfg.mode, cfg.shell_epsilon, &rejected);
        ++gc[static_cast<std::size_t>(classify_global(h, cfg.tol))];
        ++lc[static_cast<std::size_t>(classify_local(h, cfg.tol))];
    }
    r.accepted = cfg.count;
    r.rejected = rejected;
    r.acceptance_rate =
        static_cast<double>(r.accepted) / static_cast<double>(r.accepted + r.rejected);
    for (std::size_t k = 0; k < 4; ++k) {
        r.global_fractions[k] = static_cast<double>(gc[k]) / static_cast<double>(cfg.count);
        r.local_fractions[k] = static_cast<double>(lc[k]) / static_cast<double>(cfg.count);
    }
    return r;
}

/// Seeded group elements for property tests: uniform relative phase, SU(2)
/// factors from a uniform axis and angle density sin^2(theta/2).
inline std::array<double, 3> sample_su2_axis_angle(SplitMix64& g) {
    const double z = g.uniform_pm1();
    const double az = 2.0 * std::numbers::pi * g.uniform01();
    const double rxy = std::sqrt(std::max(0.0, 1.0 - z * z));
    double theta;
    do {
        theta = 2.0 * std::numbers::pi * g.uniform01();
    } while (g.uniform01() >= std::sin(0.5 * theta) * std::sin(0.5 * theta));
    return {theta * rxy * std::cos(az), theta * rxy * std::sin(az), theta * z};
}

inline GlobalElement sample_global_element(SplitMix64& g) {
    GlobalElement e;
    e.omega15 = 2.0 * std::numbers::pi * g.uniform01();
    e.su2_a = sample_su2_axis_angle(g);
    e.su2_b = sample_su2_axis_angle(g);
    return e;
}

inline LocalElement sample_local_element(SplitMix64& g) {
    return {4.0 * std::numbers::pi * g.uniform01(), 4.0 * std::numbers::pi * g.uniform01()};
}

} // namespace xstrata
