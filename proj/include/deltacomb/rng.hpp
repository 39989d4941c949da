#pragma once

#include <cstdint>
#include <random>

namespace deltacomb {

// Seeded draws must reproduce byte-for-byte across platforms, so only the
// fully specified mt19937_64 engine is used, mapped to [0,1) by taking the
// top 53 bits. std::uniform_real_distribution is implementation-defined
// and must not appear here.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(gen);
}

// Verification sample: k in (0.1, 20), L in (0.2, 5), strength magnitude
// in (0.1, 3) with a separate sign draw — in that order.
struct SamplePoint {
    double k;
    double spacing;
    double strength;
};

inline SamplePoint draw_sample(std::mt19937_64& gen) {
    SamplePoint s;
    s.k = uniform_range(gen, 0.1, 20.0);
    s.spacing = uniform_range(gen, 0.2, 5.0);
    const double magnitude = uniform_range(gen, 0.1, 3.0);
    s.strength = uniform_unit(gen) < 0.5 ? -magnitude : magnitude;
    return s;
}

}  // namespace deltacomb
