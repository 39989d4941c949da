#pragma once

#include <vector>

#include "deltacomb/scatter.hpp"

namespace deltacomb {

struct SweepRecord {
    double k;
    double transmission;
    double reflection;
};

struct ResonanceRecord {
    double k_star;
    double t_peak;
    double bracket_lo;
    double bracket_hi;
};

// omega^(N) = M11^(N)(alpha, beta) * K^N
Complex omega(int count, Complex c, Complex K);

// T_N = (k hbar^2 / (strength m))^(2N) / |M11^(N)|^2 via the closed-form
// polynomial route.
double transmission_closed(int count, double k, const PhysicalParams& p);

// T_1 = 1 / (1 + (m strength / (hbar^2 k))^2)
double transmission_single(double k, const PhysicalParams& p);

// T_2 = u^4 / ([1 - u^2 - cos 2kL]^2 + [2u + sin 2kL]^2), u = hbar^2 k / (m strength)
double transmission_double(double k, double spacing, const PhysicalParams& p);

struct Omega4Parts {
    double re;
    double im;
};

// Trigonometric expansion of omega^(4) in u and kL; independent of the
// polynomial route.
Omega4Parts omega4_re_im(double k, double spacing, const PhysicalParams& p);

// T_4 = u^8 / (Re^2 omega^(4) + Im^2 omega^(4)) via omega4_re_im
double transmission_quad(double k, double spacing, const PhysicalParams& p);

// Uniform inclusive grid; transmission from the closed form, reflection
// from the matrix route, so the unitarity invariant spans both routes.
std::vector<SweepRecord> sweep(int count, double k_lo, double k_hi, int steps,
                               const PhysicalParams& p);

// Scans a uniform grid for interior local maxima of T_N, then refines each
// by golden-section search until the bracket width drops below tol.
// Records come out sorted by k_star. An empty result is not an error.
std::vector<ResonanceRecord> find_resonances(int count, double k_lo, double k_hi,
                                             const PhysicalParams& p, int grid, double tol);

}  // namespace deltacomb
