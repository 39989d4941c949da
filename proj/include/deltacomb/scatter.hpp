#pragma once

#include "deltacomb/types.hpp"

namespace deltacomb {

// Scattering configuration: `count` delta potentials of strength `strength`
// at x = spacing, 2*spacing, ..., count*spacing. strength > 0 is a barrier,
// strength < 0 a well; strength = 0 is rejected (the formalism divides by
// the energy parameter).
struct PhysicalParams {
    double hbar = 1.0;
    double mass = 1.0;
    double strength = 0.5;
    double spacing = 1.0;
    int count = 1;

    // hbar = mass = 1, strength = 1/2, so hbar^2/(2 m strength) = 1 and the
    // energy parameter reduces to i*k (the convention used for the figures).
    static PhysicalParams natural(int count, double spacing = 1.0);

    // throws std::domain_error on any invalid or non-finite field
    void validate() const;
};

// 2x2 complex matrix relating wave amplitudes across scatterers.
struct TransferMatrix {
    Complex m11, m12, m21, m22;

    static TransferMatrix identity();
    TransferMatrix operator*(const TransferMatrix& rhs) const;
    Complex det() const;
};

struct AlphaBeta {
    Complex alpha;  // (2c - 1) / K
    Complex beta;   // (2c + 1) * K
};

struct ScatterProbabilities {
    double transmission;
    double reflection;
};

// c = i k hbar^2 / (2 m strength); purely imaginary for real k > 0.
Complex energy_parameter(double k, const PhysicalParams& p);

// K = exp(i k spacing); unit modulus for real k.
Complex phase_factor(double k, double spacing);

AlphaBeta alpha_beta(Complex c, Complex K);

// Single-step matrix [[(2c-1)/K, -K], [1/K, (2c+1)K]]; det = 4c^2.
TransferMatrix single_barrier_matrix(Complex c, Complex K);

// Plain left-to-right product. Kept linear on purpose: this is the
// reference path the closed form is verified against.
TransferMatrix matrix_power(const TransferMatrix& t, int n);

// T_N = |2c|^(2N) / |M11|^2 and R_N = |M21|^2 / |M11|^2 for M = T^N.
ScatterProbabilities scattering_from_matrix(const TransferMatrix& m, Complex c, int count);

}  // namespace deltacomb
