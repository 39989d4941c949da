#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltacomb/scatter.hpp"

namespace deltacomb {

// Dense 2N x 2N complex system assembled from the raw matching conditions.
// Rows come in (continuity, derivative-jump) pairs per barrier; unknowns
// are ordered A_2..A_{N+1}, B_1..B_N with A_1 = 1 and B_{N+1} = 0 moved to
// the right-hand side.
struct LinearSystem {
    int dimension = 0;
    std::vector<Complex> matrix;  // row-major dimension x dimension
    std::vector<Complex> rhs;

    Complex& entry(int row, int col) { return matrix[static_cast<std::size_t>(row) * dimension + col]; }
    Complex entry(int row, int col) const { return matrix[static_cast<std::size_t>(row) * dimension + col]; }
};

// Wave amplitudes per region, index 0 = region 1. incident[0] = 1 is the
// normalized incoming wave; reflected.back() = 0 (nothing returns from the
// last region).
struct AmplitudeSolution {
    std::vector<Complex> incident;
    std::vector<Complex> reflected;
};

LinearSystem build_boundary_system(double k, const PhysicalParams& p);

// Gaussian elimination with partial pivoting over complex scalars.
// Throws std::runtime_error on a (numerically) singular system.
AmplitudeSolution solve_amplitudes(const LinearSystem& sys);

// T_N = |A_{N+1}|^2 with A_1 = 1, straight from the boundary conditions;
// the from-first-principles check on the closed form.
double transmission_direct(double k, const PhysicalParams& p);

struct IdentityReport {
    int count = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double max_rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    std::string line() const;
};

// 1e-9 up to N = 20, 1e-7 beyond (coefficient growth eats digits in the
// matrix route).
double identity_tolerance(int count);

// Randomized check of the closed-form polynomial against direct matrix
// powers at seeded sample points; failures are reported, never thrown.
IdentityReport polynomial_identity_check(int count, int trials, std::uint64_t seed);

}  // namespace deltacomb
