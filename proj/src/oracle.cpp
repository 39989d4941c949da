#include "deltacomb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "deltacomb/polynomial.hpp"
#include "deltacomb/rng.hpp"

namespace deltacomb {

LinearSystem build_boundary_system(double k, const PhysicalParams& p) {
    p.validate();
    const Complex c = energy_parameter(k, p);
    const int n_barriers = p.count;
    const int dim = 2 * n_barriers;

    LinearSystem sys;
    sys.dimension = dim;
    sys.matrix.assign(static_cast<std::size_t>(dim) * dim, Complex(0.0, 0.0));
    sys.rhs.assign(static_cast<std::size_t>(dim), Complex(0.0, 0.0));

    // column map: A_{j} (j = 2..N+1) -> j-2 ; B_{j} (j = 1..N) -> N + j - 1
    for (int n = 1; n <= n_barriers; ++n) {
        const Complex e_plus = std::polar(1.0, k * n * p.spacing);
        const Complex e_minus = std::polar(1.0, -k * n * p.spacing);
        const int row_c = 2 * (n - 1);
        const int row_j = row_c + 1;

        // continuity: A_n e+ + B_n e- - A_{n+1} e+ - B_{n+1} e- = 0
        if (n == 1)
            sys.rhs[row_c] -= e_plus;  // A_1 = 1
        else
            sys.entry(row_c, n - 2) += e_plus;
        sys.entry(row_c, n_barriers + n - 1) += e_minus;
        sys.entry(row_c, n - 1) -= e_plus;
        if (n < n_barriers) sys.entry(row_c, n_barriers + n) -= e_minus;  // B_{N+1} = 0

        // jump: (1+c) A_n e+ + (1-c) B_n e- - c A_{n+1} e+ + c B_{n+1} e- = 0
        if (n == 1)
            sys.rhs[row_j] -= (1.0 + c) * e_plus;
        else
            sys.entry(row_j, n - 2) += (1.0 + c) * e_plus;
        sys.entry(row_j, n_barriers + n - 1) += (1.0 - c) * e_minus;
        sys.entry(row_j, n - 1) -= c * e_plus;
        if (n < n_barriers) sys.entry(row_j, n_barriers + n) += c * e_minus;
    }
    return sys;
}

AmplitudeSolution solve_amplitudes(const LinearSystem& sys) {
    const int dim = sys.dimension;
    if (dim < 2 || dim % 2 != 0) throw std::domain_error("system dimension must be even and >= 2");

    std::vector<Complex> a = sys.matrix;
    std::vector<Complex> x = sys.rhs;
    const auto at = [&](int r, int col) -> Complex& {
        return a[static_cast<std::size_t>(r) * dim + col];
    };

    for (int col = 0; col < dim; ++col) {
        int pivot = col;
        double best = std::abs(at(col, col));
        for (int r = col + 1; r < dim; ++r) {
            const double mag = std::abs(at(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < 1e-300) throw std::runtime_error("singular boundary-condition system");
        if (pivot != col) {
            for (int j = col; j < dim; ++j) std::swap(at(pivot, j), at(col, j));
            std::swap(x[pivot], x[col]);
        }
        for (int r = col + 1; r < dim; ++r) {
            const Complex factor = at(r, col) / at(col, col);
            if (factor == Complex(0.0, 0.0)) continue;
            at(r, col) = {0.0, 0.0};
            for (int j = col + 1; j < dim; ++j) at(r, j) -= factor * at(col, j);
            x[r] -= factor * x[col];
        }
    }
    for (int r = dim - 1; r >= 0; --r) {
        Complex acc = x[r];
        for (int j = r + 1; j < dim; ++j) acc -= at(r, j) * x[j];
        x[r] = acc / at(r, r);
    }

    const int n_barriers = dim / 2;
    AmplitudeSolution sol;
    sol.incident.reserve(static_cast<std::size_t>(n_barriers) + 1);
    sol.reflected.reserve(static_cast<std::size_t>(n_barriers) + 1);
    sol.incident.emplace_back(1.0, 0.0);
    for (int j = 0; j < n_barriers; ++j) sol.incident.push_back(x[j]);
    for (int j = 0; j < n_barriers; ++j) sol.reflected.push_back(x[n_barriers + j]);
    sol.reflected.emplace_back(0.0, 0.0);
    return sol;
}

double transmission_direct(double k, const PhysicalParams& p) {
    const AmplitudeSolution sol = solve_amplitudes(build_boundary_system(k, p));
    return std::norm(sol.incident.back());
}

double identity_tolerance(int count) { return count <= 20 ? 1e-9 : 1e-7; }

IdentityReport polynomial_identity_check(int count, int trials, std::uint64_t seed) {
    if (count < 1) throw std::domain_error("count must be at least 1");
    if (trials < 1) throw std::domain_error("need at least one trial");

    const BivariatePolynomial poly = principal_element(count);
    std::mt19937_64 gen(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const SamplePoint s = draw_sample(gen);
        PhysicalParams p;
        p.strength = s.strength;
        p.spacing = s.spacing;
        p.count = count;
        const Complex c = energy_parameter(s.k, p);
        const Complex K = phase_factor(s.k, s.spacing);
        const auto [alpha, beta] = alpha_beta(c, K);
        const Complex closed = poly.evaluate(alpha, beta);
        const Complex direct = matrix_power(single_barrier_matrix(c, K), count).m11;
        const double scale = std::max({std::abs(closed), std::abs(direct), 1e-300});
        worst = std::max(worst, std::abs(closed - direct) / scale);
    }

    IdentityReport report;
    report.count = count;
    report.trials = trials;
    report.seed = seed;
    report.max_rel_err = worst;
    report.tolerance = identity_tolerance(count);
    report.pass = worst <= report.tolerance;
    return report;
}

std::string IdentityReport::line() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "identity N=%-3d trials=%-5d seed=%llu max_rel_err=%.6e tol=%.1e %s", count,
                  trials, static_cast<unsigned long long>(seed), max_rel_err, tolerance,
                  pass ? "PASS" : "FAIL");
    return buf;
}

}  // namespace deltacomb
