#include "deltacomb/transmission.hpp"

#include <cmath>
#include <stdexcept>

#include "deltacomb/polynomial.hpp"

namespace deltacomb {

namespace {

double signed_energy_ratio(double k, const PhysicalParams& p) {
    // u = hbar^2 k / (m strength); negative for wells
    return p.hbar * p.hbar * k / (p.mass * p.strength);
}

}  // namespace

Complex omega(int count, Complex c, Complex K) {
    const auto [alpha, beta] = alpha_beta(c, K);
    const Complex m11 = principal_element(count).evaluate(alpha, beta);
    Complex k_pow(1.0, 0.0);
    for (int i = 0; i < count; ++i) k_pow *= K;
    return m11 * k_pow;
}

double transmission_closed(int count, double k, const PhysicalParams& p) {
    const Complex c = energy_parameter(k, p);
    const Complex K = phase_factor(k, p.spacing);
    const auto [alpha, beta] = alpha_beta(c, K);
    const Complex m11 = principal_element(count).evaluate(alpha, beta);
    const double u = signed_energy_ratio(k, p);
    return std::pow(u * u, count) / std::norm(m11);
}

double transmission_single(double k, const PhysicalParams& p) {
    p.validate();
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("wave number must be positive and finite");
    const double r = p.mass * p.strength / (p.hbar * p.hbar * k);
    return 1.0 / (1.0 + r * r);
}

double transmission_double(double k, double spacing, const PhysicalParams& p) {
    p.validate();
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("wave number must be positive and finite");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::domain_error("spacing must be positive and finite");
    const double u = signed_energy_ratio(k, p);
    const double a = 1.0 - u * u - std::cos(2.0 * k * spacing);
    const double b = 2.0 * u + std::sin(2.0 * k * spacing);
    return u * u * u * u / (a * a + b * b);
}

Omega4Parts omega4_re_im(double k, double spacing, const PhysicalParams& p) {
    p.validate();
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("wave number must be positive and finite");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::domain_error("spacing must be positive and finite");
    const double u = signed_energy_ratio(k, p);
    const double u2 = u * u;
    const double c2 = std::cos(2.0 * k * spacing), s2 = std::sin(2.0 * k * spacing);
    const double c4 = std::cos(4.0 * k * spacing), s4 = std::sin(4.0 * k * spacing);
    const double c6 = std::cos(6.0 * k * spacing), s6 = std::sin(6.0 * k * spacing);

    Omega4Parts parts;
    parts.re = 1.0 - 6.0 * u2 + u2 * u2 + (3.0 + 2.0 * u2) * c4 + 2.0 * u * s6 -
               3.0 * ((1.0 - u2) * c2 + 2.0 * u * s2) - (1.0 - u2) * c6;
    parts.im = -4.0 * u * (1.0 - u2) + (3.0 + 2.0 * u2) * s4 - 3.0 * (1.0 - u2) * s2 +
               6.0 * u * c2 - (1.0 - u2) * s6 - 2.0 * u * c6;
    return parts;
}

double transmission_quad(double k, double spacing, const PhysicalParams& p) {
    const auto [re, im] = omega4_re_im(k, spacing, p);
    const double u = signed_energy_ratio(k, p);
    const double u2 = u * u;
    return u2 * u2 * u2 * u2 / (re * re + im * im);
}

std::vector<SweepRecord> sweep(int count, double k_lo, double k_hi, int steps,
                               const PhysicalParams& p) {
    p.validate();
    if (count < 1) throw std::domain_error("count must be at least 1");
    if (!(0.0 < k_lo && k_lo < k_hi)) throw std::domain_error("need 0 < k_lo < k_hi");
    if (steps < 2) throw std::domain_error("need at least 2 grid points");

    const BivariatePolynomial poly = principal_element(count);
    std::vector<SweepRecord> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double k = k_lo + (k_hi - k_lo) * static_cast<double>(i) / (steps - 1);
        const Complex c = energy_parameter(k, p);
        const Complex K = phase_factor(k, p.spacing);
        const auto [alpha, beta] = alpha_beta(c, K);
        const double u = signed_energy_ratio(k, p);
        const double t = std::pow(u * u, count) / std::norm(poly.evaluate(alpha, beta));
        const auto probs =
            scattering_from_matrix(matrix_power(single_barrier_matrix(c, K), count), c, count);
        out.push_back({k, t, probs.reflection});
    }
    return out;
}

namespace {

// Golden-section refinement of a bracketed maximum; derivative-free and
// robust near flat peaks.
ResonanceRecord refine_peak(int count, const PhysicalParams& p, double lo, double hi,
                            const BivariatePolynomial& poly, double tol) {
    const auto f = [&](double k) {
        const Complex c = energy_parameter(k, p);
        const Complex K = phase_factor(k, p.spacing);
        const auto [alpha, beta] = alpha_beta(c, K);
        const double u = p.hbar * p.hbar * k / (p.mass * p.strength);
        return std::pow(u * u, count) / std::norm(poly.evaluate(alpha, beta));
    };

    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    const double k_star = f1 >= f2 ? x1 : x2;
    return {k_star, std::max(f1, f2), a, b};
}

}  // namespace

std::vector<ResonanceRecord> find_resonances(int count, double k_lo, double k_hi,
                                             const PhysicalParams& p, int grid, double tol) {
    p.validate();
    if (count < 1) throw std::domain_error("count must be at least 1");
    if (!(0.0 < k_lo && k_lo < k_hi)) throw std::domain_error("need 0 < k_lo < k_hi");
    if (grid < 10) throw std::domain_error("need at least 10 grid points");
    if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");

    const BivariatePolynomial poly = principal_element(count);
    std::vector<double> ks(static_cast<std::size_t>(grid));
    std::vector<double> ts(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        ks[i] = k_lo + (k_hi - k_lo) * static_cast<double>(i) / (grid - 1);
        const Complex c = energy_parameter(ks[i], p);
        const Complex K = phase_factor(ks[i], p.spacing);
        const auto [alpha, beta] = alpha_beta(c, K);
        const double u = p.hbar * p.hbar * ks[i] / (p.mass * p.strength);
        ts[i] = std::pow(u * u, count) / std::norm(poly.evaluate(alpha, beta));
    }

    std::vector<ResonanceRecord> out;
    for (int i = 1; i + 1 < grid; ++i) {
        if (ts[i] > ts[i - 1] && ts[i] > ts[i + 1])
            out.push_back(refine_peak(count, p, ks[i - 1], ks[i + 1], poly, tol));
    }
    return out;  // grid order keeps k_star ascending
}

}  // namespace deltacomb
