#include "deltacomb/scatter.hpp"

#include <cmath>
#include <stdexcept>

namespace deltacomb {

PhysicalParams PhysicalParams::natural(int count, double spacing) {
    PhysicalParams p;
    p.hbar = 1.0;
    p.mass = 1.0;
    p.strength = 0.5;
    p.spacing = spacing;
    p.count = count;
    p.validate();
    return p;
}

void PhysicalParams::validate() const {
    if (!(std::isfinite(hbar) && std::isfinite(mass) && std::isfinite(strength) &&
          std::isfinite(spacing)))
        throw std::domain_error("physical parameters must be finite");
    if (hbar <= 0.0) throw std::domain_error("hbar must be positive");
    if (mass <= 0.0) throw std::domain_error("mass must be positive");
    if (strength == 0.0) throw std::domain_error("strength must be nonzero");
    if (spacing <= 0.0) throw std::domain_error("spacing must be positive");
    if (count < 1) throw std::domain_error("count must be at least 1");
}

TransferMatrix TransferMatrix::identity() {
    return {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)};
}

TransferMatrix TransferMatrix::operator*(const TransferMatrix& rhs) const {
    return {m11 * rhs.m11 + m12 * rhs.m21, m11 * rhs.m12 + m12 * rhs.m22,
            m21 * rhs.m11 + m22 * rhs.m21, m21 * rhs.m12 + m22 * rhs.m22};
}

Complex TransferMatrix::det() const { return m11 * m22 - m12 * m21; }

Complex energy_parameter(double k, const PhysicalParams& p) {
    p.validate();
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("wave number must be positive and finite");
    return Complex(0.0, k * p.hbar * p.hbar / (2.0 * p.mass * p.strength));
}

Complex phase_factor(double k, double spacing) {
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::domain_error("wave number must be positive and finite");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::domain_error("spacing must be positive and finite");
    return std::polar(1.0, k * spacing);
}

AlphaBeta alpha_beta(Complex c, Complex K) {
    const Complex two_c = 2.0 * c;
    return {(two_c - 1.0) / K, (two_c + 1.0) * K};
}

TransferMatrix single_barrier_matrix(Complex c, Complex K) {
    const auto [alpha, beta] = alpha_beta(c, K);
    return {alpha, -K, 1.0 / K, beta};
}

TransferMatrix matrix_power(const TransferMatrix& t, int n) {
    if (n < 1) throw std::domain_error("matrix power requires n >= 1");
    TransferMatrix result = t;
    for (int i = 1; i < n; ++i) result = result * t;
    return result;
}

ScatterProbabilities scattering_from_matrix(const TransferMatrix& m, Complex c, int count) {
    if (count < 1) throw std::domain_error("count must be at least 1");
    if (std::abs(m.m11) < 1e-300)
        throw std::runtime_error("degenerate transfer matrix: |M11| vanishes");
    const double denom = std::norm(m.m11);
    const double flux = std::pow(std::norm(2.0 * c), count);
    return {flux / denom, std::norm(m.m21) / denom};
}

}  // namespace deltacomb
