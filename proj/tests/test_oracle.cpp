#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "deltacomb/oracle.hpp"
#include "deltacomb/rng.hpp"
#include "deltacomb/transmission.hpp"

using namespace deltacomb;

namespace {

PhysicalParams sample_params(const SamplePoint& s, int count) {
    PhysicalParams p;
    p.strength = s.strength;
    p.spacing = s.spacing;
    p.count = count;
    return p;
}

double inf_norm(const LinearSystem& sys) {
    double best = 0.0;
    for (int r = 0; r < sys.dimension; ++r) {
        double row = 0.0;
        for (int c = 0; c < sys.dimension; ++c) row += std::abs(sys.entry(r, c));
        best = std::max(best, row);
    }
    return best;
}

// residual of the solved unknown vector against the assembled system
double residual_norm(const LinearSystem& sys, const AmplitudeSolution& sol) {
    const int n = sys.dimension / 2;
    std::vector<Complex> x(static_cast<std::size_t>(sys.dimension));
    for (int j = 0; j < n; ++j) x[j] = sol.incident[static_cast<std::size_t>(j) + 1];
    for (int j = 0; j < n; ++j) x[n + j] = sol.reflected[static_cast<std::size_t>(j)];
    double worst = 0.0;
    for (int r = 0; r < sys.dimension; ++r) {
        Complex acc = -sys.rhs[r];
        for (int c = 0; c < sys.dimension; ++c) acc += sys.entry(r, c) * x[c];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

}  // namespace

TEST_CASE("system shape") {
    for (int n = 1; n <= 10; ++n) {
        PhysicalParams p;
        p.count = n;
        const LinearSystem sys = build_boundary_system(1.3, p);
        CHECK(sys.dimension == 2 * n);
        CHECK(sys.matrix.size() == static_cast<std::size_t>(4 * n * n));
        CHECK(sys.rhs.size() == static_cast<std::size_t>(2 * n));
    }
}

TEST_CASE("single barrier from first principles") {
    PhysicalParams p;
    p.strength = 1.0;
    const double k = 1.0;  // u = 1, so T = 1/2
    const AmplitudeSolution sol = solve_amplitudes(build_boundary_system(k, p));
    REQUIRE(sol.incident.size() == 2);
    REQUIRE(sol.reflected.size() == 2);
    CHECK(std::norm(sol.incident[1]) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sol.incident[0] == Complex(1.0, 0.0));
    CHECK(sol.reflected[1] == Complex(0.0, 0.0));
    CHECK(transmission_direct(k, p) == doctest::Approx(transmission_single(k, p)).epsilon(1e-12));
}

TEST_CASE("double barrier matches the explicit formula") {
    std::mt19937_64 gen(67);
    for (int i = 0; i < 50; ++i) {
        const auto s = draw_sample(gen);
        const auto p = sample_params(s, 2);
        CHECK(transmission_direct(s.k, p) ==
              doctest::Approx(transmission_double(s.k, s.spacing, p)).epsilon(1e-10));
    }
}

TEST_CASE("solution satisfies the raw matching conditions") {
    std::mt19937_64 gen(71);
    for (int n = 1; n <= 10; ++n) {
        for (int i = 0; i < 10; ++i) {
            const auto s = draw_sample(gen);
            const auto p = sample_params(s, n);
            const LinearSystem sys = build_boundary_system(s.k, p);
            const AmplitudeSolution sol = solve_amplitudes(sys);
            CHECK(residual_norm(sys, sol) <= 1e-10 * inf_norm(sys));
        }
    }
}

TEST_CASE("flux conservation") {
    std::mt19937_64 gen(73);
    for (int n = 1; n <= 10; ++n) {
        for (int i = 0; i < 10; ++i) {
            const auto s = draw_sample(gen);
            const auto p = sample_params(s, n);
            const AmplitudeSolution sol = solve_amplitudes(build_boundary_system(s.k, p));
            const double flux = std::norm(sol.incident.back()) + std::norm(sol.reflected.front());
            CHECK(std::abs(flux - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("quad barrier against the trig expansion") {
    std::mt19937_64 gen(79);
    for (int i = 0; i < 30; ++i) {
        const auto s = draw_sample(gen);
        const auto p = sample_params(s, 4);
        const double direct = transmission_direct(s.k, p);
        const double quad = transmission_quad(s.k, s.spacing, p);
        CHECK(std::abs(direct - quad) <= 1e-8);
    }
}

TEST_CASE("direct route agrees with the closed form") {
    std::mt19937_64 gen(83);
    for (int n = 1; n <= 10; ++n) {
        for (int i = 0; i < 20; ++i) {
            const auto s = draw_sample(gen);
            const auto p = sample_params(s, n);
            CHECK(std::abs(transmission_direct(s.k, p) - transmission_closed(n, s.k, p)) <= 1e-8);
        }
    }
}

TEST_CASE("column permutation does not change the solution") {
    PhysicalParams p;
    p.strength = 1.7;
    p.spacing = 0.9;
    p.count = 5;
    const LinearSystem sys = build_boundary_system(2.1, p);
    const AmplitudeSolution ref = solve_amplitudes(sys);

    // permute unknown columns, solve, then undo the permutation
    const int dim = sys.dimension;
    std::vector<int> perm(static_cast<std::size_t>(dim));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 gen(89);
    for (int i = dim - 1; i > 0; --i)
        std::swap(perm[i], perm[gen() % static_cast<std::uint64_t>(i + 1)]);

    LinearSystem shuffled = sys;
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) shuffled.entry(r, c) = sys.entry(r, perm[c]);
    const AmplitudeSolution mixed = solve_amplitudes(shuffled);

    std::vector<Complex> mixed_x(static_cast<std::size_t>(dim));
    const int n = dim / 2;
    for (int j = 0; j < n; ++j) mixed_x[j] = mixed.incident[static_cast<std::size_t>(j) + 1];
    for (int j = 0; j < n; ++j) mixed_x[n + j] = mixed.reflected[static_cast<std::size_t>(j)];

    std::vector<Complex> ref_x(static_cast<std::size_t>(dim));
    for (int j = 0; j < n; ++j) ref_x[j] = ref.incident[static_cast<std::size_t>(j) + 1];
    for (int j = 0; j < n; ++j) ref_x[n + j] = ref.reflected[static_cast<std::size_t>(j)];

    for (int c = 0; c < dim; ++c)
        CHECK(std::abs(mixed_x[c] - ref_x[perm[c]]) < 1e-10);
}

TEST_CASE("singular system is reported") {
    LinearSystem degenerate;
    degenerate.dimension = 2;
    degenerate.matrix = {Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(2.0, 0.0),
                         Complex(4.0, 0.0)};
    degenerate.rhs = {Complex(1.0, 0.0), Complex(1.0, 0.0)};
    CHECK_THROWS_AS(solve_amplitudes(degenerate), std::runtime_error);
}

TEST_CASE("identity check basics") {
    const IdentityReport one = polynomial_identity_check(1, 10, 42);
    CHECK(one.pass);
    CHECK(one.max_rel_err <= 1e-15);  // alpha vs T11 is the same arithmetic

    const IdentityReport five = polynomial_identity_check(5, 100, 42);
    CHECK(five.pass);
    CHECK(five.tolerance == 1e-9);

    CHECK(identity_tolerance(20) == 1e-9);
    CHECK(identity_tolerance(21) == 1e-7);

    CHECK_THROWS_AS(polynomial_identity_check(0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(polynomial_identity_check(3, 0, 1), std::domain_error);
}

TEST_CASE("identity check is deterministic") {
    const IdentityReport a = polynomial_identity_check(7, 50, 1234);
    const IdentityReport b = polynomial_identity_check(7, 50, 1234);
    CHECK(a.line() == b.line());
    CHECK(a.max_rel_err == b.max_rel_err);

    const IdentityReport c = polynomial_identity_check(7, 50, 1235);
    CHECK(c.max_rel_err != a.max_rel_err);  // different stream
}

TEST_CASE("identity check across the verified range") {
    for (const int n : {2, 10, 20, 25, 30}) {
        const IdentityReport report = polynomial_identity_check(n, 40, 42);
        CHECK(report.pass);
    }
}
