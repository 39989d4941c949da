#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deltacomb/types.hpp"

namespace deltacomb {

// Canonical term order: descending total degree, then descending alpha
// degree. All iteration, printing and evaluation follow this order.
struct TermOrder {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        const int da = a.first + a.second;
        const int db = b.first + b.second;
        if (da != db) return da > db;
        return a.first > b.first;
    }
};

// Bivariate polynomial in (alpha, beta) with exact arbitrary-precision
// integer coefficients. Zero coefficients are never stored.
class BivariatePolynomial {
public:
    using TermMap = std::map<std::pair<int, int>, mpz_class, TermOrder>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const mpz_class& value);
    static BivariatePolynomial monomial(int alpha_deg, int beta_deg, const mpz_class& coeff);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // 0 for absent terms
    mpz_class coefficient(int alpha_deg, int beta_deg) const;

    void add_term(int alpha_deg, int beta_deg, const mpz_class& coeff);

    BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
    BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
    BivariatePolynomial operator+(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator-(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator*(const BivariatePolynomial& rhs) const;
    BivariatePolynomial operator-() const;
    bool operator==(const BivariatePolynomial& rhs) const { return terms_ == rhs.terms_; }

    // Sum of coeff * alpha^i * beta^j in canonical order. Accumulates in
    // 384-bit floats: the expanded multinomial cancels catastrophically in
    // the deep-tunneling regime (term/result ratios beyond 1e14 for
    // N ~ 20), which plain doubles cannot survive.
    Complex evaluate(Complex alpha, Complex beta) const;

private:
    TermMap terms_;
};

// C_m(g, k) = binom(m-1+g-k, m-1) * binom(m-2+k, m-2) for m >= 2;
// for m = 1 the product is ill-defined and the value is 1 at k = 0, else 0.
mpz_class triangle_coefficient(int m, int g, int k);

// Row g holds [C_m(g,0), ..., C_m(g,g)]; m >= 2.
std::vector<std::vector<mpz_class>> triangle_rows(int m, int rows);

// P_m^g(alpha, beta) = sum_k C_m(g,k) alpha^(g-k) beta^k
BivariatePolynomial submultinomial(int m, int g);

// Closed form of the (1,1) element of the N-step transfer matrix:
// sum_{n=0}^{floor(N/2)} (-1)^n P_{n+1}^{N-2n}(alpha, beta)
BivariatePolynomial principal_element(int count);

// Renders with variables 'a'/'b', grouped by descending total degree with
// the group sign factored out, e.g. "a^4 - (3a^2 + 2ab + b^2) + 1".
std::string format_polynomial(const BivariatePolynomial& p);

}  // namespace deltacomb
