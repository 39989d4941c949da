#include "deltacomb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace deltacomb {

namespace {

// 384 bits keeps the accumulated term-cancellation error below 1e-9 even
// at the worst in-range point for N <= 30 (bound: sum|coeff| / u^N with
// u >= 1/30).
constexpr int kEvalBits = 384;

struct BigComplex {
    mpf_class re{0, kEvalBits};
    mpf_class im{0, kEvalBits};
};

BigComplex big_mul(const BigComplex& x, const BigComplex& y) {
    BigComplex r;
    r.re = x.re * y.re - x.im * y.im;
    r.im = x.re * y.im + x.im * y.re;
    return r;
}

}  // namespace

BivariatePolynomial BivariatePolynomial::constant(const mpz_class& value) {
    BivariatePolynomial p;
    p.add_term(0, 0, value);
    return p;
}

BivariatePolynomial BivariatePolynomial::monomial(int alpha_deg, int beta_deg,
                                                  const mpz_class& coeff) {
    BivariatePolynomial p;
    p.add_term(alpha_deg, beta_deg, coeff);
    return p;
}

mpz_class BivariatePolynomial::coefficient(int alpha_deg, int beta_deg) const {
    const auto it = terms_.find({alpha_deg, beta_deg});
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void BivariatePolynomial::add_term(int alpha_deg, int beta_deg, const mpz_class& coeff) {
    if (alpha_deg < 0 || beta_deg < 0)
        throw std::domain_error("term degrees must be non-negative");
    if (coeff == 0) return;
    const auto key = std::make_pair(alpha_deg, beta_deg);
    const auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key.first, key.second, coeff);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key.first, key.second, -coeff);
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& rhs) const {
    BivariatePolynomial r = *this;
    r += rhs;
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& rhs) const {
    BivariatePolynomial r = *this;
    r -= rhs;
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& rhs) const {
    BivariatePolynomial r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r;
    for (const auto& [key, coeff] : terms_) r.terms_.emplace(key, -coeff);
    return r;
}

Complex BivariatePolynomial::evaluate(Complex alpha, Complex beta) const {
    if (terms_.empty()) return {0.0, 0.0};

    int max_a = 0, max_b = 0;
    for (const auto& [key, coeff] : terms_) {
        max_a = std::max(max_a, key.first);
        max_b = std::max(max_b, key.second);
    }

    std::vector<BigComplex> apow(static_cast<std::size_t>(max_a) + 1);
    std::vector<BigComplex> bpow(static_cast<std::size_t>(max_b) + 1);
    apow[0].re = 1;
    bpow[0].re = 1;
    BigComplex a, b;
    a.re = alpha.real();
    a.im = alpha.imag();
    b.re = beta.real();
    b.im = beta.imag();
    for (int i = 1; i <= max_a; ++i) apow[i] = big_mul(apow[i - 1], a);
    for (int j = 1; j <= max_b; ++j) bpow[j] = big_mul(bpow[j - 1], b);

    BigComplex acc;
    mpf_class coeff_f(0, kEvalBits);
    for (const auto& [key, coeff] : terms_) {  // canonical order
        BigComplex term = big_mul(apow[key.first], bpow[key.second]);
        coeff_f = coeff;
        acc.re += coeff_f * term.re;
        acc.im += coeff_f * term.im;
    }
    return {acc.re.get_d(), acc.im.get_d()};
}

mpz_class triangle_coefficient(int m, int g, int k) {
    if (m < 1) throw std::domain_error("submultinomial order must be at least 1");
    if (g < 0) throw std::domain_error("degree must be non-negative");
    if (k < 0 || k > g) throw std::out_of_range("position must satisfy 0 <= k <= g");
    if (m == 1) return k == 0 ? 1 : 0;
    mpz_class left, right;
    mpz_bin_uiui(left.get_mpz_t(), static_cast<unsigned long>(m - 1 + g - k),
                 static_cast<unsigned long>(m - 1));
    mpz_bin_uiui(right.get_mpz_t(), static_cast<unsigned long>(m - 2 + k),
                 static_cast<unsigned long>(m - 2));
    return left * right;
}

std::vector<std::vector<mpz_class>> triangle_rows(int m, int rows) {
    if (m < 2) throw std::domain_error("triangle order must be at least 2");
    if (rows < 1) throw std::domain_error("row count must be at least 1");
    std::vector<std::vector<mpz_class>> out;
    out.reserve(static_cast<std::size_t>(rows));
    for (int g = 0; g < rows; ++g) {
        std::vector<mpz_class> row;
        row.reserve(static_cast<std::size_t>(g) + 1);
        for (int k = 0; k <= g; ++k) row.push_back(triangle_coefficient(m, g, k));
        out.push_back(std::move(row));
    }
    return out;
}

BivariatePolynomial submultinomial(int m, int g) {
    if (m < 1) throw std::domain_error("submultinomial order must be at least 1");
    if (g < 0) throw std::domain_error("degree must be non-negative");
    BivariatePolynomial p;
    if (m == 1) {
        p.add_term(g, 0, 1);
        return p;
    }
    for (int k = 0; k <= g; ++k) p.add_term(g - k, k, triangle_coefficient(m, g, k));
    return p;
}

BivariatePolynomial principal_element(int count) {
    if (count < 1) throw std::domain_error("count must be at least 1");
    BivariatePolynomial p;
    int sign = 1;
    for (int n = 0; 2 * n <= count; ++n, sign = -sign) {
        const BivariatePolynomial part = submultinomial(n + 1, count - 2 * n);
        if (sign > 0)
            p += part;
        else
            p -= part;
    }
    return p;
}

namespace {

std::string format_term(const mpz_class& abs_coeff, int i, int j) {
    std::string s;
    if (abs_coeff != 1 || (i == 0 && j == 0)) s += abs_coeff.get_str();
    if (i > 0) {
        s += 'a';
        if (i > 1) s += '^' + std::to_string(i);
    }
    if (j > 0) {
        s += 'b';
        if (j > 1) s += '^' + std::to_string(j);
    }
    return s;
}

}  // namespace

std::string format_polynomial(const BivariatePolynomial& p) {
    if (p.is_zero()) return "0";

    // split the canonical-order terms into total-degree groups
    struct Group {
        int sign;  // +1 / -1 when every coefficient agrees, else 0
        std::vector<std::string> rendered;
    };
    std::vector<Group> groups;
    int current_degree = -1;
    std::vector<std::pair<std::pair<int, int>, mpz_class>> pending;

    auto flush = [&]() {
        if (pending.empty()) return;
        Group grp;
        const bool all_pos = std::all_of(pending.begin(), pending.end(),
                                         [](const auto& t) { return t.second > 0; });
        const bool all_neg = std::all_of(pending.begin(), pending.end(),
                                         [](const auto& t) { return t.second < 0; });
        grp.sign = all_pos ? 1 : (all_neg ? -1 : 0);
        for (std::size_t idx = 0; idx < pending.size(); ++idx) {
            const auto& [key, coeff] = pending[idx];
            mpz_class a = coeff < 0 ? mpz_class(-coeff) : coeff;
            std::string term = format_term(a, key.first, key.second);
            if (grp.sign == 0 && coeff < 0) term = "-" + term;  // mixed-sign fallback
            grp.rendered.push_back(std::move(term));
        }
        groups.push_back(std::move(grp));
        pending.clear();
    };

    for (const auto& [key, coeff] : p.terms()) {
        const int degree = key.first + key.second;
        if (degree != current_degree) {
            flush();
            current_degree = degree;
        }
        pending.emplace_back(key, coeff);
    }
    flush();

    std::string out;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const Group& grp = groups[gi];
        std::string body;
        if (grp.rendered.size() == 1) {
            body = grp.rendered.front();
        } else {
            body = "(";
            for (std::size_t ti = 0; ti < grp.rendered.size(); ++ti) {
                std::string term = grp.rendered[ti];
                if (ti > 0) {
                    if (!term.empty() && term.front() == '-') {
                        body += " - ";
                        term.erase(term.begin());
                    } else {
                        body += " + ";
                    }
                }
                body += term;
            }
            body += ")";
        }
        if (gi == 0) {
            if (grp.sign < 0) out += "-";
            out += body;
        } else {
            out += grp.sign < 0 ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace deltacomb
