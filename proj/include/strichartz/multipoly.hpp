#pragma once

// Sparse multivariate polynomials over Rational, used to certify kernel and
// summation identities as exact coefficient-by-coefficient equalities.
// Terms are keyed by exponent vectors in a std::map, so iteration order and
// therefore every reported defect is deterministic.

#include "strichartz/poly.hpp"
#include "strichartz/rational.hpp"

#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

namespace strichartz {

class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c) {
        MultiPoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    /// Multiply in place by a univariate polynomial in variable `var`.
    void mul_univariate(const Poly& p, std::size_t var) {
        MultiPoly r(nvars_);
        Exponents e;
        for (const auto& [et, ct] : terms_) {
            for (int j = 0; j <= p.degree(); ++j) {
                if (p.coeff(j).is_zero()) continue;
                e = et;
                e[var] += static_cast<unsigned>(j);
                r.add_term(e, ct * p.coeff(j));
            }
        }
        terms_ = std::move(r.terms_);
    }

    /// Scale every term by s * q^{|e|} where |e| is the total degree of the
    /// monomial.  This realizes the substitution lambda^{|e|} -> q^{|e|/2}
    /// when all total degrees are even (q = lambda^2), and general degree
    /// re-weightings in tests.
    void scale_by_total_degree_halved(const Rational& q) {
        std::map<Exponents, Rational> out;
        for (const auto& [e, c] : terms_) {
            unsigned deg = std::accumulate(e.begin(), e.end(), 0u);
            if (deg % 2 != 0)
                throw std::logic_error("scale_by_total_degree_halved: odd total degree");
            out.emplace(e, c * pow(q, deg / 2));
        }
        terms_ = std::move(out);
    }

    Rational max_abs_coeff() const {
        Rational m(0);
        for (const auto& [e, c] : terms_) {
            Rational a = abs(c);
            if (a > m) m = a;
        }
        return m;
    }

    bool is_zero() const { return terms_.empty(); }

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

/// p(sum_i coeff_i * x_i) for a univariate p and a linear form in the given
/// variables; used for substitution identities like L_N^{(1)}(x+y).
inline MultiPoly compose_linear(const Poly& p, std::size_t nvars,
                                const std::vector<std::pair<std::size_t, Rational>>& form) {
    MultiPoly linear(nvars);
    for (const auto& [var, c] : form) {
        MultiPoly::Exponents e(nvars, 0);
        e[var] = 1;
        linear.add_term(e, c);
    }
    MultiPoly acc = MultiPoly::constant(nvars, 0);
    // Horner in the linear form.
    for (int j = p.degree(); j >= 0; --j) {
        acc = acc * linear;
        acc += MultiPoly::constant(nvars, p.coeff(j));
    }
    return acc;
}

}  // namespace strichartz
