#pragma once

// Dense univariate polynomials over Rational, the three classical families
// used by the operator constructions (monic probabilists' Hermite,
// generalized Laguerre, Gegenbauer), and exact weighted integration.
//
// Conventions, fixed once for the whole library:
//   * Hermite H_n: monic, orthogonal for dgamma = (2pi)^{-1/2} e^{-x^2/2} dx,
//     recurrence H_{n+1} = x H_n - n H_{n-1}, so that  int H_n^2 dgamma = n!.
//     (Physicists' Hermite polynomials differ by scaling; they are not used
//     anywhere here.)
//   * Laguerre L_n^{(nu)}: orthogonal for e^{-x} x^nu on (0,inf) with
//     int (L_n^{(nu)})^2 e^{-x} x^nu dx = Gamma(n+nu+1)/n!.
//   * Gegenbauer C_n^{nu}: orthogonal for (1-u^2)^{nu-1/2} on (-1,1) with
//     C_n^nu(1) = Gamma(n+2nu)/(Gamma(2nu) n!).
//
// A scale factor lambda with lambda^2 rational never needs to be stored as a
// real number: GradedPoly tracks the convention that the x^J coefficient
// carries an implicit factor lambda^J, and Gaussian integration substitutes
// lambda^2 on the (even) surviving powers.

#include "strichartz/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace strichartz {

/// Dense univariate polynomial, coefficients ascending by power.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c) { return Poly({c}); }
    /// c * x^p
    static Poly monomial(const Rational& c, unsigned p) {
        std::vector<Rational> v(p + 1);
        v[p] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^i (0 beyond the stored range).
    const Rational& coeff(std::size_t i) const {
        static const Rational kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend Poly operator*(Poly a, const Rational& s) { a *= s; return a; }
    friend Poly operator*(const Rational& s, Poly a) { a *= s; return a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// p(s*x): coefficient of x^j picks up s^j.
    Poly scale_arg(const Rational& s) const {
        std::vector<Rational> r = c_;
        Rational f(1);
        for (std::size_t j = 1; j < r.size(); ++j) {
            f *= s;
            r[j] *= f;
        }
        return Poly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    double eval(double x) const {
        double acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic probabilists' Hermite polynomial H_n.
inline Poly hermite(unsigned n) {
    Poly hm1 = Poly::constant(1);
    if (n == 0) return hm1;
    Poly h = Poly::monomial(1, 1);
    const Poly x = h;
    for (unsigned m = 1; m < n; ++m) {
        Poly next = x * h - Rational(m) * hm1;
        hm1 = std::move(h);
        h = std::move(next);
    }
    return h;
}

/// H_n(0): 0 for odd n, (-1)^{n/2} (n-1)!! for even n.
inline Rational hermite_at_zero(unsigned n) {
    if (n % 2 == 1) return Rational(0);
    Rational v = gaussian_moment(n);
    return (n / 2) % 2 == 1 ? -v : v;
}

/// Generalized Laguerre polynomial L_n^{(nu)}, nu > -1 rational.
/// Built from the series sum_j (-1)^j binom(n+nu, n-j) x^j / j!, where the
/// generalized binomial telescopes to the rational product
/// (nu+j+1)(nu+j+2)...(nu+n) / (n-j)!.
inline Poly laguerre(unsigned n, const Rational& nu) {
    if (nu <= Rational(-1)) throw std::domain_error("laguerre: nu must be > -1");
    std::vector<Rational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Rational binom = pochhammer(nu + Rational(j + 1), n - j) / factorial(n - j);
        Rational term = binom / factorial(j);
        c[j] = (j % 2 == 1) ? -term : term;
    }
    return Poly(std::move(c));
}

/// Gegenbauer polynomial C_n^{nu}, nu > -1/2, nu != 0.
inline Poly gegenbauer(unsigned n, const Rational& nu) {
    if (nu <= Rational(-1, 2)) throw std::domain_error("gegenbauer: nu must be > -1/2");
    if (nu.is_zero()) throw std::domain_error("gegenbauer: nu = 0 is degenerate");
    Poly cm1 = Poly::constant(1);
    if (n == 0) return cm1;
    Poly c = Poly::monomial(Rational(2) * nu, 1);
    const Poly u = Poly::monomial(1, 1);
    for (unsigned m = 2; m <= n; ++m) {
        Poly next = (Rational(2) * (Rational(m) + nu - Rational(1)) * (u * c)
                     - (Rational(m) + Rational(2) * nu - Rational(2)) * cm1)
                    * Rational(BigInt(1), BigInt(m));
        cm1 = std::move(c);
        c = std::move(next);
    }
    return c;
}

/// C_n^nu(1) = Gamma(n+2nu)/(Gamma(2nu) n!) = (2nu)_n / n!.
inline Rational gegenbauer_at_one(unsigned n, const Rational& nu) {
    return pochhammer(Rational(2) * nu, n) / factorial(n);
}

/// int p(x) dgamma(x): sum of even coefficients times double factorials.
inline Rational integrate_gaussian(const Poly& p) {
    Rational acc(0);
    for (int j = 0; j <= p.degree(); j += 2)
        acc += p.coeff(j) * gaussian_moment(static_cast<unsigned>(j));
    return acc;
}

/// Polynomial in the scaled variable lambda*x: the x^J coefficient carries an
/// implicit factor lambda^J.  Only lambda^2 is stored (rational), which is all
/// Gaussian integration ever needs, since odd powers integrate to zero.
class GradedPoly {
public:
    GradedPoly(Poly p, Rational lambda_sq)
        : p_(std::move(p)), lambda_sq_(std::move(lambda_sq)) {}

    /// q(lambda*x) for a plain polynomial q.
    static GradedPoly of_scaled_arg(const Poly& q, const Rational& lambda_sq) {
        return GradedPoly(q, lambda_sq);
    }

    const Poly& shape() const { return p_; }
    const Rational& lambda_sq() const { return lambda_sq_; }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        if (a.lambda_sq_ != b.lambda_sq_)
            throw std::invalid_argument("GradedPoly: mismatched lambda^2");
        return GradedPoly(a.p_ * b.p_, a.lambda_sq_);
    }

private:
    Poly p_;
    Rational lambda_sq_;
};

/// int p(lambda, x) dgamma(x): even powers contribute
/// coeff_J * (lambda^2)^{J/2} * (J-1)!!, odd powers vanish.
inline Rational integrate_gaussian(const GradedPoly& p) {
    Rational acc(0), lpow(1);
    const Poly& q = p.shape();
    for (int j = 0; j <= q.degree(); j += 2) {
        acc += q.coeff(j) * lpow * gaussian_moment(static_cast<unsigned>(j));
        lpow *= p.lambda_sq();
    }
    return acc;
}

/// int p(x) e^{-x} x^nu dx over (0,inf) for integer nu >= 0:
/// sum_j coeff_j (j+nu)!.
inline Rational integrate_exponential(const Poly& p, unsigned nu) {
    Rational acc(0);
    for (int j = 0; j <= p.degree(); ++j)
        acc += p.coeff(j) * factorial(static_cast<unsigned>(j) + nu);
    return acc;
}

/// One term of the expansion of H_n(lambda x) in the basis {H_a(x)}:
/// the coefficient of H_index is coeff * lambda^half_power (half_power = index,
/// same parity as n; pairings downstream always produce even lambda powers).
struct HermiteScaleTerm {
    unsigned index;
    Rational coeff;
    unsigned half_power;
};

/// H_n(lambda x) = sum_a binom(n,a) lambda^a (1-lambda^2)^{(n-a)/2} H_{n-a}(0) H_a(x);
/// terms with n-a odd vanish because H_odd(0) = 0.
inline std::vector<HermiteScaleTerm> hermite_scale_expansion(unsigned n,
                                                             const Rational& lambda_sq) {
    if (!(Rational(0) < lambda_sq && lambda_sq < Rational(1)))
        throw std::domain_error("hermite_scale_expansion: need 0 < lambda^2 < 1");
    std::vector<HermiteScaleTerm> terms;
    const Rational one_minus = Rational(1) - lambda_sq;
    for (unsigned a = n % 2; a <= n; a += 2) {
        unsigned half = (n - a) / 2;
        Rational c = binomial(n, a) * pow(one_minus, half) * hermite_at_zero(n - a);
        if (!c.is_zero()) terms.push_back({a, c, a});
    }
    return terms;
}

}  // namespace strichartz
