#pragma once

// Free Schroedinger evolution of the Gaussian-weighted Hermite and Laguerre
// modes, an independent Fourier-multiplier propagator, and the mixed-norm
// space-time functionals with their sharp constants.
//
// Transform conventions (fixed project-wide):
//   fhat(y) = int f(x) e^{-2 pi i x.y} dx,  u(.,t) = e^{it Delta} f, so
//   uhat(y,t) = e^{-4 pi^2 i t |y|^2} fhat(y).
// With these, the closed-form flows below hold pointwise, e.g.
//   e^{it Delta} Phi_m = (1+4 pi i t)^{-d/2} w_t^{|m|}
//                        Phi_m(x / s_t) exp[4 pi^2 i t |x|^2 / s_t^2],
// where s_t^2 = 1 + 16 pi^2 t^2 and w_t = sqrt((1-4 pi i t)/(1+4 pi i t))
// (principal branches; the t = 0 limit is the identity).
//
// Time integrals over all of R are mapped to s in (-1/2, 1/2) by the exact
// substitution pi s = arctan(-4 pi t), under which s_t = sec(pi s),
// w_t = e^{i pi s}, and dt = sec^2(pi s) ds / 4.  No time truncation error.

#include "strichartz/modes.hpp"
#include "strichartz/quadrature.hpp"
#include "strichartz/rational.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace strichartz {

using Complex = std::complex<double>;

class GridResolutionError : public std::runtime_error {
public:
    explicit GridResolutionError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
constexpr double kPi = std::numbers::pi;

inline Complex powi(Complex base, unsigned n) {
    Complex acc(1.0, 0.0);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}
}  // namespace detail

/// Monic probabilists' Hermite H_n(x) in floating point.
inline double hermite_value(unsigned n, double x) {
    double hm1 = 0.0, h = 1.0;
    for (unsigned m = 0; m < n; ++m) {
        double next = x * h - m * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

/// Generalized Laguerre L_n^{(nu)}(x) in floating point.
inline double laguerre_value(unsigned n, double nu, double x) {
    double lm1 = 0.0, l = 1.0;
    for (unsigned m = 0; m < n; ++m) {
        double next = ((2.0 * m + 1.0 + nu - x) * l - (m + nu) * lm1) / (m + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

/// Phi_m(x) = H_m(sqrt(4 pi) x) e^{-pi |x|^2}, the L^2(R^d) Hermite mode.
inline double phi_value(const ModeIndex& m, const std::vector<double>& x) {
    double normsq = 0.0, h = 1.0;
    const double root4pi = std::sqrt(4.0 * detail::kPi);
    for (std::size_t c = 0; c < m.size(); ++c) {
        normsq += x[c] * x[c];
        h *= hermite_value(m[c], root4pi * x[c]);
    }
    return h * std::exp(-detail::kPi * normsq);
}

/// Psi_n(r) = L_n^{(d/2-1)}(2 pi r^2) e^{-pi r^2}, the radial Laguerre mode.
inline double psi_value(unsigned n, double r, unsigned d) {
    const double nu = d / 2.0 - 1.0;
    return laguerre_value(n, nu, 2.0 * detail::kPi * r * r)
           * std::exp(-detail::kPi * r * r);
}

/// e^{it Delta} Phi_m at the point x.
inline Complex evolve_phi(const ModeIndex& m, double t, const std::vector<double>& x) {
    if (m.size() != x.size())
        throw std::invalid_argument("evolve_phi: index/point dimension mismatch");
    const double fourpit = 4.0 * detail::kPi * t;
    const Complex one_plus(1.0, fourpit), one_minus(1.0, -fourpit);
    const double ssq = 1.0 + fourpit * fourpit;
    const double scale = std::sqrt(ssq);
    const unsigned d = static_cast<unsigned>(m.size());
    Complex pref = std::pow(one_plus, -0.5 * static_cast<double>(d));
    Complex omega = std::sqrt(one_minus / one_plus);
    std::vector<double> xs(x.size());
    double normsq = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) {
        xs[c] = x[c] / scale;
        normsq += x[c] * x[c];
    }
    Complex phase = std::polar(1.0, 4.0 * detail::kPi * detail::kPi * t * normsq / ssq);
    return pref * detail::powi(omega, mode_order(m)) * phi_value(m, xs) * phase;
}

/// e^{it Delta} Psi_n at radius r in dimension d (nu = d/2 - 1).
inline Complex evolve_psi(unsigned n, double t, double r, unsigned d) {
    const double fourpit = 4.0 * detail::kPi * t;
    const Complex one_plus(1.0, fourpit), one_minus(1.0, -fourpit);
    const double ssq = 1.0 + fourpit * fourpit;
    Complex pref = std::pow(one_plus, -0.5 * static_cast<double>(d));
    Complex ratio = one_minus / one_plus;  // no square root in the radial flow
    Complex phase = std::polar(1.0, 4.0 * detail::kPi * detail::kPi * t * r * r / ssq);
    return pref * detail::powi(ratio, n) * psi_value(n, r / std::sqrt(ssq), d) * phase;
}

/// e^{it Delta} of the Gaussian e^{-pi B |x|^2} (Re B > 0) at radius r.
inline Complex evolve_gaussian(Complex B, double t, double r, unsigned d) {
    if (B.real() <= 0.0) throw std::domain_error("evolve_gaussian: Re B > 0 required");
    const Complex den = Complex(1.0, 0.0) + Complex(0.0, 4.0 * detail::kPi * t) * B;
    Complex pref = std::pow(den, -0.5 * static_cast<double>(d));
    return pref * std::exp(-detail::kPi * B * r * r / den);
}

/// Sharp Strichartz constant C(p,d) = (p^{-1/2p} 2^{1/p-1/4})^d.
inline double sharp_constant(double p, unsigned d) {
    return std::pow(std::pow(p, -0.5 / p) * std::pow(2.0, 1.0 / p - 0.25),
                    static_cast<double>(d));
}

/// |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2).
inline double unit_sphere_area(unsigned d) {
    return 2.0 * std::pow(detail::kPi, d / 2.0) / std::tgamma(d / 2.0);
}

struct SpaceTimeGrid {
    double space_radius = 8.0;   // profiles integrated over |v| <= radius (scaled units)
    double space_step = 0.0625;  // trapezoid step in the scaled spatial variable
    std::size_t time_nodes = 160;  // Gauss-Legendre nodes in s on (-1/2, 1/2)

    void validate() const {
        if (space_radius <= 0 || space_step <= 0 || time_nodes < 16)
            throw GridResolutionError("SpaceTimeGrid: non-positive steps or too few nodes");
    }

    /// The evolved profiles are polynomials of degree <= maxdeg times
    /// e^{-pi |v|^2} in the scaled variable; the grid must cover their mass.
    void require_coverage(unsigned maxdeg) const {
        validate();
        double needed = 3.0 * std::sqrt((2.0 * maxdeg + 1.0) / (2.0 * detail::kPi)) + 3.0;
        if (space_radius < needed) {
            throw GridResolutionError("SpaceTimeGrid: radius too small for mode degree "
                                      + std::to_string(maxdeg));
        }
        if (space_step > 0.126)
            throw GridResolutionError("SpaceTimeGrid: step too coarse for the mode phases");
    }
};

namespace detail {

/// Gauss-Legendre nodes/weights for s over (-1/2, 1/2).
inline QuadRule s_rule(std::size_t n) {
    QuadRule gl = gauss_jacobi(n, 0.0, 0.0);
    for (auto& x : gl.nodes) x *= 0.5;
    for (auto& w : gl.weights) w *= 0.5;
    return gl;
}

inline void check_admissible(double p, double q, unsigned d) {
    if (p < 2.0 || q < 2.0)
        throw std::invalid_argument("exponents must satisfy p,q >= 2");
    if (std::fabs(d / p + 2.0 / q - d / 2.0) > 1e-9)
        throw std::invalid_argument("inadmissible exponents: need d/p + 2/q = d/2");
}

}  // namespace detail

/// Mixed space-time norm || || e^{it Delta} f ||_{L^p_x} ||_{L^q_t} for a
/// finite Phi/Psi expansion, by closed-form mode evaluation and quadrature
/// (trapezoid in the scaled space variable, exact arctan substitution in t).
inline double spacetime_norm_numeric(const ModeExpansion& f, double p, double q,
                                     const SpaceTimeGrid& grid = {}) {
    detail::check_admissible(p, q, static_cast<double>(f.dim));
    const unsigned d = f.dim;
    unsigned maxdeg = 0;
    for (const auto& [m, coeff] : f.terms) maxdeg = std::max(maxdeg, mode_order(m));
    grid.require_coverage(f.basis == Basis::LaguerrePsi ? 2 * maxdeg : maxdeg);

    const double h = grid.space_step;
    const double R = grid.space_radius;
    QuadRule srule = detail::s_rule(grid.time_nodes);

    double acc = 0.0;
    if (f.basis == Basis::HermitePhi) {
        // Tensor grid over [-R, R]^d; mode values are t-independent after the
        // x = sec(pi s) v substitution, so tabulate them once.
        const std::size_t n1 = static_cast<std::size_t>(std::floor(2.0 * R / h)) + 1;
        std::size_t npts = 1;
        for (unsigned c = 0; c < d; ++c) npts *= n1;
        std::vector<double> table(npts * f.terms.size());
        std::vector<double> v(d);
        for (std::size_t idx = 0; idx < npts; ++idx) {
            std::size_t rem = idx;
            for (unsigned c = 0; c < d; ++c) {
                v[c] = -R + h * static_cast<double>(rem % n1);
                rem /= n1;
            }
            for (std::size_t k = 0; k < f.terms.size(); ++k)
                table[idx * f.terms.size() + k] = phi_value(f.terms[k].first, v);
        }
        const double cell = std::pow(h, d);
        for (std::size_t si = 0; si < srule.size(); ++si) {
            const double s = srule.nodes[si];
            const double sec = 1.0 / std::cos(detail::kPi * s);
            Complex omega = std::polar(1.0, detail::kPi * s);  // w_t under the substitution
            std::vector<Complex> cf(f.terms.size());
            for (std::size_t k = 0; k < f.terms.size(); ++k)
                cf[k] = f.terms[k].second * detail::powi(omega, mode_order(f.terms[k].first));
            double xint = 0.0;
            for (std::size_t idx = 0; idx < npts; ++idx) {
                Complex u(0.0, 0.0);
                const double* row = table.data() + idx * f.terms.size();
                for (std::size_t k = 0; k < f.terms.size(); ++k) u += cf[k] * row[k];
                xint += std::pow(std::abs(u), p);
            }
            xint *= cell * std::pow(sec, d - p * d / 2.0);
            acc += srule.weights[si] * 0.25 * sec * sec * std::pow(xint, q / p);
        }
    } else if (f.basis == Basis::LaguerrePsi) {
        // Radial reduction: with w = p pi rho^2 the x-integral becomes a
        // Gauss-Laguerre(nu = d/2-1) integral of |poly(w)|^p, exact for even p.
        const double nu = d / 2.0 - 1.0;
        unsigned maxn = 0;
        for (const auto& [m, coeff] : f.terms) maxn = std::max(maxn, m[0]);
        QuadRule wrule = gauss_laguerre(
            nodes_for_degree(static_cast<std::size_t>(std::ceil(p)) * maxn), nu);
        std::vector<double> table(wrule.size() * f.terms.size());
        for (std::size_t i = 0; i < wrule.size(); ++i)
            for (std::size_t k = 0; k < f.terms.size(); ++k)
                table[i * f.terms.size() + k] =
                    laguerre_value(f.terms[k].first[0], nu, 2.0 * wrule.nodes[i] / p);
        const double front = unit_sphere_area(d) * 0.5
                             * std::pow(p * detail::kPi, -0.5 * d);
        for (std::size_t si = 0; si < srule.size(); ++si) {
            const double s = srule.nodes[si];
            const double sec = 1.0 / std::cos(detail::kPi * s);
            Complex eta = std::polar(1.0, 2.0 * detail::kPi * s);  // (1-4pi it)/(1+4pi it)
            std::vector<Complex> cf(f.terms.size());
            for (std::size_t k = 0; k < f.terms.size(); ++k)
                cf[k] = f.terms[k].second * detail::powi(eta, f.terms[k].first[0]);
            double xint = 0.0;
            for (std::size_t i = 0; i < wrule.size(); ++i) {
                Complex u(0.0, 0.0);
                const double* row = table.data() + i * f.terms.size();
                for (std::size_t k = 0; k < f.terms.size(); ++k) u += cf[k] * row[k];
                xint += wrule.weights[i] * std::pow(std::abs(u), p);
            }
            xint *= front * std::pow(sec, d - p * d / 2.0);
            acc += srule.weights[si] * 0.25 * sec * sec * std::pow(xint, q / p);
        }
    } else {
        throw std::invalid_argument("spacetime_norm_numeric: expansion must be Phi or Psi");
    }
    return std::pow(acc, 1.0 / q);
}

/// Strichartz quotient || e^{it Delta} f ||_{L^q L^p} / || f ||_{L^2} for the
/// Gaussian family f = e^{-pi B |x|^2}; constant in B on the maximizer family.
inline double gaussian_strichartz_quotient(Complex B, double p, double q, unsigned d,
                                           const SpaceTimeGrid& grid = {}) {
    detail::check_admissible(p, q, static_cast<double>(d));
    if (B.real() <= 0.0)
        throw std::domain_error("gaussian_strichartz_quotient: Re B > 0 required");
    (void)grid;
    // |e^{it Delta} f|(r) = |1+4 pi i B t|^{-d/2} e^{-pi Re(B) r^2 / |1+4 pi i B t|^2},
    // so the spatial integral is the exact Gaussian one; only t stays numeric
    // (non-polynomial integrand: node doubling to convergence).
    auto integrand = [&](double s) {
        const double sec = 1.0 / std::cos(detail::kPi * s);
        const double t = -std::tan(detail::kPi * s) / (4.0 * detail::kPi);
        const Complex den = Complex(1.0, 0.0) + Complex(0.0, 4.0 * detail::kPi * t) * B;
        const double dd = std::norm(den);
        double xint = std::pow(p * B.real(), -0.5 * d) * std::pow(dd, 0.5 * d - 0.25 * p * d);
        return 0.25 * sec * sec * std::pow(xint, q / p);
    };
    double acc = integrate_to_convergence([](std::size_t n) { return detail::s_rule(n); },
                                          integrand);
    double st_norm = std::pow(acc, 1.0 / q);
    double l2 = std::pow(2.0 * B.real(), -0.25 * d);  // || f ||_{L^2}
    return st_norm / l2;
}

struct EquivalenceResult {
    double lhs = 0.0;  // orthogonal-polynomial side
    double rhs = 0.0;  // rescaled space-time norm
    double ratio = 0.0;
};

/// Both sides of the even-exponent equivalence: the left side evaluates
/// ( int_{-1/2}^{1/2} ( int |H^t T_{-i} g|^p dgamma_d )^{q/p} dt )^{1/q}
/// with Gauss-gamma nodes in x (exact for even p) and a uniform t-grid
/// (exact for the trigonometric integrand); the right side is the space-time
/// norm of the matching Phi expansion divided by (p^{-1/2p} 2^{1/p-1/2})^d.
inline EquivalenceResult equivalence_check_hermite(const ModeExpansion& g, double p, double q,
                                                   const SpaceTimeGrid& grid = {}) {
    if (g.basis != Basis::HermiteH)
        throw std::invalid_argument("equivalence_check_hermite: expected HermiteH basis");
    detail::check_admissible(p, q, static_cast<double>(g.dim));
    const unsigned d = g.dim;
    const double lambda = std::sqrt(2.0 / p);

    unsigned max_total = 0;
    std::vector<unsigned> maxdeg(d, 0);
    for (const auto& [m, coeff] : g.terms) {
        max_total = std::max(max_total, mode_order(m));
        for (unsigned c = 0; c < d; ++c) maxdeg[c] = std::max(maxdeg[c], m[c]);
    }

    // Tensor Gauss-gamma grid, exact for |g|^p (p even).
    std::vector<QuadRule> rules;
    std::size_t npts = 1;
    for (unsigned c = 0; c < d; ++c) {
        rules.push_back(gauss_hermite_gamma(
            nodes_for_degree(static_cast<std::size_t>(p) * maxdeg[c])));
        npts *= rules[c].size();
    }
    std::vector<double> weight(npts, 1.0);
    std::vector<double> table(npts * g.terms.size());
    std::vector<double> x(d);
    for (std::size_t idx = 0; idx < npts; ++idx) {
        std::size_t rem = idx;
        for (unsigned c = 0; c < d; ++c) {
            std::size_t i = rem % rules[c].size();
            rem /= rules[c].size();
            x[c] = rules[c].nodes[i];
            weight[idx] *= rules[c].weights[i];
        }
        for (std::size_t k = 0; k < g.terms.size(); ++k) {
            double h = 1.0;
            for (unsigned c = 0; c < d; ++c)
                h *= hermite_value(g.terms[k].first[c], lambda * x[c]);
            table[idx * g.terms.size() + k] = h;
        }
    }

    // Uniform t-grid: the integrand is a trigonometric polynomial with
    // frequencies bounded by q * max_total, summed exactly.
    const std::size_t nt = 2 * static_cast<std::size_t>(q) * std::max(1u, max_total) + 9;
    double lhs_acc = 0.0;
    const Complex minus_i(0.0, -1.0);
    for (std::size_t ti = 0; ti < nt; ++ti) {
        const double t = -0.5 + (static_cast<double>(ti) + 0.5) / static_cast<double>(nt);
        std::vector<Complex> cf(g.terms.size());
        for (std::size_t k = 0; k < g.terms.size(); ++k) {
            unsigned order = mode_order(g.terms[k].first);
            cf[k] = g.terms[k].second * detail::powi(minus_i, order)
                    * std::polar(1.0, 2.0 * detail::kPi * order * t);
        }
        double xint = 0.0;
        for (std::size_t idx = 0; idx < npts; ++idx) {
            Complex u(0.0, 0.0);
            const double* row = table.data() + idx * g.terms.size();
            for (std::size_t k = 0; k < g.terms.size(); ++k) u += cf[k] * row[k];
            xint += weight[idx] * std::pow(std::abs(u), p);
        }
        lhs_acc += std::pow(xint, q / p) / static_cast<double>(nt);
    }

    ModeExpansion f{Basis::HermitePhi, d, g.terms};
    const double factor =
        std::pow(std::pow(p, -0.5 / p) * std::pow(2.0, 1.0 / p - 0.5), static_cast<double>(d));
    EquivalenceResult out;
    out.lhs = std::pow(lhs_acc, 1.0 / q);
    out.rhs = spacetime_norm_numeric(f, p, q, grid) / factor;
    out.ratio = out.lhs / out.rhs;
    return out;
}

struct ParsevalResult {
    double lhs = 0.0;  // int |f|^2 dx by trapezoid quadrature
    double rhs = 0.0;  // 2^{-d/2} sum |alpha(m)|^2 m!
};

/// The Plancherel bridge int |f|^2 dx = 2^{-d/2} int |g|^2 dgamma_d for
/// f = sum alpha(m) Phi_m, g = sum alpha(m) H_m.
inline ParsevalResult parseval_check(const ModeExpansion& f, const SpaceTimeGrid& grid = {}) {
    if (f.basis != Basis::HermitePhi)
        throw std::invalid_argument("parseval_check: expected HermitePhi basis");
    const unsigned d = f.dim;
    unsigned maxdeg = 0;
    for (const auto& [m, coeff] : f.terms) maxdeg = std::max(maxdeg, mode_order(m));
    grid.require_coverage(maxdeg);

    const double h = grid.space_step, R = grid.space_radius;
    const std::size_t n1 = static_cast<std::size_t>(std::floor(2.0 * R / h)) + 1;
    std::size_t npts = 1;
    for (unsigned c = 0; c < d; ++c) npts *= n1;
    double lhs = 0.0;
    std::vector<double> x(d);
    for (std::size_t idx = 0; idx < npts; ++idx) {
        std::size_t rem = idx;
        for (unsigned c = 0; c < d; ++c) {
            x[c] = -R + h * static_cast<double>(rem % n1);
            rem /= n1;
        }
        Complex u(0.0, 0.0);
        for (const auto& [m, coeff] : f.terms) u += coeff * phi_value(m, x);
        lhs += std::norm(u);
    }
    lhs *= std::pow(h, d);

    double rhs = 0.0;
    for (const auto& [m, coeff] : f.terms) {
        double w = 1.0;
        for (unsigned v : m) w *= factorial(v).to_double();
        rhs += std::norm(coeff) * w;
    }
    rhs *= std::pow(2.0, -0.5 * d);
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Independent numeric propagator: discrete transforms against the multiplier
// e^{-4 pi^2 i t |y|^2}, with no reference to the closed-form flows.

struct LineGrid {
    double xmin = -8.0, xmax = 8.0;
    std::size_t n = 1024;

    double step() const { return (xmax - xmin) / static_cast<double>(n - 1); }
    double point(std::size_t i) const { return xmin + step() * static_cast<double>(i); }
};

namespace detail {

inline void check_tail(const std::vector<Complex>& f, const char* who,
                       bool both_ends = true) {
    double peak = 0.0;
    for (const auto& v : f) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return;
    std::size_t margin = std::max<std::size_t>(2, f.size() / 50);
    double tail = 0.0;
    for (std::size_t i = 0; i < margin; ++i) {
        tail = std::max(tail, std::abs(f[f.size() - 1 - i]));
        if (both_ends) tail = std::max(tail, std::abs(f[i]));
    }
    if (tail > 1e-8 * peak)
        throw GridResolutionError(std::string(who) + ": profile not resolved by the grid "
                                                     "(mass at the boundary)");
}

}  // namespace detail

/// d = 1 propagator: forward transform by trapezoid quadrature, multiplier,
/// inverse transform evaluated on the output grid.  The batch form shares
/// the transform kernels across profiles.
inline std::vector<std::vector<Complex>> propagate_line_many(
    const LineGrid& in, const std::vector<std::vector<Complex>>& fs, double t,
    const LineGrid& out) {
    for (const auto& f : fs) {
        if (f.size() != in.n) throw std::invalid_argument("propagate_line: size mismatch");
        detail::check_tail(f, "propagate_line");
    }

    // Frequency band: input support + chirp slope + output reach.
    const double xmax_abs = std::max(std::fabs(out.xmin), std::fabs(out.xmax));
    const double ymax = 8.0;
    const double band = xmax_abs + 4.0 * detail::kPi * std::fabs(t) * ymax + 8.0;
    const std::size_t ny =
        static_cast<std::size_t>(std::ceil(2.0 * ymax * std::max(64.0, 1.25 * band))) + 1;
    const double hy = 2.0 * ymax / static_cast<double>(ny - 1);
    const double hx = in.step();
    const std::size_t nf = fs.size();

    std::vector<std::vector<Complex>> fhat(nf, std::vector<Complex>(ny));
    for (std::size_t yi = 0; yi < ny; ++yi) {
        const double y = -ymax + hy * static_cast<double>(yi);
        std::vector<Complex> acc(nf, Complex(0.0, 0.0));
        for (std::size_t xi = 0; xi < in.n; ++xi) {
            const Complex kernel = std::polar(1.0, -2.0 * detail::kPi * in.point(xi) * y);
            for (std::size_t k = 0; k < nf; ++k) acc[k] += fs[k][xi] * kernel;
        }
        const Complex mult =
            hx * std::polar(1.0, -4.0 * detail::kPi * detail::kPi * t * y * y);
        for (std::size_t k = 0; k < nf; ++k) fhat[k][yi] = acc[k] * mult;
    }
    std::vector<std::vector<Complex>> u(nf, std::vector<Complex>(out.n));
    for (std::size_t xi = 0; xi < out.n; ++xi) {
        const double x = out.point(xi);
        std::vector<Complex> acc(nf, Complex(0.0, 0.0));
        for (std::size_t yi = 0; yi < ny; ++yi) {
            const double y = -ymax + hy * static_cast<double>(yi);
            const Complex kernel = std::polar(1.0, 2.0 * detail::kPi * x * y);
            for (std::size_t k = 0; k < nf; ++k) acc[k] += fhat[k][yi] * kernel;
        }
        for (std::size_t k = 0; k < nf; ++k) u[k][xi] = acc[k] * hy;
    }
    return u;
}

inline std::vector<Complex> propagate_line(const LineGrid& in, const std::vector<Complex>& f,
                                           double t, const LineGrid& out) {
    return propagate_line_many(in, {f}, t, out).front();
}

struct RadialGrid {
    double rmax = 8.0;
    std::size_t n = 512;

    double step() const { return rmax / static_cast<double>(n - 1); }
    double point(std::size_t i) const { return step() * static_cast<double>(i); }
};

/// Radial d = 2 propagator through the Hankel transform
///   fhat(s) = 2 pi int f(r) J_0(2 pi r s) r dr,
/// multiplier in s, inverse of the same shape evaluated at out_r.  Batch form
/// shares the J_0 kernel across profiles; half-line trapezoid sums carry the
/// Euler-Maclaurin endpoint correction (the integrand g(r) = f(r) J_0 r has
/// g(0) = 0 but g'(0) = f(0), so the plain rule would only be O(h^2)).
inline std::vector<std::vector<Complex>> propagate_radial_many(
    const RadialGrid& in, const std::vector<std::vector<Complex>>& fs, double t,
    const std::vector<double>& out_r) {
    for (const auto& f : fs) {
        if (f.size() != in.n) throw std::invalid_argument("propagate_radial: size mismatch");
        detail::check_tail(f, "propagate_radial", false);
    }

    double rmax_out = 0.0;
    for (double r : out_r) rmax_out = std::max(rmax_out, std::fabs(r));
    const double smax = 8.0;
    const double band = rmax_out + 4.0 * detail::kPi * std::fabs(t) * smax + 8.0;
    const std::size_t ns =
        static_cast<std::size_t>(std::ceil(smax * std::max(256.0, 2.5 * band))) + 1;
    const double hs = smax / static_cast<double>(ns - 1);
    const double hr = in.step();
    const std::size_t nf = fs.size();

    std::vector<std::vector<Complex>> fhat(nf, std::vector<Complex>(ns));
    for (std::size_t si = 0; si < ns; ++si) {
        const double s = hs * static_cast<double>(si);
        std::vector<Complex> acc(nf, Complex(0.0, 0.0));
        for (std::size_t ri = 0; ri < in.n; ++ri) {
            const double r = in.point(ri);
            const double kernel = std::cyl_bessel_j(0.0, 2.0 * detail::kPi * r * s) * r;
            for (std::size_t k = 0; k < nf; ++k) acc[k] += fs[k][ri] * kernel;
        }
        const Complex mult = 2.0 * detail::kPi
                             * std::polar(1.0, -4.0 * detail::kPi * detail::kPi * t * s * s);
        for (std::size_t k = 0; k < nf; ++k)
            fhat[k][si] = (acc[k] * hr + fs[k][0] * (hr * hr / 12.0)) * mult;
    }
    std::vector<std::vector<Complex>> u(nf, std::vector<Complex>(out_r.size()));
    for (std::size_t oi = 0; oi < out_r.size(); ++oi) {
        std::vector<Complex> acc(nf, Complex(0.0, 0.0));
        for (std::size_t si = 0; si < ns; ++si) {
            const double s = hs * static_cast<double>(si);
            const double kernel =
                std::cyl_bessel_j(0.0, 2.0 * detail::kPi * out_r[oi] * s) * s;
            for (std::size_t k = 0; k < nf; ++k) acc[k] += fhat[k][si] * kernel;
        }
        for (std::size_t k = 0; k < nf; ++k)
            u[k][oi] = (acc[k] * hs + fhat[k][0] * (hs * hs / 12.0)) * (2.0 * detail::kPi);
    }
    return u;
}

inline std::vector<Complex> propagate_radial(const RadialGrid& in, const std::vector<Complex>& f,
                                             double t, const std::vector<double>& out_r) {
    return propagate_radial_many(in, {f}, t, out_r).front();
}

}  // namespace strichartz
