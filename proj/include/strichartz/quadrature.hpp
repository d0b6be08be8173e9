#pragma once

// Gauss-type quadrature rules (Golub-Welsch: nodes are eigenvalues of the
// Jacobi matrix of the three-term recurrence, weights come from the first
// eigenvector components).  These rules are the floating-point oracle used
// to cross-check every exact integral in the library, and the workhorse for
// the non-polynomial space-time integrands.
//
// Supported weights:
//   hermite-gamma : (2pi)^{-1/2} e^{-x^2/2} dx          on R        (mass 1)
//   laguerre(nu)  : e^{-x} x^nu dx                      on (0,inf)  (mass Gamma(nu+1))
//   jacobi(a,b)   : (1-x)^a (1+x)^b dx                  on (-1,1)

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strichartz {

/// Distinct error for iterative eigensolver breakdown.
class EigensolverError : public std::runtime_error {
public:
    explicit EigensolverError(const std::string& what) : std::runtime_error(what) {}
};

enum class QuadKind { HermiteGamma, Laguerre, Jacobi };

struct QuadRule {
    QuadKind kind;
    double param1 = 0.0;  // nu for Laguerre, alpha for Jacobi
    double param2 = 0.0;  // beta for Jacobi
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

namespace detail {

/// Symmetric tridiagonal eigensolver (implicit-shift QL) that tracks only the
/// first component of each eigenvector; d = diagonal, e = subdiagonal.
/// On return d holds eigenvalues (unsorted) and z the first components.
inline void tridiag_ql_first_components(std::vector<double>& d, std::vector<double>& e,
                                        std::vector<double>& z) {
    const std::size_t n = d.size();
    z.assign(n, 0.0);
    if (n == 0) return;
    z[0] = 1.0;
    if (n == 1) return;
    e.push_back(0.0);  // sentinel e[n-1]
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            std::size_t m = l;
            while (m + 1 < n) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= 1e-15 * dd) break;
                ++m;
            }
            if (m == l) break;
            if (++iter > 60)
                throw EigensolverError("tridiagonal QL failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (r == 0.0 && m > l + 1) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    e.pop_back();
}

inline QuadRule golub_welsch(QuadKind kind, double p1, double p2, double mu0,
                             std::vector<double> diag, std::vector<double> offdiag) {
    std::vector<double> z;
    tridiag_ql_first_components(diag, offdiag, z);
    const std::size_t n = diag.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
    QuadRule rule{kind, p1, p2, {}, {}};
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    for (std::size_t i : order) {
        rule.nodes.push_back(diag[i]);
        rule.weights.push_back(mu0 * z[i] * z[i]);
    }
    return rule;
}

}  // namespace detail

/// Gauss rule for the standard Gaussian probability measure dgamma.
inline QuadRule gauss_hermite_gamma(std::size_t n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite_gamma: n >= 1");
    std::vector<double> d(n, 0.0), e(n > 1 ? n - 1 : 0);
    for (std::size_t k = 1; k < n; ++k) e[k - 1] = std::sqrt(static_cast<double>(k));
    return detail::golub_welsch(QuadKind::HermiteGamma, 0, 0, 1.0, std::move(d), std::move(e));
}

/// Gauss rule for e^{-x} x^nu on (0,inf), nu > -1.
inline QuadRule gauss_laguerre(std::size_t n, double nu) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n >= 1");
    if (!(nu > -1.0)) throw std::invalid_argument("gauss_laguerre: nu > -1 required");
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    for (std::size_t k = 0; k < n; ++k) d[k] = 2.0 * k + nu + 1.0;
    for (std::size_t k = 1; k < n; ++k) e[k - 1] = std::sqrt(k * (k + nu));
    return detail::golub_welsch(QuadKind::Laguerre, nu, 0, std::tgamma(nu + 1.0),
                                std::move(d), std::move(e));
}

/// Gauss rule for (1-x)^alpha (1+x)^beta on (-1,1), alpha,beta > -1.
inline QuadRule gauss_jacobi(std::size_t n, double alpha, double beta) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: n >= 1");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw std::invalid_argument("gauss_jacobi: alpha, beta > -1 required");
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    const double ab = alpha + beta;
    d[0] = (beta - alpha) / (ab + 2.0);
    for (std::size_t k = 1; k < n; ++k) {
        double kk = static_cast<double>(k);
        double den = (2.0 * kk + ab) * (2.0 * kk + ab + 2.0);
        d[k] = (beta * beta - alpha * alpha) / den;
        double num = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab);
        double den2 = (2.0 * kk + ab) * (2.0 * kk + ab) * (2.0 * kk + ab + 1.0)
                      * (2.0 * kk + ab - 1.0);
        e[k - 1] = std::sqrt(num / den2);
    }
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0)
                                + std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
    return detail::golub_welsch(QuadKind::Jacobi, alpha, beta, mu0, std::move(d), std::move(e));
}

/// Node count that integrates polynomials of degree D exactly, plus margin.
inline std::size_t nodes_for_degree(std::size_t degree) {
    return (degree + 2) / 2 + 2;
}

template <class F>
double integrate(const QuadRule& rule, F&& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double v = f(rule.nodes[i]);
        if (!std::isfinite(v))
            throw std::domain_error("integrate: non-finite integrand value at node");
        acc += rule.weights[i] * v;
    }
    return acc;
}

/// Integration policy for non-polynomial integrands: start at 200 nodes and
/// double until successive values agree to 1e-10 relative.
template <class MakeRule, class F>
double integrate_to_convergence(MakeRule&& make_rule, F&& f, std::size_t start = 200,
                                double rel_tol = 1e-10, std::size_t max_nodes = 6400) {
    double prev = integrate(make_rule(start), f);
    for (std::size_t n = 2 * start; n <= max_nodes; n *= 2) {
        double cur = integrate(make_rule(n), f);
        if (std::fabs(cur - prev) <= rel_tol * std::max(1e-300, std::fabs(cur))) return cur;
        prev = cur;
    }
    throw std::runtime_error("integrate_to_convergence: no convergence under node doubling");
}

}  // namespace strichartz
