#pragma once

// Dense symmetric eigensolvers for the sector matrices: cyclic Jacobi
// rotations (full spectrum, deterministic sweep order) and a Rayleigh
// power iteration for the top eigenvalue of large positive semi-definite
// matrices where the full sweep is wasteful.

#include "strichartz/quadrature.hpp"  // EigensolverError

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace strichartz {

struct SymEig {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
};

/// Cyclic Jacobi eigensolver on a row-major symmetric matrix.
inline SymEig jacobi_eigensystem(std::vector<double> a, std::size_t n,
                                 bool want_vectors = true) {
    std::vector<double> v;
    if (want_vectors) {
        v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        if (off <= 1e-30) break;
        if (sweep == 99)
            throw EigensolverError("jacobi_eigensystem: no convergence in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = std::copysign(1.0, theta)
                           / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a[p * n + p], aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = a[r * n + p], arq = a[r * n + q];
                    a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
                    a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
                }
                if (want_vectors) {
                    for (std::size_t r = 0; r < n; ++r) {
                        double vrp = v[r * n + p], vrq = v[r * n + q];
                        v[r * n + p] = vrp - s * (vrq + tau * vrp);
                        v[r * n + q] = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });
    SymEig out;
    out.values.reserve(n);
    for (std::size_t i : order) out.values.push_back(a[i * n + i]);
    if (want_vectors) {
        out.vectors.resize(n, std::vector<double>(n));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t r = 0; r < n; ++r) out.vectors[k][r] = v[r * n + order[k]];
    }
    return out;
}

/// Largest eigenvalue of a symmetric PSD matrix by power iteration with a
/// Rayleigh quotient stop.  Start vector is a fixed LCG sequence, so the
/// result is deterministic across runs.
inline double power_iteration_top(const std::vector<double>& a, std::size_t n,
                                  double rel_tol = 1e-12, std::size_t max_iter = 5000) {
    std::vector<double> x(n), y(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < n; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x[i] = 0.5 + static_cast<double>(state >> 11) / 9007199254740992.0;  // (0.5, 1.5)
    }
    double nx = 0.0;
    for (double c : x) nx += c * c;
    nx = std::sqrt(nx);
    for (auto& c : x) c /= nx;

    double lambda = 0.0;
    int stable = 0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            const double* row = a.data() + i * n;
            for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
            y[i] = acc;
        }
        double num = 0.0, ny = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += x[i] * y[i];
            ny += y[i] * y[i];
        }
        double next = num;  // Rayleigh quotient (x normalized)
        ny = std::sqrt(ny);
        if (ny == 0.0) return 0.0;  // started in the kernel of a PSD matrix
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
        if (it > 0 && std::fabs(next - lambda) <= rel_tol * std::fabs(next)) {
            if (++stable >= 3) return next;
        } else {
            stable = 0;
        }
        lambda = next;
    }
    throw EigensolverError("power_iteration_top: no convergence");
}

}  // namespace strichartz
