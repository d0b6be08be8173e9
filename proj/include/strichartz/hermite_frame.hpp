#pragma once

// The Hermite sector operators.  A frame configuration (k, l, d) encodes the
// even exponents p = 2k, q = 2kl in dimension d; sector S collects the l x k
// matrices of d-dimensional multi-indices of total degree S.  This header
// assembles the exact operator matrix on a sector, tests idempotency in
// rational arithmetic, compares the spectral norm against the Pochhammer
// prediction mu(mu+1)...(mu+floor(S/2)-1)/floor(S/2)! with mu = (k-1)ld/2,
// certifies the kernel decomposition as an exact polynomial identity, and
// evaluates the associated quadratic form on finite mode data.
//
// Matrix layout: the stored entries are the symmetric coefficients P(M,N);
// the operator acts as phi(M) -> sum_N phi(N) P(M,N)/M!, i.e. with the
// diagonal weights M! kept separately.  The operator norm in the weighted
// inner product is the spectral norm of D^{-1/2} P D^{-1/2}, D = diag(M!);
// the plain Euclidean norm of the unweighted matrix would be wrong.

#include "strichartz/modes.hpp"
#include "strichartz/multipoly.hpp"
#include "strichartz/poly.hpp"
#include "strichartz/rational.hpp"
#include "strichartz/symeig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace strichartz {

class SectorCapExceeded : public std::runtime_error {
public:
    explicit SectorCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct FrameParams {
    unsigned k = 2;  // p = 2k, k >= 2
    unsigned l = 1;  // q = 2kl, l >= 1
    unsigned d = 1;  // spatial dimension

    FrameParams(unsigned k_, unsigned l_, unsigned d_) : k(k_), l(l_), d(d_) {
        if (k < 2 || l < 1 || d < 1)
            throw std::invalid_argument("FrameParams: need k >= 2, l >= 1, d >= 1");
    }

    unsigned slots() const { return k * l * d; }
    Rational lambda_sq() const { return Rational(1, static_cast<long long>(k)); }
    /// The dichotomy parameter mu = (k-1) l d / 2.
    Rational mu() const {
        return Rational(static_cast<long long>((k - 1) * l * d), 2);
    }
};

/// One l x k matrix of d-dimensional multi-indices, stored flat with layout
/// (i*k + j)*d + c for row i, column j, coordinate c.
struct FrameIndex {
    std::vector<unsigned> flat;

    unsigned at(const FrameParams& p, unsigned i, unsigned j, unsigned c) const {
        return flat[(i * p.k + j) * p.d + c];
    }
    unsigned total() const {
        unsigned s = 0;
        for (unsigned v : flat) s += v;
        return s;
    }
    /// M! = product of the factorials of all entries.
    Rational weight() const {
        Rational w(1);
        for (unsigned v : flat) w *= factorial(v);
        return w;
    }
    friend bool operator==(const FrameIndex& a, const FrameIndex& b) {
        return a.flat == b.flat;
    }
};

namespace detail {

/// All compositions of `total` into `parts` slots, graded-lex order:
/// (S,0,...,0) first, (0,...,0,S) last.
inline std::vector<std::vector<unsigned>> compositions(unsigned total, unsigned parts) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> c(parts, 0);
    if (parts == 0) {
        if (total == 0) out.push_back(c);
        return out;
    }
    c[0] = total;
    out.push_back(c);
    while (c.back() != total) {
        std::size_t i = parts - 1;
        while (c[i - 1] == 0) --i;
        --i;
        unsigned rest = 1;
        for (std::size_t j = i + 1; j < parts; ++j) {
            rest += c[j];
            c[j] = 0;
        }
        --c[i];
        c[i + 1] = rest;
        out.push_back(c);
    }
    return out;
}

inline BigInt sector_dimension(unsigned S, unsigned slots) {
    return binomial(static_cast<long long>(S) + slots - 1, slots - 1).numerator();
}

/// Exact int prod_j H_{deg_j}(lambda x) dgamma(x); zero when the total degree
/// is odd.
inline Rational hermite_product_integral(const std::vector<unsigned>& degs,
                                         const Rational& lambda_sq) {
    unsigned total = 0;
    for (unsigned v : degs) total += v;
    if (total % 2 == 1) return Rational(0);
    GradedPoly prod(Poly::constant(1), lambda_sq);
    for (unsigned v : degs) prod = prod * GradedPoly(hermite(v), lambda_sq);
    return integrate_gaussian(prod);
}

/// Memoizes hermite_product_integral on the sorted degree multiset.  The
/// integrand is a product, so only the multiset matters.
class PairIntegralCache {
public:
    explicit PairIntegralCache(const Rational& lambda_sq) : lambda_sq_(lambda_sq) {}

    const Rational& get(std::vector<unsigned> degs) {
        std::sort(degs.begin(), degs.end());
        auto it = cache_.find(degs);
        if (it == cache_.end())
            it = cache_.emplace(degs, hermite_product_integral(degs, lambda_sq_)).first;
        return it->second;
    }

private:
    Rational lambda_sq_;
    std::map<std::vector<unsigned>, Rational> cache_;
};

/// P(M,N) via a shared per-coordinate cache.  The d-dimensional Gaussian
/// integral factors over rows and coordinates.
inline Rational p_coefficient_cached(const FrameIndex& M, const FrameIndex& N,
                                     const FrameParams& p, PairIntegralCache& cache) {
    Rational out(1);
    std::vector<unsigned> degs(2 * p.k);
    for (unsigned i = 0; i < p.l; ++i) {
        for (unsigned c = 0; c < p.d; ++c) {
            unsigned parity = 0;
            for (unsigned j = 0; j < p.k; ++j) {
                degs[2 * j] = M.at(p, i, j, c);
                degs[2 * j + 1] = N.at(p, i, j, c);
                parity += degs[2 * j] + degs[2 * j + 1];
            }
            if (parity % 2 == 1) return Rational(0);
            out *= cache.get(degs);
            if (out.is_zero()) return out;
        }
    }
    return out;
}

}  // namespace detail

/// All FrameIndex with |M| = S in graded-lex order on the flattened tuple.
/// Refuses sectors larger than the cap.
inline std::vector<FrameIndex> enumerate_sector(const FrameParams& p, unsigned S,
                                                std::size_t cap = 20000) {
    BigInt dim = detail::sector_dimension(S, p.slots());
    if (dim > cap) {
        std::ostringstream msg;
        msg << "enumerate_sector: sector S=" << S << " for (k,l,d)=(" << p.k << "," << p.l
            << "," << p.d << ") has dimension " << dim << " > cap " << cap;
        throw SectorCapExceeded(msg.str());
    }
    std::vector<FrameIndex> out;
    out.reserve(dim.convert_to<std::size_t>());
    for (auto& c : detail::compositions(S, p.slots())) out.push_back(FrameIndex{std::move(c)});
    return out;
}

/// Exact coefficient P(M,N): the Gaussian integral of the paired Hermite
/// products over all rows.  Symmetric in (M,N).
inline Rational p_coefficient(const FrameIndex& M, const FrameIndex& N, const FrameParams& p) {
    detail::PairIntegralCache cache(p.lambda_sq());
    return detail::p_coefficient_cached(M, N, p, cache);
}

/// Dense symmetric matrix of exact coefficients with diagonal Gram weights.
struct ExactMatrix {
    std::size_t dim = 0;
    std::vector<Rational> entries;  // row-major, entries[i*dim+j] = P(M_i, M_j)
    std::vector<Rational> weights;  // weights[i] = M_i!

    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

/// Assembles the sector matrix: entries P(M,N), weights M!.
inline ExactMatrix assemble_P(const FrameParams& p, unsigned S, std::size_t cap = 20000) {
    auto sector = enumerate_sector(p, S, cap);
    const std::size_t n = sector.size();
    ExactMatrix m;
    m.dim = n;
    m.entries.resize(n * n);
    m.weights.reserve(n);
    for (const auto& M : sector) m.weights.push_back(M.weight());
    detail::PairIntegralCache cache(p.lambda_sq());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rational v = detail::p_coefficient_cached(sector[i], sector[j], p, cache);
            m.entries[i * n + j] = v;
            m.entries[j * n + i] = v;
        }
    }
    return m;
}

/// Max-abs entry of A^2 - A in exact arithmetic, A(M,N) = P(M,N)/M!.
/// Zero exactly when the sector operator is a projection (mu = 1).
inline Rational idempotency_defect(const FrameParams& p, unsigned S, std::size_t cap = 20000) {
    ExactMatrix m = assemble_P(p, S, cap);
    const std::size_t n = m.dim;
    Rational defect(0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            // (A^2)(i,j) = (1/w_i) sum_k E(i,k) E(k,j) / w_k
            Rational acc(0);
            for (std::size_t k = 0; k < n; ++k)
                acc += m.at(i, k) * m.at(k, j) / m.weights[k];
            Rational dev = abs((acc - m.at(i, j)) / m.weights[i]);
            if (dev > defect) defect = dev;
        }
    }
    return defect;
}

struct SectorNorm {
    double numeric = 0.0;                // top eigenvalue of D^{-1/2} P D^{-1/2}
    std::optional<Rational> predicted;   // Pochhammer law; empty when mu < 1
};

/// Spectral norm of the sector operator against the closed-form prediction.
/// The pathological mu = 1/2 configuration (2,1,1) gets no prediction.
inline SectorNorm sector_norm(const FrameParams& p, unsigned S, std::size_t cap = 20000) {
    auto sector = enumerate_sector(p, S, cap);
    const std::size_t n = sector.size();
    std::vector<double> invsqrt(n);
    for (std::size_t i = 0; i < n; ++i)
        invsqrt[i] = 1.0 / std::sqrt(sector[i].weight().to_double());
    std::vector<double> b(n * n);
    detail::PairIntegralCache cache(p.lambda_sq());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double v = detail::p_coefficient_cached(sector[i], sector[j], p, cache).to_double()
                       * invsqrt[i] * invsqrt[j];
            b[i * n + j] = v;
            b[j * n + i] = v;
        }
    }
    SectorNorm out;
    if (n <= 128)
        out.numeric = jacobi_eigensystem(std::move(b), n, false).values.front();
    else
        out.numeric = power_iteration_top(b, n);
    if (p.mu() >= Rational(1))
        out.predicted = pochhammer(p.mu(), S / 2) / factorial(S / 2);
    return out;
}

/// Certifies the sector kernel decomposition
///   sum_{|M|=S} H_M(x) H_M(y) / M!
///     = sum_{s<=S/2} (mu)_s/s! * sum_{|m|=S-2s} prod_i H_{m_i}(x^i) H_{m_i}(y^i) / m!
/// as an exact polynomial identity in the 2ld variables; returns the max-abs
/// coefficient difference (0 certifies the identity at this order).
inline Rational ks_kernel_check(const FrameParams& p, unsigned S, std::size_t cap = 20000) {
    const std::size_t ld = p.l * p.d;
    const std::size_t nvars = 2 * ld;  // x^i_c at i*d+c, y^i_c at ld + i*d+c

    // Left side: lambda-graded coefficients (monomial of total degree D
    // carries lambda^D implicitly; D is even throughout the sum).
    MultiPoly lhs(nvars);
    for (const auto& M : enumerate_sector(p, S, cap)) {
        MultiPoly term = MultiPoly::constant(nvars, Rational(1) / M.weight());
        for (unsigned i = 0; i < p.l; ++i) {
            for (unsigned j = 0; j < p.k; ++j) {
                for (unsigned c = 0; c < p.d; ++c) {
                    Poly h = hermite(M.at(p, i, j, c));
                    term.mul_univariate(h, i * p.d + c);        // x^i_c
                    term.mul_univariate(h, ld + i * p.d + c);   // y^i_c
                }
            }
        }
        lhs += term;
    }
    lhs.scale_by_total_degree_halved(p.lambda_sq());

    MultiPoly rhs(nvars);
    const Rational mu = p.mu();
    for (unsigned s = 0; s <= S / 2; ++s) {
        Rational layer = pochhammer(mu, s) / factorial(s);
        for (const auto& m : detail::compositions(S - 2 * s, static_cast<unsigned>(ld))) {
            Rational w(1);
            for (unsigned v : m) w *= factorial(v);
            MultiPoly term = MultiPoly::constant(nvars, layer / w);
            for (std::size_t slot = 0; slot < ld; ++slot) {
                Poly h = hermite(m[slot]);
                term.mul_univariate(h, slot);
                term.mul_univariate(h, ld + slot);
            }
            rhs += term;
        }
    }

    lhs -= rhs;
    return lhs.max_abs_coeff();
}

/// T_omega: multiplies the coefficient of H_m by omega^{|m|}.
inline ModeExpansion t_omega_apply(const ModeExpansion& g, std::complex<double> omega) {
    if (std::abs(omega) > 1.0 + 1e-12)
        throw std::domain_error("t_omega_apply: |omega| <= 1 required");
    ModeExpansion out = g;
    for (auto& [m, coeff] : out.terms) {
        std::complex<double> f(1.0, 0.0);
        for (unsigned r = 0; r < mode_order(m); ++r) f *= omega;
        coeff *= f;
    }
    return out;
}

/// Mehler kernel, d = 1 closed form.
inline double mehler_closed(double omega, double x, double y) {
    double om2 = omega * omega;
    return std::exp(-om2 * (x * x + y * y) / (2.0 * (1.0 - om2)) + omega * x * y / (1.0 - om2))
           / std::sqrt(1.0 - om2);
}

/// Truncated Mehler sum sum_{m<=T} omega^m H_m(x) H_m(y) / m!, d = 1.
inline double mehler_partial(double omega, unsigned truncation, double x, double y) {
    double hx_prev = 0.0, hx = 1.0, hy_prev = 0.0, hy = 1.0;
    double omega_pow = 1.0, fact = 1.0;
    double acc = 0.0;
    for (unsigned m = 0; m <= truncation; ++m) {
        if (m > 0) {
            double nx = x * hx - (m - 1) * hx_prev;
            hx_prev = hx;
            hx = nx;
            double ny = y * hy - (m - 1) * hy_prev;
            hy_prev = hy;
            hy = ny;
            omega_pow *= omega;
            fact *= m;
        }
        acc += omega_pow * hx * hy / fact;
    }
    return acc;
}

inline double mehler_kernel_defect(double omega, unsigned truncation, double x, double y) {
    if (!(std::fabs(omega) < 1.0))
        throw std::domain_error("mehler_kernel_defect: |omega| < 1 required");
    return std::fabs(mehler_closed(omega, x, y) - mehler_partial(omega, truncation, x, y));
}

struct HermiteFormResult {
    std::complex<double> form;  // <phi, P phi> over all touched sectors
    double norm = 0.0;          // (sum |alpha(m)|^2 m!)^{kl}
};

/// Quadratic form of the even-exponent Strichartz identity on finitely
/// supported Hermite data: phi(M) = prod alpha(m^{i,j}).
inline HermiteFormResult strichartz_form_hermite(
    const FrameParams& p,
    const std::vector<std::pair<ModeIndex, std::complex<double>>>& alpha) {
    for (const auto& [m, coeff] : alpha)
        if (m.size() != p.d)
            throw std::invalid_argument("strichartz_form_hermite: index dimension mismatch");

    // All matrices with entries drawn from the support, grouped by sector.
    const std::size_t cells = p.l * p.k;
    const std::size_t a = alpha.size();
    std::map<unsigned, std::vector<std::pair<FrameIndex, std::complex<double>>>> sectors;
    std::vector<std::size_t> choice(cells, 0);
    while (true) {
        FrameIndex M;
        M.flat.reserve(cells * p.d);
        std::complex<double> phi(1.0, 0.0);
        for (std::size_t cell = 0; cell < cells; ++cell) {
            const auto& [m, coeff] = alpha[choice[cell]];
            M.flat.insert(M.flat.end(), m.begin(), m.end());
            phi *= coeff;
        }
        sectors[M.total()].push_back({std::move(M), phi});
        std::size_t pos = 0;
        while (pos < cells && ++choice[pos] == a) choice[pos++] = 0;
        if (pos == cells) break;
    }

    HermiteFormResult out;
    detail::PairIntegralCache cache(p.lambda_sq());
    for (auto& [S, entries] : sectors) {
        for (const auto& [M, phiM] : entries) {
            for (const auto& [N, phiN] : entries) {
                Rational pmn = detail::p_coefficient_cached(M, N, p, cache);
                if (!pmn.is_zero()) out.form += phiM * std::conj(phiN) * pmn.to_double();
            }
        }
    }
    double l2 = 0.0;
    for (const auto& [m, coeff] : alpha) {
        Rational w(1);
        for (unsigned v : m) w *= factorial(v);
        l2 += std::norm(coeff) * w.to_double();
    }
    out.norm = std::pow(l2, static_cast<double>(p.k * p.l));
    return out;
}

}  // namespace strichartz
