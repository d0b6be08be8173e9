#pragma once

// The radial (Laguerre) operator family for d = 2: exact product
// coefficients Q(a,b,c,d), the sector matrices Q_S with their doubly
// stochastic / positive semi-definite certificates, spectra, the fixed-point
// characterization, and the quadratic form behind the radial space-time
// estimate.
//
// Everything exact here is genuinely exact: row sums are compared with the
// integer 1, and the PSD certificate Q_S = F^T F is checked entry by entry
// in rational arithmetic.  Floating point enters only through the reported
// spectra.

#include "strichartz/poly.hpp"
#include "strichartz/rational.hpp"
#include "strichartz/symeig.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace strichartz {

struct QIndex {
    unsigned a = 0, b = 0, c = 0, d = 0;
    unsigned total() const { return a + b + c + d; }
};

constexpr unsigned kDefaultSectorCapLaguerre = 40;

/// Q(a,b,c,d) = int_0^inf L_a(x/2) L_b(x/2) L_c(x/2) L_d(x/2) e^{-x} dx,
/// exact.  Strictly positive for all degrees.
inline Rational q_coefficient(const QIndex& idx) {
    Poly prod = laguerre(idx.a, Rational(0)).scale_arg(Rational(1, 2));
    for (unsigned deg : {idx.b, idx.c, idx.d})
        prod = prod * laguerre(deg, Rational(0)).scale_arg(Rational(1, 2));
    return integrate_exponential(prod, 0);
}

/// Q_S = [Q(a, S-a, c, S-c)]_{a,c=0..S}: symmetric, row sums exactly 1,
/// entries strictly positive.
struct SectorMatrix {
    unsigned S = 0;
    std::vector<Rational> q;  // (S+1)x(S+1), row-major

    std::size_t dim() const { return S + 1; }
    const Rational& at(unsigned a, unsigned c) const { return q[a * (S + 1) + c]; }
};

inline SectorMatrix assemble_QS(unsigned S, unsigned cap = kDefaultSectorCapLaguerre) {
    if (S > cap) {
        std::ostringstream msg;
        msg << "assemble_QS: S = " << S << " exceeds cap " << cap;
        throw std::invalid_argument(msg.str());
    }
    const unsigned n = S + 1;
    SectorMatrix m{S, std::vector<Rational>(n * n)};
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned c = a; c < n; ++c) {
            Rational v = q_coefficient({a, S - a, c, S - c});
            m.q[a * n + c] = v;
            m.q[c * n + a] = v;
        }
    }
    // Internal consistency: doubly stochastic with positive entries.  A
    // violation means an arithmetic bug, never expected input.
    for (unsigned a = 0; a < n; ++a) {
        Rational row(0);
        for (unsigned c = 0; c < n; ++c) {
            if (!(m.q[a * n + c] > Rational(0))) {
                std::ostringstream msg;
                msg << "assemble_QS: non-positive entry at (" << a << "," << c
                    << ") in sector " << S;
                throw std::logic_error(msg.str());
            }
            row += m.q[a * n + c];
        }
        if (row != Rational(1)) {
            std::ostringstream msg;
            msg << "assemble_QS: row " << a << " of sector " << S << " sums to "
                << row.str() << ", expected 1";
            throw std::logic_error(msg.str());
        }
    }
    return m;
}

/// F_u(a, S-a) = (S-u)! u! / (a! (S-a)! 2^S) *
///               ( sum_r (-1)^r C(a,r) C(S-a,u-r) )^2, an exact rational.
inline Rational f_entry(unsigned S, unsigned u, unsigned a) {
    Rational inner(0);
    for (unsigned r = 0; r <= u && r <= a; ++r) {
        Rational t = binomial(a, r) * binomial(S - a, u - r);
        if ((r % 2) == 1) t = -t;
        inner += t;
    }
    return factorial(S - u) * factorial(u) / (factorial(a) * factorial(S - a))
           / pow(Rational(2), S) * inner * inner;
}

struct FFactorization {
    unsigned S = 0;
    std::vector<Rational> f;  // f[u*(S+1)+a] = F_u(a, S-a)
    Rational defect;          // max |Q_S - F^T F| entry

    const Rational& at(unsigned u, unsigned a) const { return f[u * (S + 1) + a]; }
};

/// Builds F_S and certifies Q_S = F_S^T F_S exactly (defect must be 0).
inline FFactorization f_factorization(unsigned S, unsigned cap = kDefaultSectorCapLaguerre) {
    SectorMatrix qs = assemble_QS(S, cap);
    const unsigned n = S + 1;
    FFactorization out{S, std::vector<Rational>(n * n), Rational(0)};
    for (unsigned u = 0; u < n; ++u)
        for (unsigned a = 0; a < n; ++a) out.f[u * n + a] = f_entry(S, u, a);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned c = a; c < n; ++c) {
            Rational dot(0);
            for (unsigned u = 0; u < n; ++u) dot += out.f[u * n + a] * out.f[u * n + c];
            Rational dev = abs(qs.at(a, c) - dot);
            if (dev > out.defect) out.defect = dev;
        }
    }
    return out;
}

/// Eigenvalues of Q_S, descending.  Contract (verified by the callers'
/// tests, not enforced here): all in [0,1], top eigenvalue 1 and simple,
/// eigenvector proportional to all-ones.
inline SymEig sector_eigensystem(const SectorMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m.q[i].to_double();
    return jacobi_eigensystem(std::move(a), n, true);
}

inline std::vector<double> sector_spectrum(unsigned S,
                                           unsigned cap = kDefaultSectorCapLaguerre) {
    return sector_eigensystem(assemble_QS(S, cap)).values;
}

/// True iff Q_S phi = phi exactly; holds iff phi is constant.
inline bool fixed_point_check(const std::vector<Rational>& phi, unsigned S,
                              unsigned cap = kDefaultSectorCapLaguerre) {
    if (phi.size() != S + 1)
        throw std::invalid_argument("fixed_point_check: phi must have S+1 entries");
    SectorMatrix qs = assemble_QS(S, cap);
    for (unsigned a = 0; a <= S; ++a) {
        Rational acc(0);
        for (unsigned c = 0; c <= S; ++c) acc += qs.at(a, c) * phi[c];
        if (acc != phi[a]) return false;
    }
    return true;
}

struct LaguerreFormResult {
    double form = 0.0;   // (1/16) <phi, Q phi>
    double norm4 = 0.0;  // (1/16) ||phi||^2 = (2^{-1/2} ||f||)^4

    /// Equality detection is by ratio: truncated geometric data approaches 1
    /// without attaining it, matching the exact-maximizer characterization.
    double ratio() const { return form / norm4; }
};

/// Quadratic form of the radial Strichartz identity for d = 2, p = q = 4:
/// phi(a,b) = alpha(a) alpha(b), sector sums over a+b = c+d.
/// form <= norm4 always; equality exactly for geometric alpha.
inline LaguerreFormResult strichartz_form_laguerre(
    const std::vector<std::complex<double>>& alpha) {
    LaguerreFormResult out;
    if (alpha.empty()) return out;
    const unsigned top = static_cast<unsigned>(alpha.size()) - 1;
    std::map<std::pair<unsigned, unsigned>, double> qcache;
    auto q = [&](unsigned a, unsigned c, unsigned S) {
        // Q(a,S-a,c,S-c) depends on the unordered pair of unordered pairs;
        // (a, c) with a <= c and a <= S-a canonicalizes enough for the cache.
        unsigned ca = std::min(a, S - a), cc = std::min(c, S - c);
        if (ca > cc) std::swap(ca, cc);
        auto key = std::make_pair(ca + (S << 8), cc);
        auto it = qcache.find(key);
        if (it != qcache.end()) return it->second;
        double v = q_coefficient({a, S - a, c, S - c}).to_double();
        qcache.emplace(key, v);
        return v;
    };
    for (unsigned S = 0; S <= 2 * top; ++S) {
        const unsigned lo = S > top ? S - top : 0;
        const unsigned hi = std::min(S, top);
        for (unsigned a = lo; a <= hi; ++a) {
            const std::complex<double> pa = alpha[a] * alpha[S - a];
            out.norm4 += std::norm(pa) / 16.0;
            for (unsigned c = lo; c <= hi; ++c) {
                const std::complex<double> pc = alpha[c] * alpha[S - c];
                out.form += (pa * std::conj(pc)).real() * q(a, c, S) / 16.0;
            }
        }
    }
    return out;
}

}  // namespace strichartz
