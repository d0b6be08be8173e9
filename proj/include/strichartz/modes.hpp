#pragma once

// Finite mode expansions shared by the frame operators and the evolution
// routines: truncated sums over Hermite multi-indices or radial Laguerre
// degrees, in either the polynomial (H, L) or the L^2(R^d) (Phi, Psi)
// normalizations.

#include <complex>
#include <numeric>
#include <utility>
#include <vector>

namespace strichartz {

enum class Basis { HermitePhi, LaguerrePsi, HermiteH, LaguerreL };

using ModeIndex = std::vector<unsigned>;  // d entries (Hermite) or 1 (Laguerre)

inline unsigned mode_order(const ModeIndex& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

struct ModeExpansion {
    Basis basis = Basis::HermitePhi;
    unsigned dim = 1;  // spatial dimension
    std::vector<std::pair<ModeIndex, std::complex<double>>> terms;

    static ModeExpansion hermite_phi(unsigned dim,
                                     std::vector<std::pair<ModeIndex, std::complex<double>>> t) {
        return {Basis::HermitePhi, dim, std::move(t)};
    }
    static ModeExpansion hermite_h(unsigned dim,
                                   std::vector<std::pair<ModeIndex, std::complex<double>>> t) {
        return {Basis::HermiteH, dim, std::move(t)};
    }
    static ModeExpansion laguerre_psi(unsigned dim, std::vector<std::complex<double>> alpha) {
        ModeExpansion e{Basis::LaguerrePsi, dim, {}};
        for (unsigned n = 0; n < alpha.size(); ++n) e.terms.push_back({{n}, alpha[n]});
        return e;
    }
};

}  // namespace strichartz
