// Acceptance battery: the headline identities and spectral laws, each run at
// its stated tolerance with one pass/fail line.  Exits nonzero if any
// criterion fails.

#include "strichartz/hermite_frame.hpp"
#include "strichartz/laguerre_frame.hpp"
#include "strichartz/quadrature.hpp"
#include "strichartz/schrodinger.hpp"
#include "strichartz/spherical.hpp"
#include "strichartz/words.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace strichartz;
using cplx = std::complex<double>;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;

void run_criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++g_failures;
}

// C1: q_coefficient = q_from_words = q_explicit exactly, all N <= 10.
Outcome criterion_triple_oracle() {
    unsigned tuples = 0, mismatches = 0;
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned a = 0; a <= n; ++a)
            for (unsigned b = 0; a + b <= n; ++b)
                for (unsigned c = 0; a + b + c <= n; ++c) {
                    unsigned d = n - a - b - c;
                    Rational integral = q_coefficient({a, b, c, d});
                    ++tuples;
                    if (integral != q_from_words({a, b, c, d})
                        || integral != q_explicit(a, b, c, d)
                        || !(integral > Rational(0)))
                        ++mismatches;
                }
    std::ostringstream os;
    os << tuples << " tuples, " << mismatches << " mismatches (exact)";
    return {mismatches == 0, os.str()};
}

// C2: row sums exactly 1, entries > 0, Q_S = F^T F exactly, S <= 20.
Outcome criterion_stochastic_psd() {
    Rational worst(0);
    for (unsigned S = 0; S <= 20; ++S) {
        SectorMatrix qs = assemble_QS(S);  // validates row sums and positivity
        for (unsigned a = 0; a <= S; ++a) {
            Rational row(0);
            for (unsigned c = 0; c <= S; ++c) row += qs.at(a, c);
            Rational dev = abs(row - Rational(1));
            if (dev > worst) worst = dev;
        }
        FFactorization f = f_factorization(S);
        if (f.defect > worst) worst = f.defect;
    }
    return {worst == Rational(0), "S <= 20, worst exact defect = " + worst.str()};
}

// C3: spectra in [0,1], top = 1 simple with all-ones eigenvector, S <= 12.
Outcome criterion_spectrum_contract() {
    const double tol = 1e-10;
    double worst = 0.0;
    bool ok = true;
    for (unsigned S = 0; S <= 12; ++S) {
        SymEig eig = sector_eigensystem(assemble_QS(S));
        worst = std::max(worst, std::fabs(eig.values.front() - 1.0));
        ok = ok && std::fabs(eig.values.front() - 1.0) <= tol;
        for (double v : eig.values) ok = ok && v >= -tol && v <= 1.0 + tol;
        if (S >= 1) ok = ok && eig.values[1] <= 1.0 - tol;  // multiplicity one
        const double expect = 1.0 / std::sqrt(static_cast<double>(S + 1));
        for (double comp : eig.vectors.front()) {
            worst = std::max(worst, std::fabs(std::fabs(comp) - expect));
            ok = ok && std::fabs(std::fabs(comp) - expect) <= tol;
        }
    }
    std::ostringstream os;
    os << "S <= 12, worst deviation " << worst << " (tol 1e-10)";
    return {ok, os.str()};
}

// C4: idempotency defect = 0 exactly for the mu = 1 configurations (S <= 6),
// nonzero for (2,1,3) and (2,1,4) at S = 2.
Outcome criterion_projection_dichotomy() {
    bool ok = true;
    Rational worst(0);
    for (auto [k, l, d] : {std::array<unsigned, 3>{3, 1, 1}, {2, 2, 1}, {2, 1, 2}})
        for (unsigned S = 0; S <= 6; ++S) {
            Rational defect = idempotency_defect(FrameParams(k, l, d), S);
            if (defect > worst) worst = defect;
            ok = ok && defect == Rational(0);
        }
    Rational d213 = idempotency_defect(FrameParams(2, 1, 3), 2);
    Rational d214 = idempotency_defect(FrameParams(2, 1, 4), 2);
    ok = ok && d213 > Rational(0) && d214 > Rational(0);
    std::ostringstream os;
    os << "mu=1 worst defect " << worst.str() << "; (2,1,3) S=2 defect " << d213.str()
       << ", (2,1,4) S=2 defect " << d214.str();
    return {ok, os.str()};
}

// C5: spectral norm vs pochhammer(mu, floor(S/2))/floor(S/2)!, 1e-8 relative,
// for mu = 3/2, 2, 3 (configurations (2,1,3), (3,1,2), (7,1,1)), S <= 8.
Outcome criterion_norm_law() {
    const double tol = 1e-8;
    double worst = 0.0;
    for (auto [k, l, d] : {std::array<unsigned, 3>{2, 1, 3}, {3, 1, 2}, {7, 1, 1}}) {
        FrameParams p(k, l, d);
        for (unsigned S = 0; S <= 8; ++S) {
            SectorNorm n = sector_norm(p, S);
            double predicted = n.predicted->to_double();
            worst = std::max(worst, std::fabs(n.numeric - predicted) / predicted);
        }
    }
    std::ostringstream os;
    os << "mu in {3/2, 2, 3}, S <= 8, worst rel err " << worst << " (tol 1e-8)";
    return {worst <= tol, os.str()};
}

// C6: kernel decomposition as an exact polynomial identity, S <= 5.
Outcome criterion_kernel_identity() {
    Rational worst(0);
    for (auto [k, l, d] : {std::array<unsigned, 3>{2, 1, 2}, {3, 1, 1}})
        for (unsigned S = 0; S <= 5; ++S) {
            Rational defect = ks_kernel_check(FrameParams(k, l, d), S);
            if (defect > worst) worst = defect;
        }
    return {worst == Rational(0),
            "(2,1,2) and (3,1,1), S <= 5, worst exact defect = " + worst.str()};
}

// C7: closed-form flows vs the Fourier-multiplier propagator, sup-norm 1e-6.
Outcome criterion_flow_identities() {
    const double tol = 1e-6;
    double worst_line = 0.0, worst_radial = 0.0;
    {
        LineGrid in{-8.0, 8.0, 1024};
        std::vector<std::vector<cplx>> fs;
        for (unsigned m = 0; m <= 5; ++m) {
            std::vector<cplx> f(in.n);
            for (std::size_t i = 0; i < in.n; ++i) f[i] = phi_value({m}, {in.point(i)});
            fs.push_back(std::move(f));
        }
        for (double t : {0.1, 1.0}) {
            double reach = 4.5 * std::sqrt(1.0 + 16.0 * detail::kPi * detail::kPi * t * t);
            LineGrid out{-reach, reach, 321};
            auto us = propagate_line_many(in, fs, t, out);
            for (unsigned m = 0; m <= 5; ++m)
                for (std::size_t i = 0; i < out.n; ++i)
                    worst_line = std::max(
                        worst_line, std::abs(us[m][i] - evolve_phi({m}, t, {out.point(i)})));
        }
    }
    {
        RadialGrid in{8.0, 2048};
        std::vector<std::vector<cplx>> fs;
        for (unsigned n = 0; n <= 5; ++n) {
            std::vector<cplx> f(in.n);
            for (std::size_t i = 0; i < in.n; ++i) f[i] = psi_value(n, in.point(i), 2);
            fs.push_back(std::move(f));
        }
        for (double t : {0.1, 1.0}) {
            double reach = 4.5 * std::sqrt(1.0 + 16.0 * detail::kPi * detail::kPi * t * t);
            std::vector<double> out;
            for (int i = 0; i <= 160; ++i) out.push_back(reach * i / 160.0);
            auto us = propagate_radial_many(in, fs, t, out);
            for (unsigned n = 0; n <= 5; ++n)
                for (std::size_t i = 0; i < out.size(); ++i)
                    worst_radial = std::max(worst_radial,
                                            std::abs(us[n][i] - evolve_psi(n, t, out[i], 2)));
        }
    }
    std::ostringstream os;
    os << "line sup " << worst_line << ", radial sup " << worst_radial << " (tol 1e-6)";
    return {worst_line <= tol && worst_radial <= tol, os.str()};
}

// C8: sharp Gaussian quotients and strict deficit for perturbed data.
Outcome criterion_sharp_quotient() {
    bool ok = true;
    std::ostringstream os;

    ModeExpansion psi0 = ModeExpansion::laguerre_psi(2, {cplx(1.0)});
    double quot42 = spacetime_norm_numeric(psi0, 4, 4) / std::pow(2.0, -0.5);
    ok = ok && std::fabs(quot42 - sharp_constant(4, 2)) <= 1e-6;
    os << "(4,4,2) quotient err " << std::fabs(quot42 - sharp_constant(4, 2));

    ModeExpansion phi0 = ModeExpansion::hermite_phi(1, {{{0}, cplx(1.0)}});
    double quot61 = spacetime_norm_numeric(phi0, 6, 6) / std::pow(2.0, -0.25);
    ok = ok && std::fabs(quot61 - sharp_constant(6, 1)) <= 1e-5;
    os << ", (6,6,1) err " << std::fabs(quot61 - sharp_constant(6, 1));

    ModeExpansion pert42 =
        ModeExpansion::hermite_phi(2, {{{0, 0}, cplx(1.0)}, {{2, 0}, cplx(0.3)}});
    double l2p = std::sqrt(std::pow(2.0, -1.0) * (1.0 + 0.09 * 2.0));
    double quot_pert = spacetime_norm_numeric(pert42, 4, 4) / l2p;
    double margin42 = sharp_constant(4, 2) - quot_pert;
    ok = ok && margin42 > 1e-3;

    ModeExpansion pert61 = ModeExpansion::hermite_phi(1, {{{0}, cplx(1.0)}, {{2}, cplx(0.3)}});
    double l2p61 = std::sqrt(std::pow(2.0, -0.5) * (1.0 + 0.09 * 2.0));
    double quot_pert61 = spacetime_norm_numeric(pert61, 6, 6) / l2p61;
    double margin61 = sharp_constant(6, 1) - quot_pert61;
    ok = ok && margin61 > 1e-3;
    os << "; perturbed margins " << margin42 << ", " << margin61 << " (> 1e-3)";
    return {ok, os.str()};
}

// C9: the two functionals agree to 1e-5 on random 3-mode data.
Outcome criterion_equivalence() {
    std::mt19937 rng(20250811);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double worst = 0.0;
    for (int rep = 0; rep < 2; ++rep) {
        ModeExpansion g42 = ModeExpansion::hermite_h(
            2, {{{0, 0}, cplx(coeff(rng), coeff(rng))},
                {{1, 1}, cplx(coeff(rng), coeff(rng))},
                {{2, 0}, cplx(coeff(rng), coeff(rng))}});
        worst = std::max(worst, std::fabs(equivalence_check_hermite(g42, 4, 4).ratio - 1.0));
        ModeExpansion g61 = ModeExpansion::hermite_h(
            1, {{{0}, cplx(coeff(rng), coeff(rng))},
                {{1}, cplx(coeff(rng), coeff(rng))},
                {{3}, cplx(coeff(rng), coeff(rng))}});
        worst = std::max(worst, std::fabs(equivalence_check_hermite(g61, 6, 6).ratio - 1.0));
    }
    std::ostringstream os;
    os << "(4,4,2) and (6,6,1), worst |ratio - 1| = " << worst << " (tol 1e-5)";
    return {worst <= 1e-5, os.str()};
}

// C10: Funk-Hecke spectrum at 1e-10 relative plus the exact 2/d gap.
Outcome criterion_funk_hecke() {
    double worst = 0.0;
    bool gap_ok = true;
    for (unsigned d : {3u, 4u, 5u}) {
        for (unsigned n = 0; n <= 10; ++n) {
            double closed = funk_hecke_eigenvalue_closed(n, d).rational_part.to_double()
                            * unit_sphere_area(d);
            worst = std::max(worst,
                             std::fabs(funk_hecke_eigenvalue_numeric(n, d) - closed)
                                 / std::fabs(closed));
        }
        const Rational bound(2, static_cast<long long>(d));
        for (unsigned n = 1; n <= 20; ++n) {
            Rational gap = Rational(1) - funk_hecke_eigenvalue_closed(n, d).rational_part;
            gap_ok = gap_ok && gap >= bound && (n == 1 ? gap == bound : gap > bound);
        }
    }
    std::ostringstream os;
    os << "n <= 10, d in {3,4,5}, worst rel err " << worst
       << " (tol 1e-10); gap 2/d exact at n=1: " << (gap_ok ? "yes" : "no");
    return {worst <= 1e-10 && gap_ok, os.str()};
}

// C11: weighted space-time equality for the radial Gaussian in d = 3.
Outcome criterion_weighted_equality() {
    SpacetimeCheckResult r = weighted_spacetime_gaussian_check(3, 1.0);
    double rel = std::fabs(r.lhs - r.rhs) / r.rhs;
    std::ostringstream os;
    os << "lhs " << r.lhs << " vs pi 2^{-3/2} = " << r.rhs << ", rel err " << rel
       << " (tol 1e-5)";
    return {rel <= 1e-5, os.str()};
}

// C12: Parseval bridge at 1e-10 on random 4-mode data, d = 1 and 2.
Outcome criterion_parseval() {
    std::mt19937 rng(424243);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double worst = 0.0;
    {
        ModeExpansion f = ModeExpansion::hermite_phi(
            1, {{{0}, cplx(coeff(rng), coeff(rng))},
                {{1}, cplx(coeff(rng), coeff(rng))},
                {{2}, cplx(coeff(rng), coeff(rng))},
                {{4}, cplx(coeff(rng), coeff(rng))}});
        ParsevalResult r = parseval_check(f);
        worst = std::max(worst, std::fabs(r.lhs - r.rhs) / r.rhs);
    }
    {
        ModeExpansion f = ModeExpansion::hermite_phi(
            2, {{{0, 0}, cplx(coeff(rng), coeff(rng))},
                {{1, 2}, cplx(coeff(rng), coeff(rng))},
                {{3, 0}, cplx(coeff(rng), coeff(rng))},
                {{2, 2}, cplx(coeff(rng), coeff(rng))}});
        ParsevalResult r = parseval_check(f);
        worst = std::max(worst, std::fabs(r.lhs - r.rhs) / r.rhs);
    }
    std::ostringstream os;
    os << "d in {1,2}, worst rel err " << worst << " (tol 1e-10)";
    return {worst <= 1e-10, os.str()};
}

}  // namespace

int main() {
    std::printf("acceptance battery, toolkit desk-scale checks\n");
    run_criterion("C01", "triple-oracle Q agreement", criterion_triple_oracle);
    run_criterion("C02", "doubly stochastic + PSD factorization", criterion_stochastic_psd);
    run_criterion("C03", "sector spectrum contract", criterion_spectrum_contract);
    run_criterion("C04", "projection dichotomy", criterion_projection_dichotomy);
    run_criterion("C05", "sector norm law", criterion_norm_law);
    run_criterion("C06", "kernel decomposition identity", criterion_kernel_identity);
    run_criterion("C07", "flow identities vs numeric propagator", criterion_flow_identities);
    run_criterion("C08", "sharp Gaussian quotients", criterion_sharp_quotient);
    run_criterion("C09", "functional equivalence", criterion_equivalence);
    run_criterion("C10", "Funk-Hecke spectrum and gap", criterion_funk_hecke);
    run_criterion("C11", "weighted space-time equality", criterion_weighted_equality);
    run_criterion("C12", "Parseval bridge", criterion_parseval);
    if (g_failures == 0)
        std::printf("all 12 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
