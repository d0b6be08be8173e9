#pragma once

// Subcommand implementations for the command-line tool: each suite builds a
// deterministic list of check tasks from the configuration, and the
// table-producing commands (qtable, words-check, funk-hecke) also emit their
// data payload in the configured format.
//
// Exit code contract: 0 all checks pass, 1 check failure, 2 config parse
// error (raised by the caller), 3 resource-cap violation.

#include "strichartz/hermite_frame.hpp"
#include "strichartz/laguerre_frame.hpp"
#include "strichartz/modes.hpp"
#include "strichartz/report.hpp"
#include "strichartz/schrodinger.hpp"
#include "strichartz/spherical.hpp"
#include "strichartz/words.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace strichartz::cli {

using Task = std::function<CheckRecord()>;

/// Polynomials serialize as JSON arrays of exact "num/den" strings, ascending
/// by power.
inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int j = 0; j <= p.degree(); ++j) arr.push_back(p.coeff(j).str());
    return arr;
}

inline Poly poly_from_json(const nlohmann::json& arr) {
    std::vector<Rational> coeffs;
    for (const auto& c : arr) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

inline CheckRecord make_exact_check(std::string id, std::string inputs, const Rational& expected,
                                    const Rational& actual) {
    CheckRecord r;
    r.id = std::move(id);
    r.inputs = std::move(inputs);
    r.expected = expected.str();
    r.actual = actual.str();
    r.exact = true;
    r.pass = expected == actual;
    return r;
}

inline CheckRecord make_float_check(std::string id, std::string inputs, double expected,
                                    double actual, double tol, bool relative = true) {
    CheckRecord r;
    r.id = std::move(id);
    r.inputs = std::move(inputs);
    r.expected = format_double(expected);
    r.actual = format_double(actual);
    r.tolerance = tol;
    double scale = relative ? std::max(1e-300, std::fabs(expected)) : 1.0;
    r.pass = std::fabs(actual - expected) <= tol * scale;
    return r;
}

inline CheckRecord make_bound_check(std::string id, std::string inputs, double value,
                                    double strict_below, double margin) {
    CheckRecord r;
    r.id = std::move(id);
    r.inputs = std::move(inputs);
    r.expected = "< " + format_double(strict_below - margin);
    r.actual = format_double(value);
    r.tolerance = margin;
    r.pass = value < strict_below - margin;
    return r;
}

// ---------------------------------------------------------------- qtable ---

inline std::vector<Task> suite_qtable(const RunConfig& cfg) {
    std::vector<Task> tasks;
    const unsigned top = std::min(cfg.max_s, cfg.laguerre_cap);
    for (unsigned S = 0; S <= top; ++S) {
        tasks.push_back([S, &cfg]() {
            // assemble_QS validates row sums and positivity internally
            SectorMatrix qs = assemble_QS(S, cfg.laguerre_cap);
            Rational worst(0);
            for (unsigned a = 0; a <= S; ++a) {
                Rational row(0);
                for (unsigned c = 0; c <= S; ++c) row += qs.at(a, c);
                Rational dev = abs(row - Rational(1));
                if (dev > worst) worst = dev;
            }
            return make_exact_check("qtable.rowsum.S=" + std::to_string(S),
                                    "S=" + std::to_string(S), Rational(0), worst);
        });
        tasks.push_back([S, &cfg]() {
            FFactorization f = f_factorization(S, cfg.laguerre_cap);
            return make_exact_check("qtable.psd.S=" + std::to_string(S),
                                    "S=" + std::to_string(S), Rational(0), f.defect);
        });
    }
    return tasks;
}

inline std::string qtable_payload(const RunConfig& cfg) {
    const unsigned top = std::min(cfg.max_s, cfg.laguerre_cap);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "S,a,c,value,value_decimal,row_sum\n";
        for (unsigned S = 0; S <= top; ++S) {
            SectorMatrix qs = assemble_QS(S, cfg.laguerre_cap);
            for (unsigned a = 0; a <= S; ++a) {
                Rational row(0);
                for (unsigned c = 0; c <= S; ++c) row += qs.at(a, c);
                for (unsigned c = 0; c <= S; ++c)
                    os << S << ',' << a << ',' << c << ',' << qs.at(a, c).str() << ','
                       << format_double(qs.at(a, c).to_double()) << ',' << row.str() << '\n';
            }
        }
        return os.str();
    }
    nlohmann::json sectors = nlohmann::json::array();
    for (unsigned S = 0; S <= top; ++S) {
        SectorMatrix qs = assemble_QS(S, cfg.laguerre_cap);
        nlohmann::json rows = nlohmann::json::array();
        nlohmann::json decimals = nlohmann::json::array();
        nlohmann::json sums = nlohmann::json::array();
        for (unsigned a = 0; a <= S; ++a) {
            nlohmann::json row = nlohmann::json::array();
            nlohmann::json drow = nlohmann::json::array();
            Rational sum(0);
            for (unsigned c = 0; c <= S; ++c) {
                row.push_back(qs.at(a, c).str());
                drow.push_back(qs.at(a, c).to_double());
                sum += qs.at(a, c);
            }
            rows.push_back(row);
            decimals.push_back(drow);
            sums.push_back(sum.str());
        }
        sectors.push_back(
            {{"S", S}, {"entries", rows}, {"entries_decimal", decimals}, {"row_sums", sums}});
    }
    return nlohmann::json{{"version", kToolkitVersion}, {"sectors", sectors}}.dump(2) + "\n";
}

/// Exact sector matrices P(M,N) with their M! weights, exported for the
/// mu = 1 configurations (JSON: "num/den" strings; CSV: 17-digit decimals
/// with an exactness flag).
inline std::string hermite_matrix_payload(const RunConfig& cfg) {
    const unsigned top = std::min(cfg.max_s, 4u);
    const std::array<std::array<unsigned, 3>, 3> configs = {
        {{3, 1, 1}, {2, 2, 1}, {2, 1, 2}}};
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "k,l,d,S,i,j,value,value_decimal,exact\n";
        for (auto [k, l, d] : configs) {
            FrameParams p(k, l, d);
            for (unsigned S = 0; S <= top; ++S) {
                ExactMatrix m = assemble_P(p, S, cfg.sector_cap);
                for (std::size_t i = 0; i < m.dim; ++i)
                    for (std::size_t j = 0; j < m.dim; ++j)
                        os << k << ',' << l << ',' << d << ',' << S << ',' << i << ',' << j
                           << ',' << m.at(i, j).str() << ','
                           << format_double(m.at(i, j).to_double()) << ",true\n";
            }
        }
        return os.str();
    }
    nlohmann::json out = nlohmann::json::array();
    for (auto [k, l, d] : configs) {
        FrameParams p(k, l, d);
        for (unsigned S = 0; S <= top; ++S) {
            ExactMatrix m = assemble_P(p, S, cfg.sector_cap);
            nlohmann::json rows = nlohmann::json::array();
            nlohmann::json weights = nlohmann::json::array();
            for (std::size_t i = 0; i < m.dim; ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (std::size_t j = 0; j < m.dim; ++j) row.push_back(m.at(i, j).str());
                rows.push_back(row);
                weights.push_back(m.weights[i].str());
            }
            out.push_back({{"k", k},
                           {"l", l},
                           {"d", d},
                           {"S", S},
                           {"entries", rows},
                           {"weights", weights}});
        }
    }
    return nlohmann::json{{"version", kToolkitVersion}, {"sectors", out}}.dump(2) + "\n";
}

// ----------------------------------------------------------- words-check ---

inline std::vector<Task> suite_words(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (unsigned n = 0; n <= cfg.max_n; ++n) {
        tasks.push_back([n, &cfg]() {
            unsigned mismatches = 0, count = 0;
            for (unsigned a = 0; a <= n; ++a)
                for (unsigned b = 0; a + b <= n; ++b)
                    for (unsigned c = 0; a + b + c <= n; ++c) {
                        unsigned d = n - a - b - c;
                        Rational integral = q_coefficient({a, b, c, d});
                        Rational words = q_from_words({a, b, c, d}, cfg.word_cap);
                        Rational closed = q_explicit(a, b, c, d);
                        ++count;
                        if (integral != words || integral != closed
                            || !(integral > Rational(0)))
                            ++mismatches;
                    }
            CheckRecord r;
            r.id = "words.triple.N=" + std::to_string(n);
            r.inputs = "tuples=" + std::to_string(count);
            r.expected = "0";
            r.actual = std::to_string(mismatches);
            r.exact = true;
            r.pass = mismatches == 0;
            return r;
        });
    }
    return tasks;
}

inline std::string words_payload(const RunConfig& cfg) {
    std::ostringstream csv;
    nlohmann::json grid = nlohmann::json::array();
    if (cfg.format == "csv") csv << "a,b,c,d,signed_count,q_value,matches_integral\n";
    for (unsigned n = 0; n <= cfg.max_n; ++n)
        for (unsigned a = 0; a <= n; ++a)
            for (unsigned b = 0; a + b <= n; ++b)
                for (unsigned c = 0; a + b + c <= n; ++c) {
                    unsigned d = n - a - b - c;
                    long long sc = signed_count({a, b, c, d}, cfg.word_cap);
                    Rational q = q_from_words({a, b, c, d}, cfg.word_cap);
                    bool match = q == q_coefficient({a, b, c, d});
                    if (cfg.format == "csv") {
                        csv << a << ',' << b << ',' << c << ',' << d << ',' << sc << ','
                            << q.str() << ',' << (match ? "true" : "false") << '\n';
                    } else {
                        grid.push_back({{"a", a},
                                        {"b", b},
                                        {"c", c},
                                        {"d", d},
                                        {"signed_count", sc},
                                        {"q_value", q.str()},
                                        {"matches_integral", match}});
                    }
                }
    if (cfg.format == "csv") return csv.str();
    return nlohmann::json{{"version", kToolkitVersion}, {"grid", grid}}.dump(2) + "\n";
}

// ---------------------------------------------------- hermite projection ---

inline std::vector<Task> suite_hermite_proj(const RunConfig& cfg) {
    std::vector<Task> tasks;
    const unsigned top = std::min(cfg.max_s, 6u);
    for (auto [k, l, d] : {std::array<unsigned, 3>{3, 1, 1}, {2, 2, 1}, {2, 1, 2}}) {
        for (unsigned S = 0; S <= top; ++S) {
            tasks.push_back([k = k, l = l, d = d, S, &cfg]() {
                std::ostringstream id, in;
                id << "hermite-proj.k" << k << "l" << l << "d" << d << ".S=" << S;
                in << "(k,l,d)=(" << k << "," << l << "," << d << ") S=" << S;
                Rational defect = idempotency_defect(FrameParams(k, l, d), S, cfg.sector_cap);
                return make_exact_check(id.str(), in.str(), Rational(0), defect);
            });
        }
    }
    for (auto [k, l, d] : {std::array<unsigned, 3>{2, 1, 3}, {2, 1, 4}}) {
        tasks.push_back([k = k, l = l, d = d, &cfg]() {
            std::ostringstream id, in;
            id << "hermite-proj.nonprojection.k" << k << "l" << l << "d" << d << ".S=2";
            in << "(k,l,d)=(" << k << "," << l << "," << d << ") S=2";
            Rational defect = idempotency_defect(FrameParams(k, l, d), 2, cfg.sector_cap);
            CheckRecord r;
            r.id = id.str();
            r.inputs = in.str();
            r.expected = "> 0";
            r.actual = defect.str();
            r.exact = true;
            r.pass = defect > Rational(0);
            return r;
        });
    }
    return tasks;
}

// ---------------------------------------------------------- hermite norm ---

inline std::vector<Task> suite_hermite_norm(const RunConfig& cfg) {
    std::vector<Task> tasks;
    const unsigned top = std::min(cfg.max_s, 8u);
    for (auto [k, l, d] : {std::array<unsigned, 3>{2, 1, 3}, {3, 1, 2}, {7, 1, 1}}) {
        for (unsigned S = 0; S <= top; ++S) {
            tasks.push_back([k = k, l = l, d = d, S, &cfg]() {
                FrameParams p(k, l, d);
                std::ostringstream id, in;
                id << "hermite-norm.k" << k << "l" << l << "d" << d << ".S=" << S;
                in << "(k,l,d)=(" << k << "," << l << "," << d << ") S=" << S
                   << " mu=" << p.mu().str();
                SectorNorm n = sector_norm(p, S, cfg.sector_cap);
                return make_float_check(id.str(), in.str(), n.predicted->to_double(),
                                        n.numeric, cfg.tol_norm);
            });
        }
    }
    return tasks;
}

// ------------------------------------------------------------- ks-check ----

inline std::vector<Task> suite_ks(const RunConfig& cfg) {
    std::vector<Task> tasks;
    const unsigned top = std::min(cfg.max_s, 5u);
    for (auto [k, l, d] : {std::array<unsigned, 3>{2, 1, 2}, {3, 1, 1}}) {
        for (unsigned S = 0; S <= top; ++S) {
            tasks.push_back([k = k, l = l, d = d, S, &cfg]() {
                std::ostringstream id, in;
                id << "ks-check.k" << k << "l" << l << "d" << d << ".S=" << S;
                in << "(k,l,d)=(" << k << "," << l << "," << d << ") S=" << S;
                Rational defect = ks_kernel_check(FrameParams(k, l, d), S, cfg.sector_cap);
                return make_exact_check(id.str(), in.str(), Rational(0), defect);
            });
        }
    }
    return tasks;
}

// ------------------------------------------------------------ flow-check ---

inline std::vector<Task> suite_flow(const RunConfig& cfg) {
    std::vector<Task> tasks;
    tasks.push_back([&cfg]() {
        LineGrid in{-8.0, 8.0, 1024};
        std::vector<unsigned> modes = {0, 1, 2, 3};
        std::vector<std::vector<Complex>> fs;
        for (unsigned m : modes) {
            std::vector<Complex> f(in.n);
            for (std::size_t i = 0; i < in.n; ++i) f[i] = phi_value({m}, {in.point(i)});
            fs.push_back(std::move(f));
        }
        double worst = 0.0;
        for (double t : {0.1, 1.0}) {
            double reach = 4.5 * std::sqrt(1.0 + 16.0 * detail::kPi * detail::kPi * t * t);
            LineGrid out{-reach, reach, 257};
            auto us = propagate_line_many(in, fs, t, out);
            for (std::size_t k = 0; k < modes.size(); ++k)
                for (std::size_t i = 0; i < out.n; ++i)
                    worst = std::max(worst, std::abs(us[k][i]
                                                     - evolve_phi({modes[k]}, t, {out.point(i)})));
        }
        return make_float_check("flow-check.line.d=1", "m<=3, t in {0.1,1}", 0.0, worst,
                                cfg.tol_flow, false);
    });
    tasks.push_back([&cfg]() {
        RadialGrid in{8.0, 2048};
        std::vector<unsigned> modes = {0, 1, 2, 3};
        std::vector<std::vector<Complex>> fs;
        for (unsigned n : modes) {
            std::vector<Complex> f(in.n);
            for (std::size_t i = 0; i < in.n; ++i) f[i] = psi_value(n, in.point(i), 2);
            fs.push_back(std::move(f));
        }
        double worst = 0.0;
        for (double t : {0.1, 1.0}) {
            double reach = 4.5 * std::sqrt(1.0 + 16.0 * detail::kPi * detail::kPi * t * t);
            std::vector<double> out;
            for (int i = 0; i <= 128; ++i) out.push_back(reach * i / 128.0);
            auto us = propagate_radial_many(in, fs, t, out);
            for (std::size_t k = 0; k < modes.size(); ++k)
                for (std::size_t i = 0; i < out.size(); ++i)
                    worst = std::max(worst,
                                     std::abs(us[k][i] - evolve_psi(modes[k], t, out[i], 2)));
        }
        return make_float_check("flow-check.radial.d=2", "n<=3, t in {0.1,1}", 0.0, worst,
                                cfg.tol_flow, false);
    });
    return tasks;
}

// ------------------------------------------------------------ strichartz ---

inline std::vector<Task> suite_strichartz(const RunConfig& cfg) {
    std::vector<Task> tasks;
    tasks.push_back([&cfg]() {
        ModeExpansion psi0 = ModeExpansion::laguerre_psi(2, {Complex(1.0)});
        double quot = spacetime_norm_numeric(psi0, 4, 4) / std::pow(2.0, -0.5);
        return make_float_check("strichartz.sharp.p4d2", "f=Psi_0, (p,q,d)=(4,4,2)",
                                sharp_constant(4, 2), quot, cfg.tol_sharp);
    });
    tasks.push_back([&cfg]() {
        ModeExpansion phi0 = ModeExpansion::hermite_phi(1, {{{0}, Complex(1.0)}});
        double quot = spacetime_norm_numeric(phi0, 6, 6) / std::pow(2.0, -0.25);
        return make_float_check("strichartz.sharp.p6d1", "f=Phi_0, (p,q,d)=(6,6,1)",
                                sharp_constant(6, 1), quot, std::max(cfg.tol_sharp, 1e-5));
    });
    tasks.push_back([&cfg]() {
        ModeExpansion f =
            ModeExpansion::hermite_phi(2, {{{0, 0}, Complex(1.0)}, {{2, 0}, Complex(0.3)}});
        double l2 = std::sqrt(std::pow(2.0, -1.0) * (1.0 + 0.09 * 2.0));
        double quot = spacetime_norm_numeric(f, 4, 4) / l2;
        return make_bound_check("strichartz.perturbed.p4d2", "f=Phi_0+0.3*Phi_(2,0)", quot,
                                sharp_constant(4, 2), 1e-3);
    });
    tasks.push_back([&cfg]() {
        ModeExpansion f = ModeExpansion::laguerre_psi(2, {Complex(1.0), Complex(0.0),
                                                          Complex(0.3)});
        double l2 = std::sqrt(std::pow(2.0, -1.0) * (1.0 + 0.09));
        double quot = spacetime_norm_numeric(f, 4, 4) / l2;
        return make_bound_check("strichartz.perturbed.radial", "f=Psi_0+0.3*Psi_2", quot,
                                sharp_constant(4, 2), 1e-3);
    });
    tasks.push_back([&cfg]() {
        double worst = 0.0;
        for (Complex B : {Complex(1.0), Complex(2.0), Complex(0.5), Complex(1.0, 0.5)})
            worst = std::max(worst, std::fabs(gaussian_strichartz_quotient(B, 4, 4, 2)
                                              - sharp_constant(4, 2)));
        return make_float_check("strichartz.maximizer-family.p4d2",
                                "B in {1,2,1/2,1+i/2}", 0.0, worst,
                                std::max(cfg.tol_sharp, 1e-5), false);
    });
    return tasks;
}

// ----------------------------------------------------------- equivalence ---

inline std::vector<Task> suite_equivalence(const RunConfig& cfg) {
    std::vector<Task> tasks;
    tasks.push_back([&cfg]() {
        ModeExpansion g = ModeExpansion::hermite_h(2, {{{0, 0}, Complex(0.9, -0.2)},
                                                       {{1, 1}, Complex(-0.4, 0.7)},
                                                       {{2, 0}, Complex(0.3, 0.5)}});
        EquivalenceResult r = equivalence_check_hermite(g, 4, 4);
        return make_float_check("equivalence.p4d2", "3-mode g, (p,q,d)=(4,4,2)", 1.0, r.ratio,
                                cfg.tol_equivalence);
    });
    tasks.push_back([&cfg]() {
        ModeExpansion g = ModeExpansion::hermite_h(1, {{{0}, Complex(0.8, 0.1)},
                                                       {{1}, Complex(0.5, -0.6)},
                                                       {{3}, Complex(-0.3, 0.4)}});
        EquivalenceResult r = equivalence_check_hermite(g, 6, 6);
        return make_float_check("equivalence.p6d1", "3-mode g, (p,q,d)=(6,6,1)", 1.0, r.ratio,
                                cfg.tol_equivalence);
    });
    tasks.push_back([&cfg]() {
        ModeExpansion f = ModeExpansion::hermite_phi(1, {{{0}, Complex(0.7, 0.2)},
                                                         {{1}, Complex(-0.5, 0.1)},
                                                         {{2}, Complex(0.4, -0.3)},
                                                         {{4}, Complex(0.2, 0.6)}});
        ParsevalResult r = parseval_check(f);
        return make_float_check("equivalence.parseval.d1", "4-mode f, d=1", r.rhs, r.lhs,
                                cfg.tol_parseval);
    });
    tasks.push_back([&cfg]() {
        ModeExpansion f = ModeExpansion::hermite_phi(2, {{{0, 0}, Complex(0.7, 0.2)},
                                                         {{1, 2}, Complex(-0.5, 0.1)},
                                                         {{3, 0}, Complex(0.4, -0.3)},
                                                         {{2, 2}, Complex(0.2, 0.6)}});
        ParsevalResult r = parseval_check(f);
        return make_float_check("equivalence.parseval.d2", "4-mode f, d=2", r.rhs, r.lhs,
                                cfg.tol_parseval);
    });
    return tasks;
}

// ------------------------------------------------------------ funk-hecke ---

inline std::vector<Task> suite_funk_hecke(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (unsigned d : {3u, 4u, 5u}) {
        tasks.push_back([d, &cfg]() {
            double worst = 0.0;
            for (unsigned n = 0; n <= 10; ++n) {
                double closed = funk_hecke_eigenvalue_closed(n, d).rational_part.to_double()
                                * unit_sphere_area(d);
                double numeric = funk_hecke_eigenvalue_numeric(n, d);
                worst = std::max(worst, std::fabs(numeric - closed) / std::fabs(closed));
            }
            return make_float_check("funk-hecke.spectrum.d=" + std::to_string(d), "n<=10",
                                    0.0, worst, cfg.tol_funk_hecke, false);
        });
        tasks.push_back([d]() {
            bool ok = true;
            const Rational bound(2, static_cast<long long>(d));
            for (unsigned n = 1; n <= 20; ++n) {
                Rational gap = Rational(1) - funk_hecke_eigenvalue_closed(n, d).rational_part;
                ok = ok && gap >= bound && (n != 1 || gap == bound) && (n == 1 || gap > bound);
            }
            CheckRecord r;
            r.id = "funk-hecke.gap.d=" + std::to_string(d);
            r.inputs = "n<=20";
            r.expected = "gap >= 2/d, equality exactly at n=1";
            r.actual = ok ? "holds" : "violated";
            r.exact = true;
            r.pass = ok;
            return r;
        });
    }
    return tasks;
}

inline std::string funk_hecke_payload(const RunConfig& cfg) {
    std::ostringstream csv;
    nlohmann::json rows = nlohmann::json::array();
    if (cfg.format == "csv") csv << "d,n,closed_fraction,closed_value,numeric,rel_err\n";
    for (unsigned d : {3u, 4u, 5u})
        for (unsigned n = 0; n <= 10; ++n) {
            Rational frac = funk_hecke_eigenvalue_closed(n, d).rational_part;
            double closed = frac.to_double() * unit_sphere_area(d);
            double numeric = funk_hecke_eigenvalue_numeric(n, d);
            double rel = std::fabs(numeric - closed) / std::fabs(closed);
            if (cfg.format == "csv") {
                csv << d << ',' << n << ',' << frac.str() << ',' << format_double(closed) << ','
                    << format_double(numeric) << ',' << format_double(rel) << '\n';
            } else {
                rows.push_back({{"d", d},
                                {"n", n},
                                {"closed_fraction", frac.str()},
                                {"closed_value", closed},
                                {"numeric", numeric},
                                {"rel_err", rel}});
            }
        }
    if (cfg.format == "csv") return csv.str();
    return nlohmann::json{{"version", kToolkitVersion}, {"spectrum", rows}}.dump(2) + "\n";
}

// -------------------------------------------------------------- weighted ---

inline std::vector<Task> suite_weighted(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (double B : {1.0, 2.0}) {
        tasks.push_back([B, &cfg]() {
            SpacetimeCheckResult r = weighted_spacetime_gaussian_check(3, B);
            return make_float_check("weighted.gaussian.B=" + format_double(B), "d=3", r.rhs,
                                    r.lhs, cfg.tol_weighted);
        });
    }
    tasks.push_back([&cfg]() {
        SpacetimeCheckResult r = weighted_spacetime_perturbed_check(0.3);
        return make_float_check("weighted.perturbed.eps=0.3", "d=3", r.rhs, r.lhs,
                                std::max(cfg.tol_weighted, 1e-4));
    });
    tasks.push_back([&cfg]() {
        WeightedFormResult c = weighted_form({3, {Complex(1.0)}});
        return make_float_check("weighted.form.constant", "g=const, d=3", c.bound, c.form,
                                1e-12);
    });
    tasks.push_back([&cfg]() {
        WeightedFormResult y1 = weighted_form({3, {Complex(0.0), Complex(1.0)}});
        return make_float_check("weighted.form.degree1", "g=Y_1, d=3", y1.bound, y1.form,
                                1e-12);
    });
    tasks.push_back([]() {
        WeightedFormResult y2 = weighted_form({3, {Complex(0.0), Complex(0.0), Complex(1.0)}});
        return make_bound_check("weighted.form.degree2", "g=Y_2, d=3", y2.form, y2.bound,
                                1e-6 * y2.bound);
    });
    return tasks;
}

// ------------------------------------------------------------- dispatch ----

inline std::vector<Task> tasks_for(const std::string& suite, const RunConfig& cfg) {
    if (suite == "qtable") return suite_qtable(cfg);
    if (suite == "words-check") return suite_words(cfg);
    if (suite == "hermite-proj") return suite_hermite_proj(cfg);
    if (suite == "hermite-norm") return suite_hermite_norm(cfg);
    if (suite == "ks-check") return suite_ks(cfg);
    if (suite == "flow-check") return suite_flow(cfg);
    if (suite == "strichartz") return suite_strichartz(cfg);
    if (suite == "equivalence") return suite_equivalence(cfg);
    if (suite == "funk-hecke") return suite_funk_hecke(cfg);
    if (suite == "weighted") return suite_weighted(cfg);
    throw ConfigError("unknown suite: " + suite);
}

inline const std::vector<std::string>& default_suite_order() {
    static const std::vector<std::string> names = {
        "qtable",       "words-check", "hermite-proj", "hermite-norm", "ks-check",
        "flow-check",   "strichartz",  "equivalence",  "funk-hecke",   "weighted"};
    return names;
}

/// Executes one subcommand.  Payload/report goes to `out`, a one-line status
/// per check to `diag`.  Returns the exit code.
inline int run_subcommand(const std::string& name, const RunConfig& cfg, std::ostream& out,
                          std::ostream& diag) {
    try {
        cfg.validate();
        std::vector<std::string> suites;
        if (name == "report-all")
            suites = cfg.suites.empty() ? default_suite_order() : cfg.suites;
        else
            suites = {name};

        std::vector<Task> tasks;
        for (const auto& s : suites) {
            auto t = tasks_for(s, cfg);
            tasks.insert(tasks.end(), std::make_move_iterator(t.begin()),
                         std::make_move_iterator(t.end()));
        }
        Report report;
        report.config_echo = cfg.to_json();
        report.checks = run_checks(tasks, cfg.jobs);
        std::sort(report.checks.begin(), report.checks.end(),
                  [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });

        for (const auto& c : report.checks)
            diag << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " expected=" << c.expected
                 << " actual=" << c.actual << "\n";

        if (name == "qtable")
            out << qtable_payload(cfg);
        else if (name == "words-check")
            out << words_payload(cfg);
        else if (name == "funk-hecke")
            out << funk_hecke_payload(cfg);
        else if (name == "hermite-proj")
            out << hermite_matrix_payload(cfg);
        else if (cfg.format == "csv")
            out << report.to_csv();
        else
            out << report.to_json().dump(2) << "\n";

        return report.all_pass() ? 0 : 1;
    } catch (const SectorCapExceeded& e) {
        diag << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const EnumerationCapExceeded& e) {
        diag << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        diag << "config error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace strichartz::cli
