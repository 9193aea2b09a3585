/*
   Copyright 2026 The ghsi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file verify.hpp
 * @brief Check suites over one model: every exact identity, then the
 *        floating-point cross-checks.
 *
 * Each check reports {name, status, measured, tolerance}. Exact checks have
 * tolerance 0 and measure a count of nonzero residuals (or the offending
 * value); numeric checks measure the worst deviation.
 */

#ifndef GHSI_VERIFY_HPP
#define GHSI_VERIFY_HPP

#include "ghsi/algebra.hpp"
#include "ghsi/model.hpp"
#include "ghsi/numverify.hpp"
#include "ghsi/painleve4.hpp"
#include "ghsi/ppoly.hpp"
#include "ghsi/serialize.hpp"
#include "ghsi/sturm.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

namespace ghsi {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    default:
        return "skip";
    }
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    json measured;
    json tolerance;
};

inline json to_json(const CheckResult& c) {
    return {{"check", c.name}, {"status", to_string(c.status)}, {"measured", c.measured}, {"tolerance", c.tolerance}};
}

struct NumericTolerances {
    double eigenvalue = 5e-3;   ///< FD eigenvalues at N = 4000
    double gapMargin = 0.1;     ///< excluded from each end of the gap
    double orthogonality = 1e-9; ///< |G_ab| / sqrt(G_aa G_bb)
    double normRatio = 1e-7;    ///< relative, against exact relative norms
    double stateResidual = 1e-4; ///< eigenfunction_residual at N = 8000
};

namespace detail {

/// Exact check: `failures` counts nonzero residuals.
inline CheckResult exact(const std::string& name, long failures) {
    return {name, failures == 0 ? CheckStatus::Pass : CheckStatus::Fail, failures, 0};
}

inline CheckResult skip(const std::string& name, const std::string& why) { return {name, CheckStatus::Skip, why, 0}; }

/// Runs body; an exception is a failure carrying the message.
inline CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, CheckStatus::Fail, std::string("exception: ") + e.what(), 0};
    }
}

} // namespace detail

/// Exact identities for one model. `nmax` bounds the j = 2 levels examined.
inline std::vector<CheckResult> exact_suite(const ModelParams& mp, unsigned nmax = 4) {
    std::vector<CheckResult> out;
    const unsigned p = mp.p;
    const unsigned q = mp.q;

    out.push_back(detail::guarded("genhermite.cross_recurrence", [&] {
        long bad = 0;
        for (unsigned a = 1; a <= p + 2; ++a) {
            for (unsigned b = 1; b <= 2 * q + 2; ++b) {
                const QPoly h = gh(a, b);
                const QPoly d1 = derivative(h);
                const QPoly hh2 = h * derivative(h, 2);
                if (!(gh(a + 1, b) * gh(a - 1, b) * Rational(2 * a) == hh2 - d1 * d1 + h * h * Rational(2 * a))) {
                    ++bad;
                }
                if (!(gh(a, b + 1) * gh(a, b - 1) * Rational(2 * b) == d1 * d1 - hh2 + h * h * Rational(2 * b))) {
                    ++bad;
                }
            }
        }
        return detail::exact("genhermite.cross_recurrence", bad);
    }));

    out.push_back(detail::guarded("genhermite.wronskian", [&] {
        long bad = 0;
        for (unsigned b = 1; b <= 2 * q + 1; ++b) {
            bad += gh_via_wronskian(p + 1, b) == gh(p + 1, b) ? 0 : 1;
        }
        return detail::exact("genhermite.wronskian", bad);
    }));

    out.push_back(detail::guarded("genhermite.zero_counts", [&] {
        const auto z = zero_mode_polys(mp);
        long bad = 0;
        bad += real_zero_count(z.P01) == 0 ? 0 : 1;
        bad += real_zero_count(z.Pp1) == p ? 0 : 1;
        bad += real_zero_count(z.P02) == p + 1 ? 0 : 1;
        bad += real_zero_count(gh(p + 1, 2 * q)) == 0 ? 0 : 1;
        return detail::exact("genhermite.zero_counts", bad);
    }));

    out.push_back(detail::guarded("painleve4.regular_residual", [&] {
        const RationalFunction w = regular_w(p, q);
        if (w.is_zero()) {
            return detail::skip("painleve4.regular_residual", "w is identically zero for q = 0");
        }
        const auto r = piv_residual(w, {mp.alpha(), mp.beta()});
        return detail::exact("painleve4.regular_residual", r.is_zero() ? 0 : 1);
    }));

    out.push_back(detail::guarded("painleve4.forms_agree", [&] {
        long bad = 0;
        for (int f = 1; f <= 3; ++f) {
            for (unsigned a = 0; a <= p + 1; ++a) {
                for (unsigned b = 0; b <= 2 * q + 1; ++b) {
                    if ((f == 1 && b == 0) || (f == 2 && a == 0)) {
                        continue;
                    }
                    bad += make_w(f, a, b).w == make_w_ratio(f, a, b) ? 0 : 1;
                }
            }
        }
        return detail::exact("painleve4.forms_agree", bad);
    }));

    if (q >= 1) {
        out.push_back(detail::guarded("painleve4.backlund", [&] {
            long bad = 0;
            bad += backlund_minus(p, q).holds() ? 0 : 1;
            bad += backlund_plus(p, q).holds() ? 0 : 1;
            return detail::exact("painleve4.backlund", bad);
        }));
        out.push_back(detail::guarded("painleve4.factorization", [&] {
            const auto sp = superpotentials(p, q);
            const RationalFunction w = regular_w(p, q);
            long bad = 0;
            bad += (sp.W1.as_rf() + sp.W2.as_rf()) == -w ? 0 : 1;
            bad += (sp.W1.as_rf() * sp.W2.as_rf() + derivative(sp.W2.as_rf())) == compute_B(w, mp.d()) ? 0 : 1;
            bad += sp.W.as_rf() == -(RationalFunction::x() + w) ? 0 : 1;
            return detail::exact("painleve4.factorization", bad);
        }));
    } else {
        out.push_back(detail::skip("painleve4.backlund", "needs q >= 1"));
        out.push_back(detail::skip("painleve4.factorization", "needs q >= 1"));
    }

    out.push_back(detail::guarded("model.potential_regular", [&] {
        const auto v = potential(mp);
        return detail::exact("model.potential_regular", real_zero_count(v.rational.den()) == 0 ? 0 : 1);
    }));

    out.push_back(detail::guarded("model.ladder_cubic", [&] {
        long bad = 0;
        for (const auto& s : spectrum(mp, nmax)) {
            if (s.j == 1 && s.n > p) {
                continue;
            }
            if (!(ladder_csq(mp, s.j, s.n + 1) == ladder_cubic(mp, Rational(s.E)))) {
                ++bad;
            }
            if (!(s.j == 1 && s.n == p) && !(rel_normsq(mp, s.j, s.n + 1) == s.relNormSq * ladder_csq(mp, s.j, s.n + 1))) {
                ++bad;
            }
        }
        return detail::exact("model.ladder_cubic", bad);
    }));

    out.push_back(detail::guarded("model.gap", [&] {
        const long gap = eigenvalue(mp, 2, 0) - eigenvalue(mp, 1, p);
        return CheckResult{"model.gap", gap == 4 * static_cast<long>(q) + 2 ? CheckStatus::Pass : CheckStatus::Fail,
                           gap, 4 * static_cast<long>(q) + 2};
    }));

    if (q == 0) {
        for (const char* name : {"model.zero_modes", "ppoly.ode_residual", "ppoly.oracle", "ppoly.truncation",
                                 "ppoly.derivative_relations", "ppoly.indicial"}) {
            out.push_back(detail::skip(name, "P_{n;j} needs q >= 1"));
        }
    } else {
        out.push_back(detail::guarded("model.zero_modes", [&] {
            const auto z = zero_mode_polys(mp);
            long bad = 0;
            bad += hamiltonian_residual(mp, z.P01, -1, 0).is_zero() ? 0 : 1;
            bad += hamiltonian_residual(mp, z.Pp1, -1, eigenvalue(mp, 1, p)).is_zero() ? 0 : 1;
            bad += hamiltonian_residual(mp, z.P02, -1, eigenvalue(mp, 2, 0)).is_zero() ? 0 : 1;
            bad += apply_lowering(mp, z.P01).is_zero() ? 0 : 1;
            bad += apply_lowering(mp, z.P02).is_zero() ? 0 : 1;
            bad += apply_raising(mp, z.Pp1).is_zero() ? 0 : 1;
            const auto modes = nonnormalizable_modes(mp);
            for (const auto& m : modes) {
                bad += hamiltonian_residual(mp, m.poly, m.gaussianSign, m.E).is_zero() ? 0 : 1;
            }
            bad += apply_lowering(mp, modes[0].poly, 1).is_zero() ? 0 : 1;
            bad += apply_raising(mp, modes[1].poly, 1).is_zero() ? 0 : 1;
            bad += apply_raising(mp, modes[2].poly, 1).is_zero() ? 0 : 1;
            return detail::exact("model.zero_modes", bad);
        }));

        const auto levels = [&](int j) { return j == 1 ? p : nmax; };

        out.push_back(detail::guarded("ppoly.ode_residual", [&] {
            long bad = 0;
            for (int j = 1; j <= 2; ++j) {
                for (unsigned n = 0; n <= levels(j); ++n) {
                    bad += ode_residual(mp, j, n).is_zero() ? 0 : 1;
                }
            }
            return detail::exact("ppoly.ode_residual", bad);
        }));

        out.push_back(detail::guarded("ppoly.oracle", [&] {
            long bad = 0;
            for (int j = 1; j <= 2; ++j) {
                for (unsigned n = 0; n <= levels(j); ++n) {
                    bad += ppoly(mp, j, n + 1) == raise_oracle(mp, j, n) ? 0 : 1;
                }
            }
            return detail::exact("ppoly.oracle", bad);
        }));

        out.push_back(detail::guarded("ppoly.truncation", [&] {
            return detail::exact("ppoly.truncation",
                                 (ppoly(mp, 1, p + 1).is_zero() ? 0 : 1) + (raise_oracle(mp, 1, p).is_zero() ? 0 : 1));
        }));

        out.push_back(detail::guarded("ppoly.derivative_relations", [&] {
            long bad = 0;
            for (int j = 1; j <= 2; ++j) {
                for (unsigned n = 0; n <= levels(j); ++n) {
                    bad += derivative_relations(mp, j, n).holds() ? 0 : 1;
                }
            }
            return detail::exact("ppoly.derivative_relations", bad);
        }));

        out.push_back(detail::guarded("ppoly.indicial", [&] {
            long bad = 0;
            bad += indicial_check(mp, 1, p).pass() ? 0 : 1;
            bad += indicial_check(mp, 2, nmax).pass() ? 0 : 1;
            return detail::exact("ppoly.indicial", bad);
        }));
    }

    out.push_back(detail::guarded("algebra.solve_fg", [&] {
        const auto fg = solve_fg(mp);
        long bad = 0;
        bad += fg.f.c0 == -Rational(static_cast<long>(p)) / 2 ? 0 : 1;
        bad += fg.f.c1 == 0 ? 0 : 1;
        bad += fg.g.c0 == Rational(static_cast<long>(q)) + make_rational(1, 2) ? 0 : 1;
        bad += fg.g.c1 == 0 ? 0 : 1;
        return detail::exact("algebra.solve_fg", bad);
    }));

    out.push_back(detail::guarded("algebra.su2", [&] {
        const auto r = check_su2(mp);
        const long bad = static_cast<long>(r.residuals.size()) + (r.casimir == su2_casimir(mp) ? 0 : 1);
        return detail::exact("algebra.su2", bad);
    }));

    out.push_back(detail::guarded("algebra.su11", [&] {
        const auto r = check_su11(mp, 10);
        const long bad = static_cast<long>(r.residuals.size()) + (r.casimir == su11_casimir(mp) ? 0 : 1);
        return detail::exact("algebra.su11", bad);
    }));

    return out;
}

/// Floating-point checks. `jobs` > 1 spreads independent integrals over threads.
inline std::vector<CheckResult> numeric_suite(const ModelParams& mp, unsigned jobs = 1,
                                              const NumericTolerances& tol = {}) {
    std::vector<CheckResult> out;
    const unsigned p = mp.p;
    const unsigned q = mp.q;

    out.push_back(detail::guarded("numeric.fd_spectrum", [&] {
        FDSolverConfig cfg;
        cfg.eigCount = static_cast<int>(p) + 4;
        const auto ev = fd_spectrum(mp, cfg);
        std::vector<long> expected;
        for (unsigned n = 0; n <= p; ++n) {
            expected.push_back(eigenvalue(mp, 1, n));
        }
        for (unsigned n = 0; expected.size() < ev.size(); ++n) {
            expected.push_back(eigenvalue(mp, 2, n));
        }
        double worst = 0.0;
        for (std::size_t k = 0; k < ev.size(); ++k) {
            worst = std::max(worst, std::abs(ev[k] - static_cast<double>(expected[k])));
        }
        return CheckResult{"numeric.fd_spectrum", worst < tol.eigenvalue ? CheckStatus::Pass : CheckStatus::Fail,
                           worst, tol.eigenvalue};
    }));

    out.push_back(detail::guarded("numeric.fd_gap_empty", [&] {
        const double a = static_cast<double>(eigenvalue(mp, 1, p)) + tol.gapMargin;
        const double b = static_cast<double>(eigenvalue(mp, 2, 0)) - tol.gapMargin;
        const int inside = fd_count_in(mp, a, b);
        return CheckResult{"numeric.fd_gap_empty", inside == 0 ? CheckStatus::Pass : CheckStatus::Fail, inside, 0};
    }));

    if (q == 0) {
        out.push_back(detail::skip("numeric.gram", "P_{n;j} needs q >= 1"));
        out.push_back(detail::skip("numeric.state_residual", "P_{n;j} needs q >= 1"));
        return out;
    }

    std::vector<std::pair<int, unsigned>> basis;
    for (unsigned n = 0; n <= std::min(p, 4U); ++n) {
        basis.emplace_back(1, n);
    }
    for (unsigned n = 0; n <= 4; ++n) {
        basis.emplace_back(2, n);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t c = r; c < basis.size(); ++c) {
            pairs.emplace_back(r, c);
        }
    }
    // Warm the caches single-threaded so workers only read.
    for (const auto& [j, n] : basis) {
        (void)ppoly(mp, j, n);
    }

    out.push_back(detail::guarded("numeric.gram", [&] {
        const auto values = parallel_map(
            pairs,
            [&](const std::pair<std::size_t, std::size_t>& rc) {
                return inner_product(mp, basis[rc.first].first, basis[rc.first].second, basis[rc.second].first,
                                     basis[rc.second].second)
                    .value;
            },
            jobs);
        std::vector<std::vector<double>> g(basis.size(), std::vector<double>(basis.size()));
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            g[pairs[k].first][pairs[k].second] = values[k];
            g[pairs[k].second][pairs[k].first] = values[k];
        }
        double off = 0.0;
        double ratio_err = 0.0;
        for (std::size_t r = 0; r < basis.size(); ++r) {
            for (std::size_t c = 0; c < basis.size(); ++c) {
                if (r != c) {
                    off = std::max(off, std::abs(g[r][c]) / std::sqrt(g[r][r] * g[c][c]));
                }
            }
            const std::size_t r0 = basis[r].first == 1 ? 0 : std::min(p, 4U) + 1;
            const double exact_ratio = rel_normsq(mp, basis[r].first, basis[r].second).get_d();
            ratio_err = std::max(ratio_err, std::abs(g[r][r] / g[r0][r0] / exact_ratio - 1.0));
        }
        const bool ok = off < tol.orthogonality && ratio_err < tol.normRatio;
        return CheckResult{"numeric.gram", ok ? CheckStatus::Pass : CheckStatus::Fail,
                           json{{"offDiagonal", off}, {"normRatio", ratio_err}},
                           json{{"offDiagonal", tol.orthogonality}, {"normRatio", tol.normRatio}}};
    }));

    out.push_back(detail::guarded("numeric.state_residual", [&] {
        FDSolverConfig cfg;
        cfg.gridPoints = 8000;
        const auto values = parallel_map(
            basis, [&](const std::pair<int, unsigned>& jn) { return eigenfunction_residual(mp, jn.first, jn.second, cfg); },
            jobs);
        double worst = 0.0;
        for (double v : values) {
            worst = std::max(worst, v);
        }
        return CheckResult{"numeric.state_residual",
                           worst < tol.stateResidual ? CheckStatus::Pass : CheckStatus::Fail, worst,
                           tol.stateResidual};
    }));

    return out;
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) {
            return false;
        }
    }
    return true;
}

} // namespace ghsi

#endif // GHSI_VERIFY_HPP
