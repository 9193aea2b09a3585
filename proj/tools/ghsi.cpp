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
 * @file ghsi.cpp
 * @brief Command-line front end: gh, piv, model, ppoly, algebra, verify,
 *        sample, demo.
 *
 * Exit codes: 0 success, 1 a verification failed, 2 usage error. All output
 * is deterministic; JSON keys are sorted and doubles are printed round-trip.
 */

#include "ghsi/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>

namespace {

using namespace ghsi;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Thrown for argument combinations CLI11 cannot reject on its own.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> grid(double xmin, double xmax, int samples) {
    if (samples < 2 || !(xmax > xmin)) {
        throw UsageError("grid needs samples >= 2 and xmax > xmin");
    }
    std::vector<double> xs(samples);
    for (int i = 0; i < samples; ++i) {
        xs[i] = xmin + (xmax - xmin) * i / (samples - 1);
    }
    return xs;
}

// ---------------------------------------------------------------------------

struct GhOpts {
    unsigned p = 0;
    unsigned q = 0;
    bool asJson = false;
    bool asLatex = false;
    bool table = false;
    unsigned pmax = 3;
    unsigned qmax = 4;
};

int run_gh(const GhOpts& o) {
    if (o.table) {
        json rows = json::array();
        for (unsigned q = 1; q <= o.qmax; ++q) {
            for (unsigned p = 1; p <= o.pmax; ++p) {
                rows.push_back({{"p", p}, {"q", q}, {"coefficients", to_json(gh(p, q))}});
            }
        }
        print_json(rows);
        return kExitOk;
    }
    const QPoly h = gh(o.p, o.q);
    if (o.asJson) {
        print_json({{"p", o.p}, {"q", o.q}, {"coefficients", to_json(h)}});
    } else if (o.asLatex) {
        std::cout << to_latex(h) << "\n";
    } else {
        std::cout << to_string(h) << "\n";
    }
    return kExitOk;
}

struct PivOpts {
    int family = 1;
    unsigned p = 0;
    unsigned q = 0;
    bool check = false;
};

int run_piv(const PivOpts& o) {
    const PIVSolution s = make_w(o.family, o.p, o.q);
    json out{{"family", o.family},
             {"p", o.p},
             {"q", o.q},
             {"alpha", to_json(s.params.alpha)},
             {"beta", to_json(s.params.beta)},
             {"logDerivativeForm", to_json(s.w)}};
    bool ok = true;
    try {
        const RationalFunction r = make_w_ratio(o.family, o.p, o.q);
        out["ratioForm"] = to_json(r);
        out["formsAgree"] = r == s.w;
        ok = ok && r == s.w;
    } catch (const std::invalid_argument&) {
        out["ratioForm"] = nullptr; // the ratio form needs a nonzero index
        out["formsAgree"] = nullptr;
    }
    const RationalFunction res = piv_residual(s.w, s.params);
    out["residualZero"] = res.is_zero();
    ok = ok && res.is_zero();
    if (!res.is_zero()) {
        out["residual"] = to_json(res);
    }
    print_json(out);
    return o.check && !ok ? kExitFail : kExitOk;
}

struct ModelOpts {
    unsigned p = 0;
    unsigned q = 0;
    double xmin = -8.0;
    double xmax = 8.0;
    int samples = 1601;
    unsigned nmax = 4;
};

json spectrum_json(const ModelParams& mp, unsigned nmax) {
    json rows = json::array();
    for (const auto& s : spectrum(mp, nmax)) {
        rows.push_back({{"j", s.j},
                        {"n", s.n},
                        {"E", s.E},
                        {"csq", to_json(s.csq)},
                        {"relNormSq", to_json(s.relNormSq)}});
    }
    return rows;
}

int run_model(const ModelOpts& o) {
    const ModelParams mp(o.p, o.q);
    const Potential v = potential(mp);
    const WeightFunction mu = weight(mp);
    json samples = json::array();
    for (double x : grid(o.xmin, o.xmax, o.samples)) {
        samples.push_back({x, v(x)});
    }
    json out;
    out["params"] = {{"p", mp.p},
                     {"q", mp.q},
                     {"alpha", to_json(mp.alpha())},
                     {"beta", to_json(mp.beta())},
                     {"gamma", to_json(mp.gamma())},
                     {"d", to_json(mp.d())},
                     {"eps1", to_json(mp.eps1())},
                     {"eps2", to_json(mp.eps2())}};
    out["potential"] = {{"quadratic", to_json(v.quadratic)}, {"rational", to_json(v.rational)}, {"samples", samples}};
    out["weight"] = {{"gaussian", "exp(-x^2/2)"}, {"rational", to_json(mu.rationalPart)}};
    const json levels = spectrum_json(mp, o.nmax);
    out["spectrum"] = levels;
    json csq = json::array();
    json norms = json::array();
    for (const auto& row : levels) {
        csq.push_back({{"j", row["j"]}, {"n", row["n"]}, {"csq", row["csq"]}});
        norms.push_back({{"j", row["j"]}, {"n", row["n"]}, {"relNormSq", row["relNormSq"]}});
    }
    out["csqTable"] = csq;
    out["relativeNorms"] = norms;
    out["ladderCubicRoots"] = {-2, to_json(mp.eps1()), to_json(mp.eps2())};
    print_json(out);
    return kExitOk;
}

struct PPolyOpts {
    unsigned p = 0;
    unsigned q = 1;
    int j = 1;
    unsigned nmax = 3;
    bool verify = false;
};

/// The operator-route polynomial for level n: the seed at n = 0, otherwise the
/// raising operator applied to level n-1 (zero past the j = 1 truncation).
QPoly oracle_level(const ModelParams& mp, int j, unsigned n) {
    if (n == 0) {
        return ppoly_seed(mp, j);
    }
    if (j == 1 && n > mp.p + 1) {
        return {};
    }
    return raise_oracle(mp, j, n - 1);
}

int run_ppoly(const PPolyOpts& o) {
    const ModelParams mp(o.p, o.q);
    check_sequence(o.j);
    detail::check_ppoly_args(mp, o.j);
    json rows = json::array();
    bool ok = true;
    for (unsigned n = 0; n <= o.nmax; ++n) {
        const QPoly P = ppoly(mp, o.j, n);
        const bool odeZero = P.is_zero() || ode_residual(mp, o.j, n).is_zero();
        const bool oracle = oracle_level(mp, o.j, n) == P;
        ok = ok && odeZero && oracle;
        rows.push_back({{"n", n},
                        {"E", P.is_zero() ? json(nullptr) : json(eigenvalue(mp, o.j, n))},
                        {"coefficients", to_json(P)},
                        {"odeResidualZero", odeZero},
                        {"oracleMatch", oracle}});
    }
    print_json(rows);
    return o.verify && !ok ? kExitFail : kExitOk;
}

struct AlgebraOpts {
    unsigned p = 0;
    unsigned q = 0;
    std::size_t dim = 10;
};

json ladder_json(const DeformedLadder& l) {
    json values = json::array();
    for (const auto& [E, v] : l.fsqAt) {
        values.push_back({{"E", E}, {"squared", to_json(v)}});
    }
    return {{"kind", to_string(l.kind)}, {"c0", to_json(l.c0)}, {"c1", to_json(l.c1)}, {"values", values}};
}

json report_json(const AlgebraReport& r, const Rational& expected) {
    json residuals = json::array();
    for (const auto& e : r.residuals) {
        residuals.push_back({{"identity", e.identity}, {"row", e.row}, {"col", e.col}, {"value", e.value}});
    }
    const bool pass = r.pass && r.casimir == expected;
    return {{"kind", to_string(r.kind)},
            {"dim", r.dim},
            {"status", pass ? "pass" : "fail"},
            {"casimir", to_json(r.casimir)},
            {"casimirScalar", r.casimirScalar},
            {"residuals", residuals}};
}

int run_algebra(const AlgebraOpts& o) {
    const ModelParams mp(o.p, o.q);
    const FGSolution fg = solve_fg(mp, static_cast<unsigned>(o.dim));
    const AlgebraReport su2 = check_su2(mp);
    const AlgebraReport su11 = check_su11(mp, o.dim);
    json out;
    out["fgTable"] = {{"f", ladder_json(fg.f)}, {"g", ladder_json(fg.g)}};
    out["su2"] = report_json(su2, su2_casimir(mp));
    out["su11"] = report_json(su11, su11_casimir(mp));
    out["casimirs"] = {{"su2", to_json(su2_casimir(mp))}, {"su11", to_json(su11_casimir(mp))}};
    print_json(out);
    const bool ok = out["su2"]["status"] == "pass" && out["su11"]["status"] == "pass";
    return ok ? kExitOk : kExitFail;
}

struct VerifyOpts {
    unsigned p = 0;
    unsigned q = 0;
    std::string suite = "all";
    unsigned jobs = 1;
};

int run_verify(const VerifyOpts& o) {
    const ModelParams mp(o.p, o.q);
    std::vector<CheckResult> checks;
    if (o.suite == "exact" || o.suite == "all") {
        checks = exact_suite(mp);
    }
    if (o.suite == "numeric" || o.suite == "all") {
        const auto num = numeric_suite(mp, o.jobs);
        checks.insert(checks.end(), num.begin(), num.end());
    }
    json rows = json::array();
    for (const auto& c : checks) {
        rows.push_back(to_json(c));
    }
    print_json({{"p", o.p}, {"q", o.q}, {"suite", o.suite}, {"pass", all_pass(checks)}, {"checks", rows}});
    return all_pass(checks) ? kExitOk : kExitFail;
}

struct SampleOpts {
    unsigned p = 0;
    unsigned q = 0;
    std::string what = "potential";
    double xmin = -8.0;
    double xmax = 8.0;
    int samples = 1601;
};

int run_sample(const SampleOpts& o) {
    const ModelParams mp(o.p, o.q);
    const auto xs = grid(o.xmin, o.xmax, o.samples);
    std::function<double(double)> f;
    std::string column;
    std::smatch m;
    static const std::regex state_re(R"(state:([0-9]+),([0-9]+))");
    if (o.what == "potential") {
        f = potential(mp);
        column = "V";
    } else if (o.what == "weight") {
        f = weight(mp);
        column = "mu";
    } else if (std::regex_match(o.what, m, state_re)) {
        const int j = std::stoi(m[1]);
        const unsigned n = static_cast<unsigned>(std::stoul(m[2]));
        check_sequence(j);
        detail::check_ppoly_args(mp, j);
        const QPoly P = ppoly(mp, j, n);
        const QPoly h = gh(mp.p + 1, 2 * mp.q);
        f = [P, h](double x) { return std::exp(-0.5 * x * x) * eval_double(P, x) / eval_double(h, x); };
        column = "phi";
    } else {
        throw UsageError("--what must be potential, weight or state:j,n");
    }
    std::cout << "x," << column << "\n";
    for (double x : xs) {
        std::cout << fmt_double(x) << "," << fmt_double(f(x)) << "\n";
    }
    return kExitOk;
}

int run_demo(const std::string& what, const std::string& outDir) {
    if (what != "tables") {
        throw UsageError("demo supports: tables");
    }
    std::filesystem::create_directories(outDir);
    const std::vector<std::pair<std::string, json>> files = {
        {"table1.json", table1_json()}, {"table2.json", ptable_json(1)}, {"table3.json", ptable_json(2)}};
    for (const auto& [name, body] : files) {
        const auto path = std::filesystem::path(outDir) / name;
        std::ofstream os(path, std::ios::binary);
        os << body.dump(2) << "\n";
        if (!os) {
            throw std::runtime_error("cannot write " + path.string());
        }
        std::cout << path.string() << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Hermite polynomials, Painleve IV rational solutions and the associated "
                 "exactly solvable Hamiltonian"};
    app.require_subcommand(1);

    GhOpts gho;
    auto* ghc = app.add_subcommand("gh", "Generalized Hermite polynomial H_{p,q}");
    ghc->add_option("--p", gho.p, "index p >= 0");
    ghc->add_option("--q", gho.q, "index q >= 0");
    auto* ghJson = ghc->add_flag("--json", gho.asJson, "coefficient array output");
    ghc->add_flag("--latex", gho.asLatex, "LaTeX output")->excludes(ghJson);
    ghc->add_flag("--table", gho.table, "grid p = 1..pmax, q = 1..qmax as JSON");
    ghc->add_option("--pmax", gho.pmax, "table width")->capture_default_str();
    ghc->add_option("--qmax", gho.qmax, "table height")->capture_default_str();

    PivOpts pivo;
    auto* pivc = app.add_subcommand("piv", "Rational solution of Painleve IV");
    pivc->add_option("--family", pivo.family, "family 1, 2 or 3")->required()->check(CLI::Range(1, 3));
    pivc->add_option("--p", pivo.p)->required();
    pivc->add_option("--q", pivo.q)->required();
    pivc->add_flag("--check", pivo.check, "exit 1 unless the residual vanishes and the forms agree");

    ModelOpts mo;
    auto* mc = app.add_subcommand("model", "Potential, spectrum and ladder data");
    mc->add_option("--p", mo.p)->required();
    mc->add_option("--q", mo.q)->required();
    mc->add_option("--xmin", mo.xmin)->capture_default_str();
    mc->add_option("--xmax", mo.xmax)->capture_default_str();
    mc->add_option("--samples", mo.samples)->capture_default_str();
    mc->add_option("--nmax", mo.nmax, "highest j = 2 level listed")->capture_default_str();

    PPolyOpts po;
    auto* pc = app.add_subcommand("ppoly", "Eigenfunction polynomials P_{n;j}");
    pc->add_option("--p", po.p)->required();
    pc->add_option("--q", po.q)->required()->check(CLI::PositiveNumber);
    pc->add_option("--j", po.j)->required()->check(CLI::Range(1, 2));
    pc->add_option("--nmax", po.nmax)->required();
    pc->add_flag("--verify", po.verify, "exit 1 unless every row checks out");

    AlgebraOpts ao;
    auto* ac = app.add_subcommand("algebra", "Deformed ladder algebras su(2) and su(1,1)");
    ac->add_option("--p", ao.p)->required();
    ac->add_option("--q", ao.q)->required();
    ac->add_option("--dim", ao.dim, "su(1,1) truncation dimension")->capture_default_str()->check(CLI::Range(2, 200));

    VerifyOpts vo;
    auto* vc = app.add_subcommand("verify", "Run the exact and numeric check suites");
    vc->add_option("--p", vo.p)->required();
    vc->add_option("--q", vo.q)->required();
    vc->add_option("--suite", vo.suite)->capture_default_str()->check(CLI::IsMember({"exact", "numeric", "all"}));
    vc->add_option("--jobs", vo.jobs, "worker threads for integrals")->capture_default_str()->check(CLI::Range(1, 256));

    SampleOpts so;
    auto* sc = app.add_subcommand("sample", "CSV samples for plotting");
    sc->add_option("--p", so.p)->required();
    sc->add_option("--q", so.q)->required();
    sc->add_option("--what", so.what, "potential | weight | state:j,n")->capture_default_str();
    sc->add_option("--xmin", so.xmin)->capture_default_str();
    sc->add_option("--xmax", so.xmax)->capture_default_str();
    sc->add_option("--samples", so.samples)->capture_default_str();

    std::string demoWhat;
    std::string demoOut = ".";
    auto* dc = app.add_subcommand("demo", "Regenerate the reference tables");
    dc->add_option("what", demoWhat, "tables")->required();
    dc->add_option("--out", demoOut, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*ghc) {
            return run_gh(gho);
        }
        if (*pivc) {
            return run_piv(pivo);
        }
        if (*mc) {
            return run_model(mo);
        }
        if (*pc) {
            return run_ppoly(po);
        }
        if (*ac) {
            return run_algebra(ao);
        }
        if (*vc) {
            return run_verify(vo);
        }
        if (*sc) {
            return run_sample(so);
        }
        if (*dc) {
            return run_demo(demoWhat, demoOut);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OutOfSequence& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionMismatch& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
