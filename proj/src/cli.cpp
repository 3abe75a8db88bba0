#include "monogen/cli.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include "monogen/io.hpp"

namespace monogen::cli {

using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

class InputError : public std::runtime_error {
public:
    explicit InputError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

json load_role(const RunManifest& man, const std::string& role) {
    auto it = man.inputs.find(role);
    if (it == man.inputs.end()) throw InputError("missing required input --" + role);
    const std::string& v = it->second;
    if (!v.empty() && (v.front() == '[' || v.front() == '{')) {
        try {
            return json::parse(v);
        } catch (const json::parse_error& e) {
            throw io::ParseError("--" + role, "", e.what());
        }
    }
    return io::load_json_file(v);
}

bool has_role(const RunManifest& man, const std::string& role) {
    return man.inputs.count(role) > 0;
}

std::string role_name(const RunManifest& man, const std::string& role) {
    auto it = man.inputs.find(role);
    return it == man.inputs.end() ? "--" + role : it->second;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }
    cplx box(double r) { return {uniform(-r, r), uniform(-r, r)}; }
    cplx annulus(double lo, double hi) {
        for (;;) {
            cplx c = box(hi);
            double a = std::abs(c);
            if (a >= lo && a <= hi) return c;
        }
    }
    std::mt19937_64 eng;
};

AlgebraElement random_invertible(Rng& rng, const Algebra& alg) {
    AlgebraElement b(alg.n());
    for (int u = 1; u <= alg.m(); ++u) b.coeff(u) = rng.annulus(0.5, 1.8);
    for (int s = alg.m() + 1; s <= alg.n(); ++s) b.coeff(s) = rng.box(1.2);
    return b;
}

std::vector<double> random_point(Rng& rng, int k, double r = 1.0) {
    std::vector<double> x(static_cast<std::size_t>(k));
    for (double& v : x) v = rng.uniform(-r, r);
    return x;
}

// Points whose spectral coordinates stay pairwise separated, so contours and
// pole-sensitive checks are well posed.
std::vector<double> separated_point(Rng& rng, const VariableFrame& frame, double gap = 0.2) {
    for (int tries = 0; tries < 200; ++tries) {
        std::vector<double> x = random_point(rng, frame.k());
        bool ok = true;
        for (int u = 1; u <= frame.m() && ok; ++u)
            for (int v = u + 1; v <= frame.m() && ok; ++v)
                if (std::abs(frame.xi(u, x) - frame.xi(v, x)) < gap) ok = false;
        if (ok) return x;
    }
    throw std::runtime_error("could not sample a separated point");
}

double identity_residual(const Algebra& alg, const AlgebraElement& a, const AlgebraElement& b) {
    double scale_ab = std::max(1.0, inf_norm(a) * inf_norm(b));
    return inf_norm(sub(alg.mul(a, b), alg.unit())) / scale_ab;
}

json selftest_report(std::uint64_t seed, bool& all_pass);

int cmd_validate(const RunManifest& man, std::ostream& out) {
    Algebra alg = io::parse_algebra(load_role(man, "algebra"), role_name(man, "algebra"));
    ValidationReport rep = validate_algebra(alg, man.tol_zero);
    emit(out, io::validation_json(rep));
    return rep.valid() ? kExitOk : kExitCheckFailed;
}

int cmd_invert(const RunManifest& man, std::ostream& out) {
    Algebra alg = io::parse_algebra(load_role(man, "algebra"), role_name(man, "algebra"));
    AlgebraElement b =
        io::parse_element(load_role(man, "element"), alg.n(), role_name(man, "element"));
    AlgebraElement inv = invert(alg, b, man.tol_zero);
    json rep = io::element_json(inv);
    rep["check_residual"] = identity_residual(alg, b, inv);
    emit(out, rep);
    return kExitOk;
}

struct FramePack {
    Algebra alg;
    VariableFrame frame;
};

FramePack load_frame_pack(const RunManifest& man) {
    Algebra alg = io::parse_algebra(load_role(man, "algebra"), role_name(man, "algebra"));
    VariableFrame frame =
        io::parse_frame(load_role(man, "frame"), alg, role_name(man, "frame"));
    return FramePack{std::move(alg), std::move(frame)};
}

int cmd_resolvent(const RunManifest& man, std::ostream& out) {
    FramePack fp = load_frame_pack(man);
    if (!man.t) throw InputError("resolvent needs --t");
    std::vector<double> x = io::parse_point(load_role(man, "point"), role_name(man, "point"));
    AlgebraElement r = resolvent(fp.alg, fp.frame, x, *man.t, man.tol_zero);
    json rep = io::element_json(r);
    rep["t"] = io::complex_json(*man.t);
    AlgebraElement shifted = sub(scale(*man.t, fp.alg.unit()), fp.frame.zeta(x));
    rep["check_residual"] = identity_residual(fp.alg, shifted, r);
    emit(out, rep);
    return kExitOk;
}

struct FnPack {
    Algebra alg;
    VariableFrame frame;
    MonogenicFunction fn;
};

FnPack load_fn_pack(const RunManifest& man) {
    FramePack fp = load_frame_pack(man);
    MonogenicFunction fn = io::parse_monogenic(load_role(man, "function"), fp.alg, fp.frame,
                                               role_name(man, "function"));
    return FnPack{std::move(fp.alg), std::move(fp.frame), std::move(fn)};
}

std::vector<std::vector<double>> points_for(const RunManifest& man, int k) {
    std::vector<std::vector<double>> pts;
    if (has_role(man, "grid")) {
        GridSpec grid = io::parse_grid(load_role(man, "grid"), role_name(man, "grid"));
        if (static_cast<int>(grid.axes.size()) != k)
            throw InputError("grid arity does not match the frame");
        for (long long i = 0; i < grid.total(); ++i) pts.push_back(grid.point(i));
    } else {
        std::vector<double> x =
            io::parse_point(load_role(man, "point"), role_name(man, "point"));
        if (static_cast<int>(x.size()) != k)
            throw InputError("point arity does not match the frame");
        pts.push_back(std::move(x));
    }
    return pts;
}

int cmd_eval(const RunManifest& man, std::ostream& out, std::ostream& log) {
    FnPack fp = load_fn_pack(man);
    auto onto = surjectivity_check(fp.frame);
    for (int u = 1; u <= fp.alg.m(); ++u)
        if (!onto[static_cast<std::size_t>(u - 1)])
            log << "note: f_" << u << " does not map the span onto C\n";
    auto pts = points_for(man, fp.frame.k());
    json results = json::array();
    for (const auto& x : pts) {
        AlgebraElement v = eval_monogenic(fp.alg, fp.fn, x);
        json one = io::element_json(v);
        one["point"] = x;
        results.push_back(std::move(one));
    }
    json rep;
    if (results.size() == 1) rep = results[0];
    else rep = json{{"results", results}};
    rep["domain_convex_assumed"] = man.assume_convex;
    emit(out, rep);
    return kExitOk;
}

int cmd_eval_contour(const RunManifest& man, std::ostream& out) {
    FnPack fp = load_fn_pack(man);
    ContourOptions opts;
    opts.start_nodes = man.quad_nodes;
    auto pts = points_for(man, fp.frame.k());
    json results = json::array();
    bool converged = true;
    for (const auto& x : pts) {
        ContourEvalResult r = eval_monogenic_contour(fp.alg, fp.fn, x, opts);
        converged = converged && r.converged;
        json one = io::element_json(r.value);
        one["point"] = x;
        one["nodes"] = r.max_nodes_used;
        one["converged"] = r.converged;
        results.push_back(std::move(one));
    }
    json rep = results.size() == 1 ? results[0] : json{{"results", results}};
    emit(out, rep);
    return converged ? kExitOk : kExitCheckFailed;
}

int cmd_derive(const RunManifest& man, std::ostream& out) {
    FnPack fp = load_fn_pack(man);
    if (man.order < 0) throw InputError("--order must be nonnegative");
    MonogenicFunction d = gateaux_derivative(fp.fn, man.order);
    emit(out, io::monogenic_json(d));
    return kExitOk;
}

int cmd_check_cr(const RunManifest& man, std::ostream& out) {
    FnPack fp = load_fn_pack(man);
    double tol = man.tol_check.value_or(1e-6);
    auto pts = points_for(man, fp.frame.k());
    double worst = 0.0;
    json per_point = json::array();
    for (const auto& x : pts) {
        double h = man.fd_step.value_or(default_fd_step(x));
        CauchyRiemannReport rep = check_cauchy_riemann(fp.alg, fp.fn, x, h);
        worst = std::max(worst, rep.max_residual);
        json one = io::cr_json(rep, tol, rep.max_residual <= tol);
        one["point"] = x;
        per_point.push_back(std::move(one));
    }
    bool pass = worst <= tol;
    json rep;
    if (per_point.size() == 1) rep = per_point[0];
    else rep = json{{"points", per_point}, {"max_residual", worst}, {"tol", tol}, {"pass", pass}};
    rep["domain_convex_assumed"] = man.assume_convex;
    emit(out, rep);
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_char_eq(const RunManifest& man, std::ostream& out) {
    FramePack fp = load_frame_pack(man);
    PDESpec pde = io::parse_pde(load_role(man, "pde"), role_name(man, "pde"));
    AlgebraElement cs = characteristic_sum(fp.alg, fp.frame, pde);
    double tol = man.tol_check.value_or(1e-10);
    json rep = io::element_json(cs);
    rep["inf_norm"] = inf_norm(cs);
    rep["zero"] = inf_norm(cs) <= tol;
    rep["tol"] = tol;
    emit(out, rep);
    return rep["zero"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int cmd_p_scan(const RunManifest& man, std::ostream& out) {
    PDESpec pde = io::parse_pde(load_role(man, "pde"), role_name(man, "pde"));
    std::vector<std::pair<double, double>> box;
    if (has_role(man, "box")) box = io::parse_box(load_role(man, "box"), role_name(man, "box"));
    else box.assign(static_cast<std::size_t>(pde.k() - 1), {-10.0, 10.0});
    ScanReport rep = p_nonvanishing_scan(pde, box, man.grid_points);
    emit(out, io::scan_json(rep));
    return rep.verdict == ScanReport::Verdict::NoRootFound ? kExitOk : kExitCheckFailed;
}

int cmd_check_pde(const RunManifest& man, std::ostream& out) {
    FnPack fp = load_fn_pack(man);
    PDESpec pde = io::parse_pde(load_role(man, "pde"), role_name(man, "pde"));
    std::vector<double> x = io::parse_point(load_role(man, "point"), role_name(man, "point"));
    double h = man.fd_step.value_or(default_fd_step(x, 1e-2));
    double tol = man.tol_check.value_or(1e-5);
    double res = check_pde_residual(fp.alg, fp.fn, pde, x, h);
    bool pass = res <= tol;
    emit(out, json{{"residual", res}, {"step", h}, {"tol", tol}, {"pass", pass}});
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_theorem4(const RunManifest& man, std::ostream& out) {
    FramePack fp = load_frame_pack(man);
    PDESpec pde = io::parse_pde(load_role(man, "pde"), role_name(man, "pde"));
    Theorem4Options opts;
    opts.grid_points = man.grid_points;
    opts.char_tol = man.tol_check.value_or(1e-10);
    if (has_role(man, "box"))
        opts.box = io::parse_box(load_role(man, "box"), role_name(man, "box"));
    Theorem4Report rep = theorem4_check(fp.alg, fp.frame, pde, opts);
    emit(out, io::theorem4_json(rep));
    return (rep.hypotheses_hold && rep.conclusion_holds) ? kExitOk : kExitCheckFailed;
}

int cmd_selftest(const RunManifest& man, std::ostream& out) {
    bool all_pass = false;
    json rep = selftest_report(man.seed, all_pass);
    emit(out, rep);
    return all_pass ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(const RunManifest& man, std::ostream& out, std::ostream& log) {
    if (man.emit_schema) {
        emit(out, io::schema_json());
        return kExitOk;
    }
    try {
        if (man.command == "validate") return cmd_validate(man, out);
        if (man.command == "invert") return cmd_invert(man, out);
        if (man.command == "resolvent") return cmd_resolvent(man, out);
        if (man.command == "eval") return cmd_eval(man, out, log);
        if (man.command == "eval-contour") return cmd_eval_contour(man, out);
        if (man.command == "derive") return cmd_derive(man, out);
        if (man.command == "check-cr") return cmd_check_cr(man, out);
        if (man.command == "char-eq") return cmd_char_eq(man, out);
        if (man.command == "p-scan") return cmd_p_scan(man, out);
        if (man.command == "check-pde") return cmd_check_pde(man, out);
        if (man.command == "theorem4") return cmd_theorem4(man, out);
        if (man.command == "selftest") return cmd_selftest(man, out);
        throw InputError("unknown command '" + man.command + "'");
    } catch (const io::ParseError& e) {
        emit(out, json{{"error", {{"kind", "parse"},
                                  {"file", e.file},
                                  {"path", e.path},
                                  {"message", e.what()}}}});
        log << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        emit(out, json{{"error", {{"kind", "input"}, {"message", e.what()}}}});
        log << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotInvertibleError& e) {
        emit(out, json{{"error", {{"kind", "not_invertible"}, {"u", e.u}, {"message", e.what()}}}});
        return kExitCheckFailed;
    } catch (const PoleError& e) {
        emit(out, json{{"error", {{"kind", "pole_at"}, {"u", e.u}, {"message", e.what()}}}});
        return kExitCheckFailed;
    } catch (const ContourDegenerateError& e) {
        emit(out, json{{"error", {{"kind", "contour_degenerate"},
                                  {"u1", e.u1},
                                  {"u2", e.u2},
                                  {"message", e.what()}}}});
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        emit(out, json{{"error", {{"kind", "input"}, {"message", e.what()}}}});
        log << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
}

namespace {

// The bundled suite: every fixture exercised through the main identities.
// Library-only routes; the heavier randomized oracles live in the test tree.
json selftest_report(std::uint64_t seed, bool& all_pass) {
    using namespace monogen::fixtures;
    json checks = json::array();
    all_pass = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back(json{{"name", name}, {"pass", pass}, {"detail", detail}});
        all_pass = all_pass && pass;
    };
    auto fmt = [](double v) {
        std::ostringstream os;
        os.precision(3);
        os << std::scientific << v;
        return os.str();
    };

    Rng rng(seed);
    std::vector<Fixture> fixtures = all_fixtures();

    {
        bool ok = true;
        std::string detail;
        for (const Fixture& fx : fixtures) {
            ValidationReport rep = validate_algebra(fx.algebra);
            if (!rep.valid()) { ok = false; detail += fx.name + " invalid; "; }
        }
        auto expect_invalid = [&](const Algebra& alg, const std::string& name) {
            ValidationReport rep = validate_algebra(alg);
            if (rep.valid()) { ok = false; detail += name + " accepted; "; }
        };
        expect_invalid(broken_assoc_nilpotent(), "broken_assoc_nilpotent");
        expect_invalid(broken_assoc_idempotent(), "broken_assoc_idempotent");
        expect_invalid(prop2_contradiction(), "prop2_contradiction");
        record("validate_fixtures", ok, ok ? "6 accepted, 3 rejected" : detail);
    }

    {
        double worst = 0.0;
        for (const Fixture& fx : fixtures)
            for (int i = 0; i < 20; ++i) {
                AlgebraElement b = random_invertible(rng, fx.algebra);
                worst = std::max(worst, identity_residual(fx.algebra, b, invert(fx.algebra, b)));
            }
        record("inverse_identity", worst <= 1e-12, "max residual " + fmt(worst));
    }

    {
        double worst = 0.0;
        for (const Fixture& fx : fixtures)
            for (int i = 0; i < 20; ++i) {
                std::vector<double> x = random_point(rng, fx.frame.k());
                cplx t{rng.uniform(1.5, 3.0), rng.uniform(1.5, 3.0)};
                AlgebraElement r = resolvent(fx.algebra, fx.frame, x, t);
                AlgebraElement shifted = sub(scale(t, fx.algebra.unit()), fx.frame.zeta(x));
                worst = std::max(worst, identity_residual(fx.algebra, shifted, r));
                AlgebraElement inv = invert(fx.algebra, shifted);
                worst = std::max(worst, inf_norm(sub(inv, r)) / std::max(1.0, inf_norm(r)));
            }
        record("resolvent_identity", worst <= 1e-12, "max residual " + fmt(worst));
    }

    {
        double worst = 0.0;
        bool converged = true;
        for (const Fixture& fx : fixtures)
            for (int i = 0; i < 2; ++i) {
                std::vector<double> x = separated_point(rng, fx.frame);
                AlgebraElement direct = eval_monogenic(fx.algebra, fx.fn_mixed, x);
                ContourEvalResult c = eval_monogenic_contour(fx.algebra, fx.fn_mixed, x);
                converged = converged && c.converged;
                worst = std::max(worst, inf_norm(sub(direct, c.value)));
            }
        record("contour_agreement", converged && worst <= 1e-8, "max gap " + fmt(worst));
    }

    {
        double worst = 0.0;
        double best_neg = std::numeric_limits<double>::infinity();
        for (const Fixture& fx : fixtures) {
            std::vector<double> x = random_point(rng, fx.frame.k(), 0.5);
            double h = default_fd_step(x);
            worst = std::max(worst,
                             check_cauchy_riemann(fx.algebra, fx.fn_poly, x, h).max_residual);
            // Negative control: conjugated first coordinate breaks the system.
            auto broken = [&](std::span<const double> xx) {
                AlgebraElement v = eval_monogenic(fx.algebra, fx.fn_poly, xx);
                v.coeff(1) = std::conj(fx.frame.xi(1, xx)) * fx.frame.xi(1, xx);
                return v;
            };
            best_neg = std::min(best_neg,
                                check_cauchy_riemann_fn(fx.algebra, fx.frame, broken, x, h)
                                    .max_residual);
        }
        record("cauchy_riemann", worst <= 1e-7 && best_neg >= 1e-2,
               "max residual " + fmt(worst) + ", weakest control " + fmt(best_neg));
    }

    {
        // Closed forms: semi-simple evaluation and the two short expansions.
        double worst = 0.0;
        {
            const Fixture fx = bicomplex();
            std::vector<double> x = random_point(rng, fx.frame.k());
            AlgebraElement v = eval_monogenic(fx.algebra, fx.fn_poly, x);
            AlgebraElement expect(fx.algebra.n());
            for (int u = 1; u <= 2; ++u)
                expect.coeff(u) = fx.fn_poly.F[static_cast<std::size_t>(u - 1)].eval(fx.frame.xi(u, x));
            worst = std::max(worst, inf_norm(sub(v, expect)));
        }
        {
            const Fixture fx = prop2_pair();
            std::vector<double> x = random_point(rng, fx.frame.k());
            AlgebraElement v = eval_monogenic(fx.algebra, fx.fn_poly, x);
            AlgebraElement expect(fx.algebra.n());
            auto seeds = fx.frame.radical_seeds(x);
            for (int u = 1; u <= 2; ++u)
                expect.coeff(u) = fx.fn_poly.F[static_cast<std::size_t>(u - 1)].eval(fx.frame.xi(u, x));
            for (int s = 3; s <= 4; ++s) {
                int u = fx.algebra.u_of(s);
                cplx xi = fx.frame.xi(u, x);
                expect.coeff(s) = fx.fn_poly.G[static_cast<std::size_t>(s - 3)].eval(xi) +
                                  seeds[static_cast<std::size_t>(s - 3)] *
                                      fx.fn_poly.F[static_cast<std::size_t>(u - 1)].derivative().eval(xi);
            }
            worst = std::max(worst, inf_norm(sub(v, expect)));
        }
        record("special_forms", worst <= 1e-12, "max gap " + fmt(worst));
    }

    {
        const Fixture fx = bicomplex();
        PDESpec laplace3{2, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}, {{0, 0, 2}, 1.0}}};
        AlgebraElement cs = characteristic_sum(fx.algebra, fx.frame, laplace3);
        double char_norm = inf_norm(cs);
        std::vector<double> x{0.3, -0.2, 0.4};
        double res = check_pde_residual(fx.algebra, fx.fn_poly, laplace3, x, 1e-2);
        Theorem4Report t4 = theorem4_check(fx.algebra, fx.frame, laplace3);
        bool ok = char_norm <= 1e-14 && res <= 1e-5 && t4.hypotheses_hold && t4.conclusion_holds;
        record("pde_bridge", ok, "char norm " + fmt(char_norm) + ", residual " + fmt(res));
    }

    {
        PDESpec wave{2, {{{2, 0}, 1.0}, {{0, 2}, -1.0}}};
        ScanReport rep = p_nonvanishing_scan(wave, {{-2.0, 2.0}}, 11);
        bool ok = rep.verdict == ScanReport::Verdict::SignChangeFound;
        PDESpec elliptic{2, {{{2, 0}, 1.0}, {{0, 2}, 1.0}}};
        ScanReport rep2 = p_nonvanishing_scan(elliptic, {{-10.0, 10.0}}, 11);
        ok = ok && rep2.verdict == ScanReport::Verdict::NoRootFound;
        record("p_scan", ok, "wave detected, elliptic clean");
    }

    {
        double worst = 0.0;
        const double eps = 1e-4;
        for (const Fixture& fx : fixtures) {
            std::vector<double> x = random_point(rng, fx.frame.k(), 0.5);
            std::vector<double> eta(static_cast<std::size_t>(fx.frame.k()));
            for (double& v : eta) v = rng.uniform(-0.5, 0.5);
            MonogenicFunction d1 = gateaux_derivative(fx.fn_poly, 1);
            std::vector<double> xe(x);
            for (std::size_t i = 0; i < x.size(); ++i) xe[i] += eps * eta[i];
            AlgebraElement h = fx.frame.zeta(eta);
            AlgebraElement quotient = scale(1.0 / eps, sub(eval_monogenic(fx.algebra, fx.fn_poly, xe),
                                                           eval_monogenic(fx.algebra, fx.fn_poly, x)));
            AlgebraElement expect = fx.algebra.mul(h, eval_monogenic(fx.algebra, d1, x));
            worst = std::max(worst, inf_norm(sub(quotient, expect)));
        }
        record("gateaux_quotient", worst <= 10.0 * eps, "max gap " + fmt(worst));
    }

    {
        // A point solving the degeneracy system must kill invertibility.
        const Fixture fx = bicomplex();
        DegenerateSet d = degenerate_set(fx.frame, 1);
        std::vector<double> x{0.0, 0.0, rng.uniform(-1.0, 1.0)}; // x_1 = x_2 = 0 solves u = 1
        bool ok = !fx.algebra.is_invertible(fx.frame.zeta(x)) && d.affine_row[0] == 1.0;
        record("degenerate_set", ok, "kernel point rejected");
    }

    return json{{"seed", seed}, {"checks", checks}, {"all_pass", all_pass}};
}

} // namespace

} // namespace monogen::cli
