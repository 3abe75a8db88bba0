#include "monogen/pde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace monogen {

std::vector<std::string> pde_errors(const PDESpec& pde) {
    std::vector<std::string> errs;
    if (pde.order < 1) errs.push_back("operator order must be at least 1");
    if (pde.terms.empty()) errs.push_back("operator has no terms");
    bool any_nonzero = false;
    for (std::size_t i = 0; i < pde.terms.size(); ++i) {
        const PdeTerm& t = pde.terms[i];
        if (static_cast<int>(t.alpha.size()) != pde.k())
            errs.push_back("term " + std::to_string(i) + ": multi-index length differs");
        int total = 0;
        for (int a : t.alpha) {
            if (a < 0) errs.push_back("term " + std::to_string(i) + ": negative order");
            total += a;
        }
        if (total != pde.order)
            errs.push_back("term " + std::to_string(i) + ": |alpha| = " + std::to_string(total) +
                           " != N = " + std::to_string(pde.order));
        if (t.c != 0.0) any_nonzero = true;
    }
    if (!pde.terms.empty() && !any_nonzero) errs.push_back("all coefficients vanish");
    return errs;
}

AlgebraElement characteristic_sum(const Algebra& alg, const VariableFrame& frame,
                                  const PDESpec& pde) {
    if (pde.k() != frame.k())
        throw std::invalid_argument("operator multi-indices do not match the frame arity");
    AlgebraElement acc = alg.zero();
    for (const PdeTerm& t : pde.terms) {
        AlgebraElement mono = alg.unit();
        for (int j = 2; j <= frame.k(); ++j) {
            const int power = t.alpha[static_cast<std::size_t>(j - 1)];
            for (int i = 0; i < power; ++i) mono = alg.mul(mono, frame.e(j));
        }
        acc = add(acc, scale(t.c, mono));
    }
    return acc;
}

double p_polynomial_eval(const PDESpec& pde, std::span<const double> b) {
    if (static_cast<int>(b.size()) != pde.k() - 1)
        throw std::invalid_argument("expected one value per direction j = 2..k");
    double acc = 0.0;
    for (const PdeTerm& t : pde.terms) {
        double mono = t.c;
        for (std::size_t j = 1; j < t.alpha.size(); ++j)
            for (int i = 0; i < t.alpha[j]; ++i) mono *= b[j - 1];
        acc += mono;
    }
    return acc;
}

ScanReport p_nonvanishing_scan(const PDESpec& pde,
                               const std::vector<std::pair<double, double>>& box,
                               int grid_points) {
    const int dims = pde.k() - 1;
    if (static_cast<int>(box.size()) != dims)
        throw std::invalid_argument("box must give one interval per direction j = 2..k");
    if (grid_points < 2) throw std::invalid_argument("need at least 2 grid points per axis");

    ScanReport rep;
    rep.min_abs = std::numeric_limits<double>::infinity();
    rep.min_val = std::numeric_limits<double>::infinity();
    rep.max_val = -std::numeric_limits<double>::infinity();

    std::vector<double> b(static_cast<std::size_t>(dims));
    long long total = 1;
    for (int i = 0; i < dims; ++i) total *= grid_points;
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        for (int i = 0; i < dims; ++i) {
            long long pos = rem % grid_points;
            rem /= grid_points;
            b[static_cast<std::size_t>(i)] =
                box[static_cast<std::size_t>(i)].first +
                (box[static_cast<std::size_t>(i)].second - box[static_cast<std::size_t>(i)].first) *
                    static_cast<double>(pos) / static_cast<double>(grid_points - 1);
        }
        double v = p_polynomial_eval(pde, b);
        if (std::abs(v) < rep.min_abs) {
            rep.min_abs = std::abs(v);
            rep.argmin = b;
        }
        rep.min_val = std::min(rep.min_val, v);
        rep.max_val = std::max(rep.max_val, v);
    }
    rep.verdict = (rep.min_val < 0.0 && rep.max_val > 0.0) ? ScanReport::Verdict::SignChangeFound
                                                           : ScanReport::Verdict::NoRootFound;
    return rep;
}

namespace {

using Stencil = std::vector<std::pair<int, double>>;

Stencil convolve(const Stencil& a, const Stencil& b) {
    std::map<int, double> acc;
    for (const auto& [oa, ca] : a)
        for (const auto& [ob, cb] : b) acc[oa + ob] += ca * cb;
    Stencil out(acc.begin(), acc.end());
    return out;
}

} // namespace

std::vector<std::pair<int, double>> central_stencil(int order) {
    if (order < 0) throw std::invalid_argument("stencil order must be nonnegative");
    Stencil s{{0, 1.0}};
    const Stencil d1{{-1, -0.5}, {1, 0.5}};
    const Stencil d2{{-1, 1.0}, {0, -2.0}, {1, 1.0}};
    for (int i = 0; i < order / 2; ++i) s = convolve(s, d2);
    if (order % 2) s = convolve(s, d1);
    // Composition cancels some offsets exactly (dyadic weights); keeping them
    // would cost one useless function evaluation per grid pass.
    Stencil pruned;
    for (const auto& e : s)
        if (e.second != 0.0) pruned.push_back(e);
    return pruned;
}

AlgebraElement apply_pde_operator_fd(const PDESpec& pde, const PointEval& fn,
                                     std::span<const double> x, double h) {
    if (h <= 0.0) throw std::invalid_argument("finite-difference step must be positive");
    if (static_cast<int>(x.size()) != pde.k())
        throw std::invalid_argument("point dimension does not match the operator");

    double hn = 1.0;
    for (int i = 0; i < pde.order; ++i) hn *= h;

    AlgebraElement acc;
    std::vector<double> xx(x.begin(), x.end());
    for (const PdeTerm& term : pde.terms) {
        if (term.c == 0.0) continue;
        std::vector<Stencil> stencils;
        stencils.reserve(term.alpha.size());
        for (int a : term.alpha) stencils.push_back(central_stencil(a));

        std::vector<std::size_t> cursor(stencils.size(), 0);
        while (true) {
            double w = term.c;
            for (std::size_t j = 0; j < stencils.size(); ++j) {
                const auto& [off, cw] = stencils[j][cursor[j]];
                xx[j] = x[j] + h * off;
                w *= cw;
            }
            AlgebraElement v = fn(xx);
            if (acc.dim() == 0) acc = AlgebraElement(v.dim());
            acc = add(acc, scale(w, v));

            std::size_t j = 0;
            for (; j < cursor.size(); ++j) {
                if (++cursor[j] < stencils[j].size()) break;
                cursor[j] = 0;
            }
            if (j == cursor.size()) break;
        }
        for (std::size_t j = 0; j < xx.size(); ++j) xx[j] = x[j];
    }
    return scale(1.0 / hn, acc);
}

double check_pde_residual(const Algebra& alg, const MonogenicFunction& mf, const PDESpec& pde,
                          std::span<const double> x, double h) {
    require_monogenic_shape(alg, mf);
    auto fn = [&](std::span<const double> xx) { return eval_monogenic(alg, mf, xx); };
    AlgebraElement l = apply_pde_operator_fd(pde, fn, x, h);
    double res = 0.0;
    for (const cplx& c : l.coeffs)
        res = std::max({res, std::abs(c.real()), std::abs(c.imag())});
    return res;
}

double check_pde_residual(const Algebra& alg, const MonogenicFunction& mf, const PDESpec& pde,
                          std::span<const double> x) {
    return check_pde_residual(alg, mf, pde, x, default_fd_step(x, 1e-2));
}

Theorem4Report theorem4_check(const Algebra& alg, const VariableFrame& frame, const PDESpec& pde,
                              Theorem4Options opts) {
    Theorem4Report rep;

    AlgebraElement cs = characteristic_sum(alg, frame, pde);
    rep.char_norm = inf_norm(cs);
    rep.char_zero = rep.char_norm <= opts.char_tol;

    std::vector<std::pair<double, double>> box = opts.box;
    if (box.empty()) box.assign(static_cast<std::size_t>(pde.k() - 1), {-10.0, 10.0});
    rep.scan = p_nonvanishing_scan(pde, box, opts.grid_points);
    rep.p_nonvanishing = rep.scan.verdict == ScanReport::Verdict::NoRootFound;

    rep.frame_li = frame_independent(frame);

    rep.projections_zero = true;
    for (int u = 1; u <= alg.m(); ++u) {
        double r = std::abs(alg.f(u, cs));
        rep.projection_residuals.push_back(r);
        if (r > opts.char_tol) rep.projections_zero = false;
    }

    rep.surjective = surjectivity_check(frame);
    rep.surjective_all =
        std::all_of(rep.surjective.begin(), rep.surjective.end(), [](bool b) { return b; });

    rep.hypotheses_hold = rep.char_zero && rep.p_nonvanishing && rep.frame_li;
    rep.conclusion_holds = rep.surjective_all;
    return rep;
}

} // namespace monogen
