#include "monogen/monogenic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace monogen {

std::vector<bool> surjectivity_check(const VariableFrame& frame, double tol) {
    std::vector<bool> out(static_cast<std::size_t>(frame.m()));
    for (int u = 1; u <= frame.m(); ++u) {
        bool onto = false;
        for (int j = 2; j <= frame.k(); ++j)
            if (std::abs(frame.a(j, u).imag()) > tol) { onto = true; break; }
        out[static_cast<std::size_t>(u - 1)] = onto;
    }
    return out;
}

void require_monogenic_shape(const Algebra& alg, const MonogenicFunction& mf) {
    if (mf.frame.n() != alg.n() || mf.frame.m() != alg.m())
        throw std::invalid_argument("frame does not belong to this algebra");
    if (static_cast<int>(mf.F.size()) != alg.m())
        throw std::invalid_argument("need one F component per idempotent");
    if (static_cast<int>(mf.G.size()) != alg.n() - alg.m())
        throw std::invalid_argument("need one G component per nilpotent");
}

namespace {

std::vector<double> factorials(int up_to) {
    std::vector<double> f(static_cast<std::size_t>(up_to + 1), 1.0);
    for (int i = 1; i <= up_to; ++i)
        f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * i;
    return f;
}

// Component derivative chains up to the maximal order the table can request.
std::vector<std::vector<HolomorphicFn>> derivative_chains(const std::vector<HolomorphicFn>& fns,
                                                          int max_order) {
    std::vector<std::vector<HolomorphicFn>> out(fns.size());
    for (std::size_t i = 0; i < fns.size(); ++i) {
        out[i].reserve(static_cast<std::size_t>(max_order + 1));
        out[i].push_back(fns[i]);
        for (int d = 1; d <= max_order; ++d) out[i].push_back(out[i].back().derivative());
    }
    return out;
}

} // namespace

AlgebraElement eval_monogenic(const Algebra& alg, const MonogenicFunction& mf,
                              std::span<const double> x) {
    require_monogenic_shape(alg, mf);
    const int m = alg.m(), n = alg.n();
    const int max_order = n - m;

    std::vector<cplx> xis(static_cast<std::size_t>(m));
    for (int u = 1; u <= m; ++u) xis[static_cast<std::size_t>(u - 1)] = mf.frame.xi(u, x);
    QTable qt = q_table(alg, mf.frame, x);
    std::vector<double> fact = factorials(max_order + 1);

    auto dF = derivative_chains(mf.F, max_order);
    auto dG = derivative_chains(mf.G, max_order);

    AlgebraElement out(n);
    for (int u = 1; u <= m; ++u)
        out.coeff(u) = mf.F[static_cast<std::size_t>(u - 1)].eval(xis[static_cast<std::size_t>(u - 1)]);

    for (int s = m + 1; s <= n; ++s) {
        const int u = alg.u_of(s);
        const cplx xi = xis[static_cast<std::size_t>(u - 1)];
        cplx acc{};
        for (int r = 2; r <= qt.max_r(s); ++r)
            acc += qt.q(r, s) *
                   dF[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(r - 1)].eval(xi) /
                   fact[static_cast<std::size_t>(r - 1)];
        out.coeff(s) += acc;
    }

    for (int q = m + 1; q <= n; ++q) {
        const int u = alg.u_of(q);
        out.coeff(q) += mf.G[static_cast<std::size_t>(q - m - 1)].eval(xis[static_cast<std::size_t>(u - 1)]);
    }

    // Cross terms hit through basis products I_q I_s; only pairs sharing the
    // idempotent contribute (separated contours annihilate the rest).
    for (int q = m + 1; q <= n; ++q) {
        const int uq = alg.u_of(q);
        const cplx xi = xis[static_cast<std::size_t>(uq - 1)];
        for (int s = m + 1; s <= n; ++s) {
            if (alg.u_of(s) != uq) continue;
            for (int r = 2; r <= qt.max_r(s); ++r) {
                cplx w = qt.q(r, s) *
                         dG[static_cast<std::size_t>(q - m - 1)][static_cast<std::size_t>(r - 1)].eval(xi) /
                         fact[static_cast<std::size_t>(r - 1)];
                if (w == cplx{}) continue;
                for (int p = std::max(q, s) + 1; p <= n; ++p) {
                    cplx c = alg.upsilon(q, s, p);
                    if (c != cplx{}) out.coeff(p) += w * c;
                }
            }
        }
    }
    return out;
}

ContourEvalResult eval_monogenic_contour(const Algebra& alg, const MonogenicFunction& mf,
                                         std::span<const double> x, ContourOptions opts) {
    require_monogenic_shape(alg, mf);
    const int m = alg.m(), n = alg.n();

    std::vector<cplx> xis(static_cast<std::size_t>(m));
    for (int u = 1; u <= m; ++u) xis[static_cast<std::size_t>(u - 1)] = mf.frame.xi(u, x);
    for (int u1 = 1; u1 <= m; ++u1)
        for (int u2 = u1 + 1; u2 <= m; ++u2)
            if (std::abs(xis[static_cast<std::size_t>(u1 - 1)] - xis[static_cast<std::size_t>(u2 - 1)]) <=
                opts.degenerate_tol)
                throw ContourDegenerateError(u1, u2);

    std::vector<double> radius(static_cast<std::size_t>(m), 1.0);
    for (int u = 1; u <= m; ++u) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int v = 1; v <= m; ++v)
            if (v != u)
                nearest = std::min(nearest, std::abs(xis[static_cast<std::size_t>(u - 1)] -
                                                     xis[static_cast<std::size_t>(v - 1)]));
        if (std::isfinite(nearest)) radius[static_cast<std::size_t>(u - 1)] = std::min(1.0, 0.5 * nearest);
    }

    QTable qt = q_table(alg, mf.frame, x);

    ContourEvalResult res;
    res.value = AlgebraElement(n);

    auto integrate = [&](const HolomorphicFn& fn, int basis_index, int u) {
        auto integrand = [&](cplx t) {
            return scale(fn.eval(t), resolvent_at(alg, xis, qt, t, opts.pole_tol));
        };
        ContourResult cr = contour_integral_adaptive(integrand, xis[static_cast<std::size_t>(u - 1)],
                                                     radius[static_cast<std::size_t>(u - 1)],
                                                     opts.start_nodes, opts.agree_tol, opts.max_nodes);
        res.max_nodes_used = std::max(res.max_nodes_used, cr.nodes);
        res.converged = res.converged && cr.converged;
        res.value = add(res.value, alg.mul(alg.basis(basis_index), cr.value));
    };

    for (int u = 1; u <= m; ++u) integrate(mf.F[static_cast<std::size_t>(u - 1)], u, u);
    for (int s = m + 1; s <= n; ++s) integrate(mf.G[static_cast<std::size_t>(s - m - 1)], s, alg.u_of(s));
    return res;
}

MonogenicFunction gateaux_derivative(const MonogenicFunction& mf, int order) {
    if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
    MonogenicFunction out = mf;
    for (auto& fn : out.F) fn = fn.derivative(order);
    for (auto& fn : out.G) fn = fn.derivative(order);
    return out;
}

CauchyRiemannReport check_cauchy_riemann_fn(const Algebra& alg, const VariableFrame& frame,
                                            const ComponentMap& fn, std::span<const double> x,
                                            double h) {
    if (h <= 0.0) throw std::invalid_argument("finite-difference step must be positive");
    if (static_cast<int>(x.size()) != frame.k())
        throw std::invalid_argument("point dimension does not match frame");

    std::vector<double> xp(x.begin(), x.end()), xm(x.begin(), x.end());
    auto central = [&](int j) {
        xp[static_cast<std::size_t>(j - 1)] = x[static_cast<std::size_t>(j - 1)] + h;
        xm[static_cast<std::size_t>(j - 1)] = x[static_cast<std::size_t>(j - 1)] - h;
        AlgebraElement d = scale(1.0 / (2.0 * h), sub(fn(xp), fn(xm)));
        xp[static_cast<std::size_t>(j - 1)] = x[static_cast<std::size_t>(j - 1)];
        xm[static_cast<std::size_t>(j - 1)] = x[static_cast<std::size_t>(j - 1)];
        return d;
    };

    AlgebraElement d1 = central(1);
    CauchyRiemannReport rep;
    rep.step = h;
    for (int j = 2; j <= frame.k(); ++j) {
        AlgebraElement dj = central(j);
        double r = inf_norm(sub(dj, alg.mul(d1, frame.e(j))));
        rep.residuals.push_back(r);
        rep.max_residual = std::max(rep.max_residual, r);
    }
    return rep;
}

double default_fd_step(std::span<const double> x, double base) {
    double mx = 0.0;
    for (double v : x) mx = std::max(mx, std::abs(v));
    return base * (1.0 + mx);
}

CauchyRiemannReport check_cauchy_riemann(const Algebra& alg, const MonogenicFunction& mf,
                                         std::span<const double> x, double h) {
    require_monogenic_shape(alg, mf);
    auto fn = [&](std::span<const double> xx) { return eval_monogenic(alg, mf, xx); };
    return check_cauchy_riemann_fn(alg, mf.frame, fn, x, h);
}

CauchyRiemannReport check_cauchy_riemann(const Algebra& alg, const MonogenicFunction& mf,
                                         std::span<const double> x) {
    return check_cauchy_riemann(alg, mf, x, default_fd_step(x));
}

std::vector<double> GridSpec::point(long long index) const {
    std::vector<double> x(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const Axis& a = axes[i];
        long long pos = index % a.count;
        index /= a.count;
        x[i] = (a.count == 1) ? a.lo : a.lo + (a.hi - a.lo) * static_cast<double>(pos) /
                                                 static_cast<double>(a.count - 1);
    }
    return x;
}

} // namespace monogen
