#include "monogen/resolvent.hpp"

#include <cmath>

namespace monogen {

QTable build_q_table(const Algebra& alg, std::span<const cplx> seeds) {
    const int m = alg.m(), n = alg.n();
    if (static_cast<int>(seeds.size()) != n - m)
        throw std::invalid_argument("expected one seed per nilpotent index");
    QTable qt(m, n);
    for (int s = m + 1; s <= n; ++s) qt.t_ref(s) = seeds[static_cast<std::size_t>(s - m - 1)];

    for (int s = m + 1; s <= n; ++s) {
        for (int q = m + 1; q <= s - 1; ++q) {
            cplx acc{};
            for (int p = m + 1; p <= s - 1; ++p)
                acc += qt.t(p) * alg.upsilon(q, p, s);
            qt.b_ref(q, s) = acc;
        }
        qt.q_ref(2, s) = qt.t(s);
        for (int r = 3; r <= qt.max_r(s); ++r) {
            cplx acc{};
            for (int q = r + m - 2; q <= s - 1; ++q)
                acc += qt.q(r - 1, q) * qt.b(q, s);
            qt.q_ref(r, s) = acc;
        }
    }
    return qt;
}

QTable q_table(const Algebra& alg, const VariableFrame& frame, std::span<const double> x) {
    std::vector<cplx> seeds = frame.radical_seeds(x);
    return build_q_table(alg, seeds);
}

AlgebraElement invert(const Algebra& alg, const AlgebraElement& b, double tol) {
    const int m = alg.m(), n = alg.n();
    for (int u = 1; u <= m; ++u) {
        double mag = std::abs(b.coeff(u));
        if (mag <= tol) throw NotInvertibleError(u, mag);
    }

    std::vector<cplx> seeds(static_cast<std::size_t>(n - m));
    for (int s = m + 1; s <= n; ++s) seeds[static_cast<std::size_t>(s - m - 1)] = -b.coeff(s);
    QTable qt = build_q_table(alg, seeds);

    // Inverse powers 1/b_u^r, iterated for deterministic rounding.
    std::vector<std::vector<cplx>> inv_pow(static_cast<std::size_t>(m));
    for (int u = 1; u <= m; ++u) {
        auto& pw = inv_pow[static_cast<std::size_t>(u - 1)];
        pw.resize(static_cast<std::size_t>(n - m + 2));
        pw[0] = 1.0;
        cplx inv = 1.0 / b.coeff(u);
        for (std::size_t r = 1; r < pw.size(); ++r) pw[r] = pw[r - 1] * inv;
    }

    AlgebraElement out(n);
    for (int u = 1; u <= m; ++u) out.coeff(u) = inv_pow[static_cast<std::size_t>(u - 1)][1];
    for (int s = m + 1; s <= n; ++s) {
        int u = alg.u_of(s);
        cplx acc{};
        for (int r = 2; r <= qt.max_r(s); ++r)
            acc += qt.q(r, s) * inv_pow[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(r)];
        out.coeff(s) = acc;
    }
    return out;
}

AlgebraElement resolvent_at(const Algebra& alg, std::span<const cplx> xis, const QTable& qt,
                            cplx t, double tol) {
    const int m = alg.m(), n = alg.n();
    if (static_cast<int>(xis.size()) != m)
        throw std::invalid_argument("expected one spectral point per idempotent");
    for (int u = 1; u <= m; ++u)
        if (std::abs(t - xis[static_cast<std::size_t>(u - 1)]) <= tol) throw PoleError(u);

    std::vector<std::vector<cplx>> inv_pow(static_cast<std::size_t>(m));
    for (int u = 1; u <= m; ++u) {
        auto& pw = inv_pow[static_cast<std::size_t>(u - 1)];
        pw.resize(static_cast<std::size_t>(n - m + 2));
        pw[0] = 1.0;
        cplx inv = 1.0 / (t - xis[static_cast<std::size_t>(u - 1)]);
        for (std::size_t r = 1; r < pw.size(); ++r) pw[r] = pw[r - 1] * inv;
    }

    AlgebraElement out(n);
    for (int u = 1; u <= m; ++u) out.coeff(u) = inv_pow[static_cast<std::size_t>(u - 1)][1];
    for (int s = m + 1; s <= n; ++s) {
        int u = alg.u_of(s);
        cplx acc{};
        for (int r = 2; r <= qt.max_r(s); ++r)
            acc += qt.q(r, s) * inv_pow[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(r)];
        out.coeff(s) = acc;
    }
    return out;
}

AlgebraElement resolvent(const Algebra& alg, const VariableFrame& frame,
                         std::span<const double> x, cplx t, double tol) {
    std::vector<cplx> xis(static_cast<std::size_t>(alg.m()));
    for (int u = 1; u <= alg.m(); ++u) xis[static_cast<std::size_t>(u - 1)] = frame.xi(u, x);
    QTable qt = q_table(alg, frame, x);
    return resolvent_at(alg, xis, qt, t, tol);
}

DegenerateSet degenerate_set(const VariableFrame& frame, int u) {
    if (u < 1 || u > frame.m()) throw std::invalid_argument("idempotent index outside 1..m");
    DegenerateSet d;
    d.u = u;
    d.affine_row.resize(static_cast<std::size_t>(frame.k()));
    d.imag_row.resize(static_cast<std::size_t>(frame.k()));
    d.affine_row[0] = 1.0;
    d.imag_row[0] = 0.0;
    for (int j = 2; j <= frame.k(); ++j) {
        cplx c = frame.a(j, u);
        d.affine_row[static_cast<std::size_t>(j - 1)] = c.real();
        d.imag_row[static_cast<std::size_t>(j - 1)] = c.imag();
    }
    return d;
}

} // namespace monogen
