#pragma once
// Shared test helpers: an independent product oracle rebuilt straight from the
// three structure rules, a dense linear solver for inversion cross-checks, and
// random generators for algebras, frames, elements, and component functions.
//
// Nothing in here calls Algebra::mul or invert() except where a test
// explicitly wants the library route; the oracle path goes through
// oracle_basis_coeff -> mul_matrix -> gauss_solve.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogen/algebra.hpp"
#include "monogen/frame.hpp"
#include "monogen/holomorphic.hpp"
#include "monogen/monogenic.hpp"

namespace support {

using monogen::Algebra;
using monogen::AlgebraElement;
using monogen::cplx;
using monogen::UpsilonMap;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng);
    }
    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng);
    }
    cplx box(double mag) { return {uniform(-mag, mag), uniform(-mag, mag)}; }
    cplx annulus(double rlo, double rhi) {
        return std::polar(uniform(rlo, rhi), uniform(0.0, kTwoPi));
    }
};

// Coefficient of I_p in I_r I_s, derived from the defining rules alone:
// idempotents are orthogonal, an idempotent absorbs exactly its own
// nilpotents, and nilpotent products read off the structure constants.
inline cplx oracle_basis_coeff(const Algebra& alg, int r, int s, int p) {
    const int m = alg.m();
    if (r <= m && s <= m) return (r == s && p == r) ? cplx{1.0} : cplx{0.0};
    if (r <= m) return (alg.u_of(s) == r && p == s) ? cplx{1.0} : cplx{0.0};
    if (s <= m) return (alg.u_of(r) == s && p == r) ? cplx{1.0} : cplx{0.0};
    if (p <= std::max(r, s)) return cplx{0.0};
    return alg.upsilon(r, s, p);
}

inline AlgebraElement oracle_mul(const Algebra& alg, const AlgebraElement& a,
                                 const AlgebraElement& b) {
    const int n = alg.n();
    AlgebraElement out(n);
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
            const cplx prod = a.coeff(r) * b.coeff(s);
            if (prod == cplx{0.0}) continue;
            for (int p = 1; p <= n; ++p) {
                const cplx c = oracle_basis_coeff(alg, r, s, p);
                if (c != cplx{0.0}) out.coeff(p) += prod * c;
            }
        }
    return out;
}

// Matrix of left multiplication by a: column s holds the coefficients of
// a * I_s. Row-major, 0-based.
inline std::vector<std::vector<cplx>> mul_matrix(const Algebra& alg, const AlgebraElement& a) {
    const int n = alg.n();
    std::vector<std::vector<cplx>> M(n, std::vector<cplx>(n, cplx{0.0}));
    for (int s = 1; s <= n; ++s)
        for (int p = 1; p <= n; ++p) {
            cplx acc{0.0};
            for (int r = 1; r <= n; ++r) acc += a.coeff(r) * oracle_basis_coeff(alg, r, s, p);
            M[p - 1][s - 1] = acc;
        }
    return M;
}

// Dense partial-pivot Gaussian elimination over C.
inline std::vector<cplx> gauss_solve(std::vector<std::vector<cplx>> A, std::vector<cplx> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(A[row][col]) > std::abs(A[piv][col])) piv = row;
        if (std::abs(A[piv][col]) < 1e-300) throw std::runtime_error("singular system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (int row = col + 1; row < n; ++row) {
            const cplx f = A[row][col] / A[col][col];
            if (f == cplx{0.0}) continue;
            for (int j = col; j < n; ++j) A[row][j] -= f * A[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<cplx> x(n);
    for (int row = n - 1; row >= 0; --row) {
        cplx acc = b[row];
        for (int j = row + 1; j < n; ++j) acc -= A[row][j] * x[j];
        x[row] = acc / A[row][row];
    }
    return x;
}

// Inverse through the dense solve: M(b) x = coefficients of the unit.
inline AlgebraElement oracle_invert(const Algebra& alg, const AlgebraElement& b) {
    auto M = mul_matrix(alg, b);
    std::vector<cplx> rhs(alg.n(), cplx{0.0});
    for (int u = 1; u <= alg.m(); ++u) rhs[u - 1] = cplx{1.0};
    return AlgebraElement(gauss_solve(std::move(M), std::move(rhs)));
}

inline double dist(const AlgebraElement& a, const AlgebraElement& b) {
    return monogen::inf_norm(monogen::sub(a, b));
}
inline double rel_dist(const AlgebraElement& a, const AlgebraElement& b) {
    return dist(a, b) / std::max({1.0, monogen::inf_norm(a), monogen::inf_norm(b)});
}

// --- random inputs -----------------------------------------------------

// Idempotent parts bounded away from zero so the element stays invertible
// and the inverse stays well scaled.
inline AlgebraElement random_invertible(Rng& rng, const Algebra& alg) {
    AlgebraElement out(alg.n());
    for (int u = 1; u <= alg.m(); ++u) out.coeff(u) = rng.annulus(0.5, 1.8);
    for (int s = alg.m() + 1; s <= alg.n(); ++s) out.coeff(s) = rng.box(1.2);
    return out;
}

inline AlgebraElement random_element(Rng& rng, const Algebra& alg, double mag = 1.2) {
    AlgebraElement out(alg.n());
    for (int r = 1; r <= alg.n(); ++r) out.coeff(r) = rng.box(mag);
    return out;
}

inline std::vector<double> random_point(Rng& rng, int k, double mag = 1.0) {
    std::vector<double> x(k);
    for (auto& v : x) v = rng.uniform(-mag, mag);
    return x;
}

// --- random algebras ----------------------------------------------------

// One nilpotent chain under idempotent attach_u with rescaled basis vectors
// J_s ~ gamma_s rho^{s-m}; associative by construction, and the rescaling
// makes the structure constants genuinely complex.
inline Algebra random_chain_algebra(Rng& rng, int m, int n, int attach_u) {
    std::vector<cplx> gamma(static_cast<std::size_t>(n) + 1);
    for (int s = m + 1; s <= n; ++s) gamma[s] = rng.annulus(0.5, 1.5);
    UpsilonMap ups;
    for (int r = m + 1; r <= n; ++r)
        for (int s = r; s <= n; ++s) {
            const int p = r + s - m;
            if (p <= n) ups[{r, s, p}] = gamma[r] * gamma[s] / gamma[p];
        }
    std::vector<int> u(static_cast<std::size_t>(n - m), attach_u);
    return Algebra(m, n, ups, u);
}

// Two chains under different idempotents; cross products vanish, which is
// exactly what the pair-rule forces when the idempotents differ.
inline Algebra random_two_chain_algebra(Rng& rng) {
    const int m = 2;
    const int len1 = rng.integer(1, 2), len2 = rng.integer(1, 2);
    const int n = m + len1 + len2;
    std::vector<cplx> gamma(static_cast<std::size_t>(n) + 1);
    for (int s = m + 1; s <= n; ++s) gamma[s] = rng.annulus(0.5, 1.5);
    UpsilonMap ups;
    for (int r = m + 1; r <= m + len1; ++r)
        for (int s = r; s <= m + len1; ++s) {
            const int p = r + s - m;
            if (p <= m + len1) ups[{r, s, p}] = gamma[r] * gamma[s] / gamma[p];
        }
    const int base = m + len1;
    for (int r = base + 1; r <= n; ++r)
        for (int s = r; s <= n; ++s) {
            const int p = r + s - base;
            if (p <= n) ups[{r, s, p}] = gamma[r] * gamma[s] / gamma[p];
        }
    std::vector<int> u(static_cast<std::size_t>(n - m));
    for (int i = 0; i < len1; ++i) u[i] = 1;
    for (int i = len1; i < n - m; ++i) u[i] = 2;
    return Algebra(m, n, ups, u);
}

// Every nilpotent under a distinct idempotent: all nilpotent products zero.
inline Algebra random_distinct_u_algebra(Rng& rng) {
    const int m = rng.integer(2, 4);
    const int nil = rng.integer(1, m);
    std::vector<int> pool(m);
    for (int i = 0; i < m; ++i) pool[i] = i + 1;
    std::vector<int> u(nil);
    for (int i = 0; i < nil; ++i) {
        const int j = rng.integer(i, m - 1);
        std::swap(pool[i], pool[j]);
        u[i] = pool[i];
    }
    return Algebra(m, m + nil, UpsilonMap{}, u);
}

inline Algebra random_semi_simple(Rng& rng) {
    const int m = rng.integer(1, 5);
    return Algebra(m, m, UpsilonMap{}, {});
}

inline std::vector<Algebra> random_algebra_pool(Rng& rng) {
    std::vector<Algebra> out;
    out.push_back(random_semi_simple(rng));
    out.push_back(random_chain_algebra(rng, 1, 1 + rng.integer(2, 4), 1));
    out.push_back(random_chain_algebra(rng, 2, 2 + rng.integer(1, 3), rng.integer(1, 2)));
    out.push_back(random_two_chain_algebra(rng));
    out.push_back(random_distinct_u_algebra(rng));
    return out;
}

// --- random frames and component functions -------------------------------

// Rows with imaginary parts bounded away from zero on the idempotent slots,
// so every spectral projection stays surjective; retried until independent.
inline monogen::VariableFrame random_frame(Rng& rng, const Algebra& alg, int k) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::vector<cplx>> rows(static_cast<std::size_t>(k - 1),
                                            std::vector<cplx>(alg.n()));
        for (auto& row : rows)
            for (int r = 0; r < alg.n(); ++r) {
                if (r < alg.m()) {
                    const double im = rng.uniform(0.3, 1.0) * (rng.integer(0, 1) ? 1.0 : -1.0);
                    row[r] = cplx{rng.uniform(-1.0, 1.0), im};
                } else {
                    row[r] = rng.box(1.0);
                }
            }
        monogen::VariableFrame f(alg, rows);
        if (monogen::frame_independent(f)) return f;
    }
    throw std::runtime_error("no independent frame found");
}

inline monogen::HolomorphicFn random_poly(Rng& rng, int deg, double mag = 0.6) {
    std::vector<cplx> cs(static_cast<std::size_t>(deg) + 1);
    for (auto& c : cs) c = rng.box(mag);
    cs.back() += cplx{0.05, 0.0};  // keep the stated degree
    return monogen::HolomorphicFn::polynomial(cs);
}

inline monogen::HolomorphicFn random_mixed(Rng& rng, int deg) {
    return random_poly(rng, deg).plus(
        monogen::HolomorphicFn::exponential(rng.box(0.5), rng.box(0.8)));
}

inline monogen::MonogenicFunction random_monogenic(Rng& rng,
                                                   const monogen::VariableFrame& frame,
                                                   int deg, bool with_exp) {
    monogen::MonogenicFunction mf{frame, {}, {}};
    for (int u = 0; u < frame.m(); ++u)
        mf.F.push_back(with_exp ? random_mixed(rng, deg) : random_poly(rng, deg));
    for (int s = 0; s < frame.n() - frame.m(); ++s)
        mf.G.push_back(with_exp ? random_mixed(rng, deg) : random_poly(rng, deg));
    return mf;
}

// Smallest gap between distinct spectral scalars at x; contour evaluation
// needs this bounded away from zero.
inline double min_xi_gap(const monogen::VariableFrame& frame, const std::vector<double>& x) {
    double best = 1e300;
    for (int u1 = 1; u1 <= frame.m(); ++u1)
        for (int u2 = u1 + 1; u2 <= frame.m(); ++u2)
            best = std::min(best, std::abs(frame.xi(u1, x) - frame.xi(u2, x)));
    return best;
}

// --- small real linear algebra -------------------------------------------

// Basis of the nullspace of a (rows x cols) real matrix, by row reduction.
inline std::vector<std::vector<double>> real_nullspace(std::vector<std::vector<double>> A) {
    if (A.empty()) return {};
    const int rows = static_cast<int>(A.size());
    const int cols = static_cast<int>(A[0].size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = r;
        for (int i = r + 1; i < rows; ++i)
            if (std::abs(A[i][c]) > std::abs(A[piv][c])) piv = i;
        if (std::abs(A[piv][c]) < 1e-12) continue;
        std::swap(A[piv], A[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = A[i][c] / A[r][c];
            if (f == 0.0) continue;
            for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<double>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<double> v(cols, 0.0);
        v[free] = 1.0;
        for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
            const int pc = pivot_col[i];
            double acc = 0.0;
            for (int j = pc + 1; j < cols; ++j) acc += A[i][j] * v[j];
            v[pc] = -acc / A[i][pc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace support
