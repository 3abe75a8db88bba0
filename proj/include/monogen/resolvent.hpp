#pragma once
// Inversion and resolvents via the finite triangular recurrence on the
// radical part. No dense linear solves: everything runs off the structure
// constants directly.

#include <span>
#include <stdexcept>
#include <vector>

#include "monogen/algebra.hpp"
#include "monogen/frame.hpp"

namespace monogen {

class NotInvertibleError : public std::runtime_error {
public:
    NotInvertibleError(int u_, double mag)
        : std::runtime_error("element not invertible: |f_" + std::to_string(u_) +
                             "(b)| = " + std::to_string(mag)),
          u(u_) {}
    int u;
};

class PoleError : public std::runtime_error {
public:
    explicit PoleError(int u_)
        : std::runtime_error("t coincides with spectral point xi_" + std::to_string(u_)), u(u_) {}
    int u;
};

// Triangular coefficient table of the radical expansion. For seeds T_s
// (s = m+1..n):
//   Q_{2,s} = T_s
//   B_{q,s} = sum_{p=m+1}^{s-1} T_p * ups(q, p -> s)
//   Q_{r,s} = sum_{q=r+m-2}^{s-1} Q_{r-1,q} B_{q,s},  r = 3..s-m+1
// where ups(q, p -> s) is the coefficient of I_s in I_q * I_p.
class QTable {
public:
    QTable() = default;
    QTable(int m, int n) : m_(m), n_(n) {
        t_.resize(static_cast<std::size_t>(n - m));
        q_.resize(static_cast<std::size_t>(n - m));
        b_.resize(static_cast<std::size_t>(n - m));
        for (int s = m + 1; s <= n; ++s) {
            q_[idx(s)].resize(static_cast<std::size_t>(max_r(s) - 1));
            b_[idx(s)].resize(static_cast<std::size_t>(s - m - 1));
        }
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int max_r(int s) const { return s - m_ + 1; }

    cplx t(int s) const { check_s(s); return t_[idx(s)]; }
    cplx q(int r, int s) const {
        check_s(s);
        if (r < 2 || r > max_r(s)) throw std::out_of_range("Q_{r,s} index outside 2..s-m+1");
        return q_[idx(s)][static_cast<std::size_t>(r - 2)];
    }
    cplx b(int q, int s) const {
        check_s(s);
        if (q < m_ + 1 || q > s - 1) throw std::out_of_range("B_{q,s} index outside m+1..s-1");
        return b_[idx(s)][static_cast<std::size_t>(q - m_ - 1)];
    }

    cplx& t_ref(int s) { check_s(s); return t_[idx(s)]; }
    cplx& q_ref(int r, int s) { check_s(s); return q_[idx(s)][static_cast<std::size_t>(r - 2)]; }
    cplx& b_ref(int q, int s) { check_s(s); return b_[idx(s)][static_cast<std::size_t>(q - m_ - 1)]; }

private:
    std::size_t idx(int s) const { return static_cast<std::size_t>(s - m_ - 1); }
    void check_s(int s) const {
        if (s < m_ + 1 || s > n_) throw std::out_of_range("nilpotent index outside m+1..n");
    }

    int m_ = 0, n_ = 0;
    std::vector<cplx> t_;
    std::vector<std::vector<cplx>> q_;
    std::vector<std::vector<cplx>> b_;
};

// Runs the recurrence from explicit seeds (one per nilpotent index).
QTable build_q_table(const Algebra& alg, std::span<const cplx> seeds);

// Seeds taken from the radical coefficients of zeta(x) in the frame.
QTable q_table(const Algebra& alg, const VariableFrame& frame, std::span<const double> x);

// Inverse of b. Seeds the recurrence with the negated radical coefficients;
// the identity mul(b, invert(b)) = 1 is the contract.
AlgebraElement invert(const Algebra& alg, const AlgebraElement& b, double tol = kZeroTol);

// (t e_1 - zeta)^{-1} assembled from a precomputed table and the spectral
// points xi_u; throws PoleError when t hits one of them.
AlgebraElement resolvent_at(const Algebra& alg, std::span<const cplx> xis, const QTable& qt,
                            cplx t, double tol = kZeroTol);

AlgebraElement resolvent(const Algebra& alg, const VariableFrame& frame,
                         std::span<const double> x, cplx t, double tol = kZeroTol);

// The real-linear system cutting out the points where f_u(zeta) = 0:
//   x_1 + sum_j x_j Re a_{j,u} = 0,   sum_j x_j Im a_{j,u} = 0.
struct DegenerateSet {
    int u = 0;
    std::vector<double> affine_row; // (1, Re a_{2,u}, ..., Re a_{k,u})
    std::vector<double> imag_row;   // (0, Im a_{2,u}, ..., Im a_{k,u})
};

DegenerateSet degenerate_set(const VariableFrame& frame, int u);

} // namespace monogen
