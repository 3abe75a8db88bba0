#pragma once
// A variable frame e_1, ..., e_k in an algebra: e_1 is the unit, each further
// vector is given by its coefficient row a_{j,1..n}. Points zeta = sum x_j e_j
// have real coordinates x in R^k.

#include <span>
#include <string>
#include <vector>

#include "monogen/algebra.hpp"

namespace monogen {

class VariableFrame {
public:
    // rows[j-2] holds the coefficients of e_j, j = 2..k, each of length n.
    VariableFrame(const Algebra& alg, std::vector<std::vector<cplx>> rows);

    int k() const { return k_; }
    int m() const { return m_; }
    int n() const { return n_; }

    // 1-based coefficient a_{j,r}; j = 1 reads the implicit unit.
    cplx a(int j, int r) const;

    AlgebraElement e(int j) const;

    AlgebraElement zeta(std::span<const double> x) const;

    // Spectral coordinate attached to idempotent u: xi_u = x_1 + sum x_j a_{j,u}.
    cplx xi(int u, std::span<const double> x) const;

    // Radical coefficients of zeta: T_s = sum_{j>=2} x_j a_{j,s}, s = m+1..n.
    std::vector<cplx> radical_seeds(std::span<const double> x) const;

private:
    void require_point(std::span<const double> x) const;

    int k_ = 0, m_ = 0, n_ = 0;
    std::vector<std::vector<cplx>> rows_;
};

// True when the 2n x k real matrix stacking Re/Im of the frame columns has
// full column rank (real-linear independence of e_1..e_k).
bool frame_independent(const VariableFrame& frame, double tol = 1e-9);

// Human-readable validation issues: k out of range, dependent vectors.
std::vector<std::string> frame_errors(const VariableFrame& frame);

} // namespace monogen
