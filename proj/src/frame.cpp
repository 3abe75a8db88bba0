#include "monogen/frame.hpp"

#include <algorithm>
#include <cmath>

namespace monogen {

VariableFrame::VariableFrame(const Algebra& alg, std::vector<std::vector<cplx>> rows)
    : k_(static_cast<int>(rows.size()) + 1), m_(alg.m()), n_(alg.n()), rows_(std::move(rows)) {
    for (const auto& row : rows_)
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("frame row length must equal the algebra dimension");
}

cplx VariableFrame::a(int j, int r) const {
    if (j < 1 || j > k_ || r < 1 || r > n_)
        throw std::invalid_argument("frame coefficient index out of range");
    if (j == 1) return r <= m_ ? cplx{1.0} : cplx{};
    return rows_[static_cast<std::size_t>(j - 2)][static_cast<std::size_t>(r - 1)];
}

AlgebraElement VariableFrame::e(int j) const {
    AlgebraElement out(n_);
    for (int r = 1; r <= n_; ++r) out.coeff(r) = a(j, r);
    return out;
}

void VariableFrame::require_point(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != k_)
        throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                    " coordinates, frame has k = " + std::to_string(k_));
}

AlgebraElement VariableFrame::zeta(std::span<const double> x) const {
    require_point(x);
    AlgebraElement out(n_);
    for (int u = 1; u <= m_; ++u) out.coeff(u) = x[0];
    for (int j = 2; j <= k_; ++j)
        for (int r = 1; r <= n_; ++r)
            out.coeff(r) += x[static_cast<std::size_t>(j - 1)] * a(j, r);
    return out;
}

cplx VariableFrame::xi(int u, std::span<const double> x) const {
    require_point(x);
    if (u < 1 || u > m_) throw std::invalid_argument("xi index outside 1..m");
    cplx out = x[0];
    for (int j = 2; j <= k_; ++j) out += x[static_cast<std::size_t>(j - 1)] * a(j, u);
    return out;
}

std::vector<cplx> VariableFrame::radical_seeds(std::span<const double> x) const {
    require_point(x);
    std::vector<cplx> t(static_cast<std::size_t>(n_ - m_));
    for (int s = m_ + 1; s <= n_; ++s) {
        cplx acc{};
        for (int j = 2; j <= k_; ++j) acc += x[static_cast<std::size_t>(j - 1)] * a(j, s);
        t[static_cast<std::size_t>(s - m_ - 1)] = acc;
    }
    return t;
}

// Column-pivoted Gaussian elimination rank of a dense real matrix.
static int real_rank(std::vector<std::vector<double>> mat, double tol) {
    const int rows = static_cast<int>(mat.size());
    const int cols = rows ? static_cast<int>(mat[0].size()) : 0;
    double scale = 0.0;
    for (const auto& row : mat)
        for (double v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0;
    const double cut = tol * scale;

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        double best = cut;
        for (int r = rank; r < rows; ++r)
            if (std::abs(mat[r][col]) > best) { best = std::abs(mat[r][col]); piv = r; }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            double factor = mat[r][col] / mat[rank][col];
            for (int c = col; c < cols; ++c) mat[r][c] -= factor * mat[rank][c];
        }
        ++rank;
    }
    return rank;
}

bool frame_independent(const VariableFrame& frame, double tol) {
    const int n = frame.n(), k = frame.k();
    std::vector<std::vector<double>> mat(static_cast<std::size_t>(2 * n),
                                         std::vector<double>(static_cast<std::size_t>(k), 0.0));
    for (int j = 1; j <= k; ++j)
        for (int r = 1; r <= n; ++r) {
            cplx c = frame.a(j, r);
            mat[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(j - 1)] = c.real();
            mat[static_cast<std::size_t>(n + r - 1)][static_cast<std::size_t>(j - 1)] = c.imag();
        }
    return real_rank(std::move(mat), tol) == k;
}

std::vector<std::string> frame_errors(const VariableFrame& frame) {
    std::vector<std::string> errs;
    if (frame.k() < 2 || frame.k() > 2 * frame.n())
        errs.push_back("k = " + std::to_string(frame.k()) + " outside 2..2n");
    if (!frame_independent(frame))
        errs.push_back("frame vectors are linearly dependent over R");
    return errs;
}

} // namespace monogen
