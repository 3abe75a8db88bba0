#pragma once
// Constant-coefficient operators L = sum_alpha C_alpha d^N/dx^alpha acting on
// the coefficient functions of a monogenic map. The bridge identity
//   L Phi = Phi^(N) * sum_alpha C_alpha e_2^{alpha_2} ... e_k^{alpha_k}
// turns "L Phi = 0" into the vanishing of one algebra element.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monogen/monogenic.hpp"

namespace monogen {

struct PdeTerm {
    std::vector<int> alpha; // length k, first slot is the x_1 order
    double c = 0.0;
};

struct PDESpec {
    int order = 0; // common total degree N of every multi-index
    std::vector<PdeTerm> terms;

    int k() const { return terms.empty() ? 0 : static_cast<int>(terms[0].alpha.size()); }
};

std::vector<std::string> pde_errors(const PDESpec& pde);

// sum_alpha C_alpha e_2^{alpha_2} ... e_k^{alpha_k}; e_1 powers collapse into
// the unit. Computed with the multiplication table.
AlgebraElement characteristic_sum(const Algebra& alg, const VariableFrame& frame,
                                  const PDESpec& pde);

// The real polynomial P(b_2..b_k) = sum_alpha C_alpha b_2^{alpha_2} ... b_k^{alpha_k}.
double p_polynomial_eval(const PDESpec& pde, std::span<const double> b);

struct ScanReport {
    enum class Verdict { NoRootFound, SignChangeFound };
    double min_abs = 0.0;
    double min_val = 0.0;
    double max_val = 0.0;
    std::vector<double> argmin;
    Verdict verdict = Verdict::NoRootFound;
};

// Tensor-grid sampling of P over a box. Heuristic: a clean sweep only reports
// that no root was seen on the grid.
ScanReport p_nonvanishing_scan(const PDESpec& pde,
                               const std::vector<std::pair<double, double>>& box,
                               int grid_points);

// Offsets and weights of the symmetric second-order stencil for d^order/dt^order,
// before division by h^order.
std::vector<std::pair<int, double>> central_stencil(int order);

using PointEval = std::function<AlgebraElement(std::span<const double>)>;

// Finite-difference application of the full operator at x with step h.
AlgebraElement apply_pde_operator_fd(const PDESpec& pde, const PointEval& fn,
                                     std::span<const double> x, double h);

// Max over coefficient slots of max(|Re|, |Im|) of (L Phi)(x), with Phi
// evaluated through the explicit representation.
double check_pde_residual(const Algebra& alg, const MonogenicFunction& mf, const PDESpec& pde,
                          std::span<const double> x, double h);
double check_pde_residual(const Algebra& alg, const MonogenicFunction& mf, const PDESpec& pde,
                          std::span<const double> x);

struct Theorem4Report {
    double char_norm = 0.0;        // ||characteristic sum||_inf
    bool char_zero = false;
    ScanReport scan;
    bool p_nonvanishing = false;   // grid verdict was NoRootFound
    bool frame_li = false;
    std::vector<double> projection_residuals; // |f_u(char sum)| per u
    bool projections_zero = false;
    std::vector<bool> surjective;
    bool surjective_all = false;
    bool hypotheses_hold = false;  // char_zero && p_nonvanishing && frame_li
    bool conclusion_holds = false; // every f_u maps the span onto C
};

struct Theorem4Options {
    std::vector<std::pair<double, double>> box; // empty: [-10, 10] per axis
    int grid_points = 11;
    double char_tol = 1e-10;
};

Theorem4Report theorem4_check(const Algebra& alg, const VariableFrame& frame, const PDESpec& pde,
                              Theorem4Options opts = {});

} // namespace monogen
