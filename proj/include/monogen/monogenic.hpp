#pragma once
// Monogenic functions on the linear span of a variable frame, represented by
// one holomorphic component F_u per idempotent and one G_s per nilpotent.
// Evaluation has two routes: the explicit finite formula built from the
// coefficient table, and contour integrals against the resolvent.

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "monogen/algebra.hpp"
#include "monogen/frame.hpp"
#include "monogen/holomorphic.hpp"
#include "monogen/resolvent.hpp"

namespace monogen {

class ContourDegenerateError : public std::runtime_error {
public:
    ContourDegenerateError(int u1_, int u2_)
        : std::runtime_error("spectral points xi_" + std::to_string(u1_) + " and xi_" +
                             std::to_string(u2_) + " coincide; contours cannot separate them"),
          u1(u1_), u2(u2_) {}
    int u1, u2;
};

struct MonogenicFunction {
    VariableFrame frame;
    std::vector<HolomorphicFn> F; // m components, indexed by idempotent
    std::vector<HolomorphicFn> G; // n-m components, indexed by nilpotent
};

// Per-idempotent check that some frame coefficient a_{j,u} leaves the real
// axis; exactly then does f_u map the span onto all of C.
std::vector<bool> surjectivity_check(const VariableFrame& frame, double tol = kZeroTol);

void require_monogenic_shape(const Algebra& alg, const MonogenicFunction& mf);

// Explicit evaluation:
//   Phi = sum_u F_u(xi_u) I_u
//       + sum_s sum_r Q_{r,s} F^{(r-1)}_{u_s}(xi_{u_s}) / (r-1)!  I_s
//       + sum_q G_q(xi_{u_q}) I_q
//       + sum_{q,s: u_q = u_s} sum_r Q_{r,s} G^{(r-1)}_q(xi_{u_q}) / (r-1)!  I_q I_s
// with the basis products taken from the multiplication table.
AlgebraElement eval_monogenic(const Algebra& alg, const MonogenicFunction& mf,
                              std::span<const double> x);

struct ContourOptions {
    int start_nodes = 256;
    int max_nodes = 4096;
    double agree_tol = 1e-10;
    double degenerate_tol = 1e-9;
    double pole_tol = kZeroTol;
};

struct ContourEvalResult {
    AlgebraElement value;
    int max_nodes_used = 0;
    bool converged = true;
};

// Independent evaluation route: for each component, a circle around the
// matching spectral point with radius min(1, half the distance to the nearest
// other spectral point). Requires pairwise distinct spectral points.
ContourEvalResult eval_monogenic_contour(const Algebra& alg, const MonogenicFunction& mf,
                                         std::span<const double> x, ContourOptions opts = {});

// Derivative of given order: same frame, every component differentiated.
MonogenicFunction gateaux_derivative(const MonogenicFunction& mf, int order);

struct CauchyRiemannReport {
    double step = 0.0;
    std::vector<double> residuals; // one per direction j = 2..k
    double max_residual = 0.0;
};

using ComponentMap = std::function<AlgebraElement(std::span<const double>)>;

// Central-difference comparison of d/dx_j against multiplication by e_j of
// d/dx_1, for an arbitrary coefficient map on R^k.
CauchyRiemannReport check_cauchy_riemann_fn(const Algebra& alg, const VariableFrame& frame,
                                            const ComponentMap& fn, std::span<const double> x,
                                            double h);

double default_fd_step(std::span<const double> x, double base = 1e-4);

CauchyRiemannReport check_cauchy_riemann(const Algebra& alg, const MonogenicFunction& mf,
                                         std::span<const double> x, double h);
CauchyRiemannReport check_cauchy_riemann(const Algebra& alg, const MonogenicFunction& mf,
                                         std::span<const double> x);

struct GridSpec {
    struct Axis {
        double lo = 0.0, hi = 0.0;
        int count = 1;
    };
    std::vector<Axis> axes;

    long long total() const {
        long long t = 1;
        for (const Axis& a : axes) t *= a.count;
        return t;
    }
    std::vector<double> point(long long index) const;
};

} // namespace monogen
