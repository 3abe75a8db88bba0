#pragma once
// Entire functions built from terms poly(z) * exp(lambda z). The class is
// closed under differentiation with exact coefficient arithmetic, which keeps
// high-order derivative chains honest.

#include <functional>
#include <optional>
#include <vector>

#include "monogen/algebra.hpp"

namespace monogen {

class HolomorphicFn {
public:
    struct Term {
        std::vector<cplx> poly;           // ascending coefficients
        std::optional<cplx> exp_lambda;   // absent: plain polynomial
    };

    HolomorphicFn() = default; // the zero function
    explicit HolomorphicFn(std::vector<Term> terms);

    static HolomorphicFn polynomial(std::vector<cplx> coeffs);
    static HolomorphicFn constant(cplx c);
    // scale * exp(lambda z)
    static HolomorphicFn exponential(cplx lambda, cplx scale = 1.0);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    cplx eval(cplx z) const;

    HolomorphicFn derivative() const;
    HolomorphicFn derivative(int order) const;

    HolomorphicFn plus(const HolomorphicFn& other) const;
    HolomorphicFn scaled(cplx lambda) const;

    // Exact structural equality of coefficient data.
    bool identical(const HolomorphicFn& other) const;

private:
    std::vector<Term> terms_;
};

// Trapezoidal (1/2pi i) contour integral of g over the circle |t-center|=radius
// with a fixed node count. Spectrally accurate for integrands analytic in a
// neighborhood of the circle.
cplx contour_quadrature(const std::function<cplx(cplx)>& g, cplx center, double radius,
                        int nodes);

struct ContourResult {
    AlgebraElement value;
    int nodes = 0;
    bool converged = true;
};

// Node-doubling variant for algebra-valued integrands: starts at start_nodes,
// doubles until two successive levels agree to tol in the sup norm or the cap
// is hit (converged = false in that case).
ContourResult contour_integral_adaptive(const std::function<AlgebraElement(cplx)>& g,
                                        cplx center, double radius, int start_nodes = 256,
                                        double tol = 1e-10, int max_nodes = 4096);

} // namespace monogen
