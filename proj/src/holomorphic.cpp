#include "monogen/holomorphic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monogen {

static void strip_leading_zeros(std::vector<cplx>& poly) {
    while (!poly.empty() && poly.back() == cplx{}) poly.pop_back();
}

HolomorphicFn::HolomorphicFn(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (auto& t : terms_) strip_leading_zeros(t.poly);
    std::erase_if(terms_, [](const Term& t) { return t.poly.empty(); });
}

HolomorphicFn HolomorphicFn::polynomial(std::vector<cplx> coeffs) {
    return HolomorphicFn({Term{std::move(coeffs), std::nullopt}});
}

HolomorphicFn HolomorphicFn::constant(cplx c) { return polynomial({c}); }

HolomorphicFn HolomorphicFn::exponential(cplx lambda, cplx scale) {
    return HolomorphicFn({Term{{scale}, lambda}});
}

cplx HolomorphicFn::eval(cplx z) const {
    cplx out{};
    for (const Term& t : terms_) {
        cplx p{};
        for (auto it = t.poly.rbegin(); it != t.poly.rend(); ++it) p = p * z + *it;
        if (t.exp_lambda) p *= std::exp(*t.exp_lambda * z);
        out += p;
    }
    return out;
}

HolomorphicFn HolomorphicFn::derivative() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term d;
        d.exp_lambda = t.exp_lambda;
        const std::size_t deg = t.poly.size();
        if (t.exp_lambda) {
            // (p e^{lz})' = (p' + l p) e^{lz}
            d.poly.resize(deg);
            for (std::size_t i = 0; i < deg; ++i) {
                cplx c = *t.exp_lambda * t.poly[i];
                if (i + 1 < deg) c += static_cast<double>(i + 1) * t.poly[i + 1];
                d.poly[i] = c;
            }
        } else if (deg > 1) {
            d.poly.resize(deg - 1);
            for (std::size_t i = 0; i + 1 < deg; ++i)
                d.poly[i] = static_cast<double>(i + 1) * t.poly[i + 1];
        }
        out.push_back(std::move(d));
    }
    return HolomorphicFn(std::move(out));
}

HolomorphicFn HolomorphicFn::derivative(int order) const {
    if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
    HolomorphicFn out = *this;
    for (int i = 0; i < order; ++i) out = out.derivative();
    return out;
}

HolomorphicFn HolomorphicFn::plus(const HolomorphicFn& other) const {
    std::vector<Term> out = terms_;
    out.insert(out.end(), other.terms_.begin(), other.terms_.end());
    return HolomorphicFn(std::move(out));
}

HolomorphicFn HolomorphicFn::scaled(cplx lambda) const {
    std::vector<Term> out = terms_;
    for (auto& t : out)
        for (auto& c : t.poly) c *= lambda;
    return HolomorphicFn(std::move(out));
}

bool HolomorphicFn::identical(const HolomorphicFn& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& a = terms_[i];
        const Term& b = other.terms_[i];
        if (a.exp_lambda.has_value() != b.exp_lambda.has_value()) return false;
        if (a.exp_lambda && *a.exp_lambda != *b.exp_lambda) return false;
        if (a.poly != b.poly) return false;
    }
    return true;
}

cplx contour_quadrature(const std::function<cplx(cplx)>& g, cplx center, double radius,
                        int nodes) {
    if (nodes < 2) throw std::invalid_argument("contour quadrature needs at least 2 nodes");
    if (radius <= 0.0) throw std::invalid_argument("contour radius must be positive");
    cplx acc{};
    for (int j = 0; j < nodes; ++j) {
        double theta = 2.0 * std::numbers::pi * j / nodes;
        cplx w = std::polar(radius, theta);
        acc += g(center + w) * w;
    }
    return acc / static_cast<double>(nodes);
}

ContourResult contour_integral_adaptive(const std::function<AlgebraElement(cplx)>& g,
                                        cplx center, double radius, int start_nodes,
                                        double tol, int max_nodes) {
    auto run = [&](int nodes) {
        AlgebraElement acc;
        for (int j = 0; j < nodes; ++j) {
            double theta = 2.0 * std::numbers::pi * j / nodes;
            cplx w = std::polar(radius, theta);
            AlgebraElement v = g(center + w);
            if (acc.dim() == 0) acc = AlgebraElement(v.dim());
            acc = add(acc, scale(w, v));
        }
        return scale(1.0 / static_cast<double>(nodes), acc);
    };

    ContourResult res;
    int nodes = start_nodes;
    AlgebraElement prev = run(nodes);
    while (nodes * 2 <= max_nodes) {
        nodes *= 2;
        AlgebraElement next = run(nodes);
        double diff = inf_norm(sub(next, prev));
        prev = std::move(next);
        if (diff <= tol) {
            res.value = std::move(prev);
            res.nodes = nodes;
            return res;
        }
    }
    res.value = std::move(prev);
    res.nodes = nodes;
    res.converged = false;
    return res;
}

} // namespace monogen
