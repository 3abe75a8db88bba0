#include "monogen/fixtures.hpp"

namespace monogen::fixtures {

namespace {

constexpr cplx kI{0.0, 1.0};

// Component sets sized for finite-difference checks: degree three, small
// coefficients, mildly distinct per slot.
MonogenicFunction make_poly_fn(const Algebra& alg, const VariableFrame& frame) {
    MonogenicFunction mf{frame, {}, {}};
    for (int u = 1; u <= alg.m(); ++u) {
        double du = 0.1 * u;
        mf.F.push_back(HolomorphicFn::polynomial(
            {cplx{0.1 + du, 0.2}, cplx{0.5 - du, 0.1}, cplx{-0.2, du}, cplx{0.3 + du, -0.1}}));
    }
    for (int s = alg.m() + 1; s <= alg.n(); ++s) {
        double ds = 0.05 * s;
        mf.G.push_back(HolomorphicFn::polynomial(
            {cplx{-0.1, ds}, cplx{0.3, -0.1}, cplx{0.2, ds}}));
    }
    return mf;
}

MonogenicFunction make_mixed_fn(const Algebra& alg, const VariableFrame& frame) {
    MonogenicFunction mf = make_poly_fn(alg, frame);
    for (std::size_t i = 0; i < mf.F.size(); ++i)
        mf.F[i] = mf.F[i].plus(
            HolomorphicFn::exponential(cplx{0.5, -0.2}, cplx{0.4, 0.1 * (double)i}));
    for (std::size_t i = 0; i < mf.G.size(); ++i)
        mf.G[i] = mf.G[i].plus(
            HolomorphicFn::exponential(cplx{-0.3, 0.1}, cplx{0.25, -0.05 * (double)i}));
    return mf;
}

Fixture assemble(std::string name, Algebra alg, std::vector<std::vector<cplx>> rows) {
    VariableFrame frame(alg, std::move(rows));
    MonogenicFunction poly = make_poly_fn(alg, frame);
    MonogenicFunction mixed = make_mixed_fn(alg, frame);
    return Fixture{std::move(name), std::move(alg), std::move(frame), std::move(poly),
                   std::move(mixed)};
}

} // namespace

Fixture complex_field() {
    Algebra alg(1, 1, {}, {});
    return assemble("complex_field", std::move(alg), {{kI}});
}

Fixture dual_numbers() {
    Algebra alg(1, 2, {}, {1});
    return assemble("dual_numbers", std::move(alg), {{kI, 0.0}, {0.0, 1.0}});
}

Fixture chain3() {
    UpsilonMap ups;
    ups[{2, 2, 3}] = 1.0;
    Algebra alg(1, 3, std::move(ups), {1, 1});
    return assemble("chain3", std::move(alg), {{kI, 1.0, 0.0}, {0.0, 1.0, kI}});
}

Fixture bicomplex() {
    Algebra alg(2, 2, {}, {});
    return assemble("bicomplex", std::move(alg), {{kI, 0.0}, {0.0, kI}});
}

Fixture prop2_pair() {
    Algebra alg(2, 4, {}, {1, 2});
    return assemble("prop2_pair", std::move(alg),
                    {{kI, 0.0, 1.0, 0.0}, {0.0, kI, 0.0, 1.0}});
}

Fixture chain5() {
    UpsilonMap ups;
    ups[{3, 3, 4}] = 1.0;
    ups[{3, 4, 5}] = 1.0;
    Algebra alg(2, 5, std::move(ups), {1, 1, 1});
    return assemble("chain5", std::move(alg),
                    {{kI, 0.0, 1.0, 0.0, 0.0},
                     {0.0, kI, 0.0, 1.0, 0.0},
                     {0.0, 0.0, 0.0, 0.0, 1.0}});
}

std::vector<Fixture> all_fixtures() {
    std::vector<Fixture> out;
    out.push_back(complex_field());
    out.push_back(dual_numbers());
    out.push_back(chain3());
    out.push_back(bicomplex());
    out.push_back(prop2_pair());
    out.push_back(chain5());
    return out;
}

VariableFrame chain3_basis_frame(const Algebra& chain3_algebra) {
    return VariableFrame(chain3_algebra, {{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}});
}

Algebra broken_assoc_nilpotent() {
    UpsilonMap ups;
    ups[{2, 2, 3}] = 1.0;
    ups[{2, 3, 4}] = 1.0;
    ups[{3, 3, 4}] = 1.0;
    return Algebra(1, 4, std::move(ups), {1, 1, 1});
}

Algebra broken_assoc_idempotent() {
    UpsilonMap ups;
    ups[{3, 4, 5}] = 1.0;
    return Algebra(2, 5, std::move(ups), {1, 1, 2});
}

Algebra prop2_contradiction() {
    UpsilonMap ups;
    ups[{3, 3, 4}] = 1.0;
    return Algebra(2, 4, std::move(ups), {1, 2});
}

} // namespace monogen::fixtures
