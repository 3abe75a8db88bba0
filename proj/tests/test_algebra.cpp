#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "monogen/algebra.hpp"
#include "monogen/fixtures.hpp"
#include "support.hpp"

using namespace monogen;
using support::Rng;

namespace {

bool has_violation(const ValidationReport& rep, Violation::Kind kind, int i, int j, int k) {
    for (const auto& v : rep.violations)
        if (v.kind == kind && v.i == i && v.j == j && v.k == k) return true;
    return false;
}

int count_kind(const std::vector<Violation>& vs, Violation::Kind kind) {
    int c = 0;
    for (const auto& v : vs)
        if (v.kind == kind) ++c;
    return c;
}

} // namespace

TEST_CASE("element arithmetic and bounds") {
    AlgebraElement a(3);
    a.coeff(1) = {1.0, 2.0};
    a.coeff(3) = {0.0, -1.0};
    CHECK(a.dim() == 3);
    CHECK(a.coeff(2) == cplx{0.0});
    CHECK_THROWS_AS((void)a.coeff(4), std::out_of_range);
    CHECK_THROWS_AS((void)a.coeff(0), std::out_of_range);

    AlgebraElement b(3);
    b.coeff(1) = {0.5, 0.0};
    CHECK(add(a, b).coeff(1) == cplx{1.5, 2.0});
    CHECK(sub(a, b).coeff(1) == cplx{0.5, 2.0});
    CHECK(scale(cplx{0.0, 1.0}, a).coeff(1) == cplx{-2.0, 1.0});
    CHECK(inf_norm(a) == doctest::Approx(std::sqrt(5.0)));

    AlgebraElement c(2);
    CHECK_THROWS_AS((void)add(a, c), std::invalid_argument);
    CHECK_THROWS_AS((void)sub(c, a), std::invalid_argument);
}

TEST_CASE("constructor rejects malformed shapes") {
    CHECK_THROWS_AS(Algebra(0, 1, {}, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(Algebra(2, 1, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Algebra(1, 3, {}, {1}), std::invalid_argument); // needs two u entries
    CHECK_THROWS_AS(Algebra(1, 1, {}, {1}), std::invalid_argument); // no nilpotents

    UpsilonMap conflicting;
    conflicting[{2, 3, 4}] = cplx{1.0};
    conflicting[{3, 2, 4}] = cplx{2.0};
    CHECK_THROWS_AS(Algebra(1, 4, conflicting, {1, 1, 1}), std::invalid_argument);

    UpsilonMap agreeing;
    agreeing[{2, 3, 4}] = cplx{1.0};
    agreeing[{3, 2, 4}] = cplx{1.0};
    Algebra ok(1, 4, agreeing, {1, 1, 1});
    CHECK(ok.upsilon(2, 3, 4) == cplx{1.0});
    CHECK(ok.upsilon(3, 2, 4) == cplx{1.0});
    CHECK(ok.upsilon(2, 2, 4) == cplx{0.0});
}

TEST_CASE("basis products match the rule oracle on every fixture") {
    for (const auto& fx : fixtures::all_fixtures()) {
        const Algebra& alg = fx.algebra;
        for (int r = 1; r <= alg.n(); ++r)
            for (int s = 1; s <= alg.n(); ++s) {
                AlgebraElement prod = alg.mul(alg.basis(r), alg.basis(s));
                for (int p = 1; p <= alg.n(); ++p) {
                    INFO(fx.name, " r=", r, " s=", s, " p=", p);
                    CHECK(prod.coeff(p) == support::oracle_basis_coeff(alg, r, s, p));
                }
            }
    }
}

TEST_CASE("unit is a two-sided identity, exactly") {
    Rng rng(2024);
    auto algebras = support::random_algebra_pool(rng);
    for (const auto& fx : fixtures::all_fixtures()) algebras.push_back(fx.algebra);
    for (const Algebra& alg : algebras) {
        const AlgebraElement one = alg.unit();
        for (int rep = 0; rep < 10; ++rep) {
            AlgebraElement a = support::random_element(rng, alg);
            CHECK(support::dist(alg.mul(one, a), a) == 0.0);
            CHECK(support::dist(alg.mul(a, one), a) == 0.0);
        }
    }
}

TEST_CASE("multiplication is commutative to the bit") {
    Rng rng(7);
    auto algebras = support::random_algebra_pool(rng);
    for (const auto& fx : fixtures::all_fixtures()) algebras.push_back(fx.algebra);
    for (const Algebra& alg : algebras) {
        for (int rep = 0; rep < 20; ++rep) {
            AlgebraElement a = support::random_element(rng, alg);
            AlgebraElement b = support::random_element(rng, alg);
            AlgebraElement ab = alg.mul(a, b);
            AlgebraElement ba = alg.mul(b, a);
            for (int p = 1; p <= alg.n(); ++p) CHECK(ab.coeff(p) == ba.coeff(p));
        }
    }
}

TEST_CASE("multiplication agrees with the independent rule oracle") {
    Rng rng(11);
    auto algebras = support::random_algebra_pool(rng);
    for (const auto& fx : fixtures::all_fixtures()) algebras.push_back(fx.algebra);
    for (const Algebra& alg : algebras) {
        for (int rep = 0; rep < 20; ++rep) {
            AlgebraElement a = support::random_element(rng, alg);
            AlgebraElement b = support::random_element(rng, alg);
            CHECK(support::dist(alg.mul(a, b), support::oracle_mul(alg, a, b)) <= 1e-12);
        }
    }
}

TEST_CASE("triple products associate on valid algebras") {
    Rng rng(13);
    auto algebras = support::random_algebra_pool(rng);
    for (const auto& fx : fixtures::all_fixtures()) algebras.push_back(fx.algebra);
    for (const Algebra& alg : algebras) {
        for (int rep = 0; rep < 12; ++rep) {
            AlgebraElement a = support::random_element(rng, alg);
            AlgebraElement b = support::random_element(rng, alg);
            AlgebraElement c = support::random_element(rng, alg);
            AlgebraElement lhs = alg.mul(alg.mul(a, b), c);
            AlgebraElement rhs = alg.mul(a, alg.mul(b, c));
            CHECK(support::dist(lhs, rhs) <= 1e-12);
        }
    }
}

TEST_CASE("the spectral functionals are exactly multiplicative and unital") {
    Rng rng(17);
    auto algebras = support::random_algebra_pool(rng);
    for (const Algebra& alg : algebras) {
        for (int u = 1; u <= alg.m(); ++u) CHECK(alg.f(u, alg.unit()) == cplx{1.0});
        for (int rep = 0; rep < 10; ++rep) {
            AlgebraElement a = support::random_element(rng, alg);
            AlgebraElement b = support::random_element(rng, alg);
            AlgebraElement ab = alg.mul(a, b);
            AlgebraElement sum = add(a, b);
            for (int u = 1; u <= alg.m(); ++u) {
                CHECK(alg.f(u, ab) == alg.f(u, a) * alg.f(u, b));
                CHECK(alg.f(u, sum) == alg.f(u, a) + alg.f(u, b));
            }
        }
        CHECK_THROWS_AS((void)alg.f(0, alg.unit()), std::invalid_argument);
        CHECK_THROWS_AS((void)alg.f(alg.m() + 1, alg.unit()), std::invalid_argument);
    }
}

TEST_CASE("radical projection and invertibility predicate") {
    auto fx = fixtures::chain5();
    const Algebra& alg = fx.algebra;
    Rng rng(23);
    AlgebraElement a = support::random_element(rng, alg);
    AlgebraElement rad = alg.radical_project(a);
    for (int u = 1; u <= alg.m(); ++u) CHECK(rad.coeff(u) == cplx{0.0});
    for (int s = alg.m() + 1; s <= alg.n(); ++s) CHECK(rad.coeff(s) == a.coeff(s));

    AlgebraElement b = support::random_invertible(rng, alg);
    CHECK(alg.is_invertible(b));
    b.coeff(2) = cplx{1e-13, 0.0};
    CHECK_FALSE(alg.is_invertible(b));
    CHECK(alg.is_invertible(b, 1e-14));
}

TEST_CASE("validation accepts the bundled algebras with the right case flags") {
    for (const auto& fx : fixtures::all_fixtures()) {
        ValidationReport rep = validate_algebra(fx.algebra);
        INFO(fx.name);
        CHECK(rep.valid());
        CHECK(rep.semi_simple == (fx.algebra.m() == fx.algebra.n()));
    }
    CHECK(validate_algebra(fixtures::chain5().algebra).prop1_case);
    CHECK_FALSE(validate_algebra(fixtures::chain5().algebra).prop2_case);
    CHECK(validate_algebra(fixtures::prop2_pair().algebra).prop2_case);
    CHECK_FALSE(validate_algebra(fixtures::prop2_pair().algebra).prop1_case);
    // A single nilpotent sits in both cases, vacuously.
    CHECK(validate_algebra(fixtures::dual_numbers().algebra).prop1_case);
    CHECK(validate_algebra(fixtures::dual_numbers().algebra).prop2_case);
}

TEST_CASE("validation pinpoints broken associativity") {
    ValidationReport a1 = validate_algebra(fixtures::broken_assoc_nilpotent());
    CHECK_FALSE(a1.valid());
    CHECK(a1.structural.empty());
    CHECK(has_violation(a1, Violation::Kind::AssocA1, 2, 2, 3));
    CHECK(has_violation(a1, Violation::Kind::AssocA1, 3, 2, 2));
    CHECK(count_kind(a1.violations, Violation::Kind::AssocA2) == 0);

    ValidationReport a2 = validate_algebra(fixtures::broken_assoc_idempotent());
    CHECK_FALSE(a2.valid());
    CHECK(a2.structural.empty());
    CHECK(has_violation(a2, Violation::Kind::AssocA2, 1, 3, 4));
    CHECK(has_violation(a2, Violation::Kind::AssocA2, 2, 3, 4));
    CHECK(count_kind(a2.violations, Violation::Kind::AssocA1) == 0);

    ValidationReport p2 = validate_algebra(fixtures::prop2_contradiction());
    CHECK_FALSE(p2.valid());
    CHECK(p2.prop2_case);
    CHECK(has_violation(p2, Violation::Kind::Prop2NonzeroUpsilon, 3, 3, 4));
    CHECK(has_violation(p2, Violation::Kind::AssocA2, 1, 3, 3));
    CHECK(has_violation(p2, Violation::Kind::AssocA2, 2, 3, 3));
}

TEST_CASE("validation flags structural range errors before anything else") {
    UpsilonMap bad;
    bad[{2, 3, 9}] = cplx{1.0};
    Algebra out_of_range(1, 4, bad, {1, 1, 1});
    ValidationReport rep = validate_algebra(out_of_range);
    CHECK_FALSE(rep.valid());
    REQUIRE(rep.structural.size() == 1);
    CHECK(rep.structural[0].kind == Violation::Kind::UpsilonIndexRange);
    CHECK(rep.violations.empty()); // associativity not reported on malformed data

    Algebra bad_u(2, 4, {}, {1, 7});
    ValidationReport rep_u = validate_algebra(bad_u);
    REQUIRE(rep_u.structural.size() == 1);
    CHECK(rep_u.structural[0].kind == Violation::Kind::UMapRange);

    // Arithmetic stays total even on malformed specs.
    AlgebraElement a = bad_u.unit();
    CHECK_NOTHROW((void)bad_u.mul(a, a));
}

TEST_CASE("random valid algebras validate clean across seeds") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        Rng rng(seed);
        for (const Algebra& alg : support::random_algebra_pool(rng)) {
            ValidationReport rep = validate_algebra(alg);
            INFO("seed ", seed, " m=", alg.m(), " n=", alg.n());
            CHECK(rep.valid());
        }
    }
}
