/*
   Copyright 2026 The klpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "klpoly/orthogonality.hpp"
#include "klpoly/transform.hpp"

using namespace klpoly;
using namespace klpoly::test;

namespace {
const Poly X = Poly::monomial(Var::x, 1);
const Poly ONE = Poly::constant(Var::x, 1);
}  // namespace

TEST_CASE("Gram checks") {
    Rat a1 = rat(2, 3);
    CHECK(gram_check(laguerre_moments(a1), laguerre(a1, 10).polys, 10));
    CHECK(gram_check(hermite_moments(), hermite(10).polys, 10));
    CHECK_FALSE(gram_check(laguerre_moments(a1 + 1), laguerre(a1, 6).polys, 6));
    Rat a = rat(1, 2), l = 2;
    CHECK(gram_check(perturbed_laguerre_moments(a, l), perturbed_laguerre(a, l, 10).polys.polys, 10));
}

TEST_CASE("d-orthogonality of the reversed Appell family") {
    Rat a1 = 1, a2 = rat(3, 2);
    auto B = reversed_appell({a1, a2}, 16).polys;
    MomentFunctional v0 = v0_moments(a1, a2), v1 = v1_moments(a1, a2);
    CHECK(dual_vector_check(B, {v0, v1}, 2, 12).ok);
    MomentFunctional u1 = dual_functional(B, 1);
    for (int n = 0; n <= 12; ++n) {
        CHECK(u1(n) == v1(n));
        CHECK(dual_functional(B, 0)(n) == v0(n));
    }
    CHECK(v1.apply(B[1]) == 1);
    MomentFunctional g = v1_moments_gamma_form(a1, a2);
    bool all_same = true;
    for (int n = 0; n <= 6; ++n) all_same = all_same && g(n) == v1(n);
    CHECK_FALSE(all_same);
}

TEST_CASE("moments to recurrence") {
    Rat a1 = rat(1, 2);
    MomentRecurrence r = moments_to_recurrence(laguerre_moments(a1), 8);
    CHECK_FALSE(r.singular_order.has_value());
    for (int n = 0; n < 8; ++n) CHECK(r.beta[n] == 2 * n + a1 + 1);
    for (int n = 1; n < 8; ++n) CHECK(r.gamma[n] == n * (n + a1));
    CHECK(r.polys == laguerre(a1, 8).polys);
    MomentRecurrence h = moments_to_recurrence(generalized_hermite_moments(1), 8);
    for (int n = 1; n < 8; ++n) CHECK(h.gamma[n] == rat(n + (n % 2) * 2, 2));
    MomentFunctional degenerate{[](int n) -> Rat { return (n == 0 ? 1 : 0) + (n == 2 ? 1 : 0); }, "delta"};
    MomentRecurrence d = moments_to_recurrence(degenerate, 6);
    REQUIRE(d.singular_order.has_value());
    CHECK(*d.singular_order == 4);
    std::vector<Rat> H = hankel_determinants(degenerate, 5);
    CHECK(H[0] == 1);
    CHECK(H[3] == 0);
}

TEST_CASE("Hankel determinants") {
    std::vector<Rat> H = hankel_determinants(laguerre_moments(0), 6);
    // H_k = prod_{j<k} (j!)^2 for the Laguerre form with a1 = 0
    Rat expect = 1;
    for (int k = 1; k <= 6; ++k) {
        expect *= factorial(k - 1) * factorial(k - 1);
        CHECK(H[k - 1] == expect);
    }
}

TEST_CASE("Pearson pairs") {
    Rat a1 = rat(3, 4), mu = rat(1, 2);
    CHECK(pearson_check(laguerre_moments(a1), {X, X - ONE * (a1 + 1)}, 12));
    CHECK(pearson_check(hermite_moments(), {ONE, X * Rat(2)}, 12));
    CHECK(pearson_check(generalized_hermite_moments(mu), {X, X * X * Rat(2) - ONE * (2 * mu + 1)}, 12));
    CHECK_FALSE(pearson_check(hermite_moments(), {ONE, X}, 12));
}

TEST_CASE("class reduction") {
    Rat a1 = rat(3, 4);
    ClassReduction l = class_reduce({X, X - ONE * (a1 + 1)}, laguerre_moments(a1));
    CHECK(l.pair.phi == X);
    CHECK(l.cls() == 0);
    PearsonPair gh{X, X * X * Rat(2) - ONE * 2};
    ClassReduction g = class_reduce(gh, generalized_hermite_moments(rat(1, 2)));
    CHECK(g.pair.phi == gh.phi);
    CHECK(g.cls() == 1);
    // (x^2, x(x - 3 - 2a)) collapses to the Laguerre pair at lambda = 2 + 2a
    Rat a = rat(1, 2);
    PearsonPair big{X * X, X * (X - ONE * (3 + 2 * a))};
    MomentFunctional u = perturbed_laguerre_moments(a, 2 + 2 * a);
    REQUIRE(pearson_check(u, big, 12));
    ClassReduction r = class_reduce(big, u);
    CHECK(r.pair.phi == X);
    CHECK(r.pair.psi == X - ONE * (2 + 2 * a));
    MomentFunctional u2 = perturbed_laguerre_moments(a, 1);
    REQUIRE(pearson_check(u2, big, 12));
    CHECK(class_reduce(big, u2).pair.phi == X * X);
}

TEST_CASE("affine transforms") {
    Rat a1 = rat(3, 4);
    MomentFunctional u = laguerre_moments(a1);
    PearsonPair p{X, X - ONE * (a1 + 1)};
    MomentFunctional same = affine_transform(u, 1, 0);
    for (int n = 0; n < 6; ++n) CHECK(same(n) == u(n));
    CHECK(affine_transform(p, 1, 0).phi == p.phi);
    for (const auto& [a, b] : std::vector<std::pair<Rat, Rat>>{{2, 0}, {rat(1, 3), 1}, {-1, rat(1, 2)}}) {
        MomentFunctional v = affine_transform(u, a, b);
        PearsonPair q = affine_transform(p, a, b);
        CHECK(pearson_check(v, q, 10));
        PearsonPair gh{X, X * X * Rat(2) - ONE * 3};
        MomentFunctional w = affine_transform(generalized_hermite_moments(1), a, b);
        PearsonPair gq = affine_transform(gh, a, b);
        CHECK(pearson_check(w, gq, 10));
        CHECK(class_reduce(gq, w).cls() == 1);
    }
}

TEST_CASE("Maroni perturbation") {
    Rat a = rat(1, 2);
    MomentFunctional w = laguerre_moments(2 * a + 2);
    MomentFunctional zero = x_inverse_delta(w, 0);
    CHECK(zero(0) == 1);
    for (int n = 1; n < 5; ++n) CHECK(zero(n) == 0);
    for (const Rat& l : {Rat(1), Rat(2), rat(1, 3)}) {
        MomentFunctional u = x_inverse_delta(w, l);
        MomentFunctional direct = perturbed_laguerre_moments(a, l);
        for (int n = 0; n < 8; ++n) CHECK(u(n) == direct(n));
        MaroniResult m = maroni_perturbation(laguerre(2 * a + 2, 10).polys, w, l, 8);
        PerturbedLaguerre p = perturbed_laguerre(a, l, 8);
        CHECK(m.a == p.a);
        CHECK(m.polys == p.polys.polys);
        CHECK(m.beta == p.beta);
        CHECK(m.gamma == p.gamma);
    }
    CHECK_THROWS_AS(maroni_perturbation(laguerre(2 * a + 2, 10).polys, w, 0, 8), std::domain_error);
}

TEST_CASE("finite-type relation") {
    Rat a = rat(1, 2), l = 2;
    PerturbedLaguerre p = perturbed_laguerre(a, l, 12);
    FiniteTypeReport r = finite_type_check(laguerre(2 * a + 2, 12).polys, p.polys.polys, p.gamma, 10);
    CHECK(r.x_v);
    CHECK(r.v_to_b);
    CHECK_FALSE(r.x_v_next);
}

TEST_CASE("connection coefficients") {
    Rat a1 = rat(1, 3), a = rat(1, 2);
    const int nmax = 10;
    MomentRecurrence mr = moments_to_recurrence(laguerre_moments(a1), nmax);
    StructuralRelation ex = extract_structural(kl_forward_all(mr.polys, a));
    StructuralRelation co = connection_coeffs(mr.beta, mr.gamma, a, nmax, ConnectionVariant::plus_one_shift);
    StructuralRelation pr = connection_coeffs(mr.beta, mr.gamma, a, nmax, ConnectionVariant::minus_one_shift);
    for (int n = 0; n < nmax; ++n) {
        CHECK(co.zeta[n] == 2 * n + a1 + 1 - (a + n + 1) * (a + n + 1));
        CHECK(co.a[n] == ex.a[n]);
    }
    CHECK(ex.a[1][0] == -(2 * a + 2) * (a1 + 1));
    CHECK(pr.a[1][0] == -2 * a * (a1 + 1));
    MomentRecurrence hr = moments_to_recurrence(hermite_moments(), nmax);
    StructuralRelation hp = connection_coeffs(hr.beta, hr.gamma, a, nmax, ConnectionVariant::minus_one_shift);
    for (int n = 1; n < nmax; ++n) CHECK(hp.a[n][n - 1] == hr.gamma[n]);
}

TEST_CASE("classification") {
    Rat a = rat(1, 2);
    ClassificationReport l = classify({X, X - ONE}, a, laguerre_moments(0));
    CHECK(l.kase == 'b');
    CHECK(l.d == 2);
    CHECK(l.s == 0);
    ClassificationReport h = classify({ONE, X * Rat(2)}, a, hermite_moments());
    CHECK(h.kase == 'c');
    CHECK(h.N == 2);
    CHECK(h.rho == X * X + ONE * ((1 + 2 * a) / 2));
    CHECK(h.d == 4);
    CHECK(h.s == 0);
    CHECK(h.flag("d >= 4"));
    ClassificationReport g = classify({X, X * X * Rat(2) - ONE * 2}, a, generalized_hermite_moments(rat(1, 2)));
    CHECK(g.kase == 'b');
    CHECK(g.d == 4);
    CHECK(g.s == 1);
    CHECK(g.flag("class consistent with pair"));
    ClassificationReport bad = classify({ONE, X}, a, hermite_moments());
    CHECK_FALSE(bad.pearson_ok);
    CHECK(bad.kase == 'n');
}

TEST_CASE("differential relation") {
    Rat a = rat(1, 2);
    const int nmax = 10;
    ClassificationReport l = classify({X, X - ONE}, a, laguerre_moments(0));
    MomentRecurrence lr = moments_to_recurrence(laguerre_moments(0), nmax + l.d + 2);
    DifferentialRelationReport t = differential_relation_check(lr.beta, lr.gamma, l, a, nmax);
    CHECK(t.double_rho_support_ok);
    CHECK(t.lag0_is_zeta_minus_alpha2);
    CHECK(t.lag_minus1_is_gamma_n);
    CHECK_FALSE(t.lag_minus1_is_gamma_1);
    CHECK(t.upper_matches_structural);
    CHECK_FALSE(t.single_rho_support_ok);
    ClassificationReport h = classify({ONE, X * Rat(2)}, a, hermite_moments());
    MomentRecurrence hr = moments_to_recurrence(hermite_moments(), nmax + h.d + 2);
    DifferentialRelationReport th = differential_relation_check(hr.beta, hr.gamma, h, a, nmax);
    CHECK(th.double_rho_support_ok);
    CHECK(th.lag0_is_zeta_minus_alpha2);
}
