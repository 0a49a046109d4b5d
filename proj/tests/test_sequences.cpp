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
#include "klpoly/sequences.hpp"
#include "klpoly/structural.hpp"
#include "klpoly/transform.hpp"

using namespace klpoly;
using namespace klpoly::test;

TEST_CASE("classical families") {
    CHECK(laguerre(0, 2)[2] == px({2, -4, 1}));
    Rat a1 = rat(3, 2);
    CHECK(laguerre(a1, 1)[1] == px({-(a1 + 1), 1}));
    CHECK(hermite(2)[2] == px({rat(-1, 2), 0, 1}));
    CHECK_THROWS_AS(mops_from_recurrence([](int) { return Rat(0); }, [](int) { return Rat(0); }, 3),
                    std::domain_error);
}

TEST_CASE("recurrence with d = 1 matches the three-term builder") {
    Recurrence r;
    r.d = 1;
    r.beta = [](int n) -> Rat { return Rat(2 * n + 1); };
    r.coef = [](int n, int) -> Rat { return Rat(n * n); };
    CHECK(dops_from_recurrence(r, 6).polys == laguerre(0, 6).polys);
}

TEST_CASE("Hermite-type sequences") {
    CHECK(hermite_type(1, 2)[2] == px({rat(-1, 2), 0, 1}));
    CHECK(hermite_type(2, 4)[3] == px({rat(-1, 3), 0, 0, 1}));
    for (int d = 1; d <= 3; ++d) {
        Mps H = hermite_type(d, 16);
        for (int n = 0; n < 16; ++n) CHECK(H[n + 1].derivative() == H[n] * Rat(n + 1));
    }
}

TEST_CASE("reversed Appell families") {
    Rat a1 = rat(1, 2), a2 = 2;
    CHECK(reversed_appell({a1}, 1)[1] == px({-(a1 + 1), 1}));
    CHECK(reversed_appell({a1}, 8).polys == laguerre(a1, 8).polys);
    CHECK(reversed_appell_lambda({a1, a2}, 2) == 1 / ((a1 + 1) * (a1 + 2) * (a2 + 1) * (a2 + 2)));
    CHECK_THROWS_AS(reversed_appell({Rat(-2)}, 3), std::domain_error);
    CHECK(bateman_recurrence_check(a1, a2, 12));
    CHECK(bateman_beta(0, a1, a2) == (a1 + 1) * (a2 + 1));
    CHECK(bateman_gamma1(1, a1, a2) == (3 + a1 + a2) * (1 + a1) * (1 + a2));
    CHECK(reversed_appell_parameter_shift_check({a1, a2}, 10));
    CHECK(reversed_appell_derivative_check({a1, a2}, 10));
}

TEST_CASE("hypergeometric pairs") {
    Rat a1 = rat(2, 3), a2 = rat(1, 2), al = rat(1, 4);
    HypergeomPair h1 = hypergeom_pair({}, {a1 + 1}, 6, al);
    CHECK(h1.source.polys == reversed_appell({a1}, 6).polys);
    CHECK(h1.image_matches_series);
    HypergeomPair h2 = hypergeom_pair({}, {a1 + 1, a2 + 1}, 6, al);
    CHECK(h2.source.polys == reversed_appell({a1, a2}, 6).polys);
    CHECK(h2.image_matches_series);
    for (const Poly& p : kl_forward_all(reversed_appell({a1, a2}, 6).polys, 0)) CHECK(p.is_monic());
}

TEST_CASE("continuous dual Hahn image") {
    Rat al = 0, a1 = 1, a2 = rat(3, 2);
    Mps S = cdh_monic(al, a1, a2, 12);
    CHECK(S[1] == pz({(al + 1) * (al + 1) - (a1 + 1) * (a2 + 1), 1}));
    CHECK(cdh_gamma(1, al, a1, a2) == (a1 + 1) * (a2 + 1) * (a1 + a2 - 2 * al));
    CHECK(cdh_recurrence_check(al, a1, a2, 12));
    // a1 + a2 = 2 alpha makes the first gamma vanish
    CHECK_THROWS_AS(cdh_monic(1, rat(1, 2), rat(3, 2), 4), std::domain_error);
}

TEST_CASE("structural relation extraction") {
    Rat a = rat(1, 2);
    StructuralRelation m = extract_structural(monomial_images(8, a));
    for (int n = 0; n < 8; ++n) {
        CHECK(m.zeta[n] == -(a + n + 1) * (a + n + 1));
        for (const Rat& v : m.a[n]) CHECK(is_zero(v));
    }
    CHECK(m.detected_d == 0);
    StructuralRelation l = extract_structural(kl_forward_all(laguerre(rat(1, 3), 14).polys, a));
    CHECK(l.detected_d == 2);
    CHECK(replay_structural(l) == kl_forward_all(laguerre(rat(1, 3), 14).polys, a));
    StructuralRelation h = extract_structural(kl_forward_all(hermite_type(1, 14).polys, a));
    CHECK(h.detected_d == 4);
    StructuralRelation h2 = extract_structural(kl_forward_all(hermite_type(2, 20).polys, a));
    CHECK(h2.detected_d == 6);
}

TEST_CASE("Appell image recurrence") {
    for (int d = 1; d <= 3; ++d)
        for (const Rat& a : {Rat(0), rat(1, 2)}) {
            AppellImageCheck c = appell_image_check(d, a, 14, LastLagCoefficient::binomial_pair);
            CHECK(c.recurrence_holds);
            CHECK(c.initial_terms_hold_through == d);
            CHECK(hermite_type_delta_check(d, a, 12));
        }
    Recurrence r = appell_image_recurrence(1, rat(1, 2), LastLagCoefficient::binomial_pair);
    // coef holds the subtracted coefficient, so the displayed +(4 + 2a) appears negated
    CHECK(r.coef(2, 2) == -(4 + 2 * rat(1, 2)));
    // The single-binomial coefficient agrees only while C(n-2, d) = 1.
    CHECK_FALSE(appell_image_check(2, 0, 14, LastLagCoefficient::single_binomial).recurrence_holds);
}

TEST_CASE("reversed Appell images") {
    Rat a1 = 1, a2 = rat(3, 2), a3 = rat(5, 2);
    for (const Rat& a : {Rat(0), rat(1, 2)}) {
        CHECK(reversed_appell_image_check({a1}, a, 12));
        CHECK(reversed_appell_image_check({a1, a2}, a, 12));
        CHECK(reversed_appell_image_check({a1, a2, a3}, a, 12));
        StructuralRelation s3 = extract_structural(kl_forward_all(reversed_appell({a1, a2, a3}, 12).polys, a));
        CHECK(s3.detected_d == 3);
        LaguerreImageRecurrenceCheck lc = laguerre_image_recurrence_check(a, a1, 10);
        CHECK(lc.beta_at_step);
        CHECK_FALSE(lc.beta_at_next_step);
        CHECK(reversed_appell_delta_check({a1, a2}, a, 10, 0));
        CHECK_FALSE(reversed_appell_delta_check({a1, a2}, a, 10, -1));
    }
}

TEST_CASE("perturbed Laguerre") {
    Rat a = rat(1, 2), l = 2;
    PerturbedLaguerre p = perturbed_laguerre(a, l, 8);
    CHECK(p.beta[0] == l);
    CHECK(p.a[0] == (l + (2 * a + 2 - l) * (2 * a + 3)) / (2 * a + 2));
    for (int n = 1; n < 8; ++n) CHECK(perturbed_a(n, a, l) == perturbed_a_alt(n, a, l));
    CHECK_THROWS_AS(perturbed_laguerre(a, 0, 4), std::domain_error);
    CHECK_THROWS_AS(perturbed_laguerre(a, 1 / perturbed_c(0, a), 4), std::domain_error);
}

TEST_CASE("contiguity relations") {
    ContiguityReport c = contiguity_checks(rat(1, 2), 1, rat(3, 2), 10);
    CHECK(c.r_alpha2_shift);
    CHECK(c.r_alpha1_shift);
    CHECK(c.r_power_expansion);
    CHECK(c.s_alpha2_shift);
    CHECK(c.s_alpha1_shift);
    CHECK(c.s_power_expansion);
    CHECK(c.x_r_relation);
    CHECK(c.z_s_relation);
    CHECK(c.r_both_shift_reindexed);
    CHECK(c.s_both_shift_reindexed);
    CHECK_FALSE(c.r_both_shift_same_index);
    CHECK(c.reindexed_all());
}
