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

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "klpoly/transform.hpp"

using namespace klpoly;
using namespace klpoly::test;

TEST_CASE("monomial images") {
    CHECK(monomial_image(0, rat(3, 7)) == pz({1}));
    CHECK(monomial_image(2, 0) == pz({4, 5, 1}));
    CHECK(monomial_image(2, 0).eval(Rat(0)) == 4);
    Rat a = rat(2, 5);
    CHECK(monomial_image(1, a) == pz({(a + 1) * (a + 1), 1}));
    CHECK(kl_forward(px({0, 0, 0, 1}), 0).eval(Rat(0)) == 36);
}

TEST_CASE("forward and inverse") {
    CHECK(kl_forward(px({1}), rat(1, 2)) == pz({1}));
    Rat a = rat(1, 3), a1 = rat(5, 2);
    CHECK(kl_forward(px({-(a1 + 1), 1}), a) == pz({(a + 1) * (a + 1) - (a1 + 1), 1}));
    CHECK(kl_inverse(monomial_image(5, a), a) == Poly::monomial(Var::x, 5));
    CHECK(kl_inverse(pz({1}), a) == px({1}));
    CHECK(kl_inverse(pz({0, 1}), a) == px({-(a + 1) * (a + 1), 1}));
    std::mt19937_64 g(11);
    for (int deg = 0; deg <= 15; ++deg) {
        Poly p = random_poly(g, deg);
        Poly q = random_poly(g, deg, Var::z);
        CHECK(kl_inverse(kl_forward(p, a), a) == p);
        CHECK(kl_forward(kl_inverse(q, a), a) == q);
    }
}

TEST_CASE("shift property") {
    CHECK(kl_shift_check(px({1}), 3, rat(1, 2)));
    CHECK(kl_shift_check(px({-2, 1}), 2, 0));
    std::mt19937_64 g(3);
    for (const Rat& a : {Rat(0), rat(1, 2), Rat(1), rat(3, 7)})
        for (int n = 0; n <= 5; ++n) CHECK(kl_shift_check(random_poly(g, n + 3), n, a));
}

TEST_CASE("differential operators") {
    CHECK(op_A(px({1})) == px({0, -1}));
    CHECK(op_A(px({0, 1})) == px({0, 1, -1}));
    CHECK(op_A(px({0, 0, 1})) == px({0, 0, 4, -1}));
    Rat a = rat(5, 3);
    CHECK(op_L(px({1}), a) == px({2 * a + 1, -1}));
    CHECK(op_L(Poly(Var::x), a).is_zero());
    CHECK(op_M(px({1}), rat(2, 3)) == px({-1}));
    CHECK(kl_forward(op_L(px({0, 0, 1}), 1), 1) == -(pz({1, 1}) * kl_forward(px({0, 0, 1}), 1)));
    std::mt19937_64 g(5);
    for (int i = 0; i < 10; ++i) {
        Poly f = random_poly(g, i % 8);
        CHECK(op_L(f, a) == op_L_composed(f, a));
    }
}

TEST_CASE("chain and eigen identities") {
    CHECK(kl_forward(op_M(px({0, 1}), 1), 1) == -kl_forward(px({0, 1}), 0));
    CHECK(chain_identity_check(px({0, 0, 1}), 2, rat(1, 2)));
    CHECK(eigen_identity_check(px({0, 0, 1}), 1, 1));
}

TEST_CASE("central difference") {
    Rat a = rat(3, 4);
    CHECK(delta_op(pz({a * a, 1})) == pz({1}));
    CHECK(delta_op(pz({7})).is_zero());
    for (int n = 1; n <= 12; ++n)
        CHECK(delta_op(monomial_image(n, a)) == monomial_image(n - 1, a + rat(1, 2)) * Rat(n));
}

TEST_CASE("difference identities") {
    for (const Rat& a : {Rat(0), rat(1, 2), Rat(2)})
        for (int n = 0; n <= 10; ++n) CHECK(difference_identity_checks(Poly::monomial(Var::x, n), a).ok());
    CHECK(difference_identity_checks(px({1}), 0).ok());
    std::mt19937_64 g(9);
    for (int deg = 0; deg <= 8; ++deg) CHECK(difference_identity_checks(random_poly(g, deg), rat(1, 3)).ok());
}
