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
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "klpoly/json_io.hpp"
#include "klpoly/poly.hpp"

using namespace klpoly;
using namespace klpoly::test;

TEST_CASE("rational parsing") {
    CHECK(parse_rat("3") == 3);
    CHECK(parse_rat("-3/6") == rat(-1, 2));
    CHECK(parse_rat("+2/4") == rat(1, 2));
    CHECK(parse_rat("0.25") == rat(1, 4));
    CHECK(parse_rat("-1.5") == rat(-3, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK(to_string(rat(6, -4)) == "-3/2");
    CHECK(to_string(Rat(7)) == "7");
}

TEST_CASE("rational helpers") {
    CHECK(pochhammer(rat(1, 2), 3) == rat(15, 8));
    CHECK(pochhammer(Rat(-2), 3) == 0);
    CHECK(factorial(5) == 120);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(pow(rat(2, 3), -2) == rat(9, 4));
}

TEST_CASE("poly arithmetic") {
    Poly a = px({1, 1}), b = px({-1, 1});
    CHECK(a * b == px({-1, 0, 1}));
    CHECK(a + Poly(Var::x) == a);
    CHECK(pz({1, 1}) * pz({4, 1}) == pz({4, 5, 1}));
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK_THROWS_AS(a + pz({1}), std::invalid_argument);
    CHECK(poly_arith(a, b, ArithOp::mul) == a * b);
    CHECK(to_string(px({rat(-1, 3), 0, 0, 1})) == "x^3 - 1/3");
    CHECK(to_string(pz({4, 5, 1})) == "z^2 + 5*z + 4");
}

TEST_CASE("poly calculus and composition") {
    Poly p = px({1, 2, 3});
    CHECK(p.derivative() == px({2, 6}));
    CHECK(p.eval(Rat(2)) == 17);
    CHECK(p.eval(2.0) == doctest::Approx(17));
    CHECK(px({0, 0, 1}).compose_affine(2, 1) == px({1, 4, 4}));
    CHECK(p.mul_var(2) == px({0, 0, 1, 2, 3}));
    // (p(x) - p(1)) / (x - 1)
    Poly q = p.divided_difference(1);
    CHECK(q * Poly::linear(Var::x, 1) + Poly::constant(Var::x, p.eval(Rat(1))) == p);
    CHECK(px({2, 4}).monic() == px({rat(1, 2), 1}));
}

TEST_CASE("tau shift") {
    GPoly s = shift_tau(ptau({0, 0, 1}), GaussRat(0, 1));
    GPoly expect{Var::tau, {GaussRat(-1), GaussRat(0, 2), GaussRat(1)}};
    CHECK(s == expect);
    CHECK(shift_tau(ptau({1}), GaussRat(3, 7)) == GPoly::from(ptau({1})));
    GPoly s4 = shift_tau(ptau({0, 0, 0, 0, 1}), GaussRat(0, 1));
    GPoly e4{Var::tau, {GaussRat(1), GaussRat(0, -4), GaussRat(-6), GaussRat(0, 4), GaussRat(1)}};
    CHECK(s4 == e4);
    CHECK_THROWS_AS(s4.real_part_checked(), std::domain_error);
}

TEST_CASE("basis expansion") {
    std::vector<Poly> basis = {px({1}), px({-1, 1}), px({1, -2, 1})};
    CHECK(expand_in_basis(px({0, 0, 1}), basis) == std::vector<Rat>{1, 2, 1});
    CHECK(expand_in_basis(basis[2], basis) == std::vector<Rat>{0, 0, 1});
    for (const Rat& c : expand_in_basis(Poly(Var::x), basis)) CHECK(is_zero(c));
    std::vector<Poly> bad = {px({1}), px({0, 2})};
    CHECK_THROWS(expand_in_basis(px({0, 1}), bad));
}

TEST_CASE("tau and z") {
    CHECK(to_z(ptau({0, 0, rat(1, 4), 0, rat(1, 16)})) == pz({0, 1, 1}));
    CHECK(to_tau(pz({0, 1})) == ptau({0, 0, rat(1, 4)}));
    CHECK_THROWS_AS(to_z(ptau({0, 0, 0, 1})), std::domain_error);
    std::mt19937_64 g(7);
    for (int i = 0; i < 20; ++i) {
        Poly p = random_poly(g, i % 7, Var::z);
        CHECK(to_z(to_tau(p)) == p);
    }
}

TEST_CASE("triangular matrices") {
    TriMatrix m(3);
    for (int n = 0; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) m.at(n, k) = n == k ? Rat(1) : Rat(n + k);
    CHECK(m.unit_diagonal());
    CHECK((m * m.inverse()).is_identity());
    CHECK((m.inverse() * m).is_identity());
}

TEST_CASE("json round trip") {
    Poly p = pz({rat(-1, 3), 0, 5});
    json j = to_json(p);
    CHECK(j["var"] == "z");
    CHECK(j["coeffs"][0] == "-1/3");
    CHECK(poly_from_json(j) == p);
}
