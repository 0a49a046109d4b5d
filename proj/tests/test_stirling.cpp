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

#include "doctest.h"
#include "helpers.hpp"
#include "klpoly/stirling.hpp"
#include "klpoly/transform.hpp"

using namespace klpoly;
using namespace klpoly::test;

TEST_CASE("small table entries") {
    Rat a = rat(2, 3);
    StirlingTables s = build_tables(3, a);
    CHECK(s.t.at(1, 0) == 2 * a + 1);
    CHECK(s.t.at(1, 1) == 1);
    CHECK(s.t.row(2) == std::vector<Rat>{(2 * a + 1) * (4 * a + 4), 6 * a + 5, 1});
    CHECK(s.T.at(1, 0) == -(2 * a + 1));
    CHECK(s.t.unit_diagonal());
    CHECK((s.t * s.T).is_identity());
}

TEST_CASE("substitution oracle") {
    for (const Rat& a : {Rat(0), rat(1, 2), rat(-1, 3)}) {
        StirlingTables s = build_tables(15, a);
        for (int n = 0; n <= 15; ++n) CHECK(t_row_by_substitution(n, a) == s.t.row(n));
    }
}

TEST_CASE("P_n polynomials") {
    Rat a = rat(1, 2);
    CHECK(pn_alpha(0, a) == px({1}));
    CHECK(pn_alpha(1, a) == px({-(2 * a + 1), 1}));
    Poly w = pz({rat(1, 4), 1});
    CHECK(kl_forward(pn_alpha(3, a), a) == w * w * w);
}

TEST_CASE("mixed images") {
    CHECK(mixed_image(0, 2, 0) == pz({4, 5, 1}));
    Rat a = rat(3, 5);
    CHECK(mixed_image(1, 0, a) == -pz({a * a, 1}));
    CHECK(mixed_image(2, 1, 1) == pz({1, 1}) * pz({1, 1}) * pz({4, 1}));
}

TEST_CASE("csv dump") {
    std::string csv = tables_csv(build_tables(1, 0));
    CHECK(csv.find("table,n,nu,value") == 0);
    CHECK(csv.find("t,1,0,1") != std::string::npos);
    CHECK(csv.find("T,1,0,-1") != std::string::npos);
}
