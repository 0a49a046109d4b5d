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

#ifndef KLPOLY_TEST_HELPERS_HPP
#define KLPOLY_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "klpoly/poly.hpp"

namespace klpoly::test {

inline Poly px(std::vector<Rat> c) { return Poly(Var::x, std::move(c)); }
inline Poly pz(std::vector<Rat> c) { return Poly(Var::z, std::move(c)); }
inline Poly ptau(std::vector<Rat> c) { return Poly(Var::tau, std::move(c)); }

// Deterministic random polynomial with small rational coefficients and a
// nonzero leading term.
inline Poly random_poly(std::mt19937_64& g, int deg, Var v = Var::x) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
    std::vector<Rat> c;
    for (int k = 0; k <= deg; ++k) c.push_back(rat(num(g), den(g)));
    if (is_zero(c.back())) c.back() = 1;
    return Poly(v, std::move(c));
}

}  // namespace klpoly::test

#endif
