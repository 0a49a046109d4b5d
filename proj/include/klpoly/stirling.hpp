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

#ifndef KLPOLY_STIRLING_HPP
#define KLPOLY_STIRLING_HPP

#include <string>

#include "klpoly/poly.hpp"

namespace klpoly {

// t: monomial_image(n) = sum_v t[n][v] w^v, T: w^n = sum_v T[n][v] monomial_image(v),
// with w = z + alpha^2.
struct StirlingTables {
    Rat alpha;
    TriMatrix t;
    TriMatrix T;
};

StirlingTables build_tables(int nmax, const Rat& alpha);

// Row n of t obtained by substituting z = w - alpha^2 into monomial_image(n).
std::vector<Rat> t_row_by_substitution(int n, const Rat& alpha);

// (-L)^n applied to 1; cross-checked against row n of T.
Poly pn_alpha(int n, const Rat& alpha);

// KL_a[L^m x^n]; asserts it equals (-1)^m (z+a^2)^m monomial_image(n, a).
Poly mixed_image(int m, int n, const Rat& alpha);

// CSV rows "table,n,nu,value".
std::string tables_csv(const StirlingTables& s);

}  // namespace klpoly

#endif
