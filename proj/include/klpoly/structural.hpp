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

#ifndef KLPOLY_STRUCTURAL_HPP
#define KLPOLY_STRUCTURAL_HPP

#include <optional>
#include <vector>

#include "klpoly/poly.hpp"

namespace klpoly {

// S_{n+1} = (v - zeta_n) S_n - sum_{nu<n} a_{n,nu} S_nu, for n = 0..nmax-1.
struct StructuralRelation {
    Var var = Var::z;
    int nmax = 0;
    std::vector<Rat> zeta;
    std::vector<std::vector<Rat>> a;  // a[n][nu], nu = 0..n-1
    // Largest lag carrying a nonzero entry, provided the entry at that lag is
    // nonzero for every n >= d in range. 0 when every a vanishes.
    std::optional<int> detected_d;

    Rat at_lag(int n, int lag) const;
    int max_lag() const;
    std::vector<int> lags(int n) const;  // nonzero lags at row n
};

StructuralRelation extract_structural(const std::vector<Poly>& S);

// Fills detected_d from the a tables.
void compute_detected_d(StructuralRelation& r);

// Regenerates S_1..S_nmax from S_0 = 1 and the tables.
std::vector<Poly> replay_structural(const StructuralRelation& r);

}  // namespace klpoly

#endif
