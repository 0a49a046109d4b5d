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

#include "klpoly/structural.hpp"

#include <stdexcept>

namespace klpoly {

Rat StructuralRelation::at_lag(int n, int lag) const {
    if (n < 0 || n >= static_cast<int>(a.size()) || lag < 1 || lag > n) return 0;
    return a[n][n - lag];
}

int StructuralRelation::max_lag() const {
    int m = 0;
    for (int n = 0; n < static_cast<int>(a.size()); ++n)
        for (int v = 0; v < n; ++v)
            if (!is_zero(a[n][v])) m = std::max(m, n - v);
    return m;
}

std::vector<int> StructuralRelation::lags(int n) const {
    std::vector<int> out;
    for (int l = 1; l <= n; ++l)
        if (!is_zero(at_lag(n, l))) out.push_back(l);
    return out;
}

StructuralRelation extract_structural(const std::vector<Poly>& S) {
    if (S.size() < 2) throw std::invalid_argument("need at least two polynomials");
    StructuralRelation r;
    r.var = S[0].var();
    r.nmax = static_cast<int>(S.size()) - 1;
    for (int n = 0; n < r.nmax; ++n) {
        Poly rem = S[n + 1] - S[n].mul_var(1);
        std::vector<Poly> basis(S.begin(), S.begin() + n + 1);
        std::vector<Rat> c = expand_in_basis(rem, basis);
        r.zeta.push_back(-c[n]);
        std::vector<Rat> row(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) row[v] = -c[v];
        r.a.push_back(std::move(row));
    }
    compute_detected_d(r);
    return r;
}

void compute_detected_d(StructuralRelation& r) {
    const int D = r.max_lag();
    bool full = true;
    for (int n = D; n < r.nmax && D > 0; ++n)
        if (is_zero(r.at_lag(n, D))) full = false;
    r.detected_d.reset();
    if (full) r.detected_d = D;
}

std::vector<Poly> replay_structural(const StructuralRelation& r) {
    std::vector<Poly> S{Poly::constant(r.var, 1)};
    for (int n = 0; n < r.nmax; ++n) {
        Poly next = S[n].mul_var(1) - S[n] * r.zeta[n];
        for (int v = 0; v < n; ++v)
            if (!is_zero(r.a[n][v])) next -= S[v] * r.a[n][v];
        S.push_back(std::move(next));
    }
    return S;
}

}  // namespace klpoly
