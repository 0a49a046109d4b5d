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

#include "klpoly/stirling.hpp"

#include <sstream>
#include <stdexcept>

#include "klpoly/transform.hpp"

namespace klpoly {

StirlingTables build_tables(int nmax, const Rat& alpha) {
    if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
    StirlingTables s{alpha, TriMatrix(nmax), TriMatrix(nmax)};
    s.t.at(0, 0) = 1;
    s.T.at(0, 0) = 1;
    for (int n = 0; n < nmax; ++n) {
        for (int v = 0; v <= n + 1; ++v) {
            Rat up = v >= 1 ? s.t.at(n, v - 1) : Rat(0);
            Rat here = v <= n ? s.t.at(n, v) : Rat(0);
            s.t.at(n + 1, v) = up + (2 * alpha + n + 1) * (n + 1) * here;

            Rat Up = v >= 1 ? s.T.at(n, v - 1) : Rat(0);
            Rat Here = v <= n ? s.T.at(n, v) : Rat(0);
            s.T.at(n + 1, v) = Up - (2 * alpha + v + 1) * (v + 1) * Here;
        }
    }
    return s;
}

std::vector<Rat> t_row_by_substitution(int n, const Rat& alpha) {
    // z -> w - alpha^2, so each factor (alpha+s)^2 + z becomes w + (alpha+s)^2 - alpha^2
    Poly p = Poly::constant(Var::z, 1);
    for (int s = 1; s <= n; ++s) p *= Poly(Var::z, {(alpha + s) * (alpha + s) - alpha * alpha, 1});
    std::vector<Rat> row = p.coeffs();
    row.resize(static_cast<size_t>(n) + 1);
    return row;
}

Poly pn_alpha(int n, const Rat& alpha) {
    Poly p = Poly::constant(Var::x, 1);
    for (int k = 0; k < n; ++k) p = -op_L(p, alpha);
    StirlingTables s = build_tables(n, alpha);
    for (int v = 0; v <= n; ++v)
        if (p.coeff(v) != s.T.at(n, v)) throw std::logic_error("pn_alpha disagrees with the T table");
    return p;
}

Poly mixed_image(int m, int n, const Rat& alpha) {
    Poly f = Poly::monomial(Var::x, n);
    for (int k = 0; k < m; ++k) f = op_L(f, alpha);
    Poly img = kl_forward(f, alpha);
    Poly w(Var::z, {alpha * alpha, 1});
    Poly expect = monomial_image(n, alpha);
    for (int k = 0; k < m; ++k) expect = -(w * expect);
    if (img != expect) throw std::logic_error("mixed_image identity failed");
    return img;
}

std::string tables_csv(const StirlingTables& s) {
    std::ostringstream os;
    os << "table,n,nu,value\n";
    for (const char* name : {"t", "T"}) {
        const TriMatrix& m = name[0] == 't' ? s.t : s.T;
        for (int n = 0; n < m.size(); ++n)
            for (int v = 0; v <= n; ++v) os << name << ',' << n << ',' << v << ',' << to_string(m.at(n, v)) << '\n';
    }
    return os.str();
}

}  // namespace klpoly
