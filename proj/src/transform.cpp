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

#include "klpoly/transform.hpp"

#include <cassert>
#include <stdexcept>

namespace klpoly {

std::vector<Poly> monomial_images(int n, const Rat& alpha) {
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(n) + 1);
    out.push_back(Poly::constant(Var::z, 1));
    for (int s = 1; s <= n; ++s) {
        Rat c = (alpha + s) * (alpha + s);
        out.push_back(out.back() * Poly(Var::z, {c, 1}));
    }
    return out;
}

Poly monomial_image(int n, const Rat& alpha) { return monomial_images(n, alpha).back(); }

Poly kl_forward(const Poly& p, const Rat& alpha) {
    if (p.var() != Var::x) throw std::invalid_argument("kl_forward expects an x polynomial");
    Poly out(Var::z);
    Poly m = Poly::constant(Var::z, 1);
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) m *= Poly(Var::z, {(alpha + k) * (alpha + k), 1});
        if (!is_zero(p.coeffs()[k])) out += m * p.coeffs()[k];
    }
    return out;
}

std::vector<Poly> kl_forward_all(const std::vector<Poly>& ps, const Rat& alpha) {
    int deg = 0;
    for (const auto& p : ps) deg = std::max(deg, p.degree());
    auto basis = monomial_images(deg, alpha);
    std::vector<Poly> out;
    out.reserve(ps.size());
    for (const auto& p : ps) {
        if (p.var() != Var::x) throw std::invalid_argument("kl_forward expects an x polynomial");
        Poly s(Var::z);
        for (int k = 0; k <= p.degree(); ++k)
            if (!is_zero(p.coeffs()[k])) s += basis[k] * p.coeffs()[k];
        out.push_back(std::move(s));
    }
    return out;
}

Poly kl_inverse(const Poly& q, const Rat& alpha) {
    if (q.var() != Var::z) throw std::invalid_argument("kl_inverse expects a z polynomial");
    if (q.is_zero()) return Poly(Var::x);
    return Poly(Var::x, expand_in_basis(q, monomial_images(q.degree(), alpha)));
}

bool kl_shift_check(const Poly& f, int n, const Rat& alpha) {
    Poly lhs = kl_forward(f.mul_var(n), alpha);
    Poly rhs = monomial_image(n, alpha) * kl_forward(f, alpha + n);
    return lhs == rhs;
}

Poly op_A(const Poly& f) {
    Poly d1 = f.derivative();
    return f.derivative().derivative().mul_var(2) + d1.mul_var(1) - f.mul_var(1);
}

Poly op_L_composed(const Poly& f, const Rat& alpha) {
    Poly xf = f.mul_var(1);
    Poly ax = op_A(xf);
    // A(x f) always vanishes at 0, so the division by x is exact
    if (!is_zero(ax.coeff(0))) throw std::logic_error("A(x f) has a constant term");
    std::vector<Rat> c(ax.coeffs().begin() + (ax.is_zero() ? 0 : 1), ax.coeffs().end());
    return Poly(f.var(), std::move(c)) + xf.derivative() * (2 * alpha);
}

Poly op_L(const Poly& f, const Rat& alpha) {
    Poly r = f.derivative().derivative().mul_var(2) + f.derivative().mul_var(1) * (2 * alpha + 3) +
             f * (2 * alpha + 1) - f.mul_var(1);
#ifndef NDEBUG
    assert(r == op_L_composed(f, alpha));
#endif
    return r;
}

Poly op_M(const Poly& f, const Rat& beta) {
    Poly d1 = f.derivative();
    return d1.derivative().mul_var(1) + d1 * (2 * beta + 1) - f;
}

Poly delta_op(const Poly& f) {
    Poly t = (f.var() == Var::z) ? to_tau(f) : f;
    if (t.var() != Var::tau) throw std::invalid_argument("delta_op expects a tau or z polynomial");
    const GaussRat w(0, 1);
    GPoly diff = shift_tau(t, w) - shift_tau(t, -w);
    if (diff.c.empty()) return Poly(Var::z);
    if (!diff.c[0].is_zero()) throw std::domain_error("central difference not divisible by tau");
    GPoly q{Var::tau, std::vector<GaussRat>(diff.c.begin() + 1, diff.c.end())};
    const GaussRat denom(0, kDeltaDenominatorScale);
    for (auto& c : q.c) c /= denom;
    return to_z(q.real_part_checked());
}

DifferenceIdentities difference_identity_checks(const Poly& f, const Rat& alpha) {
    DifferenceIdentities r;
    Poly s = kl_forward(f, alpha);
    Poly d1 = delta_op(s);
    Poly d2 = delta_op(d1);
    Poly lhs2 = Poly(Var::z, {(alpha + 1) * (alpha + 1), 1}) * d2;
    r.second_difference = lhs2 == kl_forward(f.derivative().derivative().mul_var(1), alpha);
    r.first_difference = kl_forward(f.derivative(), alpha + Rat(1, 2)) == d1;
    return r;
}

bool eigen_identity_check(const Poly& f, int m, const Rat& alpha) {
    Poly g = f;
    for (int k = 0; k < m; ++k) g = op_L(g, alpha);
    Poly w(Var::z, {alpha * alpha, 1});
    Poly rhs = kl_forward(f, alpha);
    for (int k = 0; k < m; ++k) rhs = -(w * rhs);
    return kl_forward(g, alpha) == rhs;
}

bool chain_identity_check(const Poly& f, int m, const Rat& alpha) {
    Poly g = f;
    for (int s = 1; s <= m; ++s) g = op_M(g, alpha + s);
    Poly lhs = kl_forward(f, alpha);
    if (m % 2) lhs = -lhs;
    return lhs == kl_forward(g, alpha + m);
}

}  // namespace klpoly
