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

#include "klpoly/sequences.hpp"

#include <stdexcept>

#include "klpoly/transform.hpp"

namespace klpoly {

Recurrence Recurrence::from_gammas(int d, Var v, std::function<Rat(int)> beta,
                                   std::function<Rat(int, int)> gamma_jn) {
    Recurrence r;
    r.d = d;
    r.var = v;
    r.beta = std::move(beta);
    r.coef = [d, g = std::move(gamma_jn)](int n, int lag) { return g(d - lag, n - lag + 1); };
    return r;
}

std::vector<Poly> run_recurrence(const Recurrence& rec, int n, std::vector<Poly> initial) {
    std::vector<Poly> P = std::move(initial);
    if (P.empty()) P.push_back(Poly::constant(rec.var, 1));
    while (static_cast<int>(P.size()) <= n) {
        const int m = static_cast<int>(P.size()) - 1;
        Poly next = P[m].mul_var(1) - P[m] * rec.beta(m);
        for (int lag = 1; lag <= rec.d && m - lag >= 0; ++lag) {
            Rat c = rec.coef(m, lag);
            if (!is_zero(c)) next -= P[m - lag] * c;
        }
        P.push_back(std::move(next));
    }
    P.resize(static_cast<size_t>(n) + 1, Poly(rec.var));
    return P;
}

Mps dops_from_recurrence(const Recurrence& rec, int n) {
    for (int m = rec.d; m < n; ++m)
        if (is_zero(rec.coef(m, rec.d)))
            throw std::domain_error("vanishing lowest recurrence coefficient at step " + std::to_string(m));
    return {run_recurrence(rec, n), "recurrence d=" + std::to_string(rec.d)};
}

Mps mops_from_recurrence(const std::function<Rat(int)>& beta, const std::function<Rat(int)>& gamma, int n) {
    Recurrence r;
    r.d = 1;
    r.var = Var::x;
    r.beta = beta;
    r.coef = [gamma](int m, int) { return gamma(m); };
    for (int m = 1; m < n; ++m)
        if (is_zero(gamma(m))) throw std::domain_error("gamma_" + std::to_string(m) + " vanishes");
    return {run_recurrence(r, n), "mops"};
}

Mps laguerre(const Rat& a1, int n) {
    Mps m = mops_from_recurrence([a1](int k) -> Rat { return Rat(2 * k) + a1 + 1; },
                                 [a1](int k) -> Rat { return Rat(k) * (k + a1); }, n);
    m.meta = "laguerre a1=" + to_string(a1);
    return m;
}

Mps hermite(int n) {
    Mps m = mops_from_recurrence([](int) { return Rat(0); }, [](int k) { return rat(k, 2); }, n);
    m.meta = "hermite";
    return m;
}

Mps hermite_type(int d, int n) {
    if (d < 1) throw std::invalid_argument("hermite_type needs d >= 1");
    std::vector<Poly> H;
    for (int k = 0; k <= std::min(n, d); ++k) H.push_back(Poly::monomial(Var::x, k));
    while (static_cast<int>(H.size()) <= n) {
        const int m = static_cast<int>(H.size()) - d - 1;
        Rat c = Rat(binomial(m + d, d)) / (d + 1);
        H.push_back(H.back().mul_var(1) - H[m] * c);
    }
    return {H, "hermite-type d=" + std::to_string(d)};
}

namespace {

void check_alphas(const std::vector<Rat>& alphas) {
    for (const auto& a : alphas)
        if (a.get_den() == 1 && a <= -1)
            throw std::domain_error("parameter " + to_string(a) + " is a negative integer");
}

Rat prod_poch(const std::vector<Rat>& alphas, int shift, int k) {
    Rat r = 1;
    for (const auto& a : alphas) r *= pochhammer(a + shift, k);
    return r;
}

std::vector<Rat> shifted(const std::vector<Rat>& v, const Rat& s) {
    std::vector<Rat> r = v;
    for (auto& a : r) a += s;
    return r;
}

bool all_zero(const Poly& p) { return p.is_zero(); }

}  // namespace

Rat reversed_appell_lambda(const std::vector<Rat>& alphas, int n) {
    Rat p = prod_poch(alphas, 1, n);
    return (n % 2 ? Rat(-1) : Rat(1)) / p;
}

Mps reversed_appell(const std::vector<Rat>& alphas, int n) {
    check_alphas(alphas);
    std::vector<Poly> R;
    for (int m = 0; m <= n; ++m) {
        Rat inv_lambda = Rat(1) / reversed_appell_lambda(alphas, m);
        std::vector<Rat> c(static_cast<size_t>(m) + 1);
        for (int k = 0; k <= m; ++k)
            c[k] = inv_lambda * pochhammer(Rat(-m), k) / (prod_poch(alphas, 1, k) * factorial(k));
        R.emplace_back(Var::x, std::move(c));
    }
    return {R, "reversed-appell d=" + std::to_string(alphas.size())};
}

HypergeomPair hypergeom_pair(const std::vector<Rat>& a, const std::vector<Rat>& b, int n, const Rat& alpha) {
    HypergeomPair out;
    for (int m = 0; m <= n; ++m) {
        std::vector<Rat> c(static_cast<size_t>(m) + 1);
        for (int k = 0; k <= m; ++k) {
            Rat den = prod_poch(b, 0, k) * factorial(k);
            if (is_zero(den)) throw std::domain_error("vanishing lower parameter Pochhammer");
            c[k] = pochhammer(Rat(-m), k) * prod_poch(a, 0, k) / den;
        }
        Poly p(Var::x, std::move(c));
        if (p.degree() != m) throw std::domain_error("degenerate series: degree drops at n=" + std::to_string(m));
        out.source.polys.push_back(p.monic());
    }
    out.source.meta = "hypergeometric p=" + std::to_string(a.size()) + " q=" + std::to_string(b.size());
    out.image.polys = kl_forward_all(out.source.polys, alpha);
    out.image.meta = "kl image";

    // Series side: the two extra numerator parameters a+1 -/+ i tau/2 are
    // multiplied out over Q(i) and converted back to z.
    std::vector<Poly> poch{Poly::constant(Var::z, 1)};
    GPoly acc = GPoly::from(Poly::constant(Var::tau, 1));
    for (int k = 1; k <= n; ++k) {
        GPoly plus{Var::tau, {GaussRat(alpha + k), GaussRat(0, Rat(1, 2))}};
        GPoly minus{Var::tau, {GaussRat(alpha + k), GaussRat(0, Rat(-1, 2))}};
        acc = acc * plus * minus;
        poch.push_back(to_z(acc.real_part_checked()));
    }
    out.image_matches_series = true;
    for (int m = 0; m <= n; ++m) {
        Poly s(Var::z);
        const Poly& p = out.source.polys[m];
        for (int k = 0; k <= m; ++k) s += poch[k] * p.coeff(k);
        if (s != out.image.polys[m]) out.image_matches_series = false;
    }
    return out;
}

Rat cdh_beta(int n, const Rat& alpha, const Rat& a1, const Rat& a2) {
    const Rat m = n - 1;
    return -alpha * (alpha + 4) + 2 * m * m + (5 - 2 * alpha) * m + a2 * (2 * m + 3) + a1 * (a2 + 2 * m + 3) + 3;
}

Rat cdh_gamma(int n, const Rat& alpha, const Rat& a1, const Rat& a2) {
    const Rat m = n - 1;
    return (m + 1) * (a1 + m + 1) * (a2 + m + 1) * (-2 * alpha + a1 + a2 + m);
}

Mps cdh_monic(const Rat& alpha, const Rat& a1, const Rat& a2, int n) {
    for (int m = 1; m < n; ++m)
        if (is_zero(cdh_gamma(m, alpha, a1, a2)))
            throw std::domain_error("gamma~ vanishes at n=" + std::to_string(m - 1));
    Recurrence r;
    r.d = 1;
    r.var = Var::z;
    r.beta = [=](int m) { return cdh_beta(m, alpha, a1, a2); };
    r.coef = [=](int m, int) { return cdh_gamma(m, alpha, a1, a2); };
    Mps out{run_recurrence(r, n), "cdh"};
    auto img = kl_forward_all(reversed_appell({a1, a2}, n).polys, alpha);
    if (img != out.polys) throw std::logic_error("cdh recurrence disagrees with the KL image");
    return out;
}

Rat bateman_beta(int n, const Rat& a1, const Rat& a2) {
    return Rat(3 * n * n) + (2 * a1 + 2 * a2 + 3) * n + (a1 + 1) * (a2 + 1);
}

Rat bateman_gamma1(int n, const Rat& a1, const Rat& a2) {
    return Rat(n) * (3 * n + a1 + a2) * (n + a1) * (n + a2);
}

Rat bateman_gamma0(int n, const Rat& a1, const Rat& a2) {
    return Rat(n) * (n + 1) * (n + a1 + 1) * (n + a1) * (n + a2 + 1) * (n + a2);
}

Recurrence appell_image_recurrence(int d, const Rat& alpha, LastLagCoefficient which) {
    Recurrence r;
    r.d = 2 * d + 2;
    r.var = Var::z;
    r.beta = [alpha](int n) -> Rat { return -(alpha * alpha + Rat(n + 1) * (n + 1 + 2 * alpha)); };
    r.coef = [d, alpha, which](int n, int lag) -> Rat {
        if (lag == d) return Rat(binomial(n, d)) / (d + 1);
        if (lag == d + 1) return -(2 * n + 2 * alpha + 1 - d) * Rat(binomial(n, d + 1));
        if (lag == 2 * d + 2) {
            Rat base = Rat(n) * (n - 1) * Rat(binomial(n - d - 2, d));
            if (which == LastLagCoefficient::single_binomial) return -base / (d + 1);
            return -base * Rat(binomial(n - 2, d)) / ((d + 1) * (d + 1));
        }
        return 0;
    };
    return r;
}

AppellImageCheck appell_image_check(int d, const Rat& alpha, int nmax, LastLagCoefficient which) {
    AppellImageCheck out;
    auto S = kl_forward_all(hermite_type(d, nmax + 1).polys, alpha);
    Recurrence r = appell_image_recurrence(d, alpha, which);
    out.recurrence_holds = true;
    for (int n = 0; n <= nmax; ++n) {
        Poly rhs = S[n].mul_var(1) - S[n] * r.beta(n);
        for (int lag = 1; lag <= r.d && n - lag >= 0; ++lag) rhs -= S[n - lag] * r.coef(n, lag);
        if (rhs != S[n + 1]) {
            out.recurrence_holds = false;
            out.first_failure = n;
            break;
        }
    }
    auto mono = monomial_images(nmax + 1, alpha);
    out.monomial_initial_terms = true;
    for (int k = 0; k <= std::min(2 * d + 1, nmax + 1); ++k) {
        if (S[k] == mono[k])
            out.initial_terms_hold_through = k;
        else {
            out.monomial_initial_terms = false;
            break;
        }
    }
    return out;
}

Recurrence reversed_appell_image_recurrence(const std::vector<Rat>& alphas, const Rat& alpha, int nmax) {
    StructuralRelation sr = extract_structural(reversed_appell(alphas, nmax + 1).polys);
    Recurrence r;
    r.d = std::max<int>(static_cast<int>(alphas.size()), 2);
    r.var = Var::z;
    r.beta = [sr, alpha](int m) -> Rat {
        if (m >= sr.nmax) throw std::out_of_range("image recurrence requested beyond extracted range");
        return sr.zeta[m] - (m + 1 + alpha) * (m + 1 + alpha);
    };
    r.coef = [sr, alpha, alphas](int m, int lag) -> Rat {
        if (m >= sr.nmax) throw std::out_of_range("image recurrence requested beyond extracted range");
        Rat c = sr.at_lag(m, lag);
        if (lag == 1) {
            Rat p = 1;
            for (const auto& a : alphas) p *= m + a;
            c -= Rat(m) * (2 * m + 1 + 2 * alpha) * p;
        } else if (lag == 2) {
            Rat p = 1;
            for (const auto& a : alphas) p *= (m + a) * (m - 1 + a);
            c -= Rat(m - 1) * m * p;
        }
        return c;
    };
    return r;
}

bool reversed_appell_image_check(const std::vector<Rat>& alphas, const Rat& alpha, int nmax) {
    Recurrence r = reversed_appell_image_recurrence(alphas, alpha, nmax);
    auto gen = run_recurrence(r, nmax);
    auto img = kl_forward_all(reversed_appell(alphas, nmax).polys, alpha);
    return gen == img;
}

LaguerreImageRecurrenceCheck laguerre_image_recurrence_check(const Rat& alpha, const Rat& a1, int nmax) {
    auto S = kl_forward_all(laguerre(a1, nmax + 1).polys, alpha);
    auto P = [&](int n) -> Rat { return -2 * alpha + a1 - (alpha + n) * (alpha + n); };
    auto holds = [&](int shift) {
        for (int n = 0; n + 2 <= nmax + 1; ++n) {
            Poly rhs = S[n + 1].mul_var(1) - S[n + 1] * P(n + shift);
            rhs += S[n] * (Rat(2 * (n + 1)) * (n + 1 + alpha) * (n + 1 + a1));
            if (n >= 1) rhs += S[n - 1] * (Rat(n) * (n + 1) * (a1 + n) * (a1 + n + 1));
            if (rhs != S[n + 2]) return false;
        }
        return true;
    };
    return {holds(0), holds(1)};
}

bool cdh_recurrence_check(const Rat& alpha, const Rat& a1, const Rat& a2, int nmax) {
    Recurrence r;
    r.d = 1;
    r.var = Var::z;
    r.beta = [=](int m) { return cdh_beta(m, alpha, a1, a2); };
    r.coef = [=](int m, int) { return cdh_gamma(m, alpha, a1, a2); };
    return run_recurrence(r, nmax) == kl_forward_all(reversed_appell({a1, a2}, nmax).polys, alpha);
}

bool bateman_recurrence_check(const Rat& a1, const Rat& a2, int nmax) {
    Recurrence r = Recurrence::from_gammas(
        2, Var::x, [=](int n) { return bateman_beta(n, a1, a2); },
        [=](int j, int n) { return j == 1 ? bateman_gamma1(n, a1, a2) : bateman_gamma0(n, a1, a2); });
    return dops_from_recurrence(r, nmax).polys == reversed_appell({a1, a2}, nmax).polys;
}

bool reversed_appell_derivative_check(const std::vector<Rat>& alphas, int nmax) {
    auto R = reversed_appell(alphas, nmax + 1).polys;
    for (int n = 0; n <= nmax; ++n) {
        Poly lhs = R[n + 1].mul_var(1).derivative();
        Rat ratio = reversed_appell_lambda(alphas, n) / reversed_appell_lambda(alphas, n + 1);
        Poly rhs = R[n + 1] * Rat(n + 2) - R[n] * (Rat(n + 1) * ratio);
        if (lhs != rhs) return false;
    }
    return true;
}

bool reversed_appell_parameter_shift_check(const std::vector<Rat>& alphas, int nmax) {
    auto R = reversed_appell(alphas, nmax + 1).polys;
    auto R1 = reversed_appell(shifted(alphas, 1), nmax).polys;
    for (int n = 0; n <= nmax; ++n)
        if (R[n + 1].derivative() != R1[n] * Rat(n + 1)) return false;
    return true;
}

bool reversed_appell_delta_check(const std::vector<Rat>& alphas, const Rat& alpha, int nmax, int offset) {
    auto S = kl_forward_all(reversed_appell(alphas, nmax + 1).polys, alpha);
    auto S1 = kl_forward_all(reversed_appell(shifted(alphas, 1), nmax).polys, alpha + Rat(1, 2));
    for (int n = 0; n <= nmax; ++n)
        if (delta_op(S[n + 1]) != S1[n] * Rat(n + 1 + offset)) return false;
    return true;
}

bool hermite_type_delta_check(int d, const Rat& alpha, int nmax) {
    auto H = hermite_type(d, nmax).polys;
    auto S = kl_forward_all(H, alpha);
    auto S1 = kl_forward_all(H, alpha + Rat(1, 2));
    if (!all_zero(delta_op(S[0]))) return false;
    for (int n = 1; n <= nmax; ++n)
        if (delta_op(S[n]) != S1[n - 1] * Rat(n)) return false;
    return true;
}

Rat perturbed_c(int n, const Rat& alpha) {
    return (1 - factorial(n + 1) / pochhammer(2 * alpha + 3, n + 1)) / (2 * alpha + 2);
}

Rat perturbed_a(int n, const Rat& alpha, const Rat& lambda) {
    Rat num = lambda * factorial(n + 1) + (2 * alpha - lambda + 2) * pochhammer(2 * alpha + 3, n + 1);
    Rat den = lambda * factorial(n) + (2 * alpha - lambda + 2) * pochhammer(2 * alpha + 3, n);
    if (is_zero(den)) throw std::domain_error("singular lambda: a_" + std::to_string(n) + " has zero denominator");
    return num / den;
}

Rat perturbed_a_alt(int n, const Rat& alpha, const Rat& lambda) {
    Rat prev = n == 0 ? Rat(0) : perturbed_c(n - 1, alpha);
    Rat den = 1 - lambda * prev;
    if (is_zero(den)) throw std::domain_error("singular lambda");
    return (n + 2 * alpha + 3) * (1 - lambda * perturbed_c(n, alpha)) / den;
}

PerturbedLaguerre perturbed_laguerre(const Rat& alpha, const Rat& lambda, int n) {
    if (is_zero(lambda)) throw std::domain_error("singular lambda: lambda = 0");
    PerturbedLaguerre out;
    Mps L = laguerre(2 * alpha + 2, n);
    for (int k = 0; k < n; ++k) out.a.push_back(perturbed_a(k, alpha, lambda));
    out.polys.polys.push_back(Poly::constant(Var::x, 1));
    for (int k = 0; k < n; ++k) out.polys.polys.push_back(L[k + 1] + L[k] * out.a[k]);
    out.polys.meta = "perturbed-laguerre";
    out.beta.push_back(lambda);
    out.gamma.push_back(0);
    for (int k = 0; k + 1 < n; ++k) {
        out.beta.push_back(2 * k + 2 * alpha + 5 + out.a[k] - out.a[k + 1]);
        Rat g = -out.a[k] * (out.a[k] - 2 * k - 2 * alpha - 3);
        if (is_zero(g))
            throw std::domain_error("singular lambda: gamma~_" + std::to_string(k + 1) + " vanishes");
        out.gamma.push_back(g);
    }
    return out;
}

bool ContiguityReport::same_index_all() const {
    return r_alpha2_shift && r_alpha1_shift && r_power_expansion && r_both_shift_same_index && s_alpha2_shift &&
           s_alpha1_shift && s_power_expansion && s_both_shift_same_index && x_r_relation && z_s_relation;
}

bool ContiguityReport::reindexed_all() const {
    return r_alpha2_shift && r_alpha1_shift && r_power_expansion && r_both_shift_reindexed && s_alpha2_shift &&
           s_alpha1_shift && s_power_expansion && s_both_shift_reindexed && x_r_relation && z_s_relation;
}

ContiguityReport contiguity_checks(const Rat& alpha, const Rat& a1, const Rat& a2, int nmax) {
    const int N = nmax + 1;
    auto r00 = reversed_appell({a1, a2}, N).polys;
    auto r01 = reversed_appell({a1, a2 + 1}, N).polys;
    auto r10 = reversed_appell({a1 + 1, a2}, N).polys;
    auto r11 = reversed_appell({a1 + 1, a2 + 1}, N).polys;
    auto s00 = kl_forward_all(r00, alpha);
    auto s01 = kl_forward_all(r01, alpha);
    auto s10 = kl_forward_all(r10, alpha);
    auto s11 = kl_forward_all(r11, alpha);
    auto s11up = kl_forward_all(r11, alpha + 1);
    auto mono = monomial_images(N, alpha);

    auto at = [](const std::vector<Poly>& v, int k) { return k >= 0 ? v[k] : Poly(v[0].var()); };
    ContiguityReport c;
    auto all = [&](auto&& pred) {
        for (int n = 0; n <= nmax; ++n)
            if (!pred(n)) return false;
        return true;
    };
    auto shift2 = [&](const std::vector<Poly>& A, const std::vector<Poly>& B) {
        return all([&](int n) { return A[n + 1] == B[n + 1] + B[n] * (Rat(n + 1) * (n + a1 + 1)); });
    };
    auto shift1 = [&](const std::vector<Poly>& A, const std::vector<Poly>& B) {
        return all([&](int n) { return A[n + 1] == B[n + 1] + B[n] * (Rat(n + 1) * (n + a2 + 1)); });
    };
    auto power = [&](const std::vector<Poly>& lhs, const std::vector<Poly>& B) {
        return all([&](int n) {
            Poly s(B[0].var());
            Rat top = pochhammer(a1 + 1, n) * pochhammer(a2 + 1, n);
            for (int k = 0; k <= n; ++k)
                s += B[k] * (Rat(binomial(n, k)) * top / (pochhammer(a1 + 1, k) * pochhammer(a2 + 1, k)));
            return s == lhs[n];
        });
    };
    auto both = [&](const std::vector<Poly>& A, const std::vector<Poly>& B, int lhs_shift) {
        return all([&](int n) {
            Poly rhs = B[n + lhs_shift] + at(B, n - 1 + lhs_shift) * (Rat(n + 1) * (2 * n + 3 + a1 + a2)) +
                       at(B, n - 2 + lhs_shift) * (Rat(n) * (n + 1) * (n + 1 + a1) * (n + a2 + 1));
            return A[n + lhs_shift] == rhs;
        });
    };
    std::vector<Poly> xpow;
    for (int n = 0; n <= N; ++n) xpow.push_back(Poly::monomial(Var::x, n));

    c.r_alpha2_shift = shift2(r00, r01);
    c.r_alpha1_shift = shift1(r00, r10);
    c.r_power_expansion = power(xpow, r00);
    c.r_both_shift_same_index = both(r00, r11, 0);
    c.r_both_shift_reindexed = both(r00, r11, 1);
    c.s_alpha2_shift = shift2(s00, s01);
    c.s_alpha1_shift = shift1(s00, s10);
    c.s_power_expansion = power(mono, s00);
    c.s_both_shift_same_index = both(s00, s11, 0);
    c.s_both_shift_reindexed = both(s00, s11, 1);
    c.x_r_relation = all([&](int n) {
        return r11[n].mul_var(1) == r00[n + 1] + r00[n] * ((n + a1 + 1) * (n + a2 + 1));
    });
    Poly zfac(Var::z, {(alpha + 1) * (alpha + 1), 1});
    c.z_s_relation = all([&](int n) {
        return zfac * s11up[n] == s00[n + 1] + s00[n] * ((n + a1 + 1) * (n + a2 + 1));
    });
    return c;
}

}  // namespace klpoly
