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

#include "klpoly/orthogonality.hpp"

#include <stdexcept>

#include "klpoly/transform.hpp"

namespace klpoly {

Rat MomentFunctional::apply(const Poly& p) const {
    Rat s = 0;
    for (int k = 0; k <= p.degree(); ++k)
        if (!is_zero(p.coeffs()[k])) s += p.coeffs()[k] * moment(k);
    return s;
}

MomentFunctional laguerre_moments(const Rat& a1) {
    return {[a1](int n) -> Rat { return pochhammer(a1 + 1, n); }, "laguerre a1=" + to_string(a1)};
}

MomentFunctional hermite_moments() {
    return {[](int n) -> Rat { return n % 2 ? Rat(0) : pochhammer(Rat(1, 2), n / 2); }, "hermite"};
}

MomentFunctional generalized_hermite_moments(const Rat& mu) {
    return {[mu](int n) -> Rat { return n % 2 ? Rat(0) : pochhammer(mu + Rat(1, 2), n / 2); },
            "generalized-hermite mu=" + to_string(mu)};
}

MomentFunctional v0_moments(const Rat& a1, const Rat& a2) {
    return {[a1, a2](int n) -> Rat { return pochhammer(a1 + 1, n) * pochhammer(a2 + 1, n); }, "v0"};
}

MomentFunctional v1_moments(const Rat& a1, const Rat& a2) {
    return {[a1, a2](int n) -> Rat {
                if (n == 0) return Rat(0);
                return Rat(n) * pochhammer(a1 + 2, n - 1) * pochhammer(a2 + 2, n - 1);
            },
            "v1"};
}

MomentFunctional v1_moments_gamma_form(const Rat& a1, const Rat& a2) {
    // Gamma(n+a)/Gamma(2+a) = (2+a)_{n-2} for n >= 2 and 1/(1+a) for n = 1
    auto ratio = [](int n, const Rat& a) -> Rat { return n >= 2 ? pochhammer(a + 2, n - 2) : Rat(1) / (a + 1); };
    return {[=](int n) -> Rat {
                if (n == 0) return Rat(0);
                return Rat(n) * ratio(n, a1) * ratio(n, a2);
            },
            "v1 gamma form"};
}

MomentFunctional x_inverse_delta(const MomentFunctional& w, const Rat& lambda) {
    return {[w, lambda](int n) -> Rat { return n == 0 ? Rat(1) : lambda * w(n - 1); },
            "x^-1 perturbation of " + w.label};
}

MomentFunctional perturbed_laguerre_moments(const Rat& alpha, const Rat& lambda) {
    MomentFunctional u = x_inverse_delta(laguerre_moments(2 * alpha + 2), lambda);
    u.label = "perturbed-laguerre";
    return u;
}

bool gram_check(const MomentFunctional& u, const std::vector<Poly>& B, int nmax) {
    for (int n = 0; n <= nmax; ++n)
        for (int m = 0; m <= n; ++m) {
            Rat v = u.apply(B[n] * B[m]);
            if ((m == n) == is_zero(v)) return false;
        }
    return true;
}

MomentFunctional dual_functional(const std::vector<Poly>& B, int k) {
    return {[B, k](int n) -> Rat {
                if (n >= static_cast<int>(B.size())) throw std::out_of_range("dual moment beyond basis");
                if (k > n) return 0;
                std::vector<Poly> basis(B.begin(), B.begin() + n + 1);
                return expand_in_basis(Poly::monomial(B[0].var(), n), basis)[k];
            },
            "dual u_" + std::to_string(k)};
}

DualVectorReport dual_vector_check(const std::vector<Poly>& B, const std::vector<MomentFunctional>& U, int d,
                                   int nmax) {
    DualVectorReport r;
    for (int k = 0; k < d; ++k)
        for (int m = 0; m * d + k <= nmax; ++m)
            for (int n = m * d + k; n <= nmax; ++n) {
                Rat v = U[k].apply(B[n].mul_var(m));
                bool want_nonzero = (n == m * d + k);
                if (want_nonzero == is_zero(v)) {
                    r.ok = false;
                    r.failures.push_back("k=" + std::to_string(k) + " m=" + std::to_string(m) + " n=" +
                                         std::to_string(n));
                }
            }
    return r;
}

namespace {

// Bareiss on an integer matrix with row pivoting.
Int bareiss_det(std::vector<std::vector<Int>> M) {
    const int n = static_cast<int>(M.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int p = k + 1;
            while (p < n && M[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = t;
            }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

Int lcm_of_dens(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
    return l;
}

}  // namespace

std::vector<Rat> hankel_determinants(const MomentFunctional& u, int kmax) {
    std::vector<Rat> mom;
    for (int n = 0; n <= 2 * kmax - 2; ++n) mom.push_back(u(n));
    const Int L = lcm_of_dens(mom);
    std::vector<Int> im;
    for (const auto& m : mom) im.push_back(Int(m * L));

    std::vector<Rat> out;
    // Leading minors are the successive pivots of an unpivoted Bareiss sweep;
    // after a zero pivot each remaining minor is computed on its own.
    std::vector<std::vector<Int>> M(kmax, std::vector<Int>(kmax));
    for (int i = 0; i < kmax; ++i)
        for (int j = 0; j < kmax; ++j) M[i][j] = im[i + j];
    Int prev = 1;
    Rat Lk = 1;
    int k = 0;
    for (; k < kmax; ++k) {
        Lk *= L;
        if (M[k][k] == 0) break;
        out.push_back(Rat(M[k][k]) / Lk);
        for (int i = k + 1; i < kmax; ++i)
            for (int j = k + 1; j < kmax; ++j) {
                Int t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = t;
            }
        prev = M[k][k];
    }
    for (; k < kmax; ++k) {
        if (static_cast<int>(out.size()) > k) continue;
        std::vector<std::vector<Int>> S(k + 1, std::vector<Int>(k + 1));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) S[i][j] = im[i + j];
        out.push_back(Rat(bareiss_det(S)) / pow(Rat(L), k + 1));
    }
    return out;
}

MomentRecurrence moments_to_recurrence(const MomentFunctional& u, int nmax) {
    MomentRecurrence r;
    auto H = hankel_determinants(u, nmax + 1);
    for (int k = 0; k < static_cast<int>(H.size()); ++k)
        if (is_zero(H[k])) {
            r.singular_order = k + 1;
            break;
        }
    r.gamma.push_back(0);
    r.polys.push_back(Poly::constant(Var::x, 1));
    Rat prev_norm = 0;
    for (int k = 0; k < nmax; ++k) {
        const Poly& P = r.polys[k];
        Rat norm = u.apply(P * P);
        if (is_zero(norm)) break;
        Rat b = u.apply((P * P).mul_var(1)) / norm;
        r.beta.push_back(b);
        Poly next = P.mul_var(1) - P * b;
        if (k > 0) {
            Rat g = norm / prev_norm;
            r.gamma.push_back(g);
            next -= r.polys[k - 1] * g;
        }
        r.polys.push_back(std::move(next));
        prev_norm = norm;
    }
    return r;
}

bool pearson_check(const MomentFunctional& u, const PearsonPair& p, int nmax) {
    for (int n = 0; n <= nmax; ++n) {
        Rat v = u.apply(p.psi.mul_var(n));
        if (n > 0) v -= Rat(n) * u.apply(p.phi.mul_var(n - 1));
        if (!is_zero(v)) return false;
    }
    return true;
}

namespace {

std::optional<std::vector<Int>> divisors(const Int& v) {
    Int a = abs(v);
    if (a > Int(1000000000)) return std::nullopt;
    std::vector<Int> out;
    for (Int d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    return out;
}

}  // namespace

std::optional<std::vector<Rat>> rational_roots(const Poly& p) {
    if (p.degree() < 1) return std::vector<Rat>{};
    const Int L = lcm_of_dens(p.coeffs());
    std::vector<Int> c;
    for (const auto& r : p.coeffs()) c.push_back(Int(r * L));
    std::vector<Rat> roots;
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    if (low + 1 >= c.size()) return roots;
    auto ps = divisors(c[low]);
    auto qs = divisors(c.back());
    if (!ps || !qs) return std::nullopt;
    for (const auto& a : *ps)
        for (const auto& b : *qs)
            for (int s : {1, -1}) {
                Rat cand = rat(Int(s * a), b);
                if (!is_zero(p.eval(cand))) continue;
                bool seen = false;
                for (const auto& r : roots) seen = seen || r == cand;
                if (!seen) roots.push_back(cand);
            }
    return roots;
}

ClassReduction class_reduce(const PearsonPair& pair, const MomentFunctional& u) {
    ClassReduction out;
    out.pair = pair;
    if (!out.pair.phi.is_monic()) {
        Rat l = out.pair.phi.lead();
        out.pair.phi = out.pair.phi * (Rat(1) / l);
        out.pair.psi = out.pair.psi * (Rat(1) / l);
    }
    for (bool changed = true; changed && out.pair.phi.degree() >= 1;) {
        changed = false;
        auto roots = rational_roots(out.pair.phi);
        if (!roots) {
            out.attempted = false;
            break;
        }
        for (const auto& c : *roots) {
            const Poly& phi = out.pair.phi;
            const Poly& psi = out.pair.psi;
            if (!is_zero(phi.derivative().eval(c) + psi.eval(c))) continue;
            Poly th_phi = phi.divided_difference(c);
            Poly new_psi = th_phi.divided_difference(c) + psi.divided_difference(c);
            if (!is_zero(u.apply(new_psi))) continue;
            out.pair = {th_phi, new_psi};
            out.removed_roots.push_back(c);
            changed = true;
            break;
        }
    }
    return out;
}

MomentFunctional affine_transform(const MomentFunctional& u, const Rat& a, const Rat& b) {
    if (is_zero(a)) throw std::invalid_argument("affine scale must be nonzero");
    return {[u, a, b](int n) -> Rat {
                Rat s = 0;
                for (int k = 0; k <= n; ++k) s += Rat(binomial(n, k)) * pow(-b, n - k) * u(k);
                return s * pow(a, -n);
            },
            u.label + " (affine)"};
}

PearsonPair affine_transform(const PearsonPair& p, const Rat& a, const Rat& b) {
    if (is_zero(a)) throw std::invalid_argument("affine scale must be nonzero");
    const int deg = p.phi.degree();
    return {p.phi.compose_affine(a, b) * pow(a, -deg), p.psi.compose_affine(a, b) * pow(a, 1 - deg)};
}

MaroniResult maroni_perturbation(const std::vector<Poly>& W, const MomentFunctional& w, const Rat& lambda, int n) {
    if (static_cast<int>(W.size()) < n + 2) throw std::invalid_argument("need W_0..W_{n+1}");
    StructuralRelation sw = extract_structural(W);
    MaroniResult r;
    auto denom_term = [&](int k) -> Rat { return W[k].eval(Rat(0)) + lambda * w.apply(W[k].divided_difference(0)); };
    for (int k = 0; k < n; ++k) {
        Rat den = denom_term(k);
        if (is_zero(den)) throw std::domain_error("singular lambda: a_" + std::to_string(k) + " denominator vanishes");
        r.a.push_back(-denom_term(k + 1) / den);
    }
    r.polys.push_back(Poly::constant(Var::x, 1));
    for (int k = 0; k < n; ++k) r.polys.push_back(W[k + 1] + W[k] * r.a[k]);
    r.gamma.push_back(0);
    if (n > 0) r.beta.push_back(sw.zeta[0] - r.a[0]);
    for (int k = 0; k + 1 < n; ++k) {
        r.beta.push_back(sw.zeta[k + 1] + r.a[k] - r.a[k + 1]);
        Rat g = -r.a[k] * (r.a[k] - sw.zeta[k]);
        if (is_zero(g)) throw std::domain_error("singular lambda: gamma_" + std::to_string(k + 1) + " vanishes");
        r.gamma.push_back(g);
    }
    return r;
}

FiniteTypeReport finite_type_check(const std::vector<Poly>& V, const std::vector<Poly>& B,
                                   const std::vector<Rat>& gammaB, int nmax) {
    FiniteTypeReport r{true, true, true};
    for (int n = 0; n < nmax; ++n) {
        Rat b0 = B[n].eval(Rat(0)), b1 = B[n + 1].eval(Rat(0));
        if (is_zero(b0) || is_zero(b1)) return {false, false, false};
        Poly rhs = B[n + 1] - B[n] * (b1 / b0);
        if (V[n + 1].mul_var(1) != rhs) r.x_v_next = false;
        if (V[n].mul_var(1) != rhs) r.x_v = false;
        if (B[n + 1] != V[n + 1] - V[n] * (b0 / b1 * gammaB[n + 1])) r.v_to_b = false;
    }
    return r;
}

StructuralRelation connection_coeffs(const std::vector<Rat>& beta, const std::vector<Rat>& gamma, const Rat& alpha,
                                     int nmax, ConnectionVariant which) {
    Mps B = mops_from_recurrence([&](int k) -> Rat { return beta.at(k); }, [&](int k) -> Rat { return gamma.at(k); }, nmax);
    auto b = [&](int n, int v) -> Rat { return (n < 0 || v < 0 || v > n) ? Rat(0) : B[n].coeff(v); };
    const int sgn1 = which == ConnectionVariant::minus_one_shift ? -1 : 1;
    StructuralRelation r;
    r.var = Var::z;
    r.nmax = nmax;
    for (int n = 0; n < nmax; ++n) {
        r.zeta.push_back(beta[n] - (alpha + n + 1) * (alpha + n + 1));
        std::vector<Rat> row(static_cast<size_t>(n));
        // row[n - nu] holds a_{n, n-nu}
        for (int nu = 1; nu <= n; ++nu) {
            Rat v;
            if (nu == 1) {
                v = gamma[n] + (2 * n + 2 * alpha + sgn1) * b(n, n - 1);
            } else if (which == ConnectionVariant::minus_one_shift) {
                v = -(2 * n + 2 * alpha - 1) * b(n, n - 1) * b(n - 1, n - nu) +
                    Rat(nu) * (2 * alpha + 2 * n - nu + 2) * b(n, n - nu);
                for (int mu = 2; mu < nu; ++mu) v -= row[n - mu] * b(n - mu, n - nu);
            } else {
                v = gamma[n] * b(n - 1, n - nu) + Rat(nu) * (2 * alpha + 2 * n - nu + 2) * b(n, n - nu);
                for (int mu = 1; mu < nu; ++mu) v -= row[n - mu] * b(n - mu, n - nu);
            }
            row[n - nu] = v;
        }
        r.a.push_back(std::move(row));
    }
    compute_detected_d(r);
    return r;
}

bool ClassificationReport::flag(const std::string& name) const {
    for (const auto& [k, v] : flags)
        if (k == name) return v;
    throw std::out_of_range("no flag " + name);
}

ClassificationReport classify(const PearsonPair& pair, const Rat& alpha, const MomentFunctional& u) {
    ClassificationReport r;
    r.pearson_ok = pearson_check(u, pair, 16);
    r.flags.emplace_back("pearson", r.pearson_ok);
    ClassReduction red = class_reduce(pair, u);
    r.reduced = red.pair;
    r.flags.emplace_back("reduction attempted", red.attempted);
    if (!r.pearson_ok) return r;

    const Poly& phi = r.reduced.phi;
    const Poly& psi = r.reduced.psi;
    const Poly x = Poly::monomial(Var::x, 1);
    auto set_rho = [&](const Poly& n_rho) {
        r.N = n_rho.lead();
        r.rho = n_rho * (Rat(1) / r.N);
        r.d = 2 * r.rho.degree();
    };
    auto statement_moment_flag = [&]() {
        r.flags.emplace_back("<u,rho> != (2+2a)/N", u.apply(r.rho) != (2 + 2 * alpha) / r.N);
    };
    auto alpha_avoids = [&](const Rat& offset, int from) {
        // alpha != -(n + offset)/2 ... expressed as 2 alpha + offset + n != 0
        for (int n = from; n <= 64; ++n)
            if (2 * alpha + offset + n == 0) return false;
        return true;
    };

    if (phi == x * x) {
        if (!is_zero(psi.coeff(0))) {
            r.flags.emplace_back("psi(0) = 0", false);
            return r;
        }
        set_rho(psi.divided_difference(0) + Poly::constant(Var::x, 3 + 2 * alpha));
        bool rho0 = is_zero(r.rho.coeff(0));
        r.flags.emplace_back("rho(0) = 0", rho0);
        statement_moment_flag();
        r.flags.emplace_back("alpha != -(n+3)/2", alpha_avoids(3, 0));
        if (!rho0 || r.rho.degree() < 1) return r;
        r.kase = 'a';
        r.s = r.d / 2;
    } else if (phi == x) {
        set_rho(psi + Poly::constant(Var::x, 2 + 2 * alpha));
        if (r.rho.degree() < 1) return r;
        statement_moment_flag();
        r.flags.emplace_back("alpha != -n/2-1", alpha_avoids(2, 1));
        bool guard = r.N * r.rho.coeff(0) != 1 + 2 * alpha || !is_zero(u.apply(r.rho.divided_difference(0)));
        r.flags.emplace_back("|N rho(0) - (1+2a)| + |<u, theta_0 rho>| != 0", guard);
        if (!guard) return r;
        r.kase = 'b';
        r.s = r.d / 2 - 1;
    } else if (phi == Poly::constant(Var::x, 1)) {
        set_rho(psi.mul_var(1) + Poly::constant(Var::x, 1 + 2 * alpha));
        r.flags.emplace_back("N rho(0) = 1+2a", r.N * r.rho.coeff(0) == 1 + 2 * alpha);
        r.flags.emplace_back("d >= 4", r.d >= 4);
        if (r.d < 4) return r;
        r.kase = 'c';
        r.s = r.d / 2 - 2;
    } else {
        return r;
    }
    if (r.s != r.reduced.cls()) r.flags.emplace_back("class consistent with pair", false);
    else r.flags.emplace_back("class consistent with pair", true);
    return r;
}

namespace {

std::vector<int> support_offsets(const std::vector<Rat>& c, int n) {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(c.size()); ++k)
        if (!is_zero(c[k])) out.push_back(k - n);
    return out;
}

}  // namespace

DifferentialRelationReport differential_relation_check(const std::vector<Rat>& beta, const std::vector<Rat>& gamma,
                                              const ClassificationReport& report, const Rat& alpha, int nmax) {
    const int d = report.d;
    const int top = nmax + d + 1;
    Mps B = mops_from_recurrence([&](int k) -> Rat { return beta.at(k); }, [&](int k) -> Rat { return gamma.at(k); }, top);
    StructuralRelation sr = extract_structural(kl_forward_all(B.polys, alpha));
    const Poly x = Poly::monomial(Var::x, 1);
    const Poly Nrho = report.rho * report.N;
    const Poly Q = Nrho * (Nrho - Poly::constant(Var::x, 2 + 2 * alpha)) - (report.rho.derivative() * report.N).mul_var(1) -
                   x + Poly::constant(Var::x, 1 + 2 * alpha);
    const Poly P1_single = (Nrho - Poly::constant(Var::x, 3 + 2 * alpha)).mul_var(1);
    const Poly P1_double = -(Nrho * 2 - Poly::constant(Var::x, 3 + 2 * alpha)).mul_var(1);
    const Poly P0_double = Q + Poly::constant(Var::x, 2 * alpha * alpha);

    DifferentialRelationReport rep;
    for (int n = 1; n <= nmax; ++n) {
        const Poly& Bn = B[n];
        Poly d1 = Bn.derivative(), d2 = d1.derivative();
        Poly Lp = d2.mul_var(2) + P1_single * d1 - Q * Bn;
        Poly Lc = d2.mul_var(2) + P1_double * d1 + P0_double * Bn;
        std::vector<Poly> basis(B.polys.begin(), B.polys.begin() + std::max(Lp.degree(), Lc.degree()) + 1);
        std::vector<Rat> cp = expand_in_basis(-Lp, basis);
        std::vector<Rat> cc = expand_in_basis(-Lc, basis);
        DifferentialRelationRow row;
        row.n = n;
        row.single_rho_support = support_offsets(cp, n);
        row.double_rho_support = support_offsets(cc, n);
        for (int o : row.single_rho_support)
            if (o < -1 || o > d) rep.single_rho_support_ok = false;
        for (int o : row.double_rho_support)
            if (o < -1 || o > d) rep.double_rho_support_ok = false;
        row.lag0 = cc[n];
        row.lag_minus1 = cc[n - 1];
        Rat zeta = beta[n] - (alpha + n + 1) * (alpha + n + 1);
        if (row.lag0 != zeta - alpha * alpha) rep.lag0_is_zeta_minus_alpha2 = false;
        if (row.lag_minus1 != gamma[n]) rep.lag_minus1_is_gamma_n = false;
        if (row.lag_minus1 != gamma[1]) rep.lag_minus1_is_gamma_1 = false;
        Rat ratio = 1;  // k_n / k_mu
        for (int mu = n + 1; mu <= n + d; ++mu) {
            ratio /= gamma[mu];
            Rat expect = ratio * sr.a[mu][n];
            Rat got = mu < static_cast<int>(cc.size()) ? cc[mu] : Rat(0);
            if (got != expect) rep.upper_matches_structural = false;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace klpoly
