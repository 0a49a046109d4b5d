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

#ifndef KLPOLY_SEQUENCES_HPP
#define KLPOLY_SEQUENCES_HPP

#include <functional>
#include <string>
#include <vector>

#include "klpoly/poly.hpp"
#include "klpoly/structural.hpp"

namespace klpoly {

// polys[k] is monic of degree k.
struct Mps {
    std::vector<Poly> polys;
    std::string meta;

    const Poly& operator[](int k) const { return polys.at(static_cast<size_t>(k)); }
    int size() const { return static_cast<int>(polys.size()); }
};

// Order d+1 recurrence in lag form:
//   P_{n+1} = (v - beta(n)) P_n - sum_{lag=1..d} coef(n, lag) P_{n-lag},
// terms with negative index dropped. In the superscript notation
// coef(n, lag) = gamma^{d-lag}_{n-lag+1}.
struct Recurrence {
    int d = 1;
    Var var = Var::x;
    std::function<Rat(int)> beta;
    std::function<Rat(int, int)> coef;

    Rat gamma(int j, int m) const { return coef(m + d - j - 1, d - j); }
    static Recurrence from_gammas(int d, Var v, std::function<Rat(int)> beta,
                                  std::function<Rat(int, int)> gamma_jn);
};

// Polys P_0..P_n. Throws on a vanishing gamma^0 (loss of regularity).
Mps dops_from_recurrence(const Recurrence& rec, int n);
Mps mops_from_recurrence(const std::function<Rat(int)>& beta, const std::function<Rat(int)>& gamma,
                         int n);
// Same sum with no admissibility check, started from explicit initial terms.
std::vector<Poly> run_recurrence(const Recurrence& rec, int n, std::vector<Poly> initial = {});

Mps laguerre(const Rat& a1, int n);
Mps hermite(int n);

// H_{n+d+1} = x H_{n+d} - C(n+d,d)/(d+1) H_n, H_k = x^k for k <= d
Mps hermite_type(int d, int n);

Rat reversed_appell_lambda(const std::vector<Rat>& alphas, int n);
Mps reversed_appell(const std::vector<Rat>& alphas, int n);

struct HypergeomPair {
    Mps source;   // monic (p+1)F(q)(-n, a; b; x)
    Mps image;    // KL_alpha of source, in z
    bool image_matches_series = false;
};
// p = a.size(), q = b.size().
HypergeomPair hypergeom_pair(const std::vector<Rat>& a, const std::vector<Rat>& b, int n,
                             const Rat& alpha);

// Three-term data of the continuous dual Hahn image (index n is the
// recurrence step producing S_{n+1}).
Rat cdh_beta(int n, const Rat& alpha, const Rat& a1, const Rat& a2);
Rat cdh_gamma(int n, const Rat& alpha, const Rat& a1, const Rat& a2);
Mps cdh_monic(const Rat& alpha, const Rat& a1, const Rat& a2, int n);

// Recurrence coefficients of the R-family for d = 2 (Bateman case).
Rat bateman_beta(int n, const Rat& a1, const Rat& a2);
Rat bateman_gamma1(int n, const Rat& a1, const Rat& a2);
Rat bateman_gamma0(int n, const Rat& a1, const Rat& a2);

// Lag 2d+2 coefficient: n(n-1) C(n-d-2, d)/(d+1), or with the extra factor
// C(n-2, d)/(d+1).
enum class LastLagCoefficient { single_binomial, binomial_pair };

// Image of the Appell d-family: order 2d+3 recurrence in z.
Recurrence appell_image_recurrence(int d, const Rat& alpha, LastLagCoefficient which);

struct AppellImageCheck {
    bool recurrence_holds = false;       // every n <= nmax
    int first_failure = -1;
    bool monomial_initial_terms = false;  // S_k == monomial_image(k) for k <= 2d+1
    int initial_terms_hold_through = -1;  // largest k with S_k == monomial_image(k)
};
AppellImageCheck appell_image_check(int d, const Rat& alpha, int nmax, LastLagCoefficient which);

// Image recurrence of the reversed-Appell family built from the
// R-recurrence data (extracted exactly up to nmax).
Recurrence reversed_appell_image_recurrence(const std::vector<Rat>& alphas, const Rat& alpha,
                                            int nmax);
bool reversed_appell_image_check(const std::vector<Rat>& alphas, const Rat& alpha, int nmax);

// Three-term form of the d = 1 image: beta uses -2a + a1 - (a + n)^2 and the
// lag-1, lag-2 terms 2(n+1)(n+1+a)(n+1+a1), n(n+1)(a1+n)(a1+n+1).
struct LaguerreImageRecurrenceCheck {
    bool beta_at_next_step = false;  // beta(n) used at step n+1
    bool beta_at_step = false;       // beta(n) used at step n
};
LaguerreImageRecurrenceCheck laguerre_image_recurrence_check(const Rat& alpha, const Rat& a1, int nmax);

// cdh_beta/cdh_gamma recurrence vs KL image of the d = 2 family.
bool cdh_recurrence_check(const Rat& alpha, const Rat& a1, const Rat& a2, int nmax);
// R recurrence data vs bateman_* formulas.
bool bateman_recurrence_check(const Rat& a1, const Rat& a2, int nmax);

// (x R_{n+1})' == (n+2) R_{n+1} - (n+1) (lambda_n / lambda_{n+1}) R_n
bool reversed_appell_derivative_check(const std::vector<Rat>& alphas, int nmax);
// R'_{n+1}(alphas) == (n+1) R_n(alphas + 1)
bool reversed_appell_parameter_shift_check(const std::vector<Rat>& alphas, int nmax);
// delta KL_a[R_{n+1}(alphas)] == factor(n) * KL_{a+1/2}[R_n(alphas+1)]
// with factor(n) = n + 1 + offset; offset = -1 gives the factor n.
bool reversed_appell_delta_check(const std::vector<Rat>& alphas, const Rat& alpha, int nmax, int offset);
// delta KL_a[H_n] == n KL_{a+1/2}[H_{n-1}]
bool hermite_type_delta_check(int d, const Rat& alpha, int nmax);

struct PerturbedLaguerre {
    Mps polys;
    std::vector<Rat> a;      // a_0..a_{n-1}
    std::vector<Rat> beta;   // beta~_0..beta~_{n-1}
    std::vector<Rat> gamma;  // gamma~_1..gamma~_{n-1} stored at index 1.., index 0 unused
};
Rat perturbed_c(int n, const Rat& alpha);
Rat perturbed_a(int n, const Rat& alpha, const Rat& lambda);
// Throws std::domain_error when lambda is singular (lambda == 0, a zero
// denominator in a_n, or a vanishing gamma~).
PerturbedLaguerre perturbed_laguerre(const Rat& alpha, const Rat& lambda, int n);
// Alternative closed form (n + 2a + 3)(1 - lambda c_n)/(1 - lambda c_{n-1}).
Rat perturbed_a_alt(int n, const Rat& alpha, const Rat& lambda);

struct ContiguityReport {
    bool r_alpha2_shift = false;
    bool r_alpha1_shift = false;
    bool r_power_expansion = false;
    bool r_both_shift_same_index = false;
    bool r_both_shift_reindexed = false;
    bool s_alpha2_shift = false;
    bool s_alpha1_shift = false;
    bool s_power_expansion = false;
    bool s_both_shift_same_index = false;
    bool s_both_shift_reindexed = false;
    bool x_r_relation = false;
    bool z_s_relation = false;

    bool same_index_all() const;
    bool reindexed_all() const;
};
ContiguityReport contiguity_checks(const Rat& alpha, const Rat& a1, const Rat& a2, int nmax);

}  // namespace klpoly

#endif
