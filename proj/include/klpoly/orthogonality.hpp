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

#ifndef KLPOLY_ORTHOGONALITY_HPP
#define KLPOLY_ORTHOGONALITY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klpoly/poly.hpp"
#include "klpoly/sequences.hpp"
#include "klpoly/structural.hpp"

namespace klpoly {

struct MomentFunctional {
    std::function<Rat(int)> moment;
    std::string label;

    Rat operator()(int n) const { return moment(n); }
    Rat apply(const Poly& p) const;
};

MomentFunctional laguerre_moments(const Rat& a1);            // (a1+1)_n
MomentFunctional hermite_moments();                          // (1/2)_k at n = 2k
MomentFunctional generalized_hermite_moments(const Rat& mu); // (mu+1/2)_k at n = 2k
MomentFunctional v0_moments(const Rat& a1, const Rat& a2);   // (a1+1)_n (a2+1)_n
MomentFunctional v1_moments(const Rat& a1, const Rat& a2);   // n (a1+2)_{n-1} (a2+2)_{n-1}
// n Gamma(n+a1) Gamma(n+a2) / (Gamma(2+a1) Gamma(2+a2)) as exact ratios.
MomentFunctional v1_moments_gamma_form(const Rat& a1, const Rat& a2);
MomentFunctional perturbed_laguerre_moments(const Rat& alpha, const Rat& lambda);

bool gram_check(const MomentFunctional& u, const std::vector<Poly>& B, int nmax);

// Moments of the k-th dual form of B: <u_k, B_j> = delta_{kj}. Valid for
// moment indices n < B.size().
MomentFunctional dual_functional(const std::vector<Poly>& B, int k);

struct DualVectorReport {
    bool ok = true;
    std::vector<std::string> failures;
};
// <u_k, x^m B_n> == 0 for n >= m d + k + 1 and != 0 at n == m d + k.
DualVectorReport dual_vector_check(const std::vector<Poly>& B, const std::vector<MomentFunctional>& U, int d,
                                   int nmax);

// Hankel determinants H_1..H_kmax by fraction-free elimination.
std::vector<Rat> hankel_determinants(const MomentFunctional& u, int kmax);

struct MomentRecurrence {
    std::vector<Rat> beta;         // beta_0..
    std::vector<Rat> gamma;        // gamma_1.. at index 1.., index 0 unused
    std::vector<Poly> polys;       // the MOPS
    std::optional<int> singular_order;  // smallest k with H_k == 0
};
// beta_0..beta_{nmax-1}, gamma_1..gamma_{nmax-1}, polys up to degree nmax.
MomentRecurrence moments_to_recurrence(const MomentFunctional& u, int nmax);

struct PearsonPair {
    Poly phi{Var::x};
    Poly psi{Var::x};
    int cls() const { return std::max(phi.degree() - 2, psi.degree() - 1); }
};

// -n <u, phi x^{n-1}> + <u, psi x^n> == 0 for n = 0..nmax
bool pearson_check(const MomentFunctional& u, const PearsonPair& p, int nmax);

// Rational roots of a rational polynomial; nullopt when the integer
// coefficients are too large to enumerate divisors.
std::optional<std::vector<Rat>> rational_roots(const Poly& p);

struct ClassReduction {
    PearsonPair pair;
    std::vector<Rat> removed_roots;
    bool attempted = true;  // false when root search was skipped
    int cls() const { return pair.cls(); }
};
ClassReduction class_reduce(const PearsonPair& pair, const MomentFunctional& u);

MomentFunctional affine_transform(const MomentFunctional& u, const Rat& a, const Rat& b);
PearsonPair affine_transform(const PearsonPair& p, const Rat& a, const Rat& b);

// (u)_0 = 1, (u)_n = lambda (w)_{n-1}
MomentFunctional x_inverse_delta(const MomentFunctional& w, const Rat& lambda);

struct MaroniResult {
    std::vector<Poly> polys;  // P_0..P_n
    std::vector<Rat> a;       // a_0..a_{n-1}
    std::vector<Rat> beta;    // beta^P_0..beta^P_{n-1}
    std::vector<Rat> gamma;   // gamma^P_1..gamma^P_{n-1} at index 1..
};
// W is the MOPS of w. Throws std::domain_error on a singular lambda.
MaroniResult maroni_perturbation(const std::vector<Poly>& W, const MomentFunctional& w, const Rat& lambda, int n);

struct FiniteTypeReport {
    bool x_v_next = false;                // x V_{n+1} == B_{n+1} - (B_{n+1}(0)/B_n(0)) B_n
    bool x_v = false;                     // x V_n == B_{n+1} - (B_{n+1}(0)/B_n(0)) B_n
    bool v_to_b = false;                  // B_{n+1} == V_{n+1} - (B_n(0)/B_{n+1}(0)) gamma_{n+1} V_n
};
FiniteTypeReport finite_type_check(const std::vector<Poly>& V, const std::vector<Poly>& B,
                                   const std::vector<Rat>& gammaB, int nmax);

enum class ConnectionVariant { minus_one_shift, plus_one_shift };

// Structural tables of KL_alpha[B] from the three-term data of B:
// beta_0..beta_nmax and gamma_1..gamma_nmax (index 0 unused). Rows 0..nmax-1.
StructuralRelation connection_coeffs(const std::vector<Rat>& beta, const std::vector<Rat>& gamma, const Rat& alpha,
                                     int nmax, ConnectionVariant which);

struct ClassificationReport {
    char kase = 'n';  // 'a', 'b', 'c' or 'n' for none
    Poly rho{Var::x};
    Rat N = 0;
    int d = 0;
    int s = 0;
    PearsonPair reduced;
    bool pearson_ok = false;
    // Name and truth value of each evaluated condition.
    std::vector<std::pair<std::string, bool>> flags;
    bool flag(const std::string& name) const;
};
ClassificationReport classify(const PearsonPair& pair, const Rat& alpha, const MomentFunctional& u);

struct DifferentialRelationRow {
    int n = 0;
    std::vector<int> single_rho_support;    // offsets mu - n with nonzero coefficient
    std::vector<int> double_rho_support;
    Rat lag0;          // double-rho operator, coefficient at B_n
    Rat lag_minus1;    // double-rho operator, coefficient at B_{n-1}
};

struct DifferentialRelationReport {
    bool single_rho_support_ok = true;   // expansion within [n-1, n+d]
    bool double_rho_support_ok = true;
    bool lag0_is_zeta_minus_alpha2 = true;
    bool lag_minus1_is_gamma_n = true;
    bool lag_minus1_is_gamma_1 = true;
    bool upper_matches_structural = true;  // rho_{n,mu} == k_n/k_mu a_{mu,n}
    std::vector<DifferentialRelationRow> rows;
};
// B is generated from (beta, gamma); rows n = 1..nmax.
DifferentialRelationReport differential_relation_check(const std::vector<Rat>& beta, const std::vector<Rat>& gamma,
                                              const ClassificationReport& report, const Rat& alpha, int nmax);

}  // namespace klpoly

#endif
