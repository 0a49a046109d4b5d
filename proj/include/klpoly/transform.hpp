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

#ifndef KLPOLY_TRANSFORM_HPP
#define KLPOLY_TRANSFORM_HPP

#include <vector>

#include "klpoly/poly.hpp"

namespace klpoly {

// prod_{s=1..n} ((alpha+s)^2 + z)
Poly monomial_image(int n, const Rat& alpha);
// monomial_image(k, alpha) for k = 0..n
std::vector<Poly> monomial_images(int n, const Rat& alpha);

Poly kl_forward(const Poly& p, const Rat& alpha);
Poly kl_inverse(const Poly& q, const Rat& alpha);
std::vector<Poly> kl_forward_all(const std::vector<Poly>& ps, const Rat& alpha);

// KL_alpha[x^n f] == monomial_image(n, alpha) * KL_{alpha+n}[f]
bool kl_shift_check(const Poly& f, int n, const Rat& alpha);

// x^2 f'' + x f' - x f
Poly op_A(const Poly& f);
// x^2 f'' + (2a+3) x f' + (2a+1) f - x f
Poly op_L(const Poly& f, const Rat& alpha);
// (1/x) A(x f) + 2a (x f)'
Poly op_L_composed(const Poly& f, const Rat& alpha);
// x f'' + (2b+1) f' - f
Poly op_M(const Poly& f, const Rat& beta);

// Central difference with step i divided by (i tau). Accepts tau or z
// polynomials even in tau; returns a z polynomial.
Poly delta_op(const Poly& f);
// The denominator multiplier of i*tau; 1 makes delta(z + a^2) == 1.
inline constexpr long kDeltaDenominatorScale = 1;

struct DifferenceIdentities {
    bool second_difference = false;  // ((a+1)^2+z) delta^2 KL_a[f] == KL_a[x f'']
    bool first_difference = false;   // KL_{a+1/2}[f'] == delta KL_a[f]
    bool ok() const { return second_difference && first_difference; }
};
DifferenceIdentities difference_identity_checks(const Poly& f, const Rat& alpha);

// KL_a[L^m f] == (-1)^m (z+a^2)^m KL_a[f]
bool eigen_identity_check(const Poly& f, int m, const Rat& alpha);
// (-1)^m KL_a[f] == KL_{a+m}[M_{a+m} ... M_{a+1} f]
bool chain_identity_check(const Poly& f, int m, const Rat& alpha);

}  // namespace klpoly

#endif
