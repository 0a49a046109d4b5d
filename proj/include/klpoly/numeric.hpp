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

#ifndef KLPOLY_NUMERIC_HPP
#define KLPOLY_NUMERIC_HPP

#include "klpoly/poly.hpp"

namespace klpoly {

struct QuadConfig {
    double rel_tol = 1e-12;
    // Inner and outer truncation: integrand magnitudes below exp(-cutoff_log)
    // relative to the peak are dropped.
    double cutoff_log = 46.0;
    double step = 0.125;   // initial trapezoid step, halved until converged
    int max_halvings = 8;
};

struct QuadResult {
    double value = 0;
    double error = 0;  // difference between the last two refinements
    bool converged = false;
};

// K_{i tau}(2 sqrt(x)) from the Fourier cosine representation.
QuadResult bessel_k_imag(double x, double tau, const QuadConfig& cfg = {});

// log |Gamma(x + i y)|^2 for 2x a nonnegative integer (x = 0 needs y > 0).
double log_gamma_abs_sq(const Rat& x, double y);
double gamma_abs_sq(const Rat& x, double y);

// 2 |Gamma(a+1+i tau/2)|^{-2} int_0^inf x^a K_{i tau}(2 sqrt x) f(x) dx
QuadResult kl_numeric(const Poly& f, const Rat& alpha, double tau, const QuadConfig& cfg = {});

// Relative residual of x^2 K'' + x K' - x K + (tau/2)^2 K at the given point
// (the A-eigenrelation for K_{i tau}(2 sqrt x)), by central differences.
double kernel_eigen_residual(double x, double tau, const QuadConfig& cfg = {});

struct ParsevalResult {
    double lhs_quadrature = 0;  // int_0^inf x^{n+a+b} K_{i mu}(2 sqrt x) dx
    double lhs_closed = 0;      // |Gamma(n+a+b+1+i mu/2)|^2 / 2
    double rhs = 0;             // tau quadrature of the Gamma product
    double rhs_error = 0;
    double residual = 0;        // |lhs_quadrature - rhs| / |rhs|
};
ParsevalResult parseval_gamma_check(int n, const Rat& alpha, const Rat& beta, double mu, const QuadConfig& cfg = {});

struct CdhWeightResult {
    double lhs = 0;  // (a1+1)_n (a2+1)_n
    double rhs = 0;
    double rhs_error = 0;
    double residual = 0;
};
CdhWeightResult cdh_weight_check(int n, const Rat& alpha, const Rat& a1, const Rat& a2, const QuadConfig& cfg = {});

}  // namespace klpoly

#endif
