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

#include "klpoly/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace klpoly {

namespace {

constexpr double kPi = 3.14159265358979323846;

// log(sinh(v)) for v > 0 without overflow
double log_sinh(double v) {
    if (v > 20) return v + std::log1p(-std::exp(-2 * v)) - std::log(2.0);
    return std::log(std::sinh(v));
}

double log_cosh(double v) {
    v = std::abs(v);
    return v + std::log1p(std::exp(-2 * v)) - std::log(2.0);
}

// Trapezoid sums on a uniform grid [a, b] with halving until the change is
// below rel_tol times the integral of |g|. half_first halves the weight at
// a only (for integrals over [0, inf) of even integrands).
QuadResult trapezoid(const std::function<double(double)>& g, double a, double b, const QuadConfig& cfg,
                     bool half_first) {
    double h = std::min(cfg.step, (b - a) / 8);
    int n = std::max(8, static_cast<int>(std::ceil((b - a) / h)));
    h = (b - a) / n;
    double sum = 0, abs_sum = 0;
    for (int k = 0; k <= n; ++k) {
        double w = (k == n || (k == 0 && half_first)) ? 0.5 : 1.0;
        if (k == 0 && !half_first) w = 0.5;
        double v = g(a + k * h);
        sum += w * v;
        abs_sum += w * std::abs(v);
    }
    QuadResult r;
    double prev = sum * h;
    for (int it = 0; it < cfg.max_halvings; ++it) {
        double mid = 0, mid_abs = 0;
        for (int k = 0; k < n; ++k) {
            double v = g(a + (k + 0.5) * h);
            mid += v;
            mid_abs += std::abs(v);
        }
        sum += mid;
        abs_sum += mid_abs;
        n *= 2;
        h /= 2;
        double cur = sum * h;
        r.value = cur;
        r.error = std::abs(cur - prev);
        double scale = abs_sum * h;
        if (r.error <= cfg.rel_tol * scale || r.error == 0) {
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    return r;
}

// Walks outward from `start` in steps of `dt` until log_bound drops
// cutoff below the running maximum.
double find_edge(const std::function<double(double)>& log_bound, double start, double dt, double cutoff,
                 double limit) {
    double peak = log_bound(start);
    double t = start;
    while ((dt > 0 ? t < limit : t > limit)) {
        t += dt;
        double v = log_bound(t);
        peak = std::max(peak, v);
        if (v < peak - cutoff) return t;
    }
    return limit;
}

// int_0^inf x^a K_{i tau}(2 sqrt x) f(x) dx through x = e^t.
QuadResult kernel_moment(const Poly& f, double a, double tau, const QuadConfig& cfg) {
    if (a <= -1) throw std::domain_error("integrand not integrable at 0 (need alpha > -1)");
    if (f.is_zero()) return {0, 0, true};
    std::vector<double> c;
    for (const auto& r : f.coeffs()) c.push_back(r.get_d());
    int low = 0;
    while (low < f.degree() && c[low] == 0) ++low;
    // crude bound: |K_{i tau}(y)| <= K_0(y) <= e^{-y} (1 + log(1 + 1/y)) * 2
    auto log_bound = [&](double t) {
        double y = 2 * std::exp(t / 2);
        double pf = 0;
        for (size_t k = 0; k < c.size(); ++k) pf += std::abs(c[k]) * std::exp(static_cast<double>(k) * t);
        return (a + 1) * t + std::log(pf) - y + std::log(2 * (1 + std::log1p(1 / y)));
    };
    double peak_t = 2 * std::log(std::max(1.0, (a + 1 + f.degree()) / 1.0)) ;
    double t_min = find_edge(log_bound, peak_t, -0.5, cfg.cutoff_log, -800.0 / (a + 1 + low));
    double t_max = find_edge(log_bound, peak_t, 0.5, cfg.cutoff_log, 40.0);
    QuadConfig inner = cfg;
    inner.rel_tol = std::min(cfg.rel_tol, 1e-13);
    bool inner_ok = true;
    auto g = [&](double t) {
        double x = std::exp(t);
        QuadResult k = bessel_k_imag(x, tau, inner);
        inner_ok = inner_ok && k.converged;
        return std::exp((a + 1) * t) * k.value * f.eval(x);
    };
    QuadResult r = trapezoid(g, t_min, t_max, cfg, false);
    r.converged = r.converged && inner_ok;
    return r;
}

}  // namespace

QuadResult bessel_k_imag(double x, double tau, const QuadConfig& cfg) {
    if (!(x > 0)) throw std::domain_error("bessel_k_imag needs x > 0");
    const double y = 2 * std::sqrt(x);
    // beyond cosh(u) = 1 + cutoff/y the integrand is below e^{-y-cutoff}
    const double u_max = std::acosh(1 + cfg.cutoff_log / y);
    auto g = [&](double u) { return std::exp(-y * std::cosh(u)) * std::cos(tau * u); };
    QuadConfig c = cfg;
    c.step = std::min(cfg.step * 2, u_max / 8);
    return trapezoid(g, 0, u_max, c, true);
}

double log_gamma_abs_sq(const Rat& x, double y) {
    y = std::abs(y);
    Rat twice = 2 * x;
    if (twice.get_den() != 1 || sgn(x) < 0) throw std::domain_error("gamma_abs_sq supports nonnegative integer or half-integer real parts");
    const long m = twice.get_num().get_si();
    double acc;
    double k;
    if (m % 2 == 0) {
        if (m == 0) {
            if (y == 0) throw std::domain_error("|Gamma(0)| is infinite");
            return std::log(kPi) - std::log(y) - log_sinh(kPi * y);
        }
        acc = y == 0 ? 0.0 : std::log(kPi * y) - log_sinh(kPi * y);
        k = 1;
    } else {
        acc = std::log(kPi) - log_cosh(kPi * y);
        k = 0.5;
    }
    for (; k + 1 <= m / 2.0 + 1e-9; k += 1) acc += std::log(k * k + y * y);
    return acc;
}

double gamma_abs_sq(const Rat& x, double y) { return std::exp(log_gamma_abs_sq(x, y)); }

QuadResult kl_numeric(const Poly& f, const Rat& alpha, double tau, const QuadConfig& cfg) {
    if (f.var() != Var::x) throw std::invalid_argument("kl_numeric expects an x polynomial");
    const double norm = 2 / gamma_abs_sq(alpha + 1, tau / 2);
    QuadResult r = kernel_moment(f, alpha.get_d(), tau, cfg);
    r.value *= norm;
    r.error *= norm;
    return r;
}

double kernel_eigen_residual(double x, double tau, const QuadConfig& cfg) {
    const double h = 0.01 * x;
    auto K = [&](double v) { return bessel_k_imag(v, tau, cfg).value; };
    double k0 = K(x), kp1 = K(x + h), km1 = K(x - h), kp2 = K(x + 2 * h), km2 = K(x - 2 * h);
    double d1 = (-kp2 + 8 * kp1 - 8 * km1 + km2) / (12 * h);
    double d2 = (-kp2 + 16 * kp1 - 30 * k0 + 16 * km1 - km2) / (12 * h * h);
    double lhs = x * x * d2 + x * d1 - x * k0;
    double rhs = -(tau * tau / 4) * k0;
    double scale = std::max({std::abs(x * x * d2), std::abs(x * k0), std::abs(rhs), 1e-300});
    return std::abs(lhs - rhs) / scale;
}

namespace {

// int_0^inf of an even integrand given in log form; value at 0 via a
// limit point when the log form is singular there.
QuadResult even_tau_integral(const std::function<double(double)>& log_g, const QuadConfig& cfg) {
    auto g = [&](double t) {
        double tt = t == 0 ? 1e-9 : t;
        return std::exp(log_g(tt));
    };
    auto lb = [&](double t) { return log_g(t == 0 ? 1e-9 : t); };
    double t_peak = 0.5;
    double best = lb(t_peak);
    for (double t = 0.5; t < 200; t += 0.5) {
        double v = lb(t);
        if (v > best) {
            best = v;
            t_peak = t;
        }
    }
    double t_max = find_edge(lb, t_peak, 0.5, cfg.cutoff_log, 2000.0);
    return trapezoid(g, 0, t_max, cfg, true);
}

}  // namespace

ParsevalResult parseval_gamma_check(int n, const Rat& alpha, const Rat& beta, double mu, const QuadConfig& cfg) {
    ParsevalResult r;
    const Rat s = n + alpha + beta + 1;
    r.lhs_closed = gamma_abs_sq(s, mu / 2) / 2;
    r.lhs_quadrature = kernel_moment(Poly::monomial(Var::x, n), Rat(alpha + beta).get_d(), mu, cfg).value;
    const double lg2b = std::lgamma(Rat(2 * beta).get_d());
    auto log_g = [&](double t) {
        return log_gamma_abs_sq(beta, (t + mu) / 2) + log_gamma_abs_sq(beta, (t - mu) / 2) +
               log_gamma_abs_sq(alpha + n + 1, t / 2) - log_gamma_abs_sq(Rat(0), t) - std::log(8 * kPi) - lg2b;
    };
    QuadResult q = even_tau_integral(log_g, cfg);
    r.rhs = q.value;
    r.rhs_error = q.error;
    r.residual = std::abs(r.lhs_quadrature - r.rhs) / std::abs(r.rhs);
    return r;
}

CdhWeightResult cdh_weight_check(int n, const Rat& alpha, const Rat& a1, const Rat& a2, const QuadConfig& cfg) {
    CdhWeightResult r;
    r.lhs = Rat(pochhammer(a1 + 1, n) * pochhammer(a2 + 1, n)).get_d();
    const double log_norm = std::log(4 * kPi) + std::lgamma(Rat(1 + a1).get_d()) + std::lgamma(Rat(1 + a2).get_d()) +
                            std::lgamma(Rat(a1 + a2 - 2 * alpha).get_d());
    auto log_g = [&](double t) {
        double z = t * t / 4;
        double kl = 1;
        for (int s = 1; s <= n; ++s) {
            double as = Rat(alpha + s).get_d();
            kl *= as * as + z;
        }
        return std::log(kl) + log_gamma_abs_sq(a1 - alpha, t / 2) + log_gamma_abs_sq(a2 - alpha, t / 2) +
               log_gamma_abs_sq(alpha + 1, t / 2) - log_gamma_abs_sq(Rat(0), t) - log_norm;
    };
    QuadResult q = even_tau_integral(log_g, cfg);
    r.rhs = q.value;
    r.rhs_error = q.error;
    r.residual = std::abs(r.rhs - r.lhs) / std::abs(r.lhs);
    return r;
}

}  // namespace klpoly
