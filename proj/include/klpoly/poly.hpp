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

#ifndef KLPOLY_POLY_HPP
#define KLPOLY_POLY_HPP

#include <ostream>
#include <string>
#include <vector>

#include "klpoly/rational.hpp"

namespace klpoly {

enum class Var { x, tau, z };

const char* var_name(Var v);
Var parse_var(const std::string& s);

// Dense polynomial, coefficient k multiplies var^k. No trailing zeros.
class Poly {
   public:
    explicit Poly(Var v = Var::x) : var_(v) {}
    Poly(Var v, std::vector<Rat> coeffs);

    static Poly constant(Var v, const Rat& c);
    static Poly monomial(Var v, int k, const Rat& c = 1);
    // var - c
    static Poly linear(Var v, const Rat& c);

    Var var() const { return var_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
    Rat coeff(int k) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    Poly derivative() const;
    Rat eval(const Rat& v) const;
    double eval(double v) const;
    Poly compose_affine(const Rat& a, const Rat& b) const;  // p(a v + b)
    Poly mul_var(int k = 1) const;                           // v^k p
    // (p(v) - p(c)) / (v - c)
    Poly divided_difference(const Rat& c) const;
    Poly monic() const;
    Poly retag(Var v) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.var_ == b.var_ && a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

   private:
    void trim();
    void require_same(const Poly& o) const;

    Var var_;
    std::vector<Rat> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(Poly a, const Rat& s);
Poly operator*(const Rat& s, Poly a);
Poly operator-(Poly a);

enum class ArithOp { add, sub, mul };
Poly poly_arith(const Poly& a, const Poly& b, ArithOp op);

std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

// Coefficients c with p = sum c_k basis[k]; basis[k] must be monic of degree k.
std::vector<Rat> expand_in_basis(const Poly& p, const std::vector<Poly>& basis);

// tau <-> z = tau^2/4
Poly to_z(const Poly& p);
Poly to_tau(const Poly& p);

struct GaussRat {
    Rat re, im;

    GaussRat(const Rat& r = 0, const Rat& i = 0) : re(r), im(i) {}
    GaussRat conj() const { return {re, -im}; }
    bool is_zero() const { return klpoly::is_zero(re) && klpoly::is_zero(im); }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

GaussRat operator+(GaussRat a, const GaussRat& b);
GaussRat operator-(GaussRat a, const GaussRat& b);
GaussRat operator*(GaussRat a, const GaussRat& b);
GaussRat operator/(GaussRat a, const GaussRat& b);
GaussRat operator-(const GaussRat& a);

// Polynomial over Q(i); only used transiently around the tau shift.
struct GPoly {
    Var var = Var::tau;
    std::vector<GaussRat> c;

    static GPoly from(const Poly& p);
    void trim();
    // Throws std::domain_error if any imaginary part survives.
    Poly real_part_checked() const;
    friend bool operator==(const GPoly& a, const GPoly& b) { return a.var == b.var && a.c == b.c; }
};

GPoly operator+(const GPoly& a, const GPoly& b);
GPoly operator-(const GPoly& a, const GPoly& b);
GPoly operator*(const GPoly& a, const GPoly& b);

// p(tau + w) by binomial expansion.
GPoly shift_tau(const Poly& p, const GaussRat& w);
GPoly shift_tau(const GPoly& p, const GaussRat& w);

// Lower-triangular table of rationals; row n holds n+1 entries.
class TriMatrix {
   public:
    TriMatrix() = default;
    explicit TriMatrix(int nmax);

    int size() const { return static_cast<int>(rows_.size()); }
    Rat& at(int n, int k) { return rows_[n][k]; }
    const Rat& at(int n, int k) const { return rows_[n][k]; }
    const std::vector<Rat>& row(int n) const { return rows_[n]; }

    bool unit_diagonal() const;
    bool is_identity() const;
    TriMatrix inverse() const;  // forward substitution; needs nonzero diagonal

    friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);
    friend bool operator==(const TriMatrix& a, const TriMatrix& b) { return a.rows_ == b.rows_; }

   private:
    std::vector<std::vector<Rat>> rows_;
};

}  // namespace klpoly

#endif
