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

#include "klpoly/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace klpoly {

const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::tau: return "tau";
        case Var::z: return "z";
    }
    return "?";
}

Var parse_var(const std::string& s) {
    if (s == "x") return Var::x;
    if (s == "tau") return Var::tau;
    if (s == "z") return Var::z;
    throw std::invalid_argument("unknown variable tag: " + s);
}

Poly::Poly(Var v, std::vector<Rat> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Var v, const Rat& c) { return Poly(v, {c}); }

Poly Poly::monomial(Var v, int k, const Rat& c) {
    std::vector<Rat> cs(static_cast<size_t>(k) + 1);
    cs[k] = c;
    return Poly(v, std::move(cs));
}

Poly Poly::linear(Var v, const Rat& c) { return Poly(v, {-c, 1}); }

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

void Poly::trim() {
    while (!c_.empty() && klpoly::is_zero(c_.back())) c_.pop_back();
}

void Poly::require_same(const Poly& o) const {
    if (var_ != o.var_)
        throw std::invalid_argument(std::string("variable tag mismatch: ") + var_name(var_) + " vs " +
                                    var_name(o.var_));
}

Poly& Poly::operator+=(const Poly& o) {
    require_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    require_same(o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (klpoly::is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (klpoly::is_zero(s)) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(var_);
    std::vector<Rat> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<long>(k);
    return Poly(var_, std::move(r));
}

Rat Poly::eval(const Rat& v) const {
    Rat r = 0;
    for (size_t k = c_.size(); k-- > 0;) r = r * v + c_[k];
    return r;
}

double Poly::eval(double v) const {
    double r = 0;
    for (size_t k = c_.size(); k-- > 0;) r = r * v + c_[k].get_d();
    return r;
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
    Poly r(var_);
    Poly lin(var_, {b, a});
    for (size_t k = c_.size(); k-- > 0;) {
        r *= lin;
        r += Poly::constant(var_, c_[k]);
    }
    return r;
}

Poly Poly::mul_var(int k) const {
    if (c_.empty()) return *this;
    std::vector<Rat> r(static_cast<size_t>(k));
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(var_, std::move(r));
}

Poly Poly::divided_difference(const Rat& c) const {
    // synthetic division by (v - c), remainder dropped
    if (c_.size() <= 1) return Poly(var_);
    std::vector<Rat> q(c_.size() - 1);
    Rat acc = 0;
    for (size_t k = c_.size(); k-- > 1;) {
        acc = acc * c + c_[k];
        q[k - 1] = acc;
    }
    return Poly(var_, std::move(q));
}

Poly Poly::monic() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no monic form");
    return *this * (Rat(1) / c_.back());
}

Poly Poly::retag(Var v) const { return Poly(v, c_); }

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(Poly a, const Rat& s) { return a *= s; }
Poly operator*(const Rat& s, Poly a) { return a *= s; }
Poly operator-(Poly a) { return a *= Rat(-1); }

Poly poly_arith(const Poly& a, const Poly& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown op");
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeffs()[k];
        if (is_zero(c)) continue;
        Rat a = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        bool unit = (a == 1 && k > 0);
        if (!unit) os << to_string(a);
        if (k > 0) {
            if (!unit) os << "*";
            os << var_name(p.var());
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

std::vector<Rat> expand_in_basis(const Poly& p, const std::vector<Poly>& basis) {
    if (p.degree() >= static_cast<int>(basis.size()))
        throw std::invalid_argument("basis does not cover the polynomial degree");
    for (size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].var() != p.var()) throw std::invalid_argument("basis variable tag mismatch");
        if (basis[k].degree() != static_cast<int>(k)) throw std::invalid_argument("basis is not graded");
        if (!basis[k].is_monic()) throw std::invalid_argument("basis is not monic");
    }
    std::vector<Rat> out(basis.size());
    std::vector<Rat> r = p.coeffs();
    for (int k = p.degree(); k >= 0; --k) {
        const Rat c = r[k];
        if (is_zero(c)) continue;
        out[k] = c;
        const auto& b = basis[k].coeffs();
        for (int j = 0; j <= k; ++j) r[j] -= c * b[j];
    }
    return out;
}

Poly to_z(const Poly& p) {
    if (p.var() != Var::tau) throw std::invalid_argument("to_z expects a tau polynomial");
    std::vector<Rat> r;
    Rat four_k = 1;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k % 2 == 1) {
            if (!is_zero(p.coeffs()[k])) throw std::domain_error("odd part nonzero in tau polynomial");
            continue;
        }
        r.push_back(p.coeffs()[k] * four_k);
        four_k *= 4;
    }
    return Poly(Var::z, std::move(r));
}

Poly to_tau(const Poly& p) {
    if (p.var() != Var::z) throw std::invalid_argument("to_tau expects a z polynomial");
    std::vector<Rat> r(p.is_zero() ? 0 : 2 * static_cast<size_t>(p.degree()) + 1);
    Rat quarter_k = 1;
    for (int k = 0; k <= p.degree(); ++k) {
        r[2 * k] = p.coeffs()[k] * quarter_k;
        quarter_k /= 4;
    }
    return Poly(Var::tau, std::move(r));
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rat n = o.re * o.re + o.im * o.im;
    if (klpoly::is_zero(n)) throw std::domain_error("division by zero Gaussian rational");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }

GPoly GPoly::from(const Poly& p) {
    GPoly g;
    g.var = p.var();
    for (const auto& c : p.coeffs()) g.c.emplace_back(c, 0);
    return g;
}

void GPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly GPoly::real_part_checked() const {
    std::vector<Rat> r;
    for (const auto& v : c) {
        if (!klpoly::is_zero(v.im)) throw std::domain_error("imaginary residue in result");
        r.push_back(v.re);
    }
    return Poly(var, std::move(r));
}

GPoly operator+(const GPoly& a, const GPoly& b) {
    GPoly r{a.var, a.c};
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
    for (size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
    r.trim();
    return r;
}

GPoly operator-(const GPoly& a, const GPoly& b) {
    GPoly r{a.var, a.c};
    if (b.c.size() > r.c.size()) r.c.resize(b.c.size());
    for (size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
    r.trim();
    return r;
}

GPoly operator*(const GPoly& a, const GPoly& b) {
    GPoly r{a.var, {}};
    if (a.c.empty() || b.c.empty()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

GPoly shift_tau(const GPoly& p, const GaussRat& w) {
    if (p.var != Var::tau) throw std::invalid_argument("shift_tau expects a tau polynomial");
    GPoly r{Var::tau, std::vector<GaussRat>(p.c.size())};
    // sum_k c_k (tau + w)^k = sum_j tau^j sum_{k>=j} c_k C(k,j) w^(k-j)
    std::vector<GaussRat> wp(p.c.size() + 1);
    wp[0] = GaussRat(1);
    for (size_t k = 1; k < wp.size(); ++k) wp[k] = wp[k - 1] * w;
    for (size_t k = 0; k < p.c.size(); ++k) {
        if (p.c[k].is_zero()) continue;
        for (size_t j = 0; j <= k; ++j) {
            Rat b(binomial(static_cast<long>(k), static_cast<long>(j)));
            r.c[j] += p.c[k] * wp[k - j] * GaussRat(b);
        }
    }
    r.trim();
    return r;
}

GPoly shift_tau(const Poly& p, const GaussRat& w) { return shift_tau(GPoly::from(p), w); }

TriMatrix::TriMatrix(int nmax) : rows_(static_cast<size_t>(nmax) + 1) {
    for (int n = 0; n <= nmax; ++n) rows_[n].resize(static_cast<size_t>(n) + 1);
}

bool TriMatrix::unit_diagonal() const {
    for (int n = 0; n < size(); ++n)
        if (rows_[n][n] != 1) return false;
    return true;
}

bool TriMatrix::is_identity() const {
    for (int n = 0; n < size(); ++n)
        for (int k = 0; k <= n; ++k)
            if (rows_[n][k] != (k == n ? 1 : 0)) return false;
    return true;
}

TriMatrix TriMatrix::inverse() const {
    const int n = size();
    TriMatrix inv(n - 1);
    for (int c = 0; c < n; ++c) {
        if (klpoly::is_zero(rows_[c][c])) throw std::domain_error("singular triangular matrix");
        inv.rows_[c][c] = Rat(1) / rows_[c][c];
        for (int r = c + 1; r < n; ++r) {
            Rat s = 0;
            for (int k = c; k < r; ++k) s += rows_[r][k] * inv.rows_[k][c];
            inv.rows_[r][c] = -s / rows_[r][r];
        }
    }
    return inv;
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("triangular size mismatch");
    TriMatrix r(a.size() - 1);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j <= i; ++j) {
            Rat s = 0;
            for (int k = j; k <= i; ++k) s += a.rows_[i][k] * b.rows_[k][j];
            r.rows_[i][j] = s;
        }
    return r;
}

}  // namespace klpoly
