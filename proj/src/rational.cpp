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

#include "klpoly/rational.hpp"

#include <stdexcept>

namespace klpoly {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

[[noreturn]] void parse_fail(std::string_view s, size_t pos, const char* what) {
    throw std::invalid_argument("cannot parse rational \"" + std::string(s) + "\" at position " +
                                std::to_string(pos) + ": " + what);
}

size_t skip_digits(std::string_view s, size_t i) {
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return i;
}

}  // namespace

Rat parse_rat(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && s[b] == ' ') ++b;
    while (e > b && s[e - 1] == ' ') --e;
    std::string_view t = s.substr(b, e - b);
    if (t.empty()) parse_fail(s, b, "empty");
    size_t i = 0;
    bool neg = false;
    if (t[i] == '+' || t[i] == '-') neg = (t[i++] == '-');
    size_t j = skip_digits(t, i);
    if (j == i) parse_fail(s, b + i, "expected digit");
    Int num(std::string(t.substr(i, j - i)));
    Int den = 1;
    if (j < t.size() && t[j] == '.') {
        size_t k = skip_digits(t, j + 1);
        std::string frac(t.substr(j + 1, k - j - 1));
        if (!frac.empty()) {
            Int p10;
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, frac.size());
            num = num * p10 + Int(frac);
            den = p10;
        }
        j = k;
    } else if (j < t.size() && t[j] == '/') {
        size_t k = skip_digits(t, j + 1);
        if (k == j + 1) parse_fail(s, b + j + 1, "expected denominator digits");
        den = Int(std::string(t.substr(j + 1, k - j - 1)));
        if (den == 0) parse_fail(s, b + j + 1, "zero denominator");
        j = k;
    }
    if (j != t.size()) parse_fail(s, b + j, "unexpected character");
    Rat r(neg ? Int(-num) : num, den);
    r.canonicalize();
    return r;
}

Rat pochhammer(const Rat& a, int k) {
    Rat r = 1;
    for (int j = 0; j < k; ++j) r *= a + j;
    return r;
}

Rat factorial(int n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rat pow(const Rat& a, long e) {
    if (e < 0) {
        if (is_zero(a)) throw std::domain_error("negative power of zero");
        return Rat(1) / pow(a, -e);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace klpoly
