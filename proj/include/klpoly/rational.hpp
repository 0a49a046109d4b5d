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

#ifndef KLPOLY_RATIONAL_HPP
#define KLPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace klpoly {

// mpq_class keeps values canonical after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);

// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
// Throws std::invalid_argument with the offending position.
Rat parse_rat(std::string_view s);

Rat pochhammer(const Rat& a, int k);
Rat factorial(int n);
Int binomial(long n, long k);  // 0 outside 0 <= k <= n
Rat pow(const Rat& a, long e);  // e may be negative for a != 0

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace klpoly

#endif
