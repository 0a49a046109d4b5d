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

#ifndef KLPOLY_JSON_IO_HPP
#define KLPOLY_JSON_IO_HPP

#include <vector>

#include "json.hpp"
#include "klpoly/poly.hpp"

namespace klpoly {

using json = nlohmann::ordered_json;

json to_json(const Rat& r);
json to_json(const Poly& p);  // {"var": "z", "coeffs": ["4", "5", "1"]}
json to_json(const std::vector<Rat>& v);
json to_json(const TriMatrix& m);

Poly poly_from_json(const json& j);

}  // namespace klpoly

#endif
