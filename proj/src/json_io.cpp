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

#include "klpoly/json_io.hpp"

namespace klpoly {

json to_json(const Rat& r) { return to_string(r); }

json to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_string(r));
    return a;
}

json to_json(const Poly& p) {
    json j;
    j["var"] = var_name(p.var());
    j["coeffs"] = to_json(p.coeffs());
    return j;
}

json to_json(const TriMatrix& m) {
    json a = json::array();
    for (int n = 0; n < m.size(); ++n) a.push_back(to_json(m.row(n)));
    return a;
}

Poly poly_from_json(const json& j) {
    std::vector<Rat> c;
    for (const auto& s : j.at("coeffs")) c.push_back(parse_rat(s.get<std::string>()));
    return Poly(parse_var(j.at("var").get<std::string>()), std::move(c));
}

}  // namespace klpoly
