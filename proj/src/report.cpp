#include "msplab/report.hpp"

namespace msplab {

json CheckResult::to_json() const {
    json j;
    j["check_id"] = id;
    j["status"] = pass ? "PASS" : "FAIL";
    j["order"] = order;
    if (first_failure) j["first_failure"] = *first_failure;
    j["payload"] = payload;
    return j;
}

json series_json(const Series& s) {
    json arr = json::array();
    for (const auto& c : s.c) arr.push_back(to_string(c));
    return arr;
}

Series series_from_json(const json& j) {
    Series s;
    for (const auto& v : j) s.c.push_back(parse_rat(v.get<std::string>()));
    return s;
}

json poly_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.c) arr.push_back(to_string(c));
    return arr;
}

json genpoly_json(const GenPoly& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms) {
        json t;
        t["exponents"] = m;
        t["coeff"] = to_string(c);
        arr.push_back(t);
    }
    return arr;
}

GenPoly genpoly_from_json(const json& j) {
    GenPoly p;
    for (const auto& t : j) p.add_term(t["exponents"].get<Mono>(), parse_rat(t["coeff"].get<std::string>()));
    return p;
}

}  // namespace msplab
