#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "msplab/genpoly.hpp"
#include "msplab/poly.hpp"
#include "msplab/series.hpp"

namespace msplab {

using json = nlohmann::ordered_json;

struct CheckResult {
    std::string id;
    bool pass = false;
    int order = 0;
    std::optional<std::string> first_failure;  // "module/op/locus"
    json payload = json::object();

    json to_json() const;
};

json series_json(const Series& s);
Series series_from_json(const json& j);
json poly_json(const Poly& p);
json genpoly_json(const GenPoly& p);
GenPoly genpoly_from_json(const json& j);

}  // namespace msplab
