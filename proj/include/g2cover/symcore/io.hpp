#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/symcore/rational.hpp"
#include "g2cover/symcore/unipoly.hpp"

namespace g2cover {

/// {"var": "x", "coeffs": ["a0", "a1", ...]} with rational literals.
inline nlohmann::json to_json(const QPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return {{"var", p.var()}, {"coeffs", coeffs}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational literal string, got " + j.dump());
}

inline QPoly qpoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw ParseError("polynomial JSON needs a \"coeffs\" array");
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
    return QPoly(std::move(c), j.value("var", std::string("x")));
}

}  // namespace g2cover
