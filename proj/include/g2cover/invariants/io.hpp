#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/invariants/igusa.hpp"
#include "g2cover/symcore/io.hpp"

namespace g2cover {

inline const std::array<std::string, 7> kCoefficientKeys{"a0", "a1", "a2", "a3", "a4", "a5", "a6"};

/// {"a6": "...", ..., "a0": "..."}; missing keys are zero.
inline GenusTwoCurve<Rational> curve_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("curve JSON must be an object with keys a0..a6");
    for (const auto& [key, value] : j.items()) {
        if (std::find(kCoefficientKeys.begin(), kCoefficientKeys.end(), key) == kCoefficientKeys.end())
            throw ParseError("unexpected key '" + key + "' in curve JSON");
    }
    std::vector<Rational> low_to_high;
    for (const auto& key : kCoefficientKeys) low_to_high.push_back(j.contains(key) ? rational_from_json(j.at(key)) : Rational(0));
    return GenusTwoCurve<Rational>(QPoly(std::move(low_to_high), "x"));
}

inline nlohmann::json to_json(const GenusTwoCurve<Rational>& c) {
    nlohmann::json out = nlohmann::json::object();
    const auto a = c.coefficients();
    for (std::size_t i = 0; i < 7; ++i) out[kCoefficientKeys[i]] = a[i].str();
    return out;
}

/// "a6,a5,...,a0" as typed on the command line.
inline GenusTwoCurve<Rational> curve_from_list(const std::string& text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        coeffs.push_back(Rational::parse(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (coeffs.size() != 7) throw ParseError("expected 7 comma-separated coefficients a6..a0, got " + std::to_string(coeffs.size()));
    return GenusTwoCurve<Rational>::from_leading_first(coeffs);
}

/// {"J2","J4","J6","J10","i","a"} with null for undefined quotients and a
/// "notes" list saying why.
inline nlohmann::json invariants_json(const IgusaInvariants<Rational>& j) {
    nlohmann::json out{{"J2", j.J2.str()}, {"J4", j.J4.str()}, {"J6", j.J6.str()}, {"J10", j.J10.str()}};
    nlohmann::json notes = nlohmann::json::array();
    if (is_zero(j.J2)) {
        out["i"] = nullptr;
        notes.push_back("i undefined: J2=0");
    } else {
        const auto i = absolute(j);
        out["i"] = {i.i1.str(), i.i2.str(), i.i3.str()};
    }
    if (is_zero(j.J4) || is_zero(j.J10)) {
        out["a"] = nullptr;
        notes.push_back(is_zero(j.J4) ? "a undefined: J4=0" : "a undefined: J10=0");
    } else {
        const auto a = a_invariants(j);
        out["a"] = {a.a1.str(), a.a2.str()};
    }
    out["notes"] = notes;
    return out;
}

}  // namespace g2cover
