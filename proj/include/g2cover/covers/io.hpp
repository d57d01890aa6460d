#pragma once

#include <json.hpp>

#include "g2cover/covers/degenerate.hpp"
#include "g2cover/covers/ramification.hpp"
#include "g2cover/invariants/io.hpp"

namespace g2cover {

/// {"b", "lambda", "params": {"a","c","p","q","r","s","t"}, "curve": {...}}.
inline nlohmann::json to_json(const CoverDegenerate<Rational>& cd) {
    return {
        {"b", cd.b.str()},
        {"lambda", cd.lambda.str()},
        {"params",
         {{"a", cd.a.str()}, {"c", cd.c.str()}, {"p", cd.p.str()}, {"q", cd.q.str()}, {"r", cd.r.str()},
          {"s", cd.s.str()}, {"t", cd.t.str()}}},
        {"curve", to_json(cd.curve())},
    };
}

inline nlohmann::json to_json(const RamificationCase& rc) {
    nlohmann::json j{{"label", rc.label}, {"generic", rc.generic}, {"signature", rc.signature.str()}};
    if (rc.listed_for_degree_four) j["listed"] = *rc.listed_for_degree_four;
    return j;
}

}  // namespace g2cover
