#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

#include "g2cover/invariants/igusa.hpp"
#include "g2cover/loci/bank.hpp"
#include "g2cover/loci/known.hpp"
#include "g2cover/symcore/complex.hpp"

namespace g2cover {

struct MembershipReport {
    bool L2 = false, D8 = false, D12 = false;
    // Unset when J2 = 0: the i-form equations of the degenerate locus are
    // undefined there.
    std::optional<bool> L4deg;
    // Set only when J2 = 0 and the a-invariants are defined.
    std::optional<bool> L4deg_by_a_invariants;
    std::map<std::string, Rational> residuals;
};

/// Evaluates every locus equation on the invariants. D8 needs its own
/// equation and that of L2; D12 needs both of its equations.
inline MembershipReport membership(const IgusaInvariants<Rational>& inv, const EquationBank& bank = default_bank(),
                                   Reading r = Reading::corrected) {
    MembershipReport rep;
    const auto jb = bindings(inv);
    for (const char* name : {"L2", "D8", "D12_1", "D12_2", "L4deg_J12", "L4deg_J20"})
        rep.residuals[name] = eval_locus(bank.at(name), jb, r);
    const auto zero = [&](const char* name) { return rep.residuals.at(name).is_zero(); };
    rep.L2 = zero("L2");
    rep.D8 = zero("D8") && rep.L2;
    rep.D12 = zero("D12_1") && zero("D12_2");
    if (!is_zero(inv.J2)) {
        const auto ib = bindings(absolute(inv));
        for (const char* name : {"L4deg_i12", "L4deg_i13"}) rep.residuals[name] = eval_locus(bank.at(name), ib, r);
        rep.L4deg = zero("L4deg_i12") && zero("L4deg_i13");
    } else if (!is_zero(inv.J4) && !is_zero(inv.J10)) {
        rep.L4deg_by_a_invariants = a_invariants(inv) == j2_zero_a_invariants();
    }
    return rep;
}

inline MembershipReport membership(const GenusTwoCurve<Rational>& c, const EquationBank& bank = default_bank(),
                                   Reading r = Reading::corrected) {
    return membership(igusa(c), bank, r);
}

inline nlohmann::json to_json(const MembershipReport& r) {
    nlohmann::json res = nlohmann::json::object();
    for (const auto& [k, v] : r.residuals) res[k] = v.str();
    nlohmann::json out{{"L2", r.L2}, {"D8", r.D8}, {"D12", r.D12}, {"residuals", res}};
    if (r.L4deg) out["L4deg"] = *r.L4deg;
    else out["L4deg"] = "undetermined-by-i-form";
    if (r.L4deg_by_a_invariants) out["L4deg_by_a_invariants"] = *r.L4deg_by_a_invariants;
    else out["L4deg_by_a_invariants"] = nullptr;
    return out;
}

/// Residual of the quadratic relation in j tying the elliptic subcover of a
/// degenerate cover to J2 and J4.
inline Rational j_relation_residual(const Rational& J2, const Rational& J4, const Rational& j,
                                    const EquationBank& bank = default_bank()) {
    return eval_locus(bank.at("j_relation"), std::map<std::string, Rational>{{"J2", J2}, {"J4", J4}, {"j", j}});
}

/// Residual and the largest monomial magnitude, for tolerance tests of
/// complex points: a point lies on the locus when |residual| < rel * scale.
struct ScaledResidual {
    Complex residual;
    BigFloat scale;
    bool vanishes(const Rational& rel) const { return abs(residual) < BigFloat(rel, scale.precision()) * scale; }
};

inline ScaledResidual eval_locus_scaled(const LocusEquation& eq, const std::map<std::string, Complex>& point) {
    const MultiPoly f = eq.polynomial();
    const Complex& proto = point.at(eq.variables.front());
    Complex acc(Rational(0), proto.precision_bits());
    BigFloat scale(proto.precision_bits());
    for (const auto& [e, c] : f.terms()) {
        const MultiPoly mono = MultiPoly::from_terms(f.vars(), {{e, c}});
        const Complex term = mono.evaluate(point, proto);
        acc = acc + term;
        const BigFloat m = abs(term);
        if (scale < m) scale = m;
    }
    return {acc, scale};
}

}  // namespace g2cover
