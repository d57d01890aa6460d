#pragma once

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/invariants/igusa.hpp"
#include "g2cover/symcore/io.hpp"
#include "g2cover/symcore/multipoly.hpp"

// The equation bank: locus equations stored term by term as displayed, with
// recorded errata, loaded from a checksummed JSON file.

namespace g2cover {

/// A displayed coefficient known to be wrong, with its replacement.
struct Erratum {
    MultiPoly::Exponents exp;  // in the equation's declared variable order
    Rational displayed;
    Rational corrected;
    std::string note;
};

enum class Reading { displayed, corrected };

struct LocusEquation {
    std::string name;
    std::string form;                    // "J", "i" or "j"
    std::vector<std::string> variables;  // declared order of exponent vectors
    std::optional<long> weight;          // unset for absolute (i-form) equations
    std::vector<std::pair<MultiPoly::Exponents, Rational>> terms;
    std::vector<Erratum> errata;
    std::vector<std::string> notes;

    MultiPoly polynomial(Reading r = Reading::corrected) const {
        auto t = terms;
        if (r == Reading::corrected)
            for (const auto& e : errata)
                for (auto& [exp, c] : t)
                    if (exp == e.exp) c = e.corrected;
        return MultiPoly::from_terms(variables, t);
    }

    bool has_errata() const { return !errata.empty(); }
};

/// Weights of the invariant variables; j and the i's are weightless.
inline const std::map<std::string, long>& invariant_weights() {
    static const std::map<std::string, long> w{{"J2", 2}, {"J4", 4}, {"J6", 6}, {"J10", 10}, {"j", 0}};
    return w;
}

namespace detail {

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw BankIntegrityError("SHA-256 computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

inline LocusEquation equation_from_json(const nlohmann::json& j) {
    LocusEquation eq;
    eq.name = j.at("name").get<std::string>();
    eq.form = j.at("form").get<std::string>();
    eq.variables = j.at("variables").get<std::vector<std::string>>();
    if (j.at("weight").is_number_integer()) eq.weight = j.at("weight").get<long>();
    for (const auto& t : j.at("terms")) {
        auto exp = t.at("exp").get<MultiPoly::Exponents>();
        if (exp.size() != eq.variables.size()) throw BankIntegrityError(eq.name + ": exponent vector of the wrong length");
        eq.terms.emplace_back(std::move(exp), rational_from_json(t.at("coeff")));
    }
    for (const auto& e : j.at("errata"))
        eq.errata.push_back({e.at("exp").get<MultiPoly::Exponents>(), rational_from_json(e.at("displayed")),
                             rational_from_json(e.at("corrected")), e.at("note").get<std::string>()});
    if (j.contains("notes")) eq.notes = j.at("notes").get<std::vector<std::string>>();
    return eq;
}

inline void check_equation(const LocusEquation& eq) {
    for (const auto& e : eq.errata) {
        bool found = false;
        for (const auto& [exp, c] : eq.terms)
            if (exp == e.exp) found = c == e.displayed;
        if (!found) throw BankIntegrityError(eq.name + ": erratum does not match a stored term");
    }
    if (!eq.weight) return;
    for (Reading r : {Reading::displayed, Reading::corrected}) {
        const auto degrees = eq.polynomial(r).weighted_degrees(invariant_weights());
        if (degrees.size() != 1 || degrees.front() != *eq.weight)
            throw BankIntegrityError(eq.name + ": not weight-homogeneous of weight " + std::to_string(*eq.weight));
    }
}

}  // namespace detail

class EquationBank {
public:
    /// Parses a bank, verifying the checksum over the compact sorted-key
    /// serialization of the "equations" array, then each equation's errata
    /// and weight homogeneity.
    static EquationBank from_json(const nlohmann::json& j) {
        if (!j.is_object() || j.value("format", std::string()) != "g2cover-equation-bank/1")
            throw BankIntegrityError("unrecognized equation bank format");
        const std::string expected = j.value("checksum", std::string());
        const std::string actual = "sha256:" + detail::sha256_hex(j.at("equations").dump());
        if (expected != actual) throw BankIntegrityError("equation bank checksum mismatch: stored " + expected + ", computed " + actual);
        EquationBank bank;
        bank.checksum_ = actual;
        try {
            for (const auto& e : j.at("equations")) {
                auto eq = detail::equation_from_json(e);
                detail::check_equation(eq);
                bank.equations_.emplace(eq.name, std::move(eq));
            }
        } catch (const nlohmann::json::exception& e) {
            throw BankIntegrityError(std::string("malformed equation bank: ") + e.what());
        } catch (const ParseError& e) {
            throw BankIntegrityError(std::string("malformed coefficient in equation bank: ") + e.what());
        }
        return bank;
    }

    static EquationBank load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw BankIntegrityError("cannot open equation bank " + path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw BankIntegrityError("equation bank " + path + " is not valid JSON: " + e.what());
        }
        return from_json(j);
    }

    const LocusEquation& at(const std::string& name) const {
        auto it = equations_.find(name);
        if (it == equations_.end()) throw BankIntegrityError("equation bank has no equation '" + name + "'");
        return it->second;
    }

    const std::map<std::string, LocusEquation>& equations() const { return equations_; }
    const std::string& checksum() const { return checksum_; }

private:
    std::map<std::string, LocusEquation> equations_;
    std::string checksum_;
};

#ifdef G2COVER_DEFAULT_BANK
inline const char* default_bank_path() { return G2COVER_DEFAULT_BANK; }
#else
inline const char* default_bank_path() { return "data/equation_bank.json"; }
#endif

/// The shipped bank, loaded on first use.
inline const EquationBank& default_bank() {
    static const EquationBank bank = EquationBank::load(default_bank_path());
    return bank;
}

template <CoefficientRing S>
std::map<std::string, S> bindings(const IgusaInvariants<S>& j) {
    return {{"J2", j.J2}, {"J4", j.J4}, {"J6", j.J6}, {"J10", j.J10}};
}

template <CoefficientRing S>
std::map<std::string, S> bindings(const AbsoluteInvariants<S>& i) {
    return {{"i1", i.i1}, {"i2", i.i2}, {"i3", i.i3}};
}

/// Exact value of the equation at a point binding every variable it uses.
template <CoefficientRing S>
S eval_locus(const LocusEquation& eq, const std::map<std::string, S>& point, Reading r = Reading::corrected) {
    for (const auto& v : eq.variables)
        if (!point.count(v)) throw ArityError(eq.name + " needs a value for '" + v + "'");
    return eq.polynomial(r).evaluate(point, point.at(eq.variables.front()));
}

}  // namespace g2cover
