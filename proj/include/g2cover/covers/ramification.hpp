#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2cover/errors.hpp"

// Ramification signatures of the induced map phi of the projective line for
// an even-degree elliptic subcover: three generic shapes and their
// degenerations, with multiplicities written as (n - c)/2.

namespace g2cover {

/// Count of points with a given index in one fiber: (n - c)/2 when
/// `depends_on_n`, otherwise the fixed value `c`.
struct CountExpr {
    bool depends_on_n;
    int c;
    int at(int n) const { return depends_on_n ? (n - c) / 2 : c; }
};

struct IndexTerm {
    int index;
    CountExpr count;
};

using FiberTemplate = std::vector<IndexTerm>;

struct SignatureTemplate {
    std::string label;  // "I", "I.3", ...
    bool generic;
    std::vector<FiberTemplate> fibers;
};

/// Ramification in one fiber: (index, multiplicity) pairs, index descending.
using Fiber = std::vector<std::pair<int, int>>;

struct RamificationSignature {
    std::vector<Fiber> entries;

    /// "(2),(2),(2),(2)^2,(2)".
    std::string str() const {
        std::string out;
        for (std::size_t f = 0; f < entries.size(); ++f) {
            if (f) out += ",";
            for (const auto& [e, m] : entries[f]) {
                out += "(" + std::to_string(e) + ")";
                if (m > 1) out += "^" + std::to_string(m);
            }
        }
        return out;
    }

    /// sum over fibers of sum (e - 1) * multiplicity.
    int ramification_total() const {
        int total = 0;
        for (const auto& fiber : entries)
            for (const auto& [e, m] : fiber) total += (e - 1) * m;
        return total;
    }

    /// Order-independent key for deduplication.
    std::vector<Fiber> canonical() const {
        auto c = entries;
        std::sort(c.begin(), c.end());
        return c;
    }
};

struct RamificationCase {
    std::string label;
    bool generic;
    RamificationSignature signature;
    // Whether the signature is one of the two degree-4 cases singled out as
    // applicable; unset for other degrees.
    std::optional<bool> listed_for_degree_four;
};

namespace detail {

inline CountExpr half(int c) { return {true, c}; }
inline CountExpr fixed(int c) { return {false, c}; }
inline FiberTemplate twos(CountExpr e) { return {{2, e}}; }
inline FiberTemplate with(int index, CountExpr twos_count) { return {{index, fixed(1)}, {2, twos_count}}; }

inline const std::vector<SignatureTemplate>& signature_catalogue() {
    static const std::vector<SignatureTemplate> catalogue = {
        {"I", true, {twos(half(2)), twos(half(2)), twos(half(2)), twos(half(0)), twos(fixed(1))}},
        {"II", true, {twos(half(4)), twos(half(2)), twos(half(0)), twos(half(0)), twos(fixed(1))}},
        {"III", true, {twos(half(6)), twos(half(0)), twos(half(0)), twos(half(0)), twos(fixed(1))}},
        {"I.1", false, {twos(half(0)), twos(half(2)), twos(half(2)), twos(half(0))}},
        {"I.2", false, {twos(half(2)), twos(half(2)), with(4, half(6)), twos(half(0))}},
        {"I.3", false, {twos(half(2)), twos(half(2)), twos(half(2)), with(4, half(4))}},
        {"I.4", false, {with(3, half(4)), twos(half(2)), twos(half(2)), twos(half(0))}},
        {"II.1", false, {twos(half(2)), twos(half(2)), twos(half(0)), twos(half(0))}},
        {"II.2", false, {twos(half(4)), twos(half(0)), twos(half(0)), twos(half(0))}},
        {"II.3", false, {with(4, half(8)), twos(half(2)), twos(half(0)), twos(half(0))}},
        {"II.4", false, {twos(half(4)), with(4, half(6)), twos(half(0)), twos(half(0))}},
        {"II.5", false, {twos(half(4)), twos(half(2)), twos(half(4)), twos(half(0))}},
        {"II.6", false, {with(3, half(6)), twos(half(2)), with(4, half(0)), twos(half(0))}},
        {"II.7", false, {twos(half(4)), with(3, half(4)), twos(half(0)), twos(half(0))}},
        {"III.1", false, {twos(half(4)), twos(half(0)), twos(half(0)), with(4, half(0))}},
        {"III.2", false, {twos(half(6)), with(4, half(4)), twos(half(0)), twos(half(0))}},
        {"III.3", false, {twos(half(0)), twos(half(0)), twos(half(0)), with(4, half(10))}},
        {"III.4", false, {with(3, half(8)), twos(half(0)), twos(half(0)), twos(half(0))}},
    };
    return catalogue;
}

inline std::vector<std::vector<Fiber>> degree_four_reference() {
    const RamificationSignature generic{{{{2, 1}}, {{2, 1}}, {{2, 1}}, {{2, 2}}, {{2, 1}}}};
    const RamificationSignature degenerate{{{{2, 1}}, {{2, 1}}, {{2, 1}}, {{4, 1}}}};
    return {generic.canonical(), degenerate.canonical()};
}

// Instantiates a template at n; nullopt if any count is negative or any
// index/fiber is impossible for a degree-n map.
inline std::optional<RamificationSignature> instantiate(const SignatureTemplate& t, int n) {
    RamificationSignature sig;
    for (const auto& ft : t.fibers) {
        Fiber fiber;
        int fiber_degree = 0;
        for (const auto& term : ft) {
            const int m = term.count.at(n);
            if (m < 0) return std::nullopt;
            if (term.index > n) return std::nullopt;
            if (m == 0) continue;
            fiber.emplace_back(term.index, m);
            fiber_degree += term.index * m;
        }
        if (fiber_degree > n) return std::nullopt;
        if (!fiber.empty()) sig.entries.push_back(std::move(fiber));
    }
    if (sig.ramification_total() != 2 * n - 2) return std::nullopt;
    return sig;
}

}  // namespace detail

/// All catalogue signatures that make sense for a degree-n map, deduplicated
/// (as multisets of fibers, first occurrence kept).
inline std::vector<RamificationCase> ramification_cases(int n) {
    if (n < 4 || n % 2 != 0) throw UnsupportedDegree("ramification catalogue needs an even degree >= 4, got " + std::to_string(n));
    std::vector<RamificationCase> out;
    std::vector<std::vector<Fiber>> seen;
    const auto reference = detail::degree_four_reference();
    for (const auto& t : detail::signature_catalogue()) {
        auto sig = detail::instantiate(t, n);
        if (!sig) continue;
        const auto key = sig->canonical();
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        std::optional<bool> listed;
        if (n == 4) listed = std::find(reference.begin(), reference.end(), key) != reference.end();
        out.push_back({t.label, t.generic, std::move(*sig), listed});
    }
    return out;
}

}  // namespace g2cover
