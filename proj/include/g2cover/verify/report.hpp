#pragma once

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace g2cover {

// "discrepancy": the implementation agrees with an independent oracle but a
// displayed formula does not; the recorded correction is confirmed.
// "skipped": opt-in check not requested.
enum class Status { pass, discrepancy, fail, skipped };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::discrepancy: return "discrepancy";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

/// pass < discrepancy < fail; skipped never combines with the others.
inline Status worst(Status a, Status b) {
    if (a == Status::skipped) return b;
    if (b == Status::skipped) return a;
    return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

struct CheckResult {
    std::string id;
    std::string description;
    std::string anchor;  // the published result being reproduced
    Status status = Status::pass;
    std::vector<std::string> details;
    double seconds = 0;
    double budget_seconds = 0;

    void note(Status s, std::string line) {
        status = worst(status, s);
        details.push_back(std::move(line));
    }
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    double wall_time = 0;
    std::string bank_checksum;

    std::map<std::string, int> counts() const {
        std::map<std::string, int> c{{"pass", 0}, {"discrepancy", 0}, {"fail", 0}, {"skipped", 0}};
        for (const auto& ch : checks) ++c[to_string(ch.status)];
        return c;
    }

    bool has_failures() const { return counts().at("fail") > 0; }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks)
            arr.push_back({{"id", c.id},
                           {"description", c.description},
                           {"anchor", c.anchor},
                           {"status", to_string(c.status)},
                           {"detail", c.details},
                           {"seconds", c.seconds},
                           {"budget_seconds", c.budget_seconds}});
        nlohmann::json discrepancies = nlohmann::json::array();
        for (const auto& c : checks)
            if (c.status == Status::discrepancy) discrepancies.push_back(c.id);
        return {{"checks", arr},
                {"summary", counts()},
                {"discrepancies", discrepancies},
                {"wall_time", wall_time},
                {"bank_checksum", bank_checksum}};
    }

    /// One line per check, then the discrepancy details and a count line.
    std::string text() const {
        std::string out;
        char buf[64];
        for (const auto& c : checks) {
            std::string status = to_string(c.status);
            for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
            std::snprintf(buf, sizeof buf, "%-12s %s %7.2fs  ", status.c_str(), c.id.c_str(), c.seconds);
            out += buf + c.description + "\n";
        }
        for (const auto& c : checks) {
            if (c.status != Status::discrepancy && c.status != Status::fail) continue;
            out += "\n" + c.id + " (" + to_string(c.status) + "):\n";
            for (const auto& d : c.details) out += "  " + d + "\n";
        }
        const auto n = counts();
        std::snprintf(buf, sizeof buf, "%.1fs", wall_time);
        out += "\n" + std::to_string(n.at("pass")) + " pass, " + std::to_string(n.at("discrepancy")) + " discrepancy, " +
               std::to_string(n.at("fail")) + " fail, " + std::to_string(n.at("skipped")) + " skipped in " + buf + "\n";
        return out;
    }
};

}  // namespace g2cover
