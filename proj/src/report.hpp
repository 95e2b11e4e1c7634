#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rk {

enum class Status {
    Verified,
    HypothesesFail,  // report-only
    Contradiction,   // hypotheses hold but a conclusion fails: release-blocking
};

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string id;
    std::uint64_t seed = 0;
    std::vector<CheckItem> hypotheses;
    std::vector<CheckItem> conclusions;
    std::vector<std::string> notes;

    bool hypotheses_pass() const {
        for (const auto& h : hypotheses)
            if (!h.pass) return false;
        return true;
    }
    bool conclusions_pass() const {
        for (const auto& c : conclusions)
            if (!c.pass) return false;
        return true;
    }
    Status status() const {
        if (!hypotheses_pass()) return Status::HypothesesFail;
        return conclusions_pass() ? Status::Verified : Status::Contradiction;
    }
};

inline const char* status_str(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::HypothesesFail: return "hypotheses-fail";
        default: return "CONTRADICTION";
    }
}

}  // namespace rk
