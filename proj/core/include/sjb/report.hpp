#pragma once

#include <string>
#include <vector>

namespace sjb {

/// Outcome of one named check. Failures are data, not exceptions.
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
        return {};
    }
};

} // namespace sjb
