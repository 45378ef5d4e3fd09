#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace solidus {

enum class Status { pass, fail, skip };
std::string status_name(Status s);

struct CheckResult {
    std::string id;
    std::string anchor;
    Status status = Status::skip;
    std::string detail;
    double seconds = 0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;  // sorted by id

    void sort();
    bool passed() const;  // no failures
    std::size_t count(Status s) const;
    // wall-clock times are left out unless asked for, so that reruns are byte-identical
    nlohmann::json to_json(bool timings = false) const;
    std::string to_markdown(bool timings = false) const;
};

}  // namespace solidus
