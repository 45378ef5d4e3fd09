#pragma once

#include "solidus/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace solidus {

struct CheckContext {
    std::uint64_t seed = 0;
    int samples = 0;  // 0 means the check's default
};

struct CheckOutcome {
    Status status = Status::fail;
    std::string detail;
};

struct CheckDef {
    std::string id;      // "NN.name", NN = acceptance criterion
    std::string anchor;  // what the check establishes
    std::string suite;
    std::function<CheckOutcome(const CheckContext&)> run;
};

const std::vector<CheckDef>& all_checks();
std::vector<std::string> suite_names();
// criterion number encoded in a check id
int check_criterion(const std::string& id);

CheckResult run_check(const CheckDef& c, const CheckContext& ctx);
// runs in a pool sized to the hardware; results sorted by id
VerificationReport run_checks(const std::vector<const CheckDef*>& checks, const CheckContext& ctx,
                              const std::string& suite_label);
// "all" runs every check; unknown names throw std::invalid_argument
VerificationReport run_suite(const std::string& suite, const CheckContext& ctx);

}  // namespace solidus
