#include "solidus/suites.hpp"

#include <chrono>
#include <cstdio>
#include <map>

using namespace solidus;

int main()
{
    // wall-clock limits in seconds; 0 means exact-only
    const std::map<int, double> limits{{1, 10},  {2, 5}, {3, 0},   {4, 0},   {5, 60},  {6, 0},
                                       {7, 0},   {8, 180}, {9, 600}, {10, 0}, {11, 300}};
    std::map<int, std::vector<const CheckDef*>> by_criterion;
    for (const auto& c : all_checks())
        by_criterion[check_criterion(c.id)].push_back(&c);

    int failed = 0;
    for (const auto& [criterion, limit] : limits) {
        const auto& checks = by_criterion[criterion];
        double seconds = 0;
        bool ok = !checks.empty();
        std::vector<CheckResult> results;
        for (const auto* c : checks) {
            CheckResult r = run_check(*c, {0, 0});
            seconds += r.seconds;
            ok = ok && r.status == Status::pass;
            results.push_back(std::move(r));
        }
        bool in_time = limit == 0 || seconds <= limit;
        bool pass = ok && in_time;
        failed += !pass;
        char lim[32] = "exact";
        if (limit > 0)
            std::snprintf(lim, sizeof lim, "< %.0f s", limit);
        std::printf("criterion %2d: %s  %8.2f s  (%s)%s\n", criterion, pass ? "PASS" : "FAIL", seconds, lim,
                    in_time ? "" : "  over time limit");
        for (const auto& r : results)
            std::printf("    %-28s %s  %s\n", r.id.c_str(), status_name(r.status).c_str(), r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, limits.size());
    return failed == 0 ? 0 : 1;
}
