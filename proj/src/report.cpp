#include "solidus/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace solidus {

std::string status_name(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skip:
        return "skip";
    }
    return "skip";
}

void VerificationReport::sort()
{
    std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

bool VerificationReport::passed() const { return count(Status::fail) == 0; }

std::size_t VerificationReport::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

nlohmann::json VerificationReport::to_json(bool timings) const
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json r{{"id", c.id}, {"anchor", c.anchor}, {"status", status_name(c.status)}, {"detail", c.detail}};
        if (timings)
            r["seconds"] = std::round(c.seconds * 1000) / 1000;
        rows.push_back(std::move(r));
    }
    return {{"suite", suite},
            {"seed", seed},
            {"checks", rows},
            {"summary",
             {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"skip", count(Status::skip)}}}};
}

namespace {

std::string cell(std::string s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '|')
            out += "\\|";
        else if (ch == '\n')
            out += ' ';
        else
            out += ch;
    }
    return out;
}

}  // namespace

std::string VerificationReport::to_markdown(bool timings) const
{
    std::ostringstream os;
    os << "# solidus verify: " << suite << " (seed " << seed << ")\n\n";
    os << "| id | anchor | status | detail |" << (timings ? " seconds |" : "") << "\n";
    os << "|---|---|---|---|" << (timings ? "---|" : "") << "\n";
    for (const auto& c : checks) {
        os << "| " << cell(c.id) << " | " << cell(c.anchor) << " | " << status_name(c.status) << " | " << cell(c.detail)
           << " |";
        if (timings)
            os << " " << std::fixed << std::setprecision(3) << c.seconds << " |";
        os << "\n";
    }
    os << "\n" << count(Status::pass) << " pass, " << count(Status::fail) << " fail, " << count(Status::skip)
       << " skip\n";
    return os.str();
}

}  // namespace solidus
