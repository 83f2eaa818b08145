#include "homcat/report.hpp"

#include <algorithm>

namespace homcat {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::SkippedBoundary: return "skipped-boundary";
        case Status::Undetermined: return "undetermined";
    }
    return "?";
}

void Report::add(std::string name, bool pass, std::string expected, std::string computed,
                 std::string citation) {
    checks.push_back(Check{std::move(name), pass ? Status::Pass : Status::Fail, std::move(expected),
                           std::move(computed), std::move(citation)});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (Check c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

int Report::count(Status s) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [&](const Check& c) { return c.status == s; }));
}

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    Json arr = Json::array();
    std::vector<Check> sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    for (const auto& c : sorted) {
        Json e;
        e["name"] = c.name;
        e["status"] = to_string(c.status);
        if (!c.expected.empty()) e["expected"] = c.expected;
        if (!c.computed.empty()) e["computed"] = c.computed;
        if (!c.citation.empty()) e["citation"] = c.citation;
        arr.push_back(std::move(e));
    }
    j["checks"] = arr;
    j["summary"] = Json{{"pass", count(Status::Pass)},
                        {"fail", count(Status::Fail)},
                        {"skipped", count(Status::SkippedBoundary)},
                        {"undetermined", count(Status::Undetermined)}};
    return j;
}

}  // namespace homcat
