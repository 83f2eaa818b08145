#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace homcat {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, SkippedBoundary, Undetermined };

std::string to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string expected;
    std::string computed;
    std::string citation;  // short rule descriptor for readers of the report
};

struct Report {
    std::string command;
    Json inputs = Json::object();
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string expected = "", std::string computed = "",
             std::string citation = "");
    void add(Check c) { checks.push_back(std::move(c)); }
    void merge(const Report& other, const std::string& prefix);

    int count(Status s) const;
    bool all_passed() const { return count(Status::Fail) == 0; }

    Json to_json() const;
};

}  // namespace homcat
