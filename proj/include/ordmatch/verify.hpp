#pragma once

#include <string>
#include <vector>

namespace ordmatch::verify {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Criterion ids "1".."11" (or their names below).
std::vector<std::string> criterion_names();
CriterionResult run_criterion(const std::string& id_or_name);
std::vector<CriterionResult> run_all(const std::vector<std::string>& only = {});

}  // namespace ordmatch::verify
