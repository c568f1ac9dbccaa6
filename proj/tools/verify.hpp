#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagcoh/cartan.hpp"

namespace flagcoh::cli {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool soft = false;  // warnings do not fail the report
    std::string detail;
};

/// Every cross-identity applicable to the type.
std::vector<CheckResult> verify_type(const LieType& type, std::uint64_t cap);

/// eta(w*) closed forms by family.
int eta_longest_closed_form(const LieType& type);

}  // namespace flagcoh::cli
