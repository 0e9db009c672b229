#ifndef DIGITOP_CHECKS_HPP
#define DIGITOP_CHECKS_HPP

#include <string>
#include <vector>

#include "digitop/search.hpp"

namespace digitop {

/// One reproduction check. Checks are grouped by the acceptance criterion
/// they belong to and run deterministically (fixed seeds).
struct CheckInfo {
    std::string id;
    std::string criterion;
    std::string summary;
};

struct CheckResult {
    std::string id;
    std::string criterion;
    bool passed = false;
    /// First failure message, or a short run summary when passed.
    std::string detail;
};

/// Registry in canonical (criterion) order.
const std::vector<CheckInfo>& check_list();

/// InputError for unknown ids. Limits feed every search the check runs.
CheckResult run_check(const std::string& id, const SearchLimits& limits = {});

std::vector<CheckResult> run_all_checks(const SearchLimits& limits = {});

} // namespace digitop

#endif
