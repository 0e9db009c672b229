#ifndef DIGITOP_ERRORS_HPP
#define DIGITOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace digitop {

/// Malformed input: bad files, mismatched images, violated preconditions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Search node budget exhausted before the search completed.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Checked integer arithmetic left the representable range.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure; indicates a bug, not bad input.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace digitop

#endif
