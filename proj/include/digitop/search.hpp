#ifndef DIGITOP_SEARCH_HPP
#define DIGITOP_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "digitop/maps.hpp"

namespace digitop {

struct SearchLimits {
    /// Nodes = attempted point-value assignments, summed over the whole
    /// search; exceeding throws BudgetError.
    std::uint64_t node_budget = 100000000;
    int jobs = 1;
};

enum class SearchMode { FindOne, Count, Enumerate };

/// Backtracking search space: continuous maps domain -> codomain whose value
/// at domain point i avoids forbidden[i].
struct MapSearchProblem {
    ImagePtr domain;
    ImagePtr codomain;
    /// One list of codomain indices per domain point; may be empty.
    std::vector<std::vector<int>> forbidden;
    SearchMode mode = SearchMode::FindOne;
};

struct SearchOutcome {
    /// FindOne: the lexicographically least solution table in canonical
    /// point order, when any solution exists.
    std::optional<DigitalMap> witness;
    /// Number of solutions (Count mode; in other modes the solutions seen).
    std::uint64_t count = 0;
    /// Enumerate: all solutions in lexicographic table order.
    std::vector<DigitalMap> solutions;
    /// Attempted assignments, identical for every jobs value.
    std::uint64_t nodes = 0;
};

/// Backtracks over domain points in canonical order, values in canonical
/// order, pruning on the continuity constraint against already-assigned
/// neighbors. The tree splits at the root across jobs; outcomes (including
/// whether the budget is exceeded) do not depend on the split.
SearchOutcome solve(const MapSearchProblem& problem, const SearchLimits& limits = {});

struct FppResult {
    bool holds = false;
    /// Fixed-point-free continuous self-map when the property fails.
    std::optional<DigitalMap> witness;
};

/// Fixed point property: true iff the image is a single point. The witness
/// for larger images is constructed directly (component swap when
/// disconnected, collapse onto an adjacent pair when connected); with
/// cross_check the constructed refutation is confirmed against a search with
/// forbidden sets {x}.
FppResult has_fpp(ImagePtr x, const SearchLimits& limits = {}, bool cross_check = false);

struct AfppResult {
    bool holds = false;
    /// Continuous self-map with no approximate fixed point, when one exists.
    std::optional<DigitalMap> witness;
};

/// Approximate fixed point property, decided by searching for a refuting map
/// (forbidden set at x = closed neighborhood of x); exhaustion proves AFPP.
AfppResult has_afpp(ImagePtr x, const SearchLimits& limits = {});

struct UniversalResult {
    bool universal = false;
    /// Map g with f(x) never equal or adjacent to g(x), when one exists.
    std::optional<DigitalMap> counterexample;
};

/// f is universal iff every continuous g with the same signature meets it
/// (some x has f(x) equal or adjacent to g(x)). Decided by searching for a
/// refuting g. InputError if f is not continuous.
UniversalResult is_universal(const DigitalMap& f, const SearchLimits& limits = {});

/// True iff every point of x is equal or adjacent to some member of s
/// (point indices). InputError if s is empty or out of range.
bool is_dominating(const std::vector<int>& s, const DigitalImage& x);

/// Least-m homotopy between f and g with at most m_max steps, or nullopt if
/// none exists within the bound. Sequential; nodes count against the budget.
/// InputError unless f, g share signature and are continuous.
std::optional<Homotopy> find_bounded_homotopy(const DigitalMap& f, const DigitalMap& g, int m_max,
                                              const SearchLimits& limits = {});

/// Searches for a homotopy from the identity to some constant map, trying
/// step counts 1..m_max and constant targets in canonical order. A nullopt
/// means unknown within the bound, never a proof of non-contractibility.
std::optional<Homotopy> bounded_contractibility(ImagePtr x, int m_max,
                                                const SearchLimits& limits = {});

} // namespace digitop

#endif
