#include "digitop/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "digitop/checked_int.hpp"

namespace digitop {

namespace {

// Shared node accounting. Workers batch locally and flush; the abort flag
// stops everyone once the shared total passes the budget. The total number
// of nodes a completed search visits is a property of the problem alone, so
// whether the budget trips cannot depend on the worker count.
struct BudgetSentinel {
    std::atomic<std::uint64_t> total{0};
    std::atomic<bool> tripped{false};
    std::uint64_t budget;

    explicit BudgetSentinel(std::uint64_t b) : budget(b) {}

    void flush(std::uint64_t& local) {
        if (local == 0) {
            if (tripped.load(std::memory_order_relaxed)) throw BudgetError("search budget exceeded");
            return;
        }
        std::uint64_t t = total.fetch_add(local, std::memory_order_relaxed) + local;
        local = 0;
        if (t > budget || tripped.load(std::memory_order_relaxed)) {
            tripped.store(true, std::memory_order_relaxed);
            throw BudgetError("search budget exceeded (" + std::to_string(budget) + " nodes)");
        }
    }
};

constexpr std::uint64_t kFlushInterval = 4096;

// One root branch: f(0) is pinned, the rest is depth-first. In FindOne mode
// a branch stops at its own least solution; every branch still runs, so the
// node total and the merged outcome are independent of scheduling.
struct Branch {
    const DigitalImage& x;
    const DigitalImage& y;
    const std::vector<std::vector<bool>>& forbidden;
    const std::vector<std::vector<int>>& before;
    SearchMode mode;
    BudgetSentinel& sentinel;

    std::vector<int> assign;
    std::uint64_t local_nodes = 0;
    std::uint64_t flushed_nodes = 0;

    std::optional<std::vector<int>> first;
    std::uint64_t count = 0;
    std::vector<std::vector<int>> solutions;

    void run(int root) {
        assign.assign(static_cast<std::size_t>(x.size()), -1);
        ++local_nodes;
        if (!forbidden[0][static_cast<std::size_t>(root)]) {
            assign[0] = root;
            dfs(1);
        }
        flushed_nodes += local_nodes;
        std::uint64_t rest = local_nodes;
        local_nodes = 0;
        sentinel.flush(rest);
    }

    // Returns true when this branch is done (FindOne hit a solution).
    bool dfs(int depth) {
        if (depth == x.size()) {
            ++count;
            if (mode == SearchMode::FindOne) {
                first = assign;
                return true;
            }
            if (mode == SearchMode::Enumerate) solutions.push_back(assign);
            return false;
        }
        const auto& fb = forbidden[static_cast<std::size_t>(depth)];
        for (int v = 0; v < y.size(); ++v) {
            if (++local_nodes >= kFlushInterval) {
                flushed_nodes += local_nodes;
                sentinel.flush(local_nodes);
            }
            if (fb[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int j : before[static_cast<std::size_t>(depth)])
                if (!y.closed_adjacent(assign[static_cast<std::size_t>(j)], v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            assign[static_cast<std::size_t>(depth)] = v;
            if (dfs(depth + 1)) return true;
        }
        assign[static_cast<std::size_t>(depth)] = -1;
        return false;
    }
};

} // namespace

SearchOutcome solve(const MapSearchProblem& problem, const SearchLimits& limits) {
    if (!problem.domain || !problem.codomain) throw InputError("search: null image");
    const DigitalImage& x = *problem.domain;
    const DigitalImage& y = *problem.codomain;
    if (static_cast<int>(problem.forbidden.size()) != x.size() && !problem.forbidden.empty())
        throw InputError("search: forbidden sets do not match the domain");

    std::vector<std::vector<bool>> forbidden(
        static_cast<std::size_t>(x.size()),
        std::vector<bool>(static_cast<std::size_t>(y.size()), false));
    for (std::size_t i = 0; i < problem.forbidden.size(); ++i)
        for (int v : problem.forbidden[i]) {
            if (v < 0 || v >= y.size()) throw InputError("search: forbidden index out of range");
            forbidden[i][static_cast<std::size_t>(v)] = true;
        }

    std::vector<std::vector<int>> before(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i)
        for (int j : x.neighbors(i))
            if (j < i) before[static_cast<std::size_t>(i)].push_back(j);

    BudgetSentinel sentinel(limits.node_budget);
    const int roots = y.size();
    std::vector<std::unique_ptr<Branch>> branches(static_cast<std::size_t>(roots));

    int jobs = std::max(1, limits.jobs);
    std::atomic<int> next_root{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        for (;;) {
            int root = next_root.fetch_add(1);
            if (root >= roots) return;
            auto b = std::make_unique<Branch>(Branch{x, y, forbidden, before, problem.mode, sentinel,
                                                     {}, 0, 0, std::nullopt, 0, {}});
            try {
                b->run(root);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                sentinel.tripped.store(true, std::memory_order_relaxed);
                branches[static_cast<std::size_t>(root)] = std::move(b);
                return;
            }
            branches[static_cast<std::size_t>(root)] = std::move(b);
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    SearchOutcome out;
    for (int root = 0; root < roots; ++root) {
        Branch& b = *branches[static_cast<std::size_t>(root)];
        out.nodes += b.flushed_nodes;
        out.count = checked_add_u64(out.count, b.count);
        if (problem.mode == SearchMode::FindOne && !out.witness && b.first)
            out.witness = DigitalMap(problem.domain, problem.codomain, *b.first);
        if (problem.mode == SearchMode::Enumerate)
            for (auto& table : b.solutions)
                out.solutions.emplace_back(problem.domain, problem.codomain, std::move(table));
    }
    return out;
}

FppResult has_fpp(ImagePtr x, const SearchLimits& limits, bool cross_check) {
    FppResult res;
    if (x->size() == 1) {
        res.holds = true;
        if (cross_check) {
            MapSearchProblem p{x, x, {{0}}, SearchMode::FindOne};
            if (solve(p, limits).witness)
                throw InvariantError("singleton admits a fixed-point-free map");
        }
        return res;
    }

    res.holds = false;
    auto blocks = x->components();
    if (blocks.size() > 1) {
        // Send all of block b to the least point of block b+1 (cyclically);
        // edges never cross blocks, so the map is continuous, and every
        // point moves to a different component.
        std::vector<int> table(static_cast<std::size_t>(x->size()));
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            int target = blocks[(b + 1) % blocks.size()].front();
            for (int i : blocks[b]) table[static_cast<std::size_t>(i)] = target;
        }
        res.witness = DigitalMap(x, x, std::move(table));
    } else {
        res.witness = collapse_map(x);
    }
    if (!is_continuous(*res.witness) || !fixed_points(*res.witness).empty())
        throw InvariantError("constructed fixed-point refutation is invalid");

    if (cross_check) {
        MapSearchProblem p;
        p.domain = x;
        p.codomain = x;
        p.mode = SearchMode::FindOne;
        p.forbidden.resize(static_cast<std::size_t>(x->size()));
        for (int i = 0; i < x->size(); ++i) p.forbidden[static_cast<std::size_t>(i)] = {i};
        if (!solve(p, limits).witness)
            throw InvariantError("search found no fixed-point-free map on a multi-point image");
    }
    return res;
}

AfppResult has_afpp(ImagePtr x, const SearchLimits& limits) {
    MapSearchProblem p;
    p.domain = x;
    p.codomain = x;
    p.mode = SearchMode::FindOne;
    p.forbidden.resize(static_cast<std::size_t>(x->size()));
    for (int i = 0; i < x->size(); ++i)
        p.forbidden[static_cast<std::size_t>(i)] = x->closed_neighborhood(i);
    SearchOutcome o = solve(p, limits);
    AfppResult res;
    res.holds = !o.witness.has_value();
    res.witness = std::move(o.witness);
    return res;
}

UniversalResult is_universal(const DigitalMap& f, const SearchLimits& limits) {
    if (!is_continuous(f)) throw InputError("universality of a non-continuous map");
    MapSearchProblem p;
    p.domain = f.domain_ptr();
    p.codomain = f.codomain_ptr();
    p.mode = SearchMode::FindOne;
    p.forbidden.resize(static_cast<std::size_t>(f.domain().size()));
    for (int i = 0; i < f.domain().size(); ++i)
        p.forbidden[static_cast<std::size_t>(i)] = f.codomain().closed_neighborhood(f(i));
    SearchOutcome o = solve(p, limits);
    UniversalResult res;
    res.universal = !o.witness.has_value();
    res.counterexample = std::move(o.witness);
    return res;
}

bool is_dominating(const std::vector<int>& s, const DigitalImage& x) {
    if (s.empty()) throw InputError("dominating: empty subset");
    std::vector<bool> in_s(static_cast<std::size_t>(x.size()), false);
    for (int i : s) {
        if (i < 0 || i >= x.size()) throw InputError("dominating: index out of range");
        in_s[static_cast<std::size_t>(i)] = true;
    }
    for (int i = 0; i < x.size(); ++i) {
        bool covered = in_s[static_cast<std::size_t>(i)];
        for (int j : x.neighbors(i))
            if (covered || in_s[static_cast<std::size_t>(j)]) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

namespace {

// Levels F_1..F_{m-1} between the pinned endpoints, filled point by point.
// Each value must track the previous level at the same point, stay
// continuous against already-assigned neighbors in its own level, and at the
// last free level also track g.
struct HomotopySearch {
    const DigitalImage& x;
    const DigitalImage& y;
    const std::vector<int>& f_table;
    const std::vector<int>& g_table;
    const std::vector<std::vector<int>>& before;
    int m;
    BudgetSentinel& sentinel;

    std::vector<std::vector<int>> levels;
    std::uint64_t local_nodes = 0;

    bool run() {
        levels.assign(static_cast<std::size_t>(m) - 1,
                      std::vector<int>(static_cast<std::size_t>(x.size()), -1));
        bool found = m == 1 ? check_direct() : dfs(0, 0);
        sentinel.flush(local_nodes);
        return found;
    }

    bool check_direct() {
        ++local_nodes;
        for (int i = 0; i < x.size(); ++i)
            if (!y.closed_adjacent(f_table[static_cast<std::size_t>(i)],
                                   g_table[static_cast<std::size_t>(i)]))
                return false;
        return true;
    }

    int prev_value(int level, int i) const {
        return level == 0 ? f_table[static_cast<std::size_t>(i)]
                          : levels[static_cast<std::size_t>(level) - 1][static_cast<std::size_t>(i)];
    }

    bool dfs(int level, int i) {
        if (i == x.size()) return level + 1 == m - 1 ? true : dfs(level + 1, 0);
        auto& cur = levels[static_cast<std::size_t>(level)];
        const bool last = level == m - 2;
        for (int v = 0; v < y.size(); ++v) {
            if (++local_nodes >= kFlushInterval) sentinel.flush(local_nodes);
            if (!y.closed_adjacent(prev_value(level, i), v)) continue;
            if (last && !y.closed_adjacent(v, g_table[static_cast<std::size_t>(i)])) continue;
            bool ok = true;
            for (int j : before[static_cast<std::size_t>(i)])
                if (!y.closed_adjacent(cur[static_cast<std::size_t>(j)], v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur[static_cast<std::size_t>(i)] = v;
            if (dfs(level, i + 1)) return true;
        }
        cur[static_cast<std::size_t>(i)] = -1;
        return false;
    }
};

std::optional<Homotopy> homotopy_with_exact_steps(const DigitalMap& f, const DigitalMap& g, int m,
                                                  BudgetSentinel& sentinel,
                                                  const std::vector<std::vector<int>>& before) {
    HomotopySearch hs{f.domain(), f.codomain(), f.table(), g.table(), before, m, sentinel, {}, 0};
    if (!hs.run()) return std::nullopt;
    std::vector<std::vector<int>> steps;
    steps.push_back(f.table());
    for (auto& lv : hs.levels) steps.push_back(std::move(lv));
    steps.push_back(g.table());
    Homotopy h(f, g, std::move(steps));
    if (!verify_homotopy(h)) throw InvariantError("search produced an invalid homotopy");
    return h;
}

std::vector<std::vector<int>> neighbors_before(const DigitalImage& x) {
    std::vector<std::vector<int>> before(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i)
        for (int j : x.neighbors(i))
            if (j < i) before[static_cast<std::size_t>(i)].push_back(j);
    return before;
}

} // namespace

std::optional<Homotopy> find_bounded_homotopy(const DigitalMap& f, const DigitalMap& g, int m_max,
                                              const SearchLimits& limits) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain())
        throw InputError("homotopy: maps must share domain and codomain");
    if (!is_continuous(f) || !is_continuous(g))
        throw InputError("homotopy: maps must be continuous");
    if (m_max < 1) throw InputError("homotopy: m_max must be >= 1");

    BudgetSentinel sentinel(limits.node_budget);
    auto before = neighbors_before(f.domain());
    for (int m = 1; m <= m_max; ++m)
        if (auto h = homotopy_with_exact_steps(f, g, m, sentinel, before)) return h;
    return std::nullopt;
}

std::optional<Homotopy> bounded_contractibility(ImagePtr x, int m_max, const SearchLimits& limits) {
    if (!x->connected()) throw InputError("contractibility search needs a connected image");
    if (m_max < 1) throw InputError("contractibility: m_max must be >= 1");

    DigitalMap id = identity_map(x);
    BudgetSentinel sentinel(limits.node_budget);
    auto before = neighbors_before(*x);
    for (int m = 1; m <= m_max; ++m)
        for (int p = 0; p < x->size(); ++p)
            if (auto h = homotopy_with_exact_steps(id, constant_map(x, p), m, sentinel, before))
                return h;
    return std::nullopt;
}

} // namespace digitop
