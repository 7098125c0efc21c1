#include "oddc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <climits>
#include <thread>

namespace oddc {

namespace {

using Clock = std::chrono::steady_clock;

// Backtracking state for one worker. Colors are 1..k; 0 = uncolored.
// Parity bookkeeping: for every vertex u we track, over u's colored
// neighbors, the per-color counts, how many colors have odd count, and
// how many neighbors are still uncolored. A vertex whose neighborhood is
// fully colored with no odd color can never be repaired, so the branch
// is pruned; one uncolored neighbor can always repair parity.
class Searcher {
public:
    Searcher(const Graph& g, int k, const std::vector<int>& order,
             Clock::time_point deadline, bool has_deadline)
        : g_(g),
          k_(k),
          order_(order),
          deadline_(deadline),
          has_deadline_(has_deadline),
          color_(g.vertex_count(), 0),
          nbr_count_(static_cast<std::size_t>(g.vertex_count()) * (k + 1), 0),
          odd_count_(g.vertex_count(), 0),
          uncolored_nbrs_(g.vertex_count(), 0) {
        for (int v = 0; v < g.vertex_count(); ++v)
            uncolored_nbrs_[v] = g.degree(v);
    }

    bool timed_out() const { return timed_out_; }
    std::uint64_t nodes() const { return nodes_; }
    const std::vector<int>& colors() const { return color_; }

    bool assign(int v, int c) {
        color_[v] = c;
        bool ok = true;
        for (int u : g_.neighbors(v)) {
            int& cnt = count(u, c);
            ++cnt;
            odd_count_[u] += (cnt & 1) ? 1 : -1;
            if (--uncolored_nbrs_[u] == 0 && odd_count_[u] == 0) ok = false;
        }
        return ok;
    }

    void unassign(int v, int c) {
        color_[v] = 0;
        for (int u : g_.neighbors(v)) {
            int& cnt = count(u, c);
            --cnt;
            odd_count_[u] += (cnt & 1) ? 1 : -1;
            ++uncolored_nbrs_[u];
        }
    }

    bool proper(int v, int c) const {
        return nbr_count_[static_cast<std::size_t>(v) * (k_ + 1) + c] == 0;
    }

    // Canonical DFS from position idx. Returns true when a full coloring
    // was reached; the witness is then in colors().
    bool dfs(int idx, int max_used) {
        if (idx == static_cast<int>(order_.size())) return true;
        if ((++nodes_ & 1023) == 0 && has_deadline_ &&
            Clock::now() >= deadline_) {
            timed_out_ = true;
            return false;
        }
        int v = order_[idx];
        int limit = std::min(k_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (!proper(v, c)) continue;
            if (assign(v, c)) {
                if (dfs(idx + 1, std::max(max_used, c))) return true;
                if (timed_out_) {
                    unassign(v, c);
                    return false;
                }
            }
            unassign(v, c);
        }
        return false;
    }

private:
    int& count(int v, int c) {
        return nbr_count_[static_cast<std::size_t>(v) * (k_ + 1) + c];
    }

    const Graph& g_;
    int k_;
    const std::vector<int>& order_;
    Clock::time_point deadline_;
    bool has_deadline_;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
    std::vector<int> color_;
    std::vector<int> nbr_count_;
    std::vector<int> odd_count_;
    std::vector<int> uncolored_nbrs_;
};

std::vector<int> branch_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

struct Prefix {
    std::vector<int> colors;  // for order[0..depth-1]
    int max_used = 0;
};

// All feasible partial assignments of the first `depth` vertices, in
// canonical order. These are the top-level branches workers divide up.
void enumerate_prefixes(Searcher& s, const std::vector<int>& order, int depth,
                        int idx, int max_used, std::vector<int>& cur,
                        std::vector<Prefix>& out) {
    if (idx == depth) {
        out.push_back(Prefix{cur, max_used});
        return;
    }
    int v = order[idx];
    for (int c = 1; c <= max_used + 1; ++c) {
        if (!s.proper(v, c)) continue;
        if (s.assign(v, c)) {
            cur.push_back(c);
            enumerate_prefixes(s, order, depth, idx + 1, std::max(max_used, c),
                               cur, out);
            cur.pop_back();
        }
        s.unassign(v, c);
    }
}

SolveResult verify_and_pack(const Graph& g, int k, std::vector<int> colors,
                            std::uint64_t nodes) {
    Coloring witness{std::move(colors), k};
    if (!is_odd_coloring(g, witness).pass)
        throw std::logic_error("solver produced an invalid witness");
    return SolveResult{SolveStatus::Colorable, std::move(witness), nodes};
}

SolveResult solve_sequential(const Graph& g, const SearchConfig& cfg,
                             Clock::time_point deadline, bool has_deadline) {
    auto order = branch_order(g);
    Searcher s(g, cfg.palette, order, deadline, has_deadline);
    bool found = s.dfs(0, 0);
    if (found) return verify_and_pack(g, cfg.palette, s.colors(), s.nodes());
    if (s.timed_out()) return SolveResult{SolveStatus::Timeout, {}, s.nodes()};
    return SolveResult{SolveStatus::NotColorable, {}, s.nodes()};
}

SolveResult solve_parallel(const Graph& g, const SearchConfig& cfg,
                           Clock::time_point deadline, bool has_deadline) {
    auto order = branch_order(g);
    int n = g.vertex_count();

    // Grow the split depth until there is enough work to share.
    std::vector<Prefix> prefixes;
    int depth = 0;
    std::uint64_t enum_nodes = 0;
    while (true) {
        prefixes.clear();
        Searcher s(g, cfg.palette, order, deadline, has_deadline);
        std::vector<int> cur;
        enumerate_prefixes(s, order, depth, 0, 0, cur, prefixes);
        enum_nodes = s.nodes();
        if (depth >= n || static_cast<int>(prefixes.size()) >= 8 * cfg.jobs ||
            prefixes.size() >= 2048 || prefixes.empty())
            break;
        ++depth;
    }
    if (prefixes.empty())
        return SolveResult{SolveStatus::NotColorable, {}, enum_nodes};

    enum class BranchState { Pending, Exhausted, Success, TimedOut, Skipped };
    std::vector<BranchState> state(prefixes.size(), BranchState::Pending);
    std::vector<std::vector<int>> witnesses(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<int> best_success{INT_MAX};
    std::atomic<std::uint64_t> total_nodes{enum_nodes};

    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (static_cast<int>(i) > best_success.load()) {
                state[i] = BranchState::Skipped;
                continue;
            }
            Searcher s(g, cfg.palette, order, deadline, has_deadline);
            for (int j = 0; j < depth; ++j) {
                bool ok = s.assign(order[j], prefixes[i].colors[j]);
                assert(ok);
                (void)ok;
            }
            bool found = s.dfs(depth, prefixes[i].max_used);
            total_nodes.fetch_add(s.nodes());
            if (found) {
                witnesses[i] = s.colors();
                state[i] = BranchState::Success;
                int expect = best_success.load();
                while (static_cast<int>(i) < expect &&
                       !best_success.compare_exchange_weak(expect, static_cast<int>(i))) {
                }
            } else if (s.timed_out()) {
                state[i] = BranchState::TimedOut;
            } else {
                state[i] = BranchState::Exhausted;
            }
        }
    };

    int workers = std::min<int>(cfg.jobs, static_cast<int>(prefixes.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    // Merge in canonical branch order: the first success whose earlier
    // branches are all exhausted is the sequential outcome.
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (state[i] == BranchState::TimedOut)
            return SolveResult{SolveStatus::Timeout, {}, total_nodes.load()};
        if (state[i] == BranchState::Success)
            return verify_and_pack(g, cfg.palette, std::move(witnesses[i]),
                                   total_nodes.load());
        // A branch can only be skipped after a lower branch succeeded,
        // so the scan never reaches one.
        assert(state[i] == BranchState::Exhausted);
    }
    return SolveResult{SolveStatus::NotColorable, {}, total_nodes.load()};
}

}  // namespace

SolveResult solve_odd_coloring(const Graph& g, const SearchConfig& cfg) {
    if (cfg.palette < 1) throw std::invalid_argument("palette must be >= 1");
    if (g.vertex_count() == 0)
        return SolveResult{SolveStatus::Colorable, Coloring{{}, cfg.palette}, 0};
    bool has_deadline = cfg.time_limit_ms > 0;
    auto deadline = Clock::now() + std::chrono::milliseconds(
                                       has_deadline ? cfg.time_limit_ms : 0);
    if (cfg.jobs <= 1) return solve_sequential(g, cfg, deadline, has_deadline);
    return solve_parallel(g, cfg, deadline, has_deadline);
}

ChromaticResult odd_chromatic_number(const Graph& g, SearchConfig cfg) {
    ChromaticResult result;
    int n = g.vertex_count();
    if (n == 0) {
        result.value = 0;
        return result;
    }
    int k = std::max(1, greedy_clique_bound(g));
    for (; k <= n; ++k) {
        cfg.palette = k;
        result.last_tried = k;
        SolveResult r = solve_odd_coloring(g, cfg);
        if (r.status == SolveStatus::Timeout) {
            result.timed_out = true;
            return result;
        }
        if (r.status == SolveStatus::Colorable) {
            result.value = k;
            return result;
        }
    }
    // A rainbow coloring is always odd, so k = n must have succeeded.
    assert(false);
    return result;
}

std::optional<int> brute_force_odd_chromatic(const Graph& g, int k_max) {
    int n = g.vertex_count();
    if (n > 10)
        throw std::invalid_argument("brute force guard: at most 10 vertices");
    if (n == 0) return 0;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);

    std::vector<int> c(n);
    std::vector<int> parity;
    for (int k = 1; k <= k_max; ++k) {
        std::fill(c.begin(), c.end(), 1);
        parity.assign(k + 1, 0);
        while (true) {
            bool valid = true;
            for (auto [u, v] : edges)
                if (c[u] == c[v]) {
                    valid = false;
                    break;
                }
            if (valid) {
                for (int v = 0; v < n && valid; ++v) {
                    if (g.degree(v) == 0) continue;
                    std::fill(parity.begin(), parity.end(), 0);
                    for (int u : g.neighbors(v)) parity[c[u]] ^= 1;
                    bool odd = false;
                    for (int col = 1; col <= k; ++col) odd |= parity[col];
                    valid = odd;
                }
                if (valid) return k;
            }
            int pos = n - 1;
            while (pos >= 0 && c[pos] == k) c[pos--] = 1;
            if (pos < 0) break;
            ++c[pos];
        }
    }
    return std::nullopt;
}

int greedy_clique_bound(const Graph& g) {
    auto order = branch_order(g);
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace oddc
