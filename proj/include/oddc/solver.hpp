#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "oddc/coloring.hpp"
#include "oddc/graph.hpp"

namespace oddc {

struct SearchConfig {
    int palette = 7;  // k >= 1
    // Branch order: vertices by descending degree, ties by ascending id.
    // Colors are tried ascending, with at most one new color introduced
    // per step and the first branched vertex fixed to color 1.
    enum class Order { DegreeDescending } order = Order::DegreeDescending;
    std::int64_t time_limit_ms = 0;  // 0 = unlimited
    std::uint64_t seed = 0;          // reserved for randomized orders
    int jobs = 1;
};

enum class SolveStatus { Colorable, NotColorable, Timeout };

struct SolveResult {
    SolveStatus status = SolveStatus::Timeout;
    std::optional<Coloring> witness;  // verified before return
    std::uint64_t nodes_expanded = 0;
};

// Complete search for an odd coloring with cfg.palette colors.
// NotColorable is only reported after exhausting the space; Timeout never
// turns into a wrong verdict. With jobs > 1 the top of the search tree is
// partitioned across workers and results are merged so that verdict and
// witness equal the single-threaded outcome (the witness from the
// earliest branch in canonical order wins).
SolveResult solve_odd_coloring(const Graph& g, const SearchConfig& cfg);

struct ChromaticResult {
    std::optional<int> value;  // least k admitting an odd coloring
    int last_tried = 0;
    bool timed_out = false;
};

// Ascends k from a greedy-clique lower bound.
ChromaticResult odd_chromatic_number(const Graph& g, SearchConfig cfg);

// Independent oracle: plain enumeration of all k^n colorings for each
// k <= k_max, with its own validity check. Guarded to n <= 10.
std::optional<int> brute_force_odd_chromatic(const Graph& g, int k_max);

// Greedy (not exact) clique lower bound used as the starting palette.
int greedy_clique_bound(const Graph& g);

}  // namespace oddc
