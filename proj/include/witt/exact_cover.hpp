#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace witt {

// A 0/1 exact-cover instance: choose rows so every column is hit exactly once.
struct ExactCoverInstance {
    std::size_t columns = 0;
    std::vector<std::vector<std::size_t>> rows; // each sorted, duplicate-free

    bool valid() const;
};

enum class SolveMode { First, Enumerate, Count };

enum class ColumnHeuristic {
    MinRemaining, // column with fewest remaining covering rows, ties by index
    Leftmost      // first uncovered column
};

struct ExactCoverResult {
    // Row-index sets, each sorted; empty for Count mode.
    std::vector<std::vector<std::size_t>> solutions;
    unsigned long long count = 0;
};

// Dancing-links Algorithm X. Enumeration order is deterministic: at each node
// rows are tried in index order, so solutions appear in search (lexicographic
// by chosen-row sequence) order.
ExactCoverResult exact_cover_solve(const ExactCoverInstance& inst, SolveMode mode,
                                   ColumnHeuristic heuristic = ColumnHeuristic::MinRemaining);

} // namespace witt
