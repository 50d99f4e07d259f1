#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/exact_cover.hpp"

namespace witt {

// A block design: k-subsets of a v-point set, blocks kept in lexicographic
// order. Points are 0-based internally; the file format is 1-based.
struct BlockDesign {
    std::size_t v = 0;
    std::size_t k = 0;
    std::vector<std::vector<std::size_t>> blocks;

    bool well_formed() const;
};

struct TDesignReport {
    bool ok = false;
    std::size_t lambda = 0;
    // On failure: an offending t-subset and the two distinct coverage counts seen.
    std::vector<std::size_t> witness_subset;
    std::size_t count_a = 0, count_b = 0;
};

// Checks that every t-subset of points lies in the same number of blocks.
TDesignReport verify_t_design(const BlockDesign& d, std::size_t t);

// Columns are the C(11,4) 4-subsets, rows the C(11,5) 5-subsets, both in
// lexicographic order; row r covers the five 4-subsets of the r-th 5-set.
ExactCoverInstance build_witt_instance();

// Turns an exact-cover solution on the Witt instance into a design.
BlockDesign design_from_witt_solution(const std::vector<std::size_t>& solution_rows);

// Ordered-pair counts of distinct blocks keyed by |B ∩ B'|.
std::map<std::size_t, std::size_t> block_intersection_profile(const BlockDesign& d);

// All m-subsets of [0,n) in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t m);

// Text format: "v=<n> k=<n> b=<n>" then one block per line, 1-based,
// comma-separated ascending, lines in block order.
std::string design_to_text(const BlockDesign& d);
BlockDesign design_from_text(const std::string& text);

} // namespace witt
