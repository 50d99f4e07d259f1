#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "witt/design.hpp"
#include "witt/exact_cover.hpp"

using namespace witt;

namespace {

BlockDesign first_witt_design() {
    static BlockDesign d = [] {
        auto res = exact_cover_solve(build_witt_instance(), SolveMode::First);
        REQUIRE(!res.solutions.empty());
        return design_from_witt_solution(res.solutions[0]);
    }();
    return d;
}

// Plain recursive exact-cover oracle (set subtraction, no links).
void naive_solve(const ExactCoverInstance& inst, std::size_t from,
                 std::set<std::size_t>& covered, std::vector<std::size_t>& chosen,
                 std::vector<std::vector<std::size_t>>& out) {
    if (covered.size() == inst.columns) {
        out.push_back(chosen);
        return;
    }
    for (std::size_t r = from; r < inst.rows.size(); ++r) {
        bool disjoint = true;
        for (std::size_t c : inst.rows[r])
            if (covered.count(c)) {
                disjoint = false;
                break;
            }
        if (!disjoint) continue;
        for (std::size_t c : inst.rows[r]) covered.insert(c);
        chosen.push_back(r);
        naive_solve(inst, r + 1, covered, chosen, out);
        chosen.pop_back();
        for (std::size_t c : inst.rows[r]) covered.erase(c);
    }
}

std::vector<std::vector<std::size_t>> naive_all_solutions(const ExactCoverInstance& inst) {
    std::set<std::size_t> covered;
    std::vector<std::size_t> chosen;
    std::vector<std::vector<std::size_t>> out;
    naive_solve(inst, 0, covered, chosen, out);
    return out;
}

} // namespace

TEST_CASE("witt instance shape") {
    auto inst = build_witt_instance();
    CHECK(inst.columns == 330);
    CHECK(inst.rows.size() == 462);
    CHECK(inst.valid());
    for (const auto& r : inst.rows) CHECK(r.size() == 5);
}

TEST_CASE("identity instance has exactly one solution") {
    ExactCoverInstance inst;
    inst.columns = 3;
    inst.rows = {{0}, {1}, {2}};
    auto res = exact_cover_solve(inst, SolveMode::Enumerate);
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("zero solutions is a valid outcome") {
    ExactCoverInstance inst;
    inst.columns = 2;
    inst.rows = {{0}};
    auto res = exact_cover_solve(inst, SolveMode::Enumerate);
    CHECK(res.count == 0);
    CHECK(res.solutions.empty());
}

TEST_CASE("first witt solution is a 4-design with lambda 1") {
    auto d = first_witt_design();
    CHECK(d.well_formed());
    CHECK(d.blocks.size() == 66);
    auto rep = verify_t_design(d, 4);
    CHECK(rep.ok);
    CHECK(rep.lambda == 1);
    // Double counting: 66 * C(5,4) = 330 * lambda.
    CHECK(66 * 5 == 330 * rep.lambda);
}

TEST_CASE("t=5 fails: some 5-set covered once, some never") {
    auto d = first_witt_design();
    auto rep = verify_t_design(d, 5);
    CHECK(!rep.ok);
    std::set<std::size_t> counts = {rep.count_a, rep.count_b};
    CHECK(counts == std::set<std::size_t>{0, 1});
}

TEST_CASE("single block design") {
    BlockDesign d;
    d.v = 3;
    d.k = 3;
    d.blocks = {{0, 1, 2}};
    auto rep = verify_t_design(d, 1);
    CHECK(rep.ok);
    CHECK(rep.lambda == 1);
    CHECK(block_intersection_profile(d).empty());
}

TEST_CASE("intersection profile of the witt design") {
    auto d = first_witt_design();
    auto profile = block_intersection_profile(d);
    REQUIRE(profile.size() == 3);
    // Uniform per block: 15/20/30 ordered pairs at |meet| 1/2/3.
    CHECK(profile[1] == 66 * 15);
    CHECK(profile[2] == 66 * 20);
    CHECK(profile[3] == 66 * 30);
    // Per-block uniformity, checked directly.
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        std::map<std::size_t, std::size_t> per;
        for (std::size_t j = 0; j < d.blocks.size(); ++j) {
            if (i == j) continue;
            std::vector<std::size_t> common;
            std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(),
                                  d.blocks[j].begin(), d.blocks[j].end(),
                                  std::back_inserter(common));
            ++per[common.size()];
        }
        CHECK(per[1] == 15);
        CHECK(per[2] == 20);
        CHECK(per[3] == 30);
    }
}

TEST_CASE("solution count is heuristic-invariant on small random instances") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        ExactCoverInstance inst;
        inst.columns = 7;
        std::uniform_int_distribution<int> nrows(3, 12), rlen(1, 4), col(0, 6);
        int rows = nrows(rng);
        for (int r = 0; r < rows; ++r) {
            std::set<std::size_t> s;
            int len = rlen(rng);
            for (int i = 0; i < len; ++i) s.insert((std::size_t)col(rng));
            inst.rows.push_back({s.begin(), s.end()});
        }
        auto mrv = exact_cover_solve(inst, SolveMode::Enumerate, ColumnHeuristic::MinRemaining);
        auto left = exact_cover_solve(inst, SolveMode::Enumerate, ColumnHeuristic::Leftmost);
        auto naive = naive_all_solutions(inst);
        CHECK(mrv.count == naive.size());
        CHECK(left.count == naive.size());
        // Same solution sets regardless of heuristic and engine.
        auto sorted = [](std::vector<std::vector<std::size_t>> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(sorted(mrv.solutions) == sorted(naive));
        CHECK(sorted(left.solutions) == sorted(naive));
        // Independent bitset coverage check of every solution.
        for (const auto& sol : mrv.solutions) {
            std::vector<int> cover(inst.columns, 0);
            for (std::size_t r : sol)
                for (std::size_t c : inst.rows[r]) ++cover[c];
            CHECK(std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; }));
        }
    }
}

TEST_CASE("witt enumeration: 5040 solutions, matching profiles") {
    auto inst = build_witt_instance();
    auto res = exact_cover_solve(inst, SolveMode::Enumerate);
    CHECK(res.count == 5040);
    auto count_left = exact_cover_solve(inst, SolveMode::Count, ColumnHeuristic::Leftmost);
    CHECK(count_left.count == 5040);
    // Spot-check a spread of solutions: all are 4-designs with one profile.
    auto profile0 = block_intersection_profile(design_from_witt_solution(res.solutions[0]));
    for (std::size_t i = 0; i < res.solutions.size(); i += 503) {
        auto d = design_from_witt_solution(res.solutions[i]);
        auto rep = verify_t_design(d, 4);
        CHECK(rep.ok);
        CHECK(rep.lambda == 1);
        CHECK(block_intersection_profile(d) == profile0);
        // Independent coverage check.
        std::vector<int> cover(inst.columns, 0);
        for (std::size_t r : res.solutions[i])
            for (std::size_t c : inst.rows[r]) ++cover[c];
        CHECK(std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; }));
    }
}

TEST_CASE("design file round trip") {
    auto d = first_witt_design();
    std::string text = design_to_text(d);
    auto back = design_from_text(text);
    CHECK(back.v == d.v);
    CHECK(back.k == d.k);
    CHECK(back.blocks == d.blocks);
    CHECK(design_to_text(back) == text);
    CHECK(text.substr(0, 15) == "v=11 k=5 b=66\n1");
}
