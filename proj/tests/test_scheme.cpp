#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witt/design.hpp"
#include "witt/exact_cover.hpp"
#include "witt/scheme.hpp"

using namespace witt;

namespace {

const AssociationScheme& witt_scheme() {
    static AssociationScheme s = [] {
        auto res = exact_cover_solve(build_witt_instance(), SolveMode::First);
        return scheme_from_design(design_from_witt_solution(res.solutions[0]));
    }();
    return s;
}

const PTensor& witt_tensor() {
    static PTensor p = [] {
        auto res = verify_scheme_axioms(witt_scheme());
        REQUIRE(res.ok);
        return res.p;
    }();
    return p;
}

// Brute-force oracle: count triples directly for every (i,j,k) over a sample
// of base pairs, independent of the verifier's bookkeeping.
std::size_t oracle_count(const AssociationScheme& s, std::size_t i, std::size_t j,
                         std::size_t x, std::size_t y) {
    std::size_t c = 0;
    for (std::size_t z = 0; z < s.n; ++z)
        if (s.cls(x, z) == i && s.cls(z, y) == j) ++c;
    return c;
}

} // namespace

TEST_CASE("scheme from design: classes follow intersection sizes") {
    auto res = exact_cover_solve(build_witt_instance(), SolveMode::First);
    auto d = design_from_witt_solution(res.solutions[0]);
    const auto& s = witt_scheme();
    CHECK(s.n == 66);
    CHECK(s.d == 3);
    CHECK(s.well_formed());
    for (std::size_t i = 0; i < 5; ++i) CHECK(s.cls(i, i) == 0);
    // Class 2 valency is 20 for every vertex.
    for (std::size_t x = 0; x < s.n; ++x) {
        std::size_t deg2 = 0;
        for (std::size_t y = 0; y < s.n; ++y)
            if (s.cls(x, y) == 2) ++deg2;
        CHECK(deg2 == 20);
    }
    // Spot-check the defining rule on a few pairs.
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 10; ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(),
                                  d.blocks[j].begin(), d.blocks[j].end(),
                                  std::back_inserter(common));
            CHECK(s.cls(i, j) == 4 - common.size());
        }
}

TEST_CASE("axiom verification matches the published intersection numbers") {
    const auto& p = witt_tensor();
    CHECK(p == known_witt_p_tensor());
    CHECK(p.at(1, 1, 1) == 15);
    CHECK(p.at(2, 2, 2) == 10);
    CHECK(p.at(3, 3, 3) == 0);
    CHECK(p.at(1, 1, 0) == 30);
    CHECK(p.at(2, 2, 0) == 20);
    CHECK(p.at(3, 3, 0) == 15);
    for (std::size_t i = 1; i <= 3; ++i)
        CHECK(p.intersection_matrix(i) == known_witt_L(i));
    // Symmetry and row-sum identities.
    for (std::size_t i = 0; i <= 3; ++i)
        for (std::size_t j = 0; j <= 3; ++j)
            for (std::size_t k = 0; k <= 3; ++k)
                CHECK(p.at(i, j, k) == p.at(j, i, k));
    for (std::size_t i = 0; i <= 3; ++i)
        for (std::size_t k = 0; k <= 3; ++k) {
            std::size_t sum = 0;
            for (std::size_t j = 0; j <= 3; ++j) sum += p.at(i, j, k);
            CHECK(sum == p.at(i, i, 0));
        }
}

TEST_CASE("axiom check agrees with the brute-force triple loop") {
    const auto& s = witt_scheme();
    const auto& p = witt_tensor();
    // Sample pairs across all relation classes.
    for (std::size_t x = 0; x < s.n; x += 7)
        for (std::size_t y = 0; y < s.n; y += 5) {
            std::size_t k = s.cls(x, y);
            for (std::size_t i = 0; i <= 3; ++i)
                for (std::size_t j = 0; j <= 3; ++j)
                    CHECK(oracle_count(s, i, j, x, y) == p.at(i, j, k));
        }
}

TEST_CASE("trivial one-class scheme on 3 vertices") {
    AssociationScheme s;
    s.n = 3;
    s.d = 1;
    s.rel.assign(9, 1);
    for (std::size_t i = 0; i < 3; ++i) s.cls(i, i) = 0;
    auto res = verify_scheme_axioms(s);
    REQUIRE(res.ok);
    CHECK(res.p.at(1, 1, 1) == 1);
    CHECK(res.p.at(1, 1, 0) == 2);
}

TEST_CASE("axiom failure reports a witness") {
    AssociationScheme s;
    s.n = 4;
    s.d = 1;
    s.rel.assign(16, 1);
    for (std::size_t i = 0; i < 4; ++i) s.cls(i, i) = 0;
    // Break regularity: a path-ish recoloring is not a scheme with d=2.
    s.d = 2;
    s.cls(0, 1) = 2;
    s.cls(1, 0) = 2;
    auto res = verify_scheme_axioms(s);
    CHECK(!res.ok);
}

TEST_CASE("eigenmatrices reproduce the published P and Q") {
    auto eig = eigenmatrices(witt_tensor(), 66);
    CHECK(eig.P == known_witt_P());
    CHECK(eig.Q == known_witt_Q());
    CHECK(mat_mul(eig.P, eig.Q) == RatMatrix::identity(4).scale(rat(66)));
    std::vector<Rational> expect_m = {rat(1), rat(10), rat(44), rat(11)};
    CHECK(eig.multiplicities == expect_m);
    Rational total(0);
    for (const auto& m : eig.multiplicities) total += m;
    CHECK(total == 66);
    // P row 0 = valencies, columns 0 all ones.
    CHECK(eig.P.at(0, 1) == 30);
    CHECK(eig.P.at(0, 2) == 20);
    CHECK(eig.P.at(0, 3) == 15);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(eig.P.at(i, 0) == 1);
        CHECK(eig.Q.at(i, 0) == 1);
    }
    // Duality: m_i P[i][j] = k_j Q[j][i].
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(eig.multiplicities[i] * eig.P.at(i, j) ==
                  eig.P.at(0, j) * eig.Q.at(j, i));
}

TEST_CASE("krein parameters: nonnegative, Q-polynomial, identities") {
    auto eig = eigenmatrices(witt_tensor(), 66);
    std::vector<Rational> valencies;
    for (std::size_t j = 0; j < 4; ++j) valencies.push_back(eig.P.at(0, j));
    auto q = krein_parameters(eig.P, eig.Q, valencies, eig.multiplicities, 66);
    CHECK(krein_nonnegative(q));
    CHECK(q_polynomial_pattern(q));
    CHECK(q.at(1, 1, 0) == 10);
    CHECK(q.at(1, 3, 2) != 0);
    CHECK(q.at(1, 1, 3) == 0);
    // q[i][j][0] = m_i delta_ij.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(q.at(i, j, 0) == (i == j ? eig.multiplicities[i] : Rational(0)));
    // Symmetry in (i,j) and the weighted permutation identity.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                CHECK(q.at(i, j, k) == q.at(j, i, k));
                CHECK(eig.multiplicities[k] * q.at(i, j, k) ==
                      eig.multiplicities[j] * q.at(i, k, j));
            }
}

TEST_CASE("angle set") {
    auto angles = angle_set(known_witt_Q());
    REQUIRE(angles.size() == 3);
    CHECK(angles[0] == rat(4, 15));
    CHECK(angles[1] == rat(-1, 10));
    CHECK(angles[2] == rat(-7, 15));
    CHECK(angles[0] == rat(8, 3) / rat(10));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(angles[i] != 1);
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(angles[i] != angles[j]);
    }
}
