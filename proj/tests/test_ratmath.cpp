#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "witt/ratmatrix.hpp"
#include "witt/scheme.hpp"

using namespace witt;

namespace {

// Independent schoolbook product used as the oracle for mat_mul.
RatMatrix naive_mul(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational acc(0);
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            c.at(i, j) = acc;
        }
    return c;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rat(dist(rng));
    return m;
}

} // namespace

TEST_CASE("rational arithmetic round-trips and normalizes") {
    Rational a = rat(3, 6);
    CHECK(a == rat(1, 2));
    CHECK(a.get_den() == 2);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
    for (int i = 0; i < 200; ++i) {
        Rational x = rat(num(rng), den(rng)), y = rat(num(rng), den(rng));
        CHECK((x + y) - y == x);
        if (y != 0) CHECK((x / y) * y == x);
    }
    CHECK(rat_parse("-7/15") == rat(-7, 15));
    CHECK(rat_str(rat(8, 30)) == "4/15");
    CHECK(rat_str(rat(0, 5)) == "0");
}

TEST_CASE("mat_mul identity and oracle agreement") {
    std::mt19937 rng(11);
    RatMatrix m = random_matrix(rng, 3);
    CHECK(mat_mul(RatMatrix::identity(3), m) == m);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix a = random_matrix(rng, 5), b = random_matrix(rng, 5);
        CHECK(mat_mul(a, b) == naive_mul(a, b));
    }
    CHECK_THROWS_AS(mat_mul(RatMatrix(2, 3), RatMatrix(2, 3)), DimensionError);
}

TEST_CASE("C * simplex Gram has vanishing row sums") {
    // G has the all-ones vector in its kernel, so every row of C*G sums to 0.
    RatMatrix g(11, 11);
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j) g.at(i, j) = (i == j) ? rat(1) : rat(-1, 10);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-3, 3);
    RatMatrix c(10, 11);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 11; ++j) c.at(i, j) = rat(dist(rng), 3);
    RatMatrix prod = mat_mul(c, g);
    CHECK(prod == naive_mul(c, g));
    for (std::size_t i = 0; i < 10; ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < 11; ++j) sum += prod.at(i, j);
        CHECK(sum == 0);
    }
}

TEST_CASE("P * Q = 66 * I for the published eigenmatrices") {
    CHECK(mat_mul(known_witt_P(), known_witt_Q()) ==
          RatMatrix::identity(4).scale(rat(66)));
}

TEST_CASE("mat_inverse basics") {
    CHECK(mat_inverse(RatMatrix::identity(4)) == RatMatrix::identity(4));
    RatMatrix d = RatMatrix::from_ints(2, 2, {2, 0, 0, 4});
    RatMatrix di = mat_inverse(d);
    CHECK(di.at(0, 0) == rat(1, 2));
    CHECK(di.at(1, 1) == rat(1, 4));
    CHECK(di.at(0, 1) == 0);
    CHECK(mat_inverse(known_witt_P()).scale(rat(66)) == known_witt_Q());
    CHECK_THROWS_AS(mat_inverse(RatMatrix::from_ints(2, 2, {1, 2, 2, 4})),
                    SingularMatrixError);
}

TEST_CASE("mat_inverse survives intermediate values beyond 64-bit range") {
    // Entries around 10^4 on an 11x11 matrix: fraction-free elimination pushes
    // intermediate determinants far past 2^64.
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> dist(-10000, 10000);
    RatMatrix a(11, 11);
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j) a.at(i, j) = rat(dist(rng));
    auto cp = char_poly(a);
    Rational det = cp[0]; // det(A) = (-1)^n * cp(0); n = 11 odd
    det = -det;
    REQUIRE(det != 0);
    Integer bound(1);
    bound <<= 64;
    CHECK(abs(det.get_num()) > bound);
    CHECK(mat_mul(a, mat_inverse(a)) == RatMatrix::identity(11));
}

TEST_CASE("random inverse identity property") {
    std::mt19937 rng(42);
    int inverted = 0;
    for (int trial = 0; trial < 30; ++trial) {
        RatMatrix a = random_matrix(rng, 4);
        try {
            RatMatrix inv = mat_inverse(a);
            CHECK(mat_mul(a, inv) == RatMatrix::identity(4));
            CHECK(mat_mul(inv, a) == RatMatrix::identity(4));
            ++inverted;
        } catch (const SingularMatrixError&) {
            // fine: singular draws are expected occasionally
        }
    }
    CHECK(inverted > 0);
}

TEST_CASE("char_poly examples") {
    auto zero = char_poly(RatMatrix(2, 2));
    CHECK(zero == std::vector<Rational>{rat(0), rat(0), rat(1)});

    auto d12 = char_poly(RatMatrix::from_ints(2, 2, {1, 0, 0, 2}));
    CHECK(d12 == std::vector<Rational>{rat(2), rat(-3), rat(1)});

    // (x-30)(x-8)(x+1)(x+6) = x^4 - 31x^3 - 20x^2 + 1452x + 1440
    auto l1 = char_poly(known_witt_L(1));
    CHECK(l1 == std::vector<Rational>{rat(1440), rat(1452), rat(-20), rat(-31), rat(1)});
}

TEST_CASE("integer_roots examples") {
    auto r1 = integer_roots({Integer(-1), Integer(0), Integer(1)}); // x^2 - 1
    REQUIRE(r1.roots.size() == 2);
    CHECK(r1.roots[0] == std::pair{Integer(-1), std::size_t(1)});
    CHECK(r1.roots[1] == std::pair{Integer(1), std::size_t(1)});
    CHECK(r1.remainder == std::vector<Integer>{Integer(1)});

    auto r2 = integer_roots({Integer(1), Integer(0), Integer(1)}); // x^2 + 1
    CHECK(r2.roots.empty());
    CHECK(r2.remainder == std::vector<Integer>{Integer(1), Integer(0), Integer(1)});

    auto cp = char_poly(known_witt_L(1));
    std::vector<Integer> icp;
    for (const auto& c : cp) icp.push_back(c.get_num());
    auto r3 = integer_roots(icp);
    REQUIRE(r3.roots.size() == 4);
    std::vector<Integer> expect = {Integer(-6), Integer(-1), Integer(8), Integer(30)};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(r3.roots[i].first == expect[i]);
        CHECK(r3.roots[i].second == 1);
    }
    CHECK(r3.remainder == std::vector<Integer>{Integer(1)});
}

TEST_CASE("reported roots evaluate to zero and multiplicities deflate") {
    // (x-2)^2 (x+3)
    std::vector<Integer> p = {Integer(12), Integer(-8), Integer(-1), Integer(1)};
    auto r = integer_roots(p);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == std::pair{Integer(-3), std::size_t(1)});
    CHECK(r.roots[1] == std::pair{Integer(2), std::size_t(2)});
    for (const auto& [root, mult] : r.roots) CHECK(poly_eval(p, root) == 0);

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        RatMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = rat(dist(rng));
        auto cp = char_poly(a);
        std::vector<Integer> icp;
        for (const auto& c : cp) icp.push_back(c.get_num());
        auto roots = integer_roots(icp);
        for (const auto& [root, mult] : roots.roots)
            CHECK(poly_eval(cp, Rational(root)) == 0);
    }
}

TEST_CASE("mat_rank") {
    CHECK(mat_rank(RatMatrix::identity(5)) == 5);
    CHECK(mat_rank(RatMatrix(4, 4)) == 0);
    RatMatrix g(11, 11);
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j) g.at(i, j) = (i == j) ? rat(1) : rat(-1, 10);
    CHECK(mat_rank(g) == 10);
}
