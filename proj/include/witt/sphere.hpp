#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "witt/graph.hpp"
#include "witt/ratmatrix.hpp"
#include "witt/scheme.hpp"

namespace witt {

// Inner products of a point on S^9 with the 11 fixed simplex points; an exact
// rational stand-in for the point itself (the encoding is injective on
// zero-sum vectors).
using FrameVector = RatVector;

// The regular 11-point simplex frame: Gram matrix G (1 on the diagonal,
// -1/10 off) and its Moore-Penrose pseudo-inverse.
struct SimplexFrame {
    RatMatrix G;     // 11 x 11
    RatMatrix Gpinv; // 11 x 11

    FrameVector c1_point(std::size_t i) const; // frame vector of simplex point i
};

// The three inner-product values of the configuration, in class order.
struct Angles {
    Rational a1, a2, a3;

    std::vector<Rational> as_list() const { return {a1, a2, a3}; }
    bool contains(const Rational& x) const { return x == a1 || x == a2 || x == a3; }
};

// Fixed angles of this scheme: (4/15, -1/10, -7/15).
Angles witt_angles();

// Builds G and its pseudo-inverse and certifies the four Moore-Penrose
// identities plus G*1 = 0. Throws on any failure.
SimplexFrame build_frame();

bool frame_consistent(const FrameVector& v); // entry sum 0 (row space of G)

// <u,u'> of the represented vectors: v^T G+ w. Rejects inconsistent inputs.
Rational frame_ip(const SimplexFrame& f, const FrameVector& a, const FrameVector& b);

// The ten frame vectors of the fixed second clique (rows of C*G for the fixed
// 10x11 coefficient matrix), each certified: unit norm, entry sum 0, pairwise
// inner products a2, inner product a2 with the base point, and the
// {a1^6, a2^1, a3^3} pattern against the other simplex points.
std::vector<FrameVector> fix_C2(const SimplexFrame& f);

// The fixed 10x11 coefficient matrix mapping the simplex to the second clique.
RatMatrix c2_coefficients();

struct EnumerationStats {
    std::size_t pattern_count = 0; // multiset permutations generated
    std::size_t rejected = 0;      // failed unit-norm/consistency filters
};

// All frame vectors with first entry a2 and remaining 10 entries a permutation
// of {a1^6, a2^1, a3^3}, unit-norm and consistent; lexicographic order.
std::vector<FrameVector> enumerate_Y1(const SimplexFrame& f,
                                      EnumerationStats* stats = nullptr);

// Simple graph on Y1: edge iff the inner product is a2.
ColoredGraph y1_graph(const SimplexFrame& f, const std::vector<FrameVector>& y1);

struct Lemma2Report {
    bool ok = false;
    std::size_t clique_count = 0;
    std::string reference_digest;          // canonical digest of C1 ∪ fixed C2
    std::size_t digests_equal = 0;         // cliques whose digest matched
    std::size_t matrices_equal = 0;        // full canonical-matrix comparisons
    std::size_t iso_witnesses_checked = 0; // explicit-isomorphism sample size
    std::size_t first_divergence = 0;      // clique index, when !ok
    std::string violation;
};

// For every order-10 clique of (Y1,E1): the 21-point Gram of C1 ∪ clique has
// the same canonical form as C1 ∪ fixed C2. A deterministic 1% sample is
// re-proved by an explicit isomorphism witness.
Lemma2Report lemma2_check(const SimplexFrame& f, const std::vector<FrameVector>& y1,
                          const std::vector<FrameVector>& fixed_c2,
                          const std::vector<std::vector<std::size_t>>& cliques,
                          unsigned threads = 1);

// All frame vectors whose 11 entries are a permutation of {a1^6, a2^2, a3^3},
// unit-norm and consistent, minus the ten fixed C2 vectors; lexicographic.
std::vector<FrameVector> enumerate_Y(const SimplexFrame& f,
                                     const std::vector<FrameVector>& fixed_c2,
                                     EnumerationStats* stats = nullptr);

// Members of Y whose inner product with every fixed C2 vector is an angle.
std::vector<FrameVector> filter_Z(const SimplexFrame& f,
                                  const std::vector<FrameVector>& y,
                                  const std::vector<FrameVector>& fixed_c2);

struct ZSplitReport {
    bool ok = false;
    std::vector<FrameVector> z1, z2;
    std::string digest1, digest2; // canonical digests of the two 66-point Grams
    std::string violation;
};

// The compatibility graph on Z (edge iff the inner product is an angle) must
// be the disjoint union of two 45-cliques with all cross inner products
// outside the angle set; the two completed 66-point Grams must have equal
// canonical forms. Z1 is the component of the lexicographically least member.
ZSplitReport split_Z(const SimplexFrame& f, const std::vector<FrameVector>& z,
                     const std::vector<FrameVector>& fixed_c2);

// Complete edge-colored graph of pairwise inner products, colored by angle
// class (1..3). Throws if a distinct pair's inner product is outside the angle
// set or a diagonal is not 1.
ColoredGraph gram_colored_graph(const SimplexFrame& f,
                                const std::vector<FrameVector>& points);

struct FinalCheckReport {
    bool ok = false;
    AssociationScheme scheme;
    PTensor p;
    bool tensor_matches = false;
    std::string violation;
};

// Builds the 66-point configuration C1 ∪ C2 ∪ Z1, maps inner products to
// relation classes, verifies the scheme axioms, and compares the intersection
// numbers with the published tables.
FinalCheckReport final_scheme_check(const SimplexFrame& f,
                                    const std::vector<FrameVector>& fixed_c2,
                                    const std::vector<FrameVector>& z1);

} // namespace witt
