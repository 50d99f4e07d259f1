#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace witt {

struct AssociationScheme;

// Edge-colored graph on n vertices. color(u,v) is symmetric; the diagonal
// carries the reserved label `diag_color`, which never appears off-diagonal.
// Simple graphs use colors {0 = non-edge, 1 = edge}.
class ColoredGraph {
public:
    static constexpr int kDiag = -1;

    ColoredGraph() = default;
    explicit ColoredGraph(std::size_t n) : n_(n), color_(n * n, 0) {
        for (std::size_t i = 0; i < n; ++i) color_[i * n + i] = kDiag;
    }

    std::size_t size() const { return n_; }
    int color(std::size_t u, std::size_t v) const { return color_[u * n_ + v]; }
    void set_color(std::size_t u, std::size_t v, int c) {
        color_[u * n_ + v] = c;
        color_[v * n_ + u] = c;
    }
    bool adjacent(std::size_t u, std::size_t v) const { return u != v && color(u, v) != 0; }

    bool well_formed() const;
    // Simple graph = colors 0/1 off-diagonal only.
    bool is_simple() const;
    std::size_t edge_count() const;

    bool operator==(const ColoredGraph&) const = default;

    ColoredGraph permuted(const std::vector<std::size_t>& perm) const;

private:
    std::size_t n_ = 0;
    std::vector<int> color_;
};

// Simple graph on the scheme's vertices, edge iff the relation class is i.
ColoredGraph relation_graph(const AssociationScheme& s, std::size_t i);

// The full relation matrix as a complete edge-colored graph (colors = classes).
ColoredGraph scheme_colored_graph(const AssociationScheme& s);

struct SrgResult {
    bool ok = false;
    std::size_t n = 0, k = 0, lambda = 0, mu = 0;
    std::string violation; // human-readable first violation when !ok
};

// Verifies constant degree, constant common-neighbor counts over edges and
// over non-edges of a connected simple graph.
SrgResult srg_check(const ColoredGraph& g);

struct TriangularGraph {
    ColoredGraph graph;
    std::vector<std::pair<std::size_t, std::size_t>> tags; // 2-subsets of [0,m), lex order
};

// T(m): vertices are the 2-subsets of an m-set, adjacent iff they share a point.
TriangularGraph triangular_graph(std::size_t m);

// All cliques of exactly `size` vertices, lexicographically ordered lists.
// Pivoted Bron-Kerbosch with a fixed-size prune.
std::vector<std::vector<std::size_t>> enumerate_cliques(const ColoredGraph& g,
                                                        std::size_t size);

// Color-preserving vertex bijection g -> h, or nullopt. Backtracking over
// refinement-compatible candidate cells.
std::optional<std::vector<std::size_t>> find_isomorphism(const ColoredGraph& g,
                                                         const ColoredGraph& h);

struct DelsarteCliqueReport {
    bool ok = false;
    std::size_t clique_count = 0;      // order-11 cliques found
    std::size_t cliques_per_vertex = 0;
    std::size_t outside_neighbors = 0; // common count across all (clique, outside vertex)
    long delsarte_bound = 0;           // 1 - k/theta_min
    std::string violation;
};

// Exhaustive check of the maximum-clique facts of T(12): 12 cliques of order
// 11, every vertex in exactly 2, every outside vertex with exactly 2
// neighbors in each, and the eigenvalue clique bound equal to 11.
DelsarteCliqueReport verify_delsarte_clique_facts(const ColoredGraph& t12);

struct CanonicalForm {
    std::vector<std::size_t> labeling; // position i holds the original vertex placed at i
    ColoredGraph canon;
    std::string digest; // sha256 of the serialized canonical matrix
};

// Canonical form under simultaneous row/column permutation: iterative color
// refinement plus backtracking, minimizing the relabeled color matrix.
// Isomorphic inputs yield identical `canon`.
CanonicalForm canonical_form(const ColoredGraph& g);

std::string sha256_hex(const std::string& data);

} // namespace witt
