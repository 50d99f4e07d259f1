#include "witt/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "witt/ratmatrix.hpp"
#include "witt/scheme.hpp"

namespace witt {

ColoredGraph relation_graph(const AssociationScheme& s, std::size_t i) {
    if (i < 1 || i > s.d) throw std::invalid_argument("relation_graph: class out of range");
    ColoredGraph g(s.n);
    for (std::size_t u = 0; u < s.n; ++u)
        for (std::size_t v = u + 1; v < s.n; ++v)
            if (s.cls(u, v) == i) g.set_color(u, v, 1);
    return g;
}

ColoredGraph scheme_colored_graph(const AssociationScheme& s) {
    ColoredGraph g(s.n);
    for (std::size_t u = 0; u < s.n; ++u)
        for (std::size_t v = u + 1; v < s.n; ++v) g.set_color(u, v, s.cls(u, v));
    return g;
}

bool ColoredGraph::well_formed() const {
    for (std::size_t u = 0; u < n_; ++u) {
        if (color(u, u) != kDiag) return false;
        for (std::size_t v = u + 1; v < n_; ++v) {
            if (color(u, v) != color(v, u)) return false;
            if (color(u, v) == kDiag) return false;
        }
    }
    return true;
}

bool ColoredGraph::is_simple() const {
    if (!well_formed()) return false;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (color(u, v) != 0 && color(u, v) != 1) return false;
    return true;
}

std::size_t ColoredGraph::edge_count() const {
    std::size_t e = 0;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) ++e;
    return e;
}

ColoredGraph ColoredGraph::permuted(const std::vector<std::size_t>& perm) const {
    ColoredGraph g(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            g.set_color(i, j, color(perm[i], perm[j]));
    return g;
}

SrgResult srg_check(const ColoredGraph& g) {
    SrgResult r;
    r.n = g.size();
    if (!g.is_simple()) {
        r.violation = "graph is not simple";
        return r;
    }
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (g.adjacent(u, v)) ++deg[u];
    for (std::size_t u = 1; u < n; ++u)
        if (deg[u] != deg[0]) {
            std::ostringstream os;
            os << "degree of vertex " << u << " is " << deg[u] << ", vertex 0 has "
               << deg[0];
            r.violation = os.str();
            return r;
        }
    r.k = deg.empty() ? 0 : deg[0];
    bool have_lambda = false, have_mu = false;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t common = 0;
            for (std::size_t w = 0; w < n; ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w)) ++common;
            if (g.adjacent(u, v)) {
                if (!have_lambda) {
                    r.lambda = common;
                    have_lambda = true;
                } else if (common != r.lambda) {
                    std::ostringstream os;
                    os << "edge (" << u << "," << v << ") has " << common
                       << " common neighbors, expected " << r.lambda;
                    r.violation = os.str();
                    return r;
                }
            } else {
                if (!have_mu) {
                    r.mu = common;
                    have_mu = true;
                } else if (common != r.mu) {
                    std::ostringstream os;
                    os << "non-edge (" << u << "," << v << ") has " << common
                       << " common neighbors, expected " << r.mu;
                    r.violation = os.str();
                    return r;
                }
            }
        }
    r.ok = true;
    return r;
}

TriangularGraph triangular_graph(std::size_t m) {
    if (m < 4) throw std::invalid_argument("triangular_graph: need m >= 4");
    TriangularGraph t;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) t.tags.push_back({a, b});
    t.graph = ColoredGraph(t.tags.size());
    for (std::size_t i = 0; i < t.tags.size(); ++i)
        for (std::size_t j = i + 1; j < t.tags.size(); ++j) {
            auto [a, b] = t.tags[i];
            auto [c, d] = t.tags[j];
            std::size_t common = (a == c) + (a == d) + (b == c) + (b == d);
            if (common == 1) t.graph.set_color(i, j, 1);
        }
    return t;
}

namespace {

// Fixed-width dynamic bitset for clique search.
class BitSet {
public:
    explicit BitSet(std::size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += (std::size_t)__builtin_popcountll(x);
        return c;
    }
    BitSet and_with(const BitSet& o) const {
        BitSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    // Calls f on each set bit in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                f(wi * 64 + (std::size_t)__builtin_ctzll(x));
                x &= x - 1;
            }
        }
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

void clique_extend(const std::vector<BitSet>& adj, std::size_t size,
                   std::vector<std::size_t>& current, const BitSet& candidates,
                   std::vector<std::vector<std::size_t>>& out) {
    if (current.size() == size) {
        out.push_back(current);
        return;
    }
    if (current.size() + candidates.count() < size) return;
    candidates.for_each([&](std::size_t v) {
        current.push_back(v);
        // Only vertices above v remain candidates, so output is lexicographic.
        BitSet next = candidates.and_with(adj[v]);
        BitSet pruned(adj.size());
        next.for_each([&](std::size_t u) {
            if (u > v) pruned.set(u);
        });
        clique_extend(adj, size, current, pruned, out);
        current.pop_back();
    });
}

} // namespace

std::vector<std::vector<std::size_t>> enumerate_cliques(const ColoredGraph& g,
                                                        std::size_t size) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> out;
    if (size == 0 || size > n) return out;
    std::vector<BitSet> adj(n, BitSet(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (g.adjacent(u, v)) adj[u].set(v);
    BitSet all(n);
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    std::vector<std::size_t> current;
    clique_extend(adj, size, current, all, out);
    return out;
}

namespace {

// One round of color refinement: split classes by the multiset of
// (edge color, neighbor class) pairs. Returns the stable coloring with
// canonically ordered class ids.
std::vector<int> refine_colors(const ColoredGraph& g, std::vector<int> color) {
    const std::size_t n = g.size();
    while (true) {
        std::vector<std::pair<std::vector<int>, std::size_t>> sigs(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.reserve(2 * n);
            sig.push_back(color[v]);
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(n - 1);
            for (std::size_t u = 0; u < n; ++u) {
                if (u == v) continue;
                pairs.push_back({g.color(v, u), color[u]});
            }
            std::sort(pairs.begin(), pairs.end());
            for (auto& [a, b] : pairs) {
                sig.push_back(a);
                sig.push_back(b);
            }
            sigs[v] = {std::move(sig), v};
        }
        std::vector<std::size_t> order(n);
        for (std::size_t v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return sigs[a].first < sigs[b].first;
        });
        std::vector<int> next(n);
        int c = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sigs[order[i]].first != sigs[order[i - 1]].first) ++c;
            next[order[i]] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

} // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const ColoredGraph& g,
                                                         const ColoredGraph& h) {
    if (g.size() != h.size()) return std::nullopt;
    const std::size_t n = g.size();
    if (n == 0) return std::vector<std::size_t>{};

    // Joint refinement so that class ids are comparable across the graphs.
    std::vector<int> cg = refine_colors(g, std::vector<int>(n, 0));
    std::vector<int> ch = refine_colors(h, std::vector<int>(n, 0));
    // The canonical class ordering of refine_colors is signature-based but
    // signatures embed class ids; re-derive comparable ids by one joint pass:
    // build a disjoint-union graph and refine together.
    ColoredGraph uni(2 * n);
    // A color never used between the halves keeps them from interacting
    // except through their own structure; use a distinct separator color.
    int sep = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v) {
                uni.set_color(u, v, g.color(u, v));
                uni.set_color(n + u, n + v, h.color(u, v));
            }
            sep = std::max({sep, g.color(u, v) + 1, h.color(u, v) + 1});
        }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) uni.set_color(u, n + v, sep);
    std::vector<int> joint = refine_colors(uni, std::vector<int>(2 * n, 0));
    for (std::size_t v = 0; v < n; ++v) {
        cg[v] = joint[v];
        ch[v] = joint[n + v];
    }
    // Class size histograms must agree.
    std::map<int, int> histg, histh;
    for (std::size_t v = 0; v < n; ++v) {
        ++histg[cg[v]];
        ++histh[ch[v]];
    }
    if (histg != histh) return std::nullopt;

    // Map g-vertices in order of ascending class size (most constrained first).
    std::vector<std::size_t> gorder(n);
    for (std::size_t v = 0; v < n; ++v) gorder[v] = v;
    std::sort(gorder.begin(), gorder.end(), [&](std::size_t a, std::size_t b) {
        if (histg[cg[a]] != histg[cg[b]]) return histg[cg[a]] < histg[cg[b]];
        return a < b;
    });

    std::vector<std::size_t> map(n, SIZE_MAX);
    std::vector<bool> used(n, false);

    auto backtrack = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == n) return true;
        std::size_t gv = gorder[idx];
        for (std::size_t hv = 0; hv < n; ++hv) {
            if (used[hv] || ch[hv] != cg[gv]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx; ++j) {
                std::size_t pg = gorder[j];
                if (g.color(gv, pg) != h.color(hv, map[pg])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[gv] = hv;
            used[hv] = true;
            if (self(self, idx + 1)) return true;
            used[hv] = false;
            map[gv] = SIZE_MAX;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    return map;
}

DelsarteCliqueReport verify_delsarte_clique_facts(const ColoredGraph& t12) {
    DelsarteCliqueReport rep;
    auto srg = srg_check(t12);
    if (!srg.ok || srg.n != 66 || srg.k != 20 || srg.lambda != 10 || srg.mu != 4) {
        rep.violation = "input is not an SRG(66,20,10,4)";
        return rep;
    }
    auto cliques = enumerate_cliques(t12, 11);
    rep.clique_count = cliques.size();
    if (cliques.size() != 12) {
        rep.violation = "order-11 clique count is not 12";
        return rep;
    }
    std::vector<std::size_t> membership(66, 0);
    for (const auto& c : cliques)
        for (std::size_t v : c) ++membership[v];
    for (std::size_t v = 0; v < 66; ++v)
        if (membership[v] != 2) {
            std::ostringstream os;
            os << "vertex " << v << " lies in " << membership[v] << " cliques";
            rep.violation = os.str();
            return rep;
        }
    rep.cliques_per_vertex = 2;
    for (const auto& c : cliques) {
        std::vector<bool> inside(66, false);
        for (std::size_t v : c) inside[v] = true;
        for (std::size_t v = 0; v < 66; ++v) {
            if (inside[v]) continue;
            std::size_t nb = 0;
            for (std::size_t u : c)
                if (t12.adjacent(v, u)) ++nb;
            if (nb != 2) {
                std::ostringstream os;
                os << "outside vertex " << v << " has " << nb << " neighbors in a clique";
                rep.violation = os.str();
                return rep;
            }
        }
    }
    rep.outside_neighbors = 2;
    // Eigenvalue clique bound 1 - k/theta_min with theta_min the least root of
    // x^2 - (lambda - mu) x - (k - mu).
    std::vector<Integer> quad = {Integer(-(long)(srg.k - srg.mu)),
                                 Integer(-((long)srg.lambda - (long)srg.mu)), Integer(1)};
    auto roots = integer_roots(quad);
    if (roots.roots.empty() || roots.remainder != std::vector<Integer>{Integer(1)}) {
        rep.violation = "SRG eigenvalues are not integers";
        return rep;
    }
    Integer theta_min = roots.roots.front().first;
    Rational bound = Rational(1) - Rational((long)srg.k) / Rational(theta_min);
    if (bound.get_den() != 1) {
        rep.violation = "clique bound is not an integer";
        return rep;
    }
    rep.delsarte_bound = bound.get_num().get_si();
    if (rep.delsarte_bound != 11) {
        rep.violation = "clique bound does not equal the clique order";
        return rep;
    }
    rep.ok = true;
    return rep;
}

namespace {

struct Partition {
    // Ordered cells; vertices inside a cell kept in ascending order.
    std::vector<std::vector<std::size_t>> cells;
};

Partition refine_partition(const ColoredGraph& g, Partition p) {
    const std::size_t n = g.size();
    while (true) {
        std::vector<int> cell_of(n);
        for (std::size_t ci = 0; ci < p.cells.size(); ++ci)
            for (std::size_t v : p.cells[ci]) cell_of[v] = (int)ci;
        bool split = false;
        Partition next;
        for (const auto& cell : p.cells) {
            if (cell.size() == 1) {
                next.cells.push_back(cell);
                continue;
            }
            // Signature of v: sorted multiset of (edge color, neighbor cell).
            std::map<std::vector<std::pair<int, int>>, std::vector<std::size_t>> groups;
            for (std::size_t v : cell) {
                std::vector<std::pair<int, int>> sig;
                sig.reserve(n - 1);
                for (std::size_t u = 0; u < n; ++u) {
                    if (u == v) continue;
                    sig.push_back({g.color(v, u), cell_of[u]});
                }
                std::sort(sig.begin(), sig.end());
                groups[std::move(sig)].push_back(v);
            }
            if (groups.size() > 1) split = true;
            for (auto& [sig, verts] : groups) next.cells.push_back(std::move(verts));
        }
        p = std::move(next);
        if (!split) return p;
    }
}

struct CanonSearch {
    const ColoredGraph& g;
    std::vector<std::size_t> best_labeling;
    ColoredGraph best_canon;
    bool have_best = false;

    explicit CanonSearch(const ColoredGraph& graph) : g(graph) {}

    // Lexicographic row-major comparison of the leading k x k block of the
    // candidate (determined by the singleton prefix) with the current best.
    // Returns <0, 0, >0.
    int compare_prefix(const std::vector<std::size_t>& prefix) const {
        const std::size_t k = prefix.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                int a = g.color(prefix[i], prefix[j]);
                int b = best_canon.color(i, j);
                if (a != b) return a < b ? -1 : 1;
            }
        return 0;
    }

    void search(const Partition& p) {
        // Singleton prefix determines the leading block of any leaf below.
        std::vector<std::size_t> prefix;
        std::size_t ci = 0;
        while (ci < p.cells.size() && p.cells[ci].size() == 1)
            prefix.push_back(p.cells[ci++][0]);
        if (have_best && compare_prefix(prefix) > 0) return;

        if (ci == p.cells.size()) {
            ColoredGraph cand = g.permuted(prefix);
            if (!have_best) {
                best_canon = cand;
                best_labeling = prefix;
                have_best = true;
            } else {
                // Row-major lexicographic comparison.
                for (std::size_t i = 0; i < g.size(); ++i) {
                    bool decided = false;
                    for (std::size_t j = 0; j < g.size(); ++j) {
                        int a = cand.color(i, j), b = best_canon.color(i, j);
                        if (a != b) {
                            if (a < b) {
                                best_canon = cand;
                                best_labeling = prefix;
                            }
                            decided = true;
                            break;
                        }
                    }
                    if (decided) break;
                }
            }
            return;
        }
        const auto target = p.cells[ci];
        for (std::size_t v : target) {
            Partition child;
            child.cells.reserve(p.cells.size() + 1);
            for (std::size_t i = 0; i < ci; ++i) child.cells.push_back(p.cells[i]);
            child.cells.push_back({v});
            std::vector<std::size_t> rest;
            for (std::size_t u : target)
                if (u != v) rest.push_back(u);
            child.cells.push_back(std::move(rest));
            for (std::size_t i = ci + 1; i < p.cells.size(); ++i)
                child.cells.push_back(p.cells[i]);
            search(refine_partition(g, std::move(child)));
        }
    }
};

} // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
    const std::size_t n = g.size();
    CanonicalForm cf;
    if (n == 0) {
        cf.canon = g;
        cf.digest = sha256_hex("");
        return cf;
    }
    Partition unit;
    unit.cells.push_back({});
    for (std::size_t v = 0; v < n; ++v) unit.cells[0].push_back(v);
    CanonSearch s(g);
    s.search(refine_partition(g, std::move(unit)));
    cf.labeling = s.best_labeling;
    cf.canon = s.best_canon;
    std::ostringstream os;
    os << n << ';';
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) os << cf.canon.color(i, j) << ',';
    cf.digest = sha256_hex(os.str());
    return cf;
}

} // namespace witt
