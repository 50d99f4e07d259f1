// Acceptance gate: one line per criterion, exit nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>

#include "witt/design.hpp"
#include "witt/exact_cover.hpp"
#include "witt/graph.hpp"
#include "witt/pipeline.hpp"
#include "witt/scheme.hpp"
#include "witt/sphere.hpp"

using namespace witt;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, bool ok, const char* what) {
    std::printf("criterion %2d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", what);
    if (!ok) ++failures;
}

long long count_of(const StageRecord* s, const char* key, long long missing = -1) {
    if (!s) return missing;
    for (const auto& [k, v] : s->counts)
        if (k == key) return v;
    return missing;
}

std::string digest_of(const StageRecord* s, const char* key) {
    if (!s) return {};
    for (const auto& [k, v] : s->digests)
        if (k == key) return v;
    return {};
}

std::string json_without_timings(Certificate c) {
    for (auto& s : c.stages) s.wall_ms = 0;
    return certificate_to_json(c);
}

bool property_suites() {
    bool ok = true;

    // Rational round trips and inverse identities.
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (int i = 0; i < 100; ++i) {
        Rational x = rat(num(rng), den(rng)), y = rat(num(rng), den(rng));
        ok &= rat_parse(rat_str(x)) == x;
        ok &= (x + y) - y == x;
        if (y != 0) ok &= (x / y) * y == x;
    }
    for (int trial = 0; trial < 15; ++trial) {
        RatMatrix a(4, 4);
        std::uniform_int_distribution<int> e(-9, 9);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = rat(e(rng));
        try {
            ok &= mat_mul(a, mat_inverse(a)) == RatMatrix::identity(4);
        } catch (const SingularMatrixError&) {
        }
    }

    // Clique enumeration vs the subset-filter oracle on small random graphs.
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> nn(4, 12), kk(2, 5);
        std::size_t n = nn(rng), k = kk(rng);
        ColoredGraph g(n);
        std::bernoulli_distribution edge(0.5);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (edge(rng)) g.set_color(i, j, 1);
        std::vector<std::vector<std::size_t>> oracle;
        std::vector<std::size_t> idx;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (idx.size() == k) {
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = a + 1; b < k; ++b)
                        if (!g.adjacent(idx[a], idx[b])) return;
                oracle.push_back(idx);
                return;
            }
            for (std::size_t v = from; v < n; ++v) {
                idx.push_back(v);
                self(self, v + 1);
                idx.pop_back();
            }
        };
        rec(rec, 0);
        ok &= enumerate_cliques(g, k) == oracle;
    }

    // Canonical-form invariance under 100 seeded random recolorings.
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> nn(2, 11);
        std::uniform_int_distribution<int> col(0, 2);
        std::size_t n = nn(rng);
        ColoredGraph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) g.set_color(i, j, col(rng));
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        auto a = canonical_form(g);
        auto b = canonical_form(g.permuted(perm));
        ok &= a.canon == b.canon && a.digest == b.digest;
    }
    return ok;
}

} // namespace

int main() {
    // Criterion 1: exact-cover construction.
    {
        auto inst = build_witt_instance();
        auto mrv = exact_cover_solve(inst, SolveMode::Count, ColumnHeuristic::MinRemaining);
        auto left = exact_cover_solve(inst, SolveMode::Count, ColumnHeuristic::Leftmost);
        auto first = exact_cover_solve(inst, SolveMode::First);
        bool ok = mrv.count == 5040 && left.count == 5040 && !first.solutions.empty();
        TDesignReport t4;
        if (ok) {
            auto d = design_from_witt_solution(first.solutions[0]);
            t4 = verify_t_design(d, 4);
            ok = t4.ok && t4.lambda == 1;
        }
        report(1, ok, "exact cover: 5040 solutions under both heuristics; first is a 4-(11,5,1) design");

        if (!ok) return 1; // everything downstream needs the design

        // Criteria 2-4: scheme, eigenmatrices, Krein tensor.
        auto design = design_from_witt_solution(first.solutions[0]);
        auto scheme = scheme_from_design(design);
        auto axioms = verify_scheme_axioms(scheme);
        report(2, axioms.ok && axioms.p == known_witt_p_tensor(),
               "intersection numbers equal the published L1, L2, L3");

        auto eig = eigenmatrices(axioms.p, 66);
        std::vector<Rational> expect_m = {rat(1), rat(10), rat(44), rat(11)};
        report(3,
               eig.P == known_witt_P() && eig.Q == known_witt_Q() &&
                   mat_mul(eig.P, eig.Q) == RatMatrix::identity(4).scale(rat(66)) &&
                   eig.multiplicities == expect_m,
               "eigenmatrices P, Q with P*Q = 66*I and multiplicities (1,10,44,11)");

        std::vector<Rational> valencies;
        for (std::size_t j = 0; j < 4; ++j) valencies.push_back(eig.P.at(0, j));
        auto q = krein_parameters(eig.P, eig.Q, valencies, eig.multiplicities, 66);
        report(4, krein_nonnegative(q) && q_polynomial_pattern(q),
               "Krein parameters nonnegative with the Q-polynomial tridiagonal pattern");

        // Criterion 5: SRG parameters and an explicit T(12) isomorphism.
        ColoredGraph g2 = relation_graph(scheme, 2);
        auto srg = srg_check(g2);
        auto t12 = triangular_graph(12);
        auto iso = find_isomorphism(g2, t12.graph);
        bool iso_valid = iso.has_value();
        if (iso_valid)
            for (std::size_t u = 0; u < 66 && iso_valid; ++u)
                for (std::size_t v = 0; v < 66; ++v)
                    if (u != v && g2.color(u, v) != t12.graph.color((*iso)[u], (*iso)[v])) {
                        iso_valid = false;
                        break;
                    }
        report(5,
               srg.ok && srg.n == 66 && srg.k == 20 && srg.lambda == 10 && srg.mu == 4 &&
                   iso_valid,
               "(X,R2) is srg(66,20,10,4) with a verified isomorphism to T(12)");

        // Criterion 6: order-11 clique facts in T(12).
        auto facts = verify_delsarte_clique_facts(t12.graph);
        report(6,
               facts.ok && facts.clique_count == 12 && facts.cliques_per_vertex == 2 &&
                   facts.outside_neighbors == 2 && facts.delsarte_bound == 11,
               "T(12): 12 order-11 cliques, 2 per vertex, 2 outside neighbors, bound 11");
    }

    // Criterion 7: Y1.
    {
        auto f = build_frame();
        auto y1 = enumerate_Y1(f);
        bool ok = y1.size() == 840;
        for (std::size_t i = 0; ok && i < y1.size(); ++i)
            ok = frame_consistent(y1[i]) && frame_ip(f, y1[i], y1[i]) == 1;
        report(7, ok, "|Y1| = 840, all members unit-norm and zero-sum");
    }

    // Criteria 8-11 and 13 come from two full pipeline runs over a shared cache.
    fs::path cache = fs::temp_directory_path() / "witt-uniq-acceptance-cache";
    fs::remove_all(cache);
    PipelineConfig cfg1;
    cfg1.threads = 1;
    cfg1.cache_dir = cache.string();
    auto t0 = std::chrono::steady_clock::now();
    Certificate run1 = run_pipeline(cfg1);
    auto stage5_wall =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0);

    const auto* s5 = run1.stage("clique-equivalence");
    report(8,
           s5 && s5->status == "pass" && count_of(s5, "cliques10") == 30240 &&
               count_of(s5, "gram_digests_equal") == 30240 &&
               count_of(s5, "gram_matrices_equal") == 30240 &&
               count_of(s5, "iso_witnesses_checked") >= 302 &&
               s5->wall_ms < 10 * 60 * 1000,
           "30240 order-10 cliques, all Gram canonical forms equal, 1% isomorphism sample, under 10 minutes");
    (void)stage5_wall;

    const auto* s6 = run1.stage("z-split");
    report(9, s6 && count_of(s6, "y") == 4610 && count_of(s6, "z") == 90,
           "|Y| = 4610 and |Z| = 90");
    report(10,
           s6 && s6->status == "pass" && count_of(s6, "z1") == 45 &&
               count_of(s6, "z2") == 45 && !digest_of(s6, "gram66_z1_canonical").empty() &&
               digest_of(s6, "gram66_z1_canonical") == digest_of(s6, "gram66_z2_canonical"),
           "Z splits into two 45-cliques with off-angle cross products and equal Gram digests");

    const auto* s7 = run1.stage("final-configuration");
    report(11, s7 && s7->status == "pass" && count_of(s7, "tensor_matches") == 1,
           "final 66-point configuration reproduces L1-L3 and is isomorphic to the design scheme");

    report(12, property_suites(),
           "property suites: rational identities, clique oracle, canonical invariance");

    PipelineConfig cfg2 = cfg1;
    cfg2.threads = 4;
    Certificate run2 = run_pipeline(cfg2);
    report(13,
           run1.pass() && run2.pass() &&
               json_without_timings(run1) == json_without_timings(run2),
           "threads=1 and threads=4 full runs serialize to byte-identical JSON modulo timings");

    fs::remove_all(cache);
    std::printf("%s (%d failure%s)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
