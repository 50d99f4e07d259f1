#include "witt/sphere.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "witt/parallel.hpp"

namespace witt {

Angles witt_angles() {
    return {rat(4, 15), rat(-1, 10), rat(-7, 15)};
}

FrameVector SimplexFrame::c1_point(std::size_t i) const {
    FrameVector v(11);
    for (std::size_t j = 0; j < 11; ++j) v[j] = G.at(i, j);
    return v;
}

SimplexFrame build_frame() {
    SimplexFrame f;
    f.G = RatMatrix(11, 11);
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j) f.G.at(i, j) = (i == j) ? rat(1) : rat(-1, 10);
    // Closed form (10/11)(I - J/11), then certified rather than assumed.
    f.Gpinv = RatMatrix(11, 11);
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j)
            f.Gpinv.at(i, j) = rat(10, 11) * ((i == j ? rat(1) : rat(0)) - rat(1, 11));

    for (std::size_t i = 0; i < 11; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < 11; ++j) s += f.G.at(i, j);
        if (s != 0) throw std::runtime_error("build_frame: G*1 != 0");
    }
    RatMatrix GX = mat_mul(f.G, f.Gpinv);
    RatMatrix XG = mat_mul(f.Gpinv, f.G);
    if (mat_mul(GX, f.G) != f.G) throw std::runtime_error("build_frame: G X G != G");
    if (mat_mul(XG, f.Gpinv) != f.Gpinv)
        throw std::runtime_error("build_frame: X G X != X");
    if (!GX.is_symmetric() || !XG.is_symmetric())
        throw std::runtime_error("build_frame: Moore-Penrose symmetry fails");
    return f;
}

bool frame_consistent(const FrameVector& v) {
    Rational s(0);
    for (const auto& x : v) s += x;
    return s == 0;
}

Rational frame_ip(const SimplexFrame& f, const FrameVector& a, const FrameVector& b) {
    if (a.size() != 11 || b.size() != 11)
        throw std::invalid_argument("frame_ip: vectors must have length 11");
    if (!frame_consistent(a) || !frame_consistent(b))
        throw std::invalid_argument("frame_ip: vector outside the row space of G");
    // v^T G+ w with G+ = (10/11)(I - J/11); the J term vanishes on zero-sum
    // input, leaving (10/11) <a,b>.
    Rational dot(0);
    for (std::size_t i = 0; i < 11; ++i) dot += a[i] * b[i];
    return rat(10, 11) * dot;
}

RatMatrix c2_coefficients() {
    static const long raw[10][11] = {
        {0, 1, 1, 1, 1, 1, 1, 0, -1, -1, -1},   //
        {0, 1, 1, 1, 1, -1, -1, -1, 1, 1, 0},   //
        {0, 1, 1, 0, -1, 1, -1, 1, 1, -1, 1},   //
        {0, 1, 1, -1, 0, -1, 1, 1, -1, 1, 1},   //
        {0, 1, -1, 1, -1, 1, 1, -1, 0, 1, 1},   //
        {0, 1, -1, -1, 1, 1, 0, 1, 1, 1, -1},   //
        {0, 0, -1, 1, 1, -1, 1, 1, 1, -1, 1},   //
        {0, -1, 1, 1, -1, 0, 1, 1, 1, 1, -1},   //
        {0, -1, 1, -1, 1, 1, 1, -1, 1, 0, 1},   //
        {0, -1, 0, 1, 1, 1, -1, 1, -1, 1, 1}};
    RatMatrix c(10, 11);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 11; ++j) c.at(i, j) = rat(raw[i][j], 3);
    return c;
}

namespace {

// Multiset of v's entries at positions [from, 11) equals the given multiset.
bool pattern_matches(const FrameVector& v, std::size_t from,
                     std::vector<Rational> expect) {
    std::vector<Rational> got(v.begin() + (long)from, v.end());
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    return got == expect;
}

std::vector<Rational> y1_tail_multiset() {
    Angles a = witt_angles();
    std::vector<Rational> m;
    for (int i = 0; i < 6; ++i) m.push_back(a.a1);
    m.push_back(a.a2);
    for (int i = 0; i < 3; ++i) m.push_back(a.a3);
    return m;
}

} // namespace

std::vector<FrameVector> fix_C2(const SimplexFrame& f) {
    Angles ang = witt_angles();
    RatMatrix rows = mat_mul(c2_coefficients(), f.G);
    std::vector<FrameVector> c2;
    for (std::size_t i = 0; i < 10; ++i) {
        FrameVector v(11);
        for (std::size_t j = 0; j < 11; ++j) v[j] = rows.at(i, j);
        c2.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < 10; ++i) {
        if (!frame_consistent(c2[i]))
            throw std::runtime_error("fix_C2: row not in the row space of G");
        if (frame_ip(f, c2[i], c2[i]) != 1)
            throw std::runtime_error("fix_C2: row is not a unit vector");
        if (c2[i][0] != ang.a2)
            throw std::runtime_error("fix_C2: inner product with base point is not a2");
        if (!pattern_matches(c2[i], 1, y1_tail_multiset()))
            throw std::runtime_error("fix_C2: pattern against the simplex is wrong");
        for (std::size_t j = i + 1; j < 10; ++j)
            if (frame_ip(f, c2[i], c2[j]) != ang.a2)
                throw std::runtime_error("fix_C2: pair inner product is not a2");
    }
    return c2;
}

std::vector<FrameVector> enumerate_Y1(const SimplexFrame& f, EnumerationStats* stats) {
    Angles ang = witt_angles();
    std::vector<Rational> tail = y1_tail_multiset();
    std::sort(tail.begin(), tail.end());
    std::vector<FrameVector> out;
    std::size_t patterns = 0, rejected = 0;
    do {
        ++patterns;
        FrameVector v;
        v.reserve(11);
        v.push_back(ang.a2);
        v.insert(v.end(), tail.begin(), tail.end());
        if (frame_consistent(v) && frame_ip(f, v, v) == 1)
            out.push_back(std::move(v));
        else
            ++rejected;
    } while (std::next_permutation(tail.begin(), tail.end()));
    if (stats) {
        stats->pattern_count = patterns;
        stats->rejected = rejected;
    }
    return out;
}

ColoredGraph y1_graph(const SimplexFrame& f, const std::vector<FrameVector>& y1) {
    Angles ang = witt_angles();
    const std::size_t n = y1.size();
    ColoredGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (frame_ip(f, y1[i], y1[j]) == ang.a2) g.set_color(i, j, 1);
    return g;
}

ColoredGraph gram_colored_graph(const SimplexFrame& f,
                                const std::vector<FrameVector>& points) {
    Angles ang = witt_angles();
    const std::size_t n = points.size();
    ColoredGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (frame_ip(f, points[i], points[i]) != 1)
            throw std::runtime_error("gram_colored_graph: non-unit point");
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational ip = frame_ip(f, points[i], points[j]);
            int color;
            if (ip == ang.a1)
                color = 1;
            else if (ip == ang.a2)
                color = 2;
            else if (ip == ang.a3)
                color = 3;
            else {
                std::ostringstream os;
                os << "gram_colored_graph: inner product " << rat_str(ip)
                   << " of points " << i << "," << j << " outside the angle set";
                throw std::runtime_error(os.str());
            }
            g.set_color(i, j, color);
        }
    }
    return g;
}

namespace {

std::vector<FrameVector> c1_points(const SimplexFrame& f) {
    std::vector<FrameVector> pts;
    for (std::size_t i = 0; i < 11; ++i) pts.push_back(f.c1_point(i));
    return pts;
}

} // namespace

Lemma2Report lemma2_check(const SimplexFrame& f, const std::vector<FrameVector>& y1,
                          const std::vector<FrameVector>& fixed_c2,
                          const std::vector<std::vector<std::size_t>>& cliques,
                          unsigned threads) {
    Lemma2Report rep;
    rep.clique_count = cliques.size();

    std::vector<FrameVector> ref_points = c1_points(f);
    ref_points.insert(ref_points.end(), fixed_c2.begin(), fixed_c2.end());
    ColoredGraph ref_gram = gram_colored_graph(f, ref_points);
    CanonicalForm ref_canon = canonical_form(ref_gram);
    rep.reference_digest = ref_canon.digest;

    struct Item {
        bool digest_eq = false;
        bool matrix_eq = false;
        bool iso_checked = false;
        bool iso_ok = true;
    };
    auto items = parallel_map<Item>(cliques.size(), threads, [&](std::size_t idx) {
        Item it;
        std::vector<FrameVector> pts = c1_points(f);
        for (std::size_t vi : cliques[idx]) pts.push_back(y1[vi]);
        ColoredGraph gram = gram_colored_graph(f, pts);
        CanonicalForm cf = canonical_form(gram);
        it.digest_eq = cf.digest == ref_canon.digest;
        it.matrix_eq = cf.canon == ref_canon.canon;
        if (idx % 100 == 0) { // deterministic 1% sample
            it.iso_checked = true;
            it.iso_ok = find_isomorphism(gram, ref_gram).has_value();
        }
        return it;
    });

    for (std::size_t i = 0; i < items.size(); ++i) {
        const Item& it = items[i];
        if (it.digest_eq) ++rep.digests_equal;
        if (it.matrix_eq) ++rep.matrices_equal;
        if (it.iso_checked) ++rep.iso_witnesses_checked;
        if ((!it.digest_eq || !it.matrix_eq || !it.iso_ok) && rep.violation.empty()) {
            rep.first_divergence = i;
            std::ostringstream os;
            os << "clique " << i << ": "
               << (!it.matrix_eq ? "canonical matrix differs"
                                 : !it.digest_eq ? "digest differs"
                                                 : "no explicit isomorphism found");
            rep.violation = os.str();
        }
    }
    rep.ok = rep.violation.empty() && rep.digests_equal == cliques.size() &&
             rep.matrices_equal == cliques.size();
    return rep;
}

std::vector<FrameVector> enumerate_Y(const SimplexFrame& f,
                                     const std::vector<FrameVector>& fixed_c2,
                                     EnumerationStats* stats) {
    Angles ang = witt_angles();
    std::vector<Rational> entries;
    for (int i = 0; i < 6; ++i) entries.push_back(ang.a1);
    entries.push_back(ang.a2);
    entries.push_back(ang.a2);
    for (int i = 0; i < 3; ++i) entries.push_back(ang.a3);
    std::sort(entries.begin(), entries.end());
    std::vector<FrameVector> out;
    std::size_t patterns = 0, rejected = 0;
    do {
        ++patterns;
        FrameVector v(entries.begin(), entries.end());
        if (!frame_consistent(v) || frame_ip(f, v, v) != 1) {
            ++rejected;
            continue;
        }
        if (std::find(fixed_c2.begin(), fixed_c2.end(), v) != fixed_c2.end()) continue;
        out.push_back(std::move(v));
    } while (std::next_permutation(entries.begin(), entries.end()));
    if (stats) {
        stats->pattern_count = patterns;
        stats->rejected = rejected;
    }
    return out;
}

std::vector<FrameVector> filter_Z(const SimplexFrame& f,
                                  const std::vector<FrameVector>& y,
                                  const std::vector<FrameVector>& fixed_c2) {
    Angles ang = witt_angles();
    std::vector<FrameVector> z;
    for (const auto& v : y) {
        bool keep = true;
        for (const auto& c : fixed_c2)
            if (!ang.contains(frame_ip(f, v, c))) {
                keep = false;
                break;
            }
        if (keep) z.push_back(v);
    }
    return z;
}

ZSplitReport split_Z(const SimplexFrame& f, const std::vector<FrameVector>& z,
                     const std::vector<FrameVector>& fixed_c2) {
    Angles ang = witt_angles();
    ZSplitReport rep;
    const std::size_t n = z.size();

    // Compatibility graph: edge iff the inner product is an angle.
    std::vector<std::vector<bool>> compat(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (ang.contains(frame_ip(f, z[i], z[j])))
                compat[i][j] = compat[j][i] = true;

    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = ncomp;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (compat[u][v] && comp[v] < 0) {
                    comp[v] = ncomp;
                    q.push(v);
                }
        }
        ++ncomp;
    }
    if (ncomp != 2) {
        std::ostringstream os;
        os << "compatibility graph has " << ncomp << " components, expected 2";
        rep.violation = os.str();
        return rep;
    }
    // Z is in lexicographic order; component 0 contains the least member.
    for (std::size_t i = 0; i < n; ++i)
        (comp[i] == 0 ? rep.z1 : rep.z2).push_back(z[i]);
    if (rep.z1.size() != 45 || rep.z2.size() != 45) {
        std::ostringstream os;
        os << "component sizes (" << rep.z1.size() << "," << rep.z2.size()
           << "), expected (45,45)";
        rep.violation = os.str();
        return rep;
    }
    // Each component must be a clique: every internal pair compatible.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (comp[i] == comp[j] && !compat[i][j]) {
                std::ostringstream os;
                os << "members " << i << "," << j
                   << " share a component but their inner product is not an angle";
                rep.violation = os.str();
                return rep;
            }
            if (comp[i] != comp[j] && compat[i][j]) {
                std::ostringstream os;
                os << "cross pair " << i << "," << j << " has an angle inner product";
                rep.violation = os.str();
                return rep;
            }
        }

    // The two completed 66-point Grams must be equivalent.
    auto complete = [&](const std::vector<FrameVector>& part) {
        std::vector<FrameVector> pts = c1_points(f);
        pts.insert(pts.end(), fixed_c2.begin(), fixed_c2.end());
        pts.insert(pts.end(), part.begin(), part.end());
        return gram_colored_graph(f, pts);
    };
    CanonicalForm cf1 = canonical_form(complete(rep.z1));
    CanonicalForm cf2 = canonical_form(complete(rep.z2));
    rep.digest1 = cf1.digest;
    rep.digest2 = cf2.digest;
    if (cf1.canon != cf2.canon || cf1.digest != cf2.digest) {
        rep.violation = "the two 66-point Grams are not permutation equivalent";
        return rep;
    }
    rep.ok = true;
    return rep;
}

FinalCheckReport final_scheme_check(const SimplexFrame& f,
                                    const std::vector<FrameVector>& fixed_c2,
                                    const std::vector<FrameVector>& z1) {
    FinalCheckReport rep;
    std::vector<FrameVector> pts = c1_points(f);
    pts.insert(pts.end(), fixed_c2.begin(), fixed_c2.end());
    pts.insert(pts.end(), z1.begin(), z1.end());
    if (pts.size() != 66) {
        rep.violation = "configuration does not have 66 points";
        return rep;
    }
    ColoredGraph gram;
    try {
        gram = gram_colored_graph(f, pts);
    } catch (const std::exception& e) {
        rep.violation = e.what();
        return rep;
    }
    rep.scheme.n = 66;
    rep.scheme.d = 3;
    rep.scheme.rel.assign(66 * 66, 0);
    for (std::size_t i = 0; i < 66; ++i)
        for (std::size_t j = 0; j < 66; ++j)
            if (i != j) rep.scheme.cls(i, j) = (std::uint8_t)gram.color(i, j);
    auto axioms = verify_scheme_axioms(rep.scheme);
    if (!axioms.ok) {
        std::ostringstream os;
        os << "axiom failure at classes (" << axioms.wi << "," << axioms.wj
           << ") pair (" << axioms.wx << "," << axioms.wy << ")";
        rep.violation = os.str();
        return rep;
    }
    rep.p = axioms.p;
    rep.tensor_matches = rep.p == known_witt_p_tensor();
    if (!rep.tensor_matches) {
        rep.violation = "intersection numbers differ from the published tables";
        return rep;
    }
    rep.ok = true;
    return rep;
}

} // namespace witt
