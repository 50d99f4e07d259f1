#include "witt/design.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace witt {

bool BlockDesign::well_formed() const {
    for (const auto& b : blocks) {
        if (b.size() != k) return false;
        if (!std::is_sorted(b.begin(), b.end())) return false;
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
        if (!b.empty() && b.back() >= v) return false;
    }
    if (!std::is_sorted(blocks.begin(), blocks.end())) return false;
    return std::adjacent_find(blocks.begin(), blocks.end()) == blocks.end();
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    if (m > n) return out;
    std::vector<std::size_t> cur(m);
    for (std::size_t i = 0; i < m; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        // Advance to the next combination in lexicographic order.
        std::size_t i = m;
        while (i > 0 && cur[i - 1] == n - m + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

TDesignReport verify_t_design(const BlockDesign& d, std::size_t t) {
    if (t < 1 || t > d.k) throw std::invalid_argument("verify_t_design: need 1 <= t <= k");
    TDesignReport rep;
    auto tsets = subsets_lex(d.v, t);
    std::vector<std::size_t> counts(tsets.size(), 0);
    // Index t-subsets for direct lookup.
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < tsets.size(); ++i) index[tsets[i]] = i;
    for (const auto& b : d.blocks) {
        for (const auto& sub : subsets_lex(b.size(), t)) {
            std::vector<std::size_t> pts(t);
            for (std::size_t i = 0; i < t; ++i) pts[i] = b[sub[i]];
            ++counts[index.at(pts)];
        }
    }
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i] != counts[0]) {
            rep.ok = false;
            rep.witness_subset = tsets[i];
            rep.count_a = counts[0];
            rep.count_b = counts[i];
            return rep;
        }
    }
    rep.ok = true;
    rep.lambda = counts.empty() ? 0 : counts[0];
    return rep;
}

ExactCoverInstance build_witt_instance() {
    ExactCoverInstance inst;
    auto quads = subsets_lex(11, 4);
    inst.columns = quads.size(); // 330
    std::map<std::vector<std::size_t>, std::size_t> quad_index;
    for (std::size_t i = 0; i < quads.size(); ++i) quad_index[quads[i]] = i;
    for (const auto& block : subsets_lex(11, 5)) {
        std::vector<std::size_t> row;
        for (const auto& sub : subsets_lex(5, 4)) {
            std::vector<std::size_t> quad(4);
            for (std::size_t i = 0; i < 4; ++i) quad[i] = block[sub[i]];
            row.push_back(quad_index.at(quad));
        }
        std::sort(row.begin(), row.end());
        inst.rows.push_back(std::move(row));
    }
    return inst;
}

BlockDesign design_from_witt_solution(const std::vector<std::size_t>& solution_rows) {
    auto fives = subsets_lex(11, 5);
    BlockDesign d;
    d.v = 11;
    d.k = 5;
    for (std::size_t r : solution_rows) d.blocks.push_back(fives.at(r));
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

std::map<std::size_t, std::size_t> block_intersection_profile(const BlockDesign& d) {
    std::map<std::size_t, std::size_t> profile;
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
        for (std::size_t j = 0; j < d.blocks.size(); ++j) {
            if (i == j) continue;
            std::vector<std::size_t> common;
            std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(),
                                  d.blocks[j].begin(), d.blocks[j].end(),
                                  std::back_inserter(common));
            ++profile[common.size()];
        }
    return profile;
}

std::string design_to_text(const BlockDesign& d) {
    std::ostringstream os;
    os << "v=" << d.v << " k=" << d.k << " b=" << d.blocks.size() << '\n';
    for (const auto& b : d.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) os << ',';
            os << b[i] + 1; // 1-based on disk
        }
        os << '\n';
    }
    return os.str();
}

BlockDesign design_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw std::invalid_argument("design file: empty");
    BlockDesign d;
    std::size_t b = 0;
    if (sscanf(header.c_str(), "v=%zu k=%zu b=%zu", &d.v, &d.k, &b) != 3)
        throw std::invalid_argument("design file: bad header");
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::size_t> block;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) block.push_back(std::stoul(tok) - 1);
        d.blocks.push_back(std::move(block));
    }
    if (d.blocks.size() != b) throw std::invalid_argument("design file: block count mismatch");
    if (!d.well_formed()) throw std::invalid_argument("design file: malformed design");
    return d;
}

} // namespace witt
