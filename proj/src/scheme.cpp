#include "witt/scheme.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace witt {

bool AssociationScheme::well_formed() const {
    if (rel.size() != n * n) return false;
    std::vector<bool> seen(d + 1, false);
    for (std::size_t x = 0; x < n; ++x) {
        if (cls(x, x) != 0) return false;
        for (std::size_t y = 0; y < n; ++y) {
            if (cls(x, y) != cls(y, x)) return false;
            if (cls(x, y) > d) return false;
            if (x != y && cls(x, y) == 0) return false;
            seen[cls(x, y)] = true;
        }
    }
    for (std::size_t i = 0; i <= d; ++i)
        if (!seen[i]) return false;
    return true;
}

RatMatrix PTensor::intersection_matrix(std::size_t i) const {
    RatMatrix L(d + 1, d + 1);
    for (std::size_t k = 0; k <= d; ++k)
        for (std::size_t j = 0; j <= d; ++j)
            L.at(k, j) = Rational((unsigned long)at(i, j, k));
    return L;
}

AssociationScheme scheme_from_design(const BlockDesign& d) {
    if (d.v != 11 || d.k != 5 || d.blocks.size() != 66)
        throw std::invalid_argument("scheme_from_design: expects the 4-(11,5,1) design");
    AssociationScheme s;
    s.n = 66;
    s.d = 3;
    s.rel.assign(s.n * s.n, 0);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = i + 1; j < s.n; ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(),
                                  d.blocks[j].begin(), d.blocks[j].end(),
                                  std::back_inserter(common));
            if (common.size() < 1 || common.size() > 3) {
                std::ostringstream os;
                os << "scheme_from_design: blocks " << i << "," << j
                   << " intersect in " << common.size() << " points";
                throw std::invalid_argument(os.str());
            }
            s.cls(i, j) = s.cls(j, i) = (std::uint8_t)(4 - common.size());
        }
    return s;
}

AxiomCheckResult verify_scheme_axioms(const AssociationScheme& s) {
    AxiomCheckResult res;
    const std::size_t d = s.d, n = s.n, dim = d + 1;
    res.p.d = d;
    res.p.data.assign(dim * dim * dim, 0);
    std::vector<bool> have(dim * dim * dim, false);
    std::vector<std::size_t> counts(dim * dim);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t z = 0; z < n; ++z)
                ++counts[s.cls(x, z) * dim + s.cls(z, y)];
            const std::size_t k = s.cls(x, y);
            for (std::size_t i = 0; i <= d; ++i)
                for (std::size_t j = 0; j <= d; ++j) {
                    const std::size_t slot = (i * dim + j) * dim + k;
                    if (!have[slot]) {
                        have[slot] = true;
                        res.p.data[slot] = counts[i * dim + j];
                    } else if (res.p.data[slot] != counts[i * dim + j]) {
                        res.ok = false;
                        res.wi = i;
                        res.wj = j;
                        res.wx = x;
                        res.wy = y;
                        return res;
                    }
                }
        }
    res.ok = true;
    return res;
}

Eigenmatrices eigenmatrices(const PTensor& p, std::size_t n) {
    const std::size_t d = p.d, dim = d + 1;
    RatMatrix L1 = p.intersection_matrix(1);
    auto cp = char_poly(L1);
    std::vector<Integer> icp(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i) {
        if (cp[i].get_den() != 1)
            throw std::runtime_error("eigenmatrices: non-integral characteristic polynomial");
        icp[i] = cp[i].get_num();
    }
    auto roots = integer_roots(icp);
    if (roots.remainder != std::vector<Integer>{Integer(1)})
        throw std::runtime_error("eigenmatrices: L1 has non-integer eigenvalues");
    std::vector<Integer> eigs;
    for (const auto& [r, m] : roots.roots) {
        if (m != 1) throw std::runtime_error("eigenmatrices: L1 eigenvalue not simple");
        eigs.push_back(r);
    }
    std::sort(eigs.rbegin(), eigs.rend()); // descending, valency first

    // For each eigenvalue theta, the left eigenvector of L1 normalized to
    // leading entry 1 is the corresponding row of P.
    RatMatrix P(dim, dim);
    for (std::size_t r = 0; r < eigs.size(); ++r) {
        // Solve u^T (L1 - theta I) = 0 with u[0] = 1, i.e. (L1^T - theta I) u = 0.
        RatMatrix M = L1.transpose();
        for (std::size_t i = 0; i < dim; ++i) M.at(i, i) -= Rational(eigs[r]);
        // Substitute u[0]=1 and solve the remaining (dim) x (dim-1) system by
        // least structure: pick dim-1 independent equations via elimination.
        // Build augmented system A * u[1..] = -col0.
        RatMatrix A(dim, dim - 1);
        RatVector rhs(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            rhs[i] = -M.at(i, 0);
            for (std::size_t j = 1; j < dim; ++j) A.at(i, j - 1) = M.at(i, j);
        }
        // Gaussian elimination with deterministic pivoting on the
        // overdetermined system; the eigenspace is 1-dimensional so it is
        // consistent with a unique solution.
        std::vector<RatVector> aug(dim, RatVector(dim, Rational(0)));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j + 1 < dim; ++j) aug[i][j] = A.at(i, j);
            aug[i][dim - 1] = rhs[i];
        }
        std::size_t row = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t c = 0; c + 1 < dim && row < dim; ++c) {
            std::size_t pr = row;
            while (pr < dim && aug[pr][c] == 0) ++pr;
            if (pr == dim) continue;
            std::swap(aug[pr], aug[row]);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i == row || aug[i][c] == 0) continue;
                Rational f = aug[i][c] / aug[row][c];
                for (std::size_t j = c; j < dim; ++j) aug[i][j] -= f * aug[row][j];
            }
            pivot_col.push_back(c);
            ++row;
        }
        if (pivot_col.size() != dim - 1)
            throw std::runtime_error("eigenmatrices: eigenspace not 1-dimensional");
        P.at(r, 0) = 1;
        for (std::size_t t = 0; t < pivot_col.size(); ++t)
            P.at(r, pivot_col[t] + 1) = aug[t][dim - 1] / aug[t][pivot_col[t]];
    }

    Eigenmatrices out;
    out.P = P;
    out.Q = mat_inverse(P).scale(Rational((unsigned long)n));
    for (std::size_t j = 0; j < dim; ++j) out.multiplicities.push_back(out.Q.at(0, j));
    return out;
}

QTensor krein_parameters(const RatMatrix& P, const RatMatrix& Q,
                         const std::vector<Rational>& valencies,
                         const std::vector<Rational>& multiplicities, std::size_t n) {
    const std::size_t dim = P.rows();
    if (mat_mul(P, Q) != RatMatrix::identity(dim).scale(Rational((unsigned long)n)))
        throw std::invalid_argument("krein_parameters: P*Q != n*I");
    QTensor q;
    q.d = dim - 1;
    q.data.assign(dim * dim * dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Rational acc(0);
                for (std::size_t l = 0; l < dim; ++l)
                    acc += P.at(i, l) * P.at(j, l) * P.at(k, l) /
                           (valencies[l] * valencies[l]);
                q.at(i, j, k) =
                    multiplicities[i] * multiplicities[j] * acc / Rational((unsigned long)n);
            }
    return q;
}

bool q_polynomial_pattern(const QTensor& q) {
    for (std::size_t j = 1; j <= q.d; ++j)
        for (std::size_t k = 1; k <= q.d; ++k) {
            std::size_t gap = j > k ? j - k : k - j;
            if (gap > 1 && q.at(1, j, k) != 0) return false;
            if (gap == 1 && q.at(1, j, k) == 0) return false;
        }
    return true;
}

bool krein_nonnegative(const QTensor& q) {
    for (const auto& v : q.data)
        if (v < 0) return false;
    return true;
}

std::vector<Rational> angle_set(const RatMatrix& Q) {
    std::vector<Rational> angles;
    for (std::size_t j = 1; j < Q.rows(); ++j) angles.push_back(Q.at(j, 1) / Q.at(0, 1));
    return angles;
}

RatMatrix known_witt_L(std::size_t i) {
    switch (i) {
        case 1:
            return RatMatrix::from_ints(4, 4,
                                        {0, 30, 0, 0,   //
                                         1, 15, 10, 4,  //
                                         0, 15, 6, 9,   //
                                         0, 8, 12, 10});
        case 2:
            return RatMatrix::from_ints(4, 4,
                                        {0, 0, 20, 0,  //
                                         0, 10, 4, 6,  //
                                         1, 6, 10, 3,  //
                                         0, 12, 4, 4});
        case 3:
            return RatMatrix::from_ints(4, 4,
                                        {0, 0, 0, 15,  //
                                         0, 4, 6, 5,   //
                                         0, 9, 3, 3,   //
                                         1, 10, 4, 0});
        default:
            throw std::invalid_argument("known_witt_L: i must be 1..3");
    }
}

PTensor known_witt_p_tensor() {
    PTensor p;
    p.d = 3;
    p.data.assign(64, 0);
    // p[0][j][k] = delta_{jk}; p[i][0][k] = delta_{ik}.
    for (std::size_t j = 0; j <= 3; ++j) {
        p.at(0, j, j) = 1;
        p.at(j, 0, j) = 1;
    }
    p.at(0, 0, 0) = 1;
    for (std::size_t i = 1; i <= 3; ++i) {
        RatMatrix L = known_witt_L(i);
        for (std::size_t k = 0; k <= 3; ++k)
            for (std::size_t j = 0; j <= 3; ++j)
                p.at(i, j, k) = (std::size_t)L.at(k, j).get_num().get_ui();
    }
    return p;
}

RatMatrix known_witt_P() {
    return RatMatrix::from_ints(4, 4,
                                {1, 30, 20, 15,  //
                                 1, 8, -2, -7,   //
                                 1, -1, -2, 2,   //
                                 1, -6, 8, -3});
}

RatMatrix known_witt_Q() {
    RatMatrix Q(4, 4);
    const char* vals[16] = {"1", "10", "44",     "11",     //
                            "1", "8/3", "-22/15", "-11/5",  //
                            "1", "-1", "-22/5",  "22/5",   //
                            "1", "-14/3", "88/15", "-11/5"};
    for (std::size_t i = 0; i < 16; ++i) Q.at(i / 4, i % 4) = rat_parse(vals[i]);
    return Q;
}

} // namespace witt
