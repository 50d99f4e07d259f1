#include "witt/ratmatrix.hpp"

#include <sstream>

namespace witt {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionError("entry count does not match rows*cols");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_ints(std::size_t rows, std::size_t cols,
                               const std::vector<long>& vals) {
    if (vals.size() != rows * cols)
        throw DimensionError("literal count does not match rows*cols");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < vals.size(); ++i)
        m.entries_[i] = Rational(vals[i]);
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::scale(const Rational& s) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] * s;
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << rat_str(at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: inner dimensions differ");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("mat_add: shape mismatch");
    RatMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

namespace {

// Clears denominators row by row: returns integer matrix B with B = D*A,
// D = diag(row lcms), and the lcms themselves.
void clear_denominators(const RatMatrix& a, std::size_t extra_cols,
                        std::vector<std::vector<Integer>>& b,
                        std::vector<Integer>& row_scale) {
    const std::size_t n = a.rows(), m = a.cols();
    b.assign(n, std::vector<Integer>(m + extra_cols, Integer(0)));
    row_scale.assign(n, Integer(1));
    for (std::size_t i = 0; i < n; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < m; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den_mpz_t());
        row_scale[i] = l;
        for (std::size_t j = 0; j < m; ++j) {
            Rational v = a.at(i, j) * Rational(l);
            v.canonicalize();
            b[i][j] = v.get_num();
        }
    }
}

// Fraction-free (Bareiss) forward elimination in place. Pivot choice is the
// first row with a nonzero entry in the current column. Returns pivot column
// per elimination step; rows beyond `rank` are zero in the leading cols.
std::size_t bareiss_forward(std::vector<std::vector<Integer>>& m, std::size_t ncols_main) {
    const std::size_t nrows = m.size();
    const std::size_t ncols = m.empty() ? 0 : m[0].size();
    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols_main && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && m[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

} // namespace

RatMatrix mat_inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("mat_inverse: matrix not square");
    const std::size_t n = a.rows();
    std::vector<std::vector<Integer>> m;
    std::vector<Integer> scale;
    clear_denominators(a, n, m, scale);
    // Augment with D so that solving B X = D gives X = A^{-1}.
    for (std::size_t i = 0; i < n; ++i) m[i][n + i] = scale[i];

    std::size_t rank = bareiss_forward(m, n);
    if (rank < n) throw SingularMatrixError("mat_inverse: singular matrix");
    for (std::size_t i = 0; i < n; ++i)
        if (m[i][i] == 0) throw SingularMatrixError("mat_inverse: singular matrix");

    // Rational back-substitution on the triangularized augmented system.
    RatMatrix inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc(m[ii][n + col]);
            for (std::size_t j = ii + 1; j < n; ++j)
                acc -= Rational(m[ii][j]) * inv.at(j, col);
            acc /= Rational(m[ii][ii]);
            inv.at(ii, col) = acc;
        }
    }
    return inv;
}

std::size_t mat_rank(const RatMatrix& a) {
    std::vector<std::vector<Integer>> m;
    std::vector<Integer> scale;
    clear_denominators(a, 0, m, scale);
    return bareiss_forward(m, a.cols());
}

std::vector<Rational> char_poly(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("char_poly: matrix not square");
    const std::size_t n = a.rows();
    // Faddeev-LeVerrier: exact with rational arithmetic.
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RatMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            RatMatrix shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += coeffs[n - k + 1];
            m = mat_mul(a, shifted);
        }
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
        coeffs[n - k] = -tr / Rational((long)k);
    }
    return coeffs;
}

Rational poly_eval(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

Integer poly_eval(const std::vector<Integer>& poly, const Integer& x) {
    Integer acc(0);
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

namespace {

// Synthetic division by (x - r); requires r to be a root.
std::vector<Integer> deflate(const std::vector<Integer>& poly, const Integer& r) {
    std::vector<Integer> q(poly.size() - 1, Integer(0));
    Integer carry(0);
    for (std::size_t i = poly.size(); i-- > 1;) {
        carry = poly[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

} // namespace

IntegerRoots integer_roots(const std::vector<Integer>& poly) {
    if (poly.empty() || poly.back() != 1)
        throw std::invalid_argument("integer_roots: polynomial must be monic");
    IntegerRoots out;
    std::vector<Integer> p = poly;
    auto record = [&](const Integer& r) {
        if (!out.roots.empty() && out.roots.back().first == r)
            ++out.roots.back().second;
        else
            out.roots.push_back({r, 1});
    };
    while (p.size() > 1) {
        if (p[0] == 0) {
            record(Integer(0));
            p.erase(p.begin());
            continue;
        }
        Integer c = abs(p[0]);
        bool found = false;
        // Candidate roots divide the constant term.
        for (Integer d(1); d * d <= c && !found; ++d) {
            if (c % d != 0) continue;
            for (const Integer& base : {Integer(d), Integer(c / d)}) {
                for (int sign : {1, -1}) {
                    Integer r = base * sign;
                    if (poly_eval(p, r) == 0) {
                        record(r);
                        p = deflate(p, r);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) break;
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Merge any split multiplicities after sorting.
    std::vector<std::pair<Integer, std::size_t>> merged;
    for (auto& rm : out.roots) {
        if (!merged.empty() && merged.back().first == rm.first)
            merged.back().second += rm.second;
        else
            merged.push_back(rm);
    }
    out.roots = std::move(merged);
    out.remainder = std::move(p);
    return out;
}

} // namespace witt
