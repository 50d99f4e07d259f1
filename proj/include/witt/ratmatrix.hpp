#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

// Dense row-major matrix of exact rationals. Treated as immutable once built;
// all operations return fresh matrices.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    // Builds from integer literals, row-major.
    static RatMatrix from_ints(std::size_t rows, std::size_t cols,
                               const std::vector<long>& vals);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    bool operator==(const RatMatrix& o) const = default;

    RatMatrix transpose() const;
    RatMatrix scale(const Rational& s) const;
    bool is_symmetric() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);

// Exact inverse via fraction-free (Bareiss) elimination on the
// denominator-cleared augmented system. Throws SingularMatrixError.
RatMatrix mat_inverse(const RatMatrix& a);

// Rank by fraction-free elimination with deterministic pivoting.
std::size_t mat_rank(const RatMatrix& a);

// Monic characteristic polynomial, coefficients low-to-high degree
// (result.size() == a.rows()+1, result.back() == 1). Faddeev-LeVerrier.
std::vector<Rational> char_poly(const RatMatrix& a);

struct IntegerRoots {
    std::vector<std::pair<Integer, std::size_t>> roots; // (root, multiplicity)
    std::vector<Integer> remainder; // non-factored part, low-to-high; {1} when fully split
};

// All integer roots of a monic integer polynomial (coefficients low-to-high),
// by divisor testing of the constant term plus deflation.
IntegerRoots integer_roots(const std::vector<Integer>& poly);

// Exact Horner evaluation.
Rational poly_eval(const std::vector<Rational>& poly, const Rational& x);
Integer poly_eval(const std::vector<Integer>& poly, const Integer& x);

} // namespace witt
