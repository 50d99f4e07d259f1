#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "witt/design.hpp"
#include "witt/ratmatrix.hpp"

namespace witt {

// Symmetric association scheme given by its relation-index matrix.
struct AssociationScheme {
    std::size_t n = 0; // vertices
    std::size_t d = 0; // classes (excluding identity relation 0)
    std::vector<std::uint8_t> rel; // n*n, row-major, rel[x][y] in {0..d}

    std::uint8_t cls(std::size_t x, std::size_t y) const { return rel[x * n + y]; }
    std::uint8_t& cls(std::size_t x, std::size_t y) { return rel[x * n + y]; }
    bool well_formed() const;
};

// Intersection-number tensor p[i][j][k], all indices 0..d.
struct PTensor {
    std::size_t d = 0;
    std::vector<std::size_t> data; // (d+1)^3

    std::size_t& at(std::size_t i, std::size_t j, std::size_t k) {
        return data[(i * (d + 1) + j) * (d + 1) + k];
    }
    std::size_t at(std::size_t i, std::size_t j, std::size_t k) const {
        return data[(i * (d + 1) + j) * (d + 1) + k];
    }
    // The matrix L_i with (L_i)_{kj} = p[i][j][k].
    RatMatrix intersection_matrix(std::size_t i) const;
    bool operator==(const PTensor&) const = default;
};

struct AxiomCheckResult {
    bool ok = false;
    PTensor p;
    // First witness of non-constancy, when !ok.
    std::size_t wi = 0, wj = 0, wx = 0, wy = 0;
};

struct QTensor {
    std::size_t d = 0;
    std::vector<Rational> data;
    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return data[(i * (d + 1) + j) * (d + 1) + k];
    }
    const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data[(i * (d + 1) + j) * (d + 1) + k];
    }
};

struct Eigenmatrices {
    RatMatrix P; // rows ordered by descending eigenvalue of L_1
    RatMatrix Q; // n * P^{-1}
    std::vector<Rational> multiplicities; // Q row 0
};

// rel[B][B'] = 4 - |B ∩ B'| for distinct blocks of the 4-(11,5,1) design.
// Throws std::invalid_argument on an intersection size outside {1,2,3}.
AssociationScheme scheme_from_design(const BlockDesign& d);

// Verifies constancy of the triple counts and returns the full p-tensor.
AxiomCheckResult verify_scheme_axioms(const AssociationScheme& s);

// Eigenmatrices from the p-tensor: eigenvalues of L_1 (must be simple
// integers) and the common left eigenvectors normalized to leading entry 1.
Eigenmatrices eigenmatrices(const PTensor& p, std::size_t n);

// q[i][j][k] = (m_i m_j / n) * sum_l P[i][l] P[j][l] P[k][l] / k_l^2.
QTensor krein_parameters(const RatMatrix& P, const RatMatrix& Q,
                         const std::vector<Rational>& valencies,
                         const std::vector<Rational>& multiplicities, std::size_t n);

// True iff q[1][j][k] = 0 for |j-k| > 1 and != 0 for |j-k| = 1, indices 1..d.
bool q_polynomial_pattern(const QTensor& q);
bool krein_nonnegative(const QTensor& q);

// (Q[1][1]/Q[0][1], ..., Q[d][1]/Q[0][1]) in class order.
std::vector<Rational> angle_set(const RatMatrix& Q);

// Published parameters of the 3-class scheme on the 66 blocks: intersection
// matrices L_1..L_3 and eigenmatrices, used as the comparison targets.
PTensor known_witt_p_tensor();
RatMatrix known_witt_L(std::size_t i);
RatMatrix known_witt_P();
RatMatrix known_witt_Q();

} // namespace witt
