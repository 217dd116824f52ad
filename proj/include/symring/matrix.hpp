#pragma once

#include <vector>

#include "symring/rational.hpp"

namespace symring {

// Dense matrix over exact rationals.
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> data;  // row-major

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    Rat& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    bool is_zero() const;
    bool operator==(const ExactMatrix& o) const = default;

    static ExactMatrix identity(int n);
};

ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b);
Rat trace(const ExactMatrix& a);

// Rank via fraction-free (Bareiss) elimination on the denominator-cleared
// integer matrix.
int rank(const ExactMatrix& a);

// Basis of the right null space {v : A v = 0}, returned as the columns of an
// (cols x nullity) matrix.
ExactMatrix nullspace(const ExactMatrix& a);

// Basis of the left null space {u : u^T A = 0}, as rows of a (nullity x rows)
// matrix.
ExactMatrix left_nullspace(const ExactMatrix& a);

// Inverse of a square nonsingular matrix; throws domain_error if singular.
ExactMatrix inverse(const ExactMatrix& a);

}  // namespace symring
