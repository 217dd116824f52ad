#pragma once

#include <map>
#include <vector>

#include "symring/matrix.hpp"
#include "symring/partition.hpp"

namespace symring {

// A permutation of {0..n-1} in one-line notation.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(i) = a[b[i]]
int perm_sign(const Perm& p);

// Element of the group algebra of S_n over the rationals.
struct GroupAlgebraElement {
    int n = 0;
    std::map<Perm, Rat> terms;

    explicit GroupAlgebraElement(int n_ = 0) : n(n_) {}
    bool operator==(const GroupAlgebraElement& o) const;
};

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_scale(const Rat& c, const GroupAlgebraElement& a);

// Row symmetrizer and column antisymmetrizer of the row-major canonical
// filling of lambda, each normalized to an idempotent. Guard: |lambda| <= 5.
std::pair<GroupAlgebraElement, GroupAlgebraElement> row_column_symmetrizers(
    const Partition& lam);

// The normalized Young symmetrizer: the unique idempotent multiple of
// pA * pS. Guard: |lambda| <= 5.
GroupAlgebraElement young_symmetrizer(const Partition& lam);

// Matrix of a acting on the n-th tensor power of a d-dimensional space by
// place permutation. Guard: d^n <= 10^4.
ExactMatrix action_matrix(const GroupAlgebraElement& a, int d);

// rank of action_matrix(young_symmetrizer(lambda), d); the dimension of the
// Schur functor's value on a d-dimensional space.
int schur_image_dim(const Partition& lam, int d);

// Cycle type of a permutation, as a partition.
Partition cycle_type(const Perm& p);

}  // namespace symring
