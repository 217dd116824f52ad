#pragma once

#include "symring/birig.hpp"
#include "symring/symfunc.hpp"

namespace symring {

// Substitution product f o g: expand f in the p basis and substitute
// p_n -> (g with every p_k replaced by p_{nk}). Constants in g pass through
// each substitution unchanged.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// Adams operation: p_k -> p_{nk}; equals plethysm(p_n, f).
SymFunc adams(int n, const SymFunc& f);

// Left plethysm action of Lambda on Lambda (x) Lambda, with p_n acting as
// the diagonal Adams operation on both tensor slots. Used by the
// co-operation compatibility checks.
TensorElem tensor_plethysm(const SymFunc& f, const TensorElem& g);

// Independent brute force: evaluate f at the multiset of monomials of g in
// N variables. Requires g monomial-positive over N variables (nonnegative
// integer expansion); otherwise throws domain_error.
Poly plethysm_oracle(const SymFunc& f, const SymFunc& g, int N);

// Check associativity, the two-sided unit s_(1), the left ring-map laws and
// compatibility with the co-operations, over Schur generators of degree
// <= max_degree with composite degree <= max_degree^2.
VerifyReport verify_plethory(int max_degree, bool parallel = true);

}  // namespace symring
