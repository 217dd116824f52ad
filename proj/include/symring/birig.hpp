#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symring/symfunc.hpp"

namespace symring {

// An element of Lambda (x) Lambda: sparse map from pairs of partitions to
// exact rational coefficients, with a basis tag per tensor slot.
struct TensorElem {
    Basis left = Basis::p;
    Basis right = Basis::p;
    std::map<std::pair<Partition, Partition>, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    Rat coeff(const Partition& a, const Partition& b) const;
    bool operator==(const TensorElem& o) const;
};

void normalize(TensorElem& t);

// Change of basis applied independently in each slot.
TensorElem tensor_to_basis(const TensorElem& t, Basis left, Basis right);

TensorElem tensor_add(const TensorElem& a, const TensorElem& b);
TensorElem tensor_scale(const Rat& c, const TensorElem& a);
// Componentwise product (p (x) p basis internally).
TensorElem tensor_mul(const TensorElem& a, const TensorElem& b);

// "s[2] # s[1] + ..." rendering in canonical order.
std::string to_string(const TensorElem& t);

// The four co-operations and the antipode, defined on power-sum generators
// and extended as ring maps. Results are in the p (x) p basis (convert with
// tensor_to_basis for display).
TensorElem coaddition(const SymFunc& f);        // p_n -> p_n (x) 1 + 1 (x) p_n
TensorElem comultiplication(const SymFunc& f);  // p_n -> p_n (x) p_n
Rat co_zero(const SymFunc& f);                  // p_n -> 0
Rat co_one(const SymFunc& f);                   // p_n -> 1
SymFunc antipode(const SymFunc& f);             // p_n -> -p_n

struct LawResult {
    std::string name;
    bool pass = true;
    std::string counterexample;  // empty when pass
};

struct VerifyReport {
    std::vector<LawResult> laws;
    bool all_pass() const;
    std::string render() const;  // one PASS/FAIL line per law
};

// Check the dualized ring axioms and the co-negation pentagon exactly on
// every Schur generator of degree <= max_degree.
VerifyReport verify_birig_axioms(int max_degree, bool parallel = true);

}  // namespace symring
