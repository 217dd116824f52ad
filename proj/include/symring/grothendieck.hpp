#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "symring/matrix.hpp"
#include "symring/symfunc.hpp"

namespace symring {

// An element of the positive cone Lambda_+: Schur-basis multiplicities.
struct PosElement {
    std::map<Partition, long long> terms;  // values >= 1 when stored

    bool operator==(const PosElement& o) const { return terms == o.terms; }
    bool empty() const { return terms.empty(); }
};

// Embed into Lambda (s basis).
SymFunc embed(const PosElement& p);

// True iff f has an all-nonnegative-integer Schur expansion; then the
// witness multiplicities are returned.
std::optional<PosElement> is_schur_positive(const SymFunc& f);

// Unique decomposition f = f_plus - f_minus with disjoint supports in the
// s basis. Throws domain_error on non-integer coefficients.
std::pair<PosElement, PosElement> split_pos_neg(const SymFunc& f);

// Co-negation via the sign rule: sum over terms (lam : m) of
// (-1)^|lam| * m * s_{tensor_with_sign(lam)}. Independent of the p-basis
// antipode; the two must agree.
SymFunc conegation_sign_rule(const PosElement& rho);

// Z2-graded two-term complex of Schur objects in multiplicity-matrix form.
// Per partition: multiplicities (m0, m1) with differentials D0 : C0 -> C1
// (an m1 x m0 matrix) and D1 : C1 -> C0 (m0 x m1), satisfying
// D1 D0 = 0 and D0 D1 = 0.
struct TwoTermComplex {
    struct Piece {
        int m0 = 0;
        int m1 = 0;
        ExactMatrix d0;  // m1 x m0
        ExactMatrix d1;  // m0 x m1
    };
    std::map<Partition, Piece> pieces;
};

// Throws domain_error if dimensions or the graded conditions fail.
void validate(const TwoTermComplex& c);

// (H0, H1) multiplicities: per lambda, h0 = m0 - rank(D0) - rank(D1),
// h1 = m1 - rank(D0) - rank(D1).
std::pair<PosElement, PosElement> homology(const TwoTermComplex& c);

// [C0] - [C1] in the s basis.
SymFunc euler_char(const TwoTermComplex& c);

// The mapping cone of the identity on the generator: m0 = m1 = 1 at (1),
// D0 = [1], D1 = [0].
TwoTermComplex mapping_cone_Mx();

// A random valid complex: D1 is built from null-space bases of D0, so the
// graded conditions hold by construction.
TwoTermComplex random_two_term_complex(std::mt19937& rng);

// JSON wire format: list of {"partition":[...],"m0":k,"m1":l,
// "D0":[["a/b",...],...],"D1":[[...]]}.
std::string complex_to_json(const TwoTermComplex& c);
TwoTermComplex complex_from_json(const std::string& text);

}  // namespace symring
