#pragma once

#include <vector>

#include "symring/partition.hpp"

namespace symring {

// Exact character table of S_n. Rows are irreducibles, columns cycle types,
// both in canonical (reverse-lexicographic) order over partitions of n.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> classes;            // cycle types, canonical order
    std::vector<long long> z;                  // centralizer orders per class
    std::vector<std::vector<long long>> chi;   // chi[row][col]

    int index(const Partition& lam) const;     // position in `classes`
    long long value(const Partition& lam, const Partition& mu) const;
};

// Cached immutable table; safe for concurrent first access.
// Throws cap_error if n exceeds the configured degree cap.
const CharacterTable& char_table(int n);

// sign(mu) = (-1)^(n - length(mu)) for a cycle type mu of S_n.
int cycle_sign(const Partition& mu);

// The partition nu with chi^nu = chi^lam * sign; equals conjugate(lam),
// found here by matching the sign-twisted row against the table.
Partition tensor_with_sign(const Partition& lam);

// Kronecker coefficient g(lam, mu, nu) = sum_rho chi^lam chi^mu chi^nu / z.
// Throws domain_error unless |lam| = |mu| = |nu|.
long long kronecker_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

}  // namespace symring
