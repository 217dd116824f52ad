#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symring/rational.hpp"

namespace symring {

// A Young diagram: weakly decreasing sequence of positive integers.
// The empty sequence is the unique partition of 0.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;                          // number of boxes
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
};

// Canonical order: ascending degree, then reverse-lexicographic within a
// degree, so (n) comes first and (1^n) last. Used for all term ordering.
bool operator<(const Partition& a, const Partition& b);

// All partitions of n in reverse-lexicographic order; length is p(n).
std::vector<Partition> partitions_of(int n);

// Partition count p(n) via the pentagonal-number recurrence. Independent of
// partitions_of; test oracle.
Int partition_count(int n);

// Transpose diagram.
Partition conjugate(const Partition& lam);

// One (hook length, content) pair per cell, row-major. content = col - row.
std::vector<std::pair<int, int>> hooks_and_contents(const Partition& lam);

// Concatenate and re-sort parts (multiplication of power sums).
Partition concat(const Partition& a, const Partition& b);

// Multiply every part by k (Adams operation on power-sum indices).
Partition stretch(const Partition& lam, int k);

// Textual form "[a,b,c]"; "[]" for the empty partition.
std::string to_string(const Partition& lam);

}  // namespace symring
