#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace symring {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree cap / hard size guard exceeded.
struct cap_error : error {
    using error::error;
};

// Precondition on values violated (size mismatch, non-integer coefficient, ...).
struct domain_error : error {
    using error::error;
};

struct parse_error : error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// "a" for integers, "a/b" otherwise.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) s += "/" + denominator(r).str();
    return s;
}

Rat rat_from_string(const std::string& s);

// Global degree cap (default 12). Exceeding it is an error, never truncation.
int degree_cap();
void set_degree_cap(int cap);

}  // namespace symring
