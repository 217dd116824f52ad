#include <doctest.h>

#include <random>

#include "symring/symfunc.hpp"

using namespace symring;

namespace {

SymFunc s_(std::vector<int> parts) {
    return SymFunc::generator(Basis::s, Partition(std::move(parts)));
}
SymFunc p_(std::vector<int> parts) {
    return SymFunc::generator(Basis::p, Partition(std::move(parts)));
}

SymFunc random_sym(std::mt19937& rng, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    SymFunc f(Basis::s);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        auto parts = partitions_of(deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        f.terms[parts[pick(rng)]] += coeff(rng);
    }
    normalize(f);
    return f;
}

}  // namespace

TEST_CASE("basis transition examples") {
    CHECK(to_basis(p_({1}), Basis::s) == s_({1}));
    CHECK(to_basis(SymFunc::generator(Basis::h, Partition({2})), Basis::s) == s_({2}));
    CHECK(to_basis(SymFunc::generator(Basis::e, Partition({2})), Basis::s) == s_({1, 1}));
    CHECK(to_basis(p_({2}), Basis::s) == sub(s_({2}), s_({1, 1})));
}

TEST_CASE("round trips through every basis") {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& lam : partitions_of(n)) {
            SymFunc f = SymFunc::generator(Basis::s, lam);
            for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p}) {
                SymFunc back = to_basis(to_basis(f, b), Basis::s);
                CHECK(back == f);
            }
        }
}

TEST_CASE("add and scale") {
    SymFunc f = s_({2, 1});
    CHECK(add(f, SymFunc::zero()) == f);
    CHECK(add(s_({1}), s_({1})) == scale(2, s_({1})));
    SymFunc a = sub(s_({2}), s_({1, 1}));
    SymFunc b = add(s_({2}), s_({1, 1}));
    CHECK(add(a, b) == scale(2, s_({2})));
}

TEST_CASE("mul examples") {
    CHECK(mul(SymFunc::one(), s_({2, 1})) == s_({2, 1}));
    CHECK(mul(p_({2}), p_({3})) == p_({3, 2}));
    CHECK(mul(s_({1}), s_({1})) == add(s_({2}), s_({1, 1})));
}

TEST_CASE("mul agrees with polynomial expansion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SymFunc f = random_sym(rng, 3, 3);
        SymFunc g = random_sym(rng, 3, 3);
        Poly lhs = expand_polynomial(mul(f, g), 8);
        Poly rhs = poly_mul(expand_polynomial(f, 8), expand_polynomial(g, 8));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("faithfulness of the monomial realization") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        SymFunc f = random_sym(rng, 6, 4);
        SymFunc g = random_sym(rng, 6, 4);
        bool eq_sym = (to_basis(f, Basis::s) == to_basis(g, Basis::s));
        bool eq_poly = (expand_polynomial(f, 8) == expand_polynomial(g, 8));
        CHECK(eq_sym == eq_poly);
    }
}

TEST_CASE("expand_polynomial examples") {
    Poly p1 = expand_polynomial(p_({1}), 2);
    CHECK(p1 == Poly{{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
    Poly e2 = expand_polynomial(s_({1, 1}), 2);
    CHECK(e2 == Poly{{{1, 1}, Rat(1)}});
    Poly h2 = expand_polynomial(s_({2}), 2);
    CHECK(h2 == Poly{{{2, 0}, Rat(1)}, {{1, 1}, Rat(1)}, {{0, 2}, Rat(1)}});
}

TEST_CASE("lr coefficients") {
    CHECK(lr_coeff(Partition({3}), Partition(), Partition({3})) == 1);
    CHECK(lr_coeff(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coeff(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coeff(Partition({2}), Partition({1}), Partition({2, 1})) == 1);
    CHECK_THROWS_AS(lr_coeff(Partition({2}), Partition({1}), Partition({2})), domain_error);

    // nonnegativity and symmetry within composite degree 6
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 6; ++b)
            for (const Partition& mu : partitions_of(a))
                for (const Partition& nu : partitions_of(b))
                    for (const Partition& lam : partitions_of(a + b)) {
                        long long c = lr_coeff(mu, nu, lam);
                        CHECK(c >= 0);
                        CHECK(c == lr_coeff(nu, mu, lam));
                    }
}

TEST_CASE("eval_adams") {
    // phi == 0 extracts the constant term
    SymFunc f = add(SymFunc::constant(5), sub(s_({1}), s_({2})));
    CHECK(eval_adams(f, std::map<int, Rat>{{1, 0}, {2, 0}}) == 5);

    // s_2 at two variables set to 1: dim Sym^2(C^2) = 3
    CHECK(eval_adams(s_({2}), std::map<int, Rat>{{1, 2}, {2, 2}}) == 3);

    CHECK_THROWS_AS(eval_adams(s_({2}), std::map<int, Rat>{{1, 2}}), domain_error);
}

namespace {

// Brute-force count of super-semistandard tableaux of shape (2,1) over an
// alphabet with `even` even letters and `odd` odd letters (even letters
// first in the order). Cells: (0,0),(0,1) top row, (1,0) below (0,0).
int super_tableaux_21(int even, int odd) {
    int letters = even + odd;
    auto is_odd = [&](int x) { return x >= even; };
    int count = 0;
    for (int a = 0; a < letters; ++a)          // (0,0)
        for (int b = 0; b < letters; ++b)      // (0,1)
            for (int c = 0; c < letters; ++c)  // (1,0)
            {
                // weak increase along row and column
                if (b < a || c < a) continue;
                // even letters strict down columns, odd strict along rows
                if (a == c && !is_odd(a)) continue;
                if (a == b && is_odd(a)) continue;
                ++count;
            }
    return count;
}

}  // namespace

TEST_CASE("super-dimension via Adams evaluation") {
    int expected = super_tableaux_21(2, 1);
    CHECK(expected == 8);
    // superdimension of a (2|1)-graded space: p_n -> 2 - (-1)^n * 1
    auto phi = [](int n) { return Rat(2 - (n % 2 == 0 ? 1 : -1)); };
    CHECK(eval_adams(s_({2, 1}), phi) == expected);
}

TEST_CASE("eval_principal") {
    CHECK(eval_principal(s_({3}), 1) == 1);
    CHECK(eval_principal(s_({2, 1}), 1) == 0);
    CHECK(eval_principal(s_({1, 1}), 2) == 1);
    CHECK(eval_principal(s_({2, 1}), 2) == 2);

    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int d = 0; d <= 4; ++d) {
                SymFunc f = SymFunc::generator(Basis::s, lam);
                CHECK(eval_principal(f, d) ==
                      eval_adams(f, [d](int) { return Rat(d); }));
            }
}

TEST_CASE("degree cap is enforced") {
    std::vector<int> big(degree_cap() + 1, 1);
    CHECK_THROWS_AS(SymFunc::generator(Basis::p, Partition(big)), cap_error);
    SymFunc f = p_({std::min(12, degree_cap())});
    CHECK_THROWS_AS(mul(f, f), cap_error);
}
