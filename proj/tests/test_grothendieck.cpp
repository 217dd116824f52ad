#include <doctest.h>

#include <random>

#include "symring/birig.hpp"
#include "symring/grothendieck.hpp"

using namespace symring;

namespace {

SymFunc s_(std::vector<int> parts) {
    return SymFunc::generator(Basis::s, Partition(std::move(parts)));
}

}  // namespace

TEST_CASE("is_schur_positive") {
    auto h2 = is_schur_positive(SymFunc::generator(Basis::h, Partition({2})));
    REQUIRE(h2.has_value());
    CHECK(h2->terms == std::map<Partition, long long>{{Partition({2}), 1}});

    CHECK(!is_schur_positive(SymFunc::generator(Basis::p, Partition({2}))).has_value());

    auto zero = is_schur_positive(SymFunc::zero());
    REQUIRE(zero.has_value());
    CHECK(zero->empty());
}

TEST_CASE("split_pos_neg") {
    auto [plus, minus] = split_pos_neg(SymFunc::generator(Basis::p, Partition({2})));
    CHECK(plus.terms == std::map<Partition, long long>{{Partition({2}), 1}});
    CHECK(minus.terms == std::map<Partition, long long>{{Partition({1, 1}), 1}});

    auto [p3, m3] = split_pos_neg(s_({3}));
    CHECK(p3.terms == std::map<Partition, long long>{{Partition({3}), 1}});
    CHECK(m3.empty());

    auto [zp, zm] = split_pos_neg(SymFunc::zero());
    CHECK(zp.empty());
    CHECK(zm.empty());

    CHECK_THROWS_AS(split_pos_neg(scale(Rat(1, 2), s_({1}))), domain_error);

    // reconstruction round trip on disjoint supports
    SymFunc f = sub(scale(3, s_({2})), scale(2, s_({1, 1})));
    auto [fp, fm] = split_pos_neg(f);
    CHECK(sub(embed(fp), embed(fm)) == f);
}

TEST_CASE("sign-rule co-negation agrees with the antipode") {
    PosElement single;
    single.terms[Partition({1})] = 1;
    CHECK(conegation_sign_rule(single) == scale(-1, s_({1})));

    PosElement two;
    two.terms[Partition({2})] = 1;
    CHECK(conegation_sign_rule(two) == s_({1, 1}));

    CHECK(conegation_sign_rule(PosElement{}) == SymFunc::zero());

    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : partitions_of(n)) {
            PosElement rho;
            rho.terms[lam] = 1;
            CHECK(conegation_sign_rule(rho) == antipode(embed(rho)));
        }
}

TEST_CASE("mapping cone of the identity") {
    TwoTermComplex cone = mapping_cone_Mx();
    validate(cone);
    auto [h0, h1] = homology(cone);
    CHECK(h0.empty());
    CHECK(h1.empty());
    CHECK(euler_char(cone) == SymFunc::zero());
}

TEST_CASE("homology examples") {
    TwoTermComplex c;
    TwoTermComplex::Piece piece;
    piece.m0 = 2;
    piece.m1 = 1;
    piece.d0 = ExactMatrix(1, 2);
    piece.d0.at(0, 0) = 1;  // D0 = [1 0]
    piece.d1 = ExactMatrix(2, 1);
    c.pieces[Partition({1})] = piece;

    auto [h0, h1] = homology(c);
    CHECK(h0.terms == std::map<Partition, long long>{{Partition({1}), 1}});
    CHECK(h1.empty());
    CHECK(euler_char(c) == s_({1}));

    // zero differentials: homology is the complex itself
    TwoTermComplex z;
    TwoTermComplex::Piece pz;
    pz.m0 = 1;
    pz.m1 = 0;
    pz.d0 = ExactMatrix(0, 1);
    pz.d1 = ExactMatrix(1, 0);
    z.pieces[Partition({2})] = pz;
    auto [zh0, zh1] = homology(z);
    CHECK(zh0.terms == std::map<Partition, long long>{{Partition({2}), 1}});
    CHECK(zh1.empty());
    CHECK(euler_char(z) == s_({2}));
}

TEST_CASE("invalid complexes are rejected") {
    TwoTermComplex bad;
    TwoTermComplex::Piece piece;
    piece.m0 = 1;
    piece.m1 = 1;
    piece.d0 = ExactMatrix(1, 1);
    piece.d0.at(0, 0) = 1;
    piece.d1 = ExactMatrix(1, 1);
    piece.d1.at(0, 0) = 1;  // D1 D0 = [1] != 0
    bad.pieces[Partition({1})] = piece;
    CHECK_THROWS_AS(validate(bad), domain_error);
}

TEST_CASE("Euler characteristic equals homology class on random complexes") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        TwoTermComplex c = random_two_term_complex(rng);
        auto [h0, h1] = homology(c);
        CHECK(euler_char(c) == sub(embed(h0), embed(h1)));
    }
}

TEST_CASE("complex JSON round trip") {
    std::mt19937 rng(5);
    TwoTermComplex c = random_two_term_complex(rng);
    TwoTermComplex back = complex_from_json(complex_to_json(c));
    CHECK(euler_char(back) == euler_char(c));
    auto [h0a, h1a] = homology(c);
    auto [h0b, h1b] = homology(back);
    CHECK(h0a == h0b);
    CHECK(h1a == h1b);

    CHECK_THROWS_AS(complex_from_json("not json"), domain_error);
}
