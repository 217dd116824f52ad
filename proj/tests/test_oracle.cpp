#include <doctest.h>

#include <random>

#include "symring/characters.hpp"
#include "symring/oracle.hpp"
#include "symring/symfunc.hpp"

using namespace symring;

namespace {

GroupAlgebraElement random_ga(std::mt19937& rng, int n) {
    std::vector<Perm> perms;
    Perm p = perm_identity(n);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    GroupAlgebraElement a(n);
    for (int t = 0; t < 3; ++t) a.terms[perms[pick(rng)]] += coeff(rng);
    return a;
}

}  // namespace

TEST_CASE("symmetrizer examples") {
    // lambda = (2): row symmetrizer (e + (01))/2, trivial column part
    auto [pS2, pA2] = row_column_symmetrizers(Partition({2}));
    GroupAlgebraElement expect(2);
    expect.terms[{0, 1}] = Rat(1, 2);
    expect.terms[{1, 0}] = Rat(1, 2);
    CHECK(pS2 == expect);

    // lambda = (1,1): signed column stabilizer (e - (01))/2
    auto [pS11, pA11] = row_column_symmetrizers(Partition({1, 1}));
    GroupAlgebraElement expectA(2);
    expectA.terms[{0, 1}] = Rat(1, 2);
    expectA.terms[{1, 0}] = Rat(-1, 2);
    CHECK(pA11 == expectA);

    // lambda = (1): both are the identity
    auto [pS1, pA1] = row_column_symmetrizers(Partition({1}));
    GroupAlgebraElement e1(1);
    e1.terms[{0}] = 1;
    CHECK(pS1 == e1);
    CHECK(pA1 == e1);
}

TEST_CASE("Young symmetrizers are idempotent") {
    for (int n = 0; n <= 4; ++n)
        for (const Partition& lam : partitions_of(n)) {
            GroupAlgebraElement e = young_symmetrizer(lam);
            CHECK(ga_mul(e, e) == e);
        }
    CHECK_THROWS_AS(young_symmetrizer(Partition({6})), cap_error);
}

TEST_CASE("action matrix basics") {
    // identity permutation acts as the identity matrix
    GroupAlgebraElement id(3);
    id.terms[perm_identity(3)] = 1;
    CHECK(action_matrix(id, 2) == ExactMatrix::identity(8));

    // the swap in S_2 at d = 2 fixes the pure tensors and exchanges the mixed
    GroupAlgebraElement swap(2);
    swap.terms[{1, 0}] = 1;
    ExactMatrix m = action_matrix(swap, 2);
    ExactMatrix expect(4, 4);
    expect.at(0, 0) = 1;  // e1(x)e1
    expect.at(2, 1) = 1;  // e1(x)e2 -> e2(x)e1
    expect.at(1, 2) = 1;
    expect.at(3, 3) = 1;  // e2(x)e2
    CHECK(m == expect);
}

TEST_CASE("action matrix is a homomorphism") {
    std::mt19937 rng(31);
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 2; ++d)
            for (int trial = 0; trial < 10; ++trial) {
                GroupAlgebraElement a = random_ga(rng, n);
                GroupAlgebraElement b = random_ga(rng, n);
                CHECK(action_matrix(ga_mul(a, b), d) ==
                      mul(action_matrix(a, d), action_matrix(b, d)));
            }
}

TEST_CASE("Schur image dimensions") {
    CHECK(schur_image_dim(Partition({2}), 2) == 3);
    CHECK(schur_image_dim(Partition({1, 1}), 2) == 1);
    CHECK(schur_image_dim(Partition({1, 1, 1}), 2) == 0);

    // keystone cross-check at small sizes (full range in the acceptance suite)
    for (int n = 0; n <= 3; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int d = 1; d <= 3; ++d)
                CHECK(Rat(schur_image_dim(lam, d)) ==
                      eval_principal(SymFunc::generator(Basis::s, lam), d));
}

TEST_CASE("character recovery from tensor-power traces") {
    // trace over X^(x)n of P_sigma * E_lambda equals
    // sum_nu chi^nu(sigma * e_lambda) * dim S_nu(X)
    const int d = 2;
    for (int n = 1; n <= 4; ++n) {
        const CharacterTable& table = char_table(n);
        for (const Partition& lam : partitions_of(n)) {
            GroupAlgebraElement e = young_symmetrizer(lam);
            ExactMatrix em = action_matrix(e, d);
            Perm sigma = perm_identity(n);
            int tested = 0;
            do {
                GroupAlgebraElement s(n);
                s.terms[sigma] = 1;
                Rat lhs = trace(mul(action_matrix(s, d), em));
                Rat rhs = 0;
                for (const Partition& nu : table.classes) {
                    Rat chi_of_product = 0;
                    for (const auto& [g, c] : e.terms)
                        chi_of_product +=
                            c * table.value(nu, cycle_type(perm_compose(sigma, g)));
                    rhs += chi_of_product *
                           eval_principal(SymFunc::generator(Basis::s, nu), d);
                }
                CHECK(lhs == rhs);
                ++tested;
            } while (std::next_permutation(sigma.begin(), sigma.end()) && tested < 8);
        }
    }
}

TEST_CASE("size guards") {
    GroupAlgebraElement id(5);
    id.terms[perm_identity(5)] = 1;
    CHECK_THROWS_AS(action_matrix(id, 10), cap_error);  // 10^5 > 10^4
}
