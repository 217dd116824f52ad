#include "symring/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace symring {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw domain_error("perm_compose: size mismatch");
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

int perm_sign(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    return n == o.n && terms == o.terms;
}

namespace {

void ga_clean(GroupAlgebraElement& a) {
    for (auto it = a.terms.begin(); it != a.terms.end();)
        it = (it->second == 0) ? a.terms.erase(it) : std::next(it);
}

// All permutations fixing each block setwise, as full permutations of
// {0..n-1}; with_sign weights each by its sign.
std::vector<std::pair<Perm, int>> block_stabilizer(
    int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<std::pair<Perm, int>> out{{perm_identity(n), 1}};
    for (const auto& block : blocks) {
        std::vector<int> target = block;
        std::sort(target.begin(), target.end());
        std::vector<std::pair<Perm, int>> next;
        std::vector<int> arrangement = target;
        do {
            Perm sigma = perm_identity(n);
            for (std::size_t i = 0; i < target.size(); ++i)
                sigma[target[i]] = arrangement[i];
            int s = perm_sign(sigma);
            for (const auto& [base, bs] : out)
                next.emplace_back(perm_compose(base, sigma), bs * s);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        out = std::move(next);
    }
    return out;
}

void check_size_guard(const Partition& lam) {
    if (lam.size() > 5)
        throw cap_error("oracle size guard: |lambda| <= 5 required, got " +
                        std::to_string(lam.size()));
}

}  // namespace

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n != b.n) throw domain_error("ga_mul: mixed group sizes");
    GroupAlgebraElement c(a.n);
    for (const auto& [ga, ca] : a.terms)
        for (const auto& [gb, cb] : b.terms) c.terms[perm_compose(ga, gb)] += ca * cb;
    ga_clean(c);
    return c;
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n != b.n) throw domain_error("ga_add: mixed group sizes");
    GroupAlgebraElement c = a;
    for (const auto& [g, x] : b.terms) c.terms[g] += x;
    ga_clean(c);
    return c;
}

GroupAlgebraElement ga_scale(const Rat& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement out(a.n);
    if (c == 0) return out;
    for (const auto& [g, x] : a.terms) out.terms[g] = c * x;
    return out;
}

std::pair<GroupAlgebraElement, GroupAlgebraElement> row_column_symmetrizers(
    const Partition& lam) {
    check_size_guard(lam);
    int n = lam.size();
    // row-major canonical filling: row i holds consecutive numbers
    std::vector<std::vector<int>> rows(lam.length());
    {
        int next = 0;
        for (int i = 0; i < lam.length(); ++i)
            for (int j = 0; j < lam.parts[i]; ++j) rows[i].push_back(next++);
    }
    Partition conj = conjugate(lam);
    std::vector<std::vector<int>> cols(conj.length());
    {
        int next = 0;
        for (int i = 0; i < lam.length(); ++i)
            for (int j = 0; j < lam.parts[i]; ++j) cols[j].push_back(next++);
    }

    GroupAlgebraElement pS(n), pA(n);
    auto row_elems = block_stabilizer(n, rows);
    for (const auto& [g, s] : row_elems) pS.terms[g] += Rat(1, (long long)row_elems.size());
    auto col_elems = block_stabilizer(n, cols);
    for (const auto& [g, s] : col_elems)
        pA.terms[g] += Rat(s, (long long)col_elems.size());
    ga_clean(pS);
    ga_clean(pA);
    return {pS, pA};
}

GroupAlgebraElement young_symmetrizer(const Partition& lam) {
    check_size_guard(lam);
    if (lam.size() == 0) {
        GroupAlgebraElement e(0);
        e.terms[Perm{}] = 1;
        return e;
    }
    auto [pS, pA] = row_column_symmetrizers(lam);
    GroupAlgebraElement q = ga_mul(pA, pS);
    GroupAlgebraElement q2 = ga_mul(q, q);
    // q^2 = kappa * q for a nonzero scalar kappa; e = q / kappa is idempotent
    const auto& [g0, c0] = *q.terms.begin();
    Rat kappa = q2.terms.count(g0) ? q2.terms.at(g0) / c0 : Rat(0);
    if (kappa == 0) throw error("young_symmetrizer: degenerate idempotency scalar");
    if (!(q2 == ga_scale(kappa, q)))
        throw error("young_symmetrizer: q^2 not proportional to q");
    return ga_scale(Rat(1) / kappa, q);
}

ExactMatrix action_matrix(const GroupAlgebraElement& a, int d) {
    if (d < 0) throw domain_error("action_matrix: d must be nonnegative");
    long long dim = 1;
    for (int i = 0; i < a.n; ++i) {
        dim *= d;
        if (dim > 10000)
            throw cap_error("action_matrix size guard: d^n <= 10^4 required");
    }
    ExactMatrix m(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> digits(a.n);
    for (const auto& [sigma, c] : a.terms) {
        for (long long t = 0; t < dim; ++t) {
            long long rem = t;
            for (int i = a.n - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(rem % d);
                rem /= d;
            }
            // place permutation: position j of the image holds the factor
            // from position sigma^{-1}(j), i.e. factor i moves to sigma[i]
            long long target = 0;
            std::vector<int> nd(a.n);
            for (int i = 0; i < a.n; ++i) nd[sigma[i]] = digits[i];
            for (int i = 0; i < a.n; ++i) target = target * d + nd[i];
            m.at(static_cast<int>(target), static_cast<int>(t)) += c;
        }
    }
    return m;
}

int schur_image_dim(const Partition& lam, int d) {
    return rank(action_matrix(young_symmetrizer(lam), d));
}

}  // namespace symring
