#include "symring/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace symring {

namespace {

// Murnaghan-Nakayama via beta numbers: removing a border strip of length r
// is replacing a beta number b by b - r; the height parity is the number of
// beta numbers jumped over.
using Key = std::pair<std::vector<int>, std::vector<int>>;

long long mn_char(std::vector<int> lam, std::vector<int> mu,
                  std::map<Key, long long>& memo) {
    if (mu.empty()) return lam.empty() ? 1 : 0;
    Key key{lam, mu};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = mu.front();
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());

    int len = static_cast<int>(lam.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lam[i] + (len - 1 - i);

    long long total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[i] - r;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int jumped = 0;
        for (int j = 0; j < len; ++j)
            if (beta[j] > b && beta[j] < beta[i]) ++jumped;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nl;
        for (int k = 0; k < len; ++k) {
            int part = nb[k] - (len - 1 - k);
            if (part > 0) nl.push_back(part);
        }
        long long sub = mn_char(nl, mu_rest, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

long long centralizer_order(const Partition& mu) {
    long long z = 1;
    int i = 0;
    int len = mu.length();
    while (i < len) {
        int j = i;
        while (j < len && mu.parts[j] == mu.parts[i]) ++j;
        int mult = j - i;
        for (int k = 0; k < mult; ++k) z *= mu.parts[i];
        for (int k = 2; k <= mult; ++k) z *= k;
        i = j;
    }
    return z;
}

std::shared_ptr<const CharacterTable> build_table(int n) {
    auto table = std::make_shared<CharacterTable>();
    table->n = n;
    table->classes = partitions_of(n);
    std::size_t k = table->classes.size();
    table->z.resize(k);
    for (std::size_t j = 0; j < k; ++j) table->z[j] = centralizer_order(table->classes[j]);
    table->chi.assign(k, std::vector<long long>(k));
    std::map<Key, long long> memo;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            table->chi[i][j] =
                mn_char(table->classes[i].parts, table->classes[j].parts, memo);
    return table;
}

}  // namespace

int CharacterTable::index(const Partition& lam) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), lam);
    if (it == classes.end() || !(*it == lam))
        throw domain_error("partition " + symring::to_string(lam) +
                           " is not a partition of " + std::to_string(n));
    return static_cast<int>(it - classes.begin());
}

long long CharacterTable::value(const Partition& lam, const Partition& mu) const {
    return chi[index(lam)][index(mu)];
}

const CharacterTable& char_table(int n) {
    if (n < 0) throw domain_error("char_table: n must be nonnegative");
    if (n > degree_cap())
        throw cap_error("char_table: n = " + std::to_string(n) +
                        " exceeds degree cap " + std::to_string(degree_cap()));
    static std::mutex m;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = cache[n];
    if (!slot) slot = build_table(n);
    return *slot;
}

int cycle_sign(const Partition& mu) {
    return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
}

Partition tensor_with_sign(const Partition& lam) {
    int n = lam.size();
    if (n == 0) return lam;
    const CharacterTable& t = char_table(n);
    int row = t.index(lam);
    std::size_t k = t.classes.size();
    std::vector<long long> twisted(k);
    for (std::size_t j = 0; j < k; ++j)
        twisted[j] = t.chi[row][j] * cycle_sign(t.classes[j]);
    for (std::size_t i = 0; i < k; ++i)
        if (t.chi[i] == twisted) return t.classes[i];
    throw error("tensor_with_sign: no matching character row (table corrupt)");
}

long long kronecker_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    int n = lam.size();
    if (mu.size() != n || nu.size() != n)
        throw domain_error("kronecker_coeff: arguments must have equal size");
    if (n == 0) return 1;
    const CharacterTable& t = char_table(n);
    int a = t.index(lam), b = t.index(mu), c = t.index(nu);
    Rat sum = 0;
    for (std::size_t j = 0; j < t.classes.size(); ++j)
        sum += Rat(static_cast<long long>(t.chi[a][j]) * t.chi[b][j] * t.chi[c][j], t.z[j]);
    if (!is_integer(sum) || sum < 0)
        throw error("kronecker_coeff: non-integral or negative result (table corrupt)");
    return static_cast<long long>(numerator(sum));
}

}  // namespace symring
