#include "symring/partition.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>

namespace symring {

namespace {
std::atomic<int> g_cap{12};
}

int degree_cap() { return g_cap.load(); }

void set_degree_cap(int cap) {
    if (cap < 0) throw domain_error("degree cap must be nonnegative");
    g_cap.store(cap);
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw domain_error("zero denominator in rational '" + s + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw domain_error("invalid rational literal '" + s + "'");
    }
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw domain_error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool operator<(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts > b.parts;  // lexicographically larger comes first
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw domain_error("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int k = std::min(rem, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Int partition_count(int n) {
    if (n < 0) return 0;
    static std::vector<Int> memo{1};  // p(0)=1
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    for (int k = static_cast<int>(memo.size()); k <= n; ++k) {
        Int pk = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            int g2 = j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            Int sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= k) pk += sign * memo[k - g1];
            if (g2 <= k) pk += sign * memo[k - g2];
        }
        memo.push_back(pk);
    }
    return memo[n];
}

Partition conjugate(const Partition& lam) {
    std::vector<int> cols;
    if (!lam.parts.empty()) {
        cols.assign(lam.parts[0], 0);
        for (int part : lam.parts)
            for (int j = 0; j < part; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

std::vector<std::pair<int, int>> hooks_and_contents(const Partition& lam) {
    Partition conj = conjugate(lam);
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < lam.length(); ++i) {
        for (int j = 0; j < lam.parts[i]; ++j) {
            int hook = lam.parts[i] + conj.parts[j] - i - j - 1;
            out.emplace_back(hook, j - i);
        }
    }
    return out;
}

Partition concat(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts.size() + b.parts.size());
    std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

Partition stretch(const Partition& lam, int k) {
    if (k < 1) throw domain_error("stretch factor must be positive");
    std::vector<int> parts = lam.parts;
    for (int& p : parts) p *= k;
    return Partition(std::move(parts));
}

std::string to_string(const Partition& lam) {
    std::string s = "[";
    for (std::size_t i = 0; i < lam.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lam.parts[i]);
    }
    return s + "]";
}

}  // namespace symring
