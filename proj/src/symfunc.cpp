#include "symring/symfunc.hpp"

#include <algorithm>
#include <mutex>

#include "symring/characters.hpp"
#include "symring/matrix.hpp"

namespace symring {

Basis basis_from_char(char c) {
    switch (c) {
        case 'm': return Basis::m;
        case 'e': return Basis::e;
        case 'h': return Basis::h;
        case 'p': return Basis::p;
        case 's': return Basis::s;
    }
    throw domain_error(std::string("unknown basis tag '") + c + "'");
}

char basis_char(Basis b) { return static_cast<char>(b); }

int SymFunc::degree() const {
    int d = 0;
    for (const auto& [lam, c] : terms) d = std::max(d, lam.size());
    return d;
}

Rat SymFunc::coeff(const Partition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? Rat(0) : it->second;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (basis == o.basis) return terms == o.terms;
    return terms == to_basis(o, basis).terms;
}

SymFunc SymFunc::one(Basis b) { return constant(1, b); }

SymFunc SymFunc::constant(const Rat& c, Basis b) {
    SymFunc f(b);
    if (c != 0) f.terms[Partition()] = c;
    return f;
}

SymFunc SymFunc::generator(Basis b, const Partition& lam) {
    SymFunc f(b);
    f.terms[lam] = 1;
    normalize(f);
    return f;
}

void normalize(SymFunc& f) {
    int cap = degree_cap();
    for (auto it = f.terms.begin(); it != f.terms.end();) {
        if (it->second == 0) {
            it = f.terms.erase(it);
            continue;
        }
        if (it->first.size() > cap)
            throw cap_error("term of degree " + std::to_string(it->first.size()) +
                            " exceeds degree cap " + std::to_string(cap));
        ++it;
    }
}

namespace {

// ---- transition matrices ------------------------------------------------
//
// For a degree n and basis B, basis_to_p(B, n) is the matrix M with
// M[mu][lam] = coefficient of p_mu in B_lam, partitions of n in canonical
// order. p_to_basis(B, n) is its inverse.

int part_index(const std::vector<Partition>& parts, const Partition& lam) {
    auto it = std::lower_bound(parts.begin(), parts.end(), lam);
    return static_cast<int>(it - parts.begin());
}

// p-expansion of h_k (sign = +1) or e_k (sign applied per cycle type).
std::map<Partition, Rat> hk_in_p(int k, bool alternating) {
    std::map<Partition, Rat> out;
    const CharacterTable& t = char_table(k);
    for (std::size_t j = 0; j < t.classes.size(); ++j) {
        Rat c(1, t.z[j]);
        if (alternating && cycle_sign(t.classes[j]) < 0) c = -c;
        out[t.classes[j]] = c;
    }
    return out;
}

std::map<Partition, Rat> p_product(const std::map<Partition, Rat>& a,
                                   const std::map<Partition, Rat>& b) {
    std::map<Partition, Rat> out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) out[concat(la, lb)] += ca * cb;
    return out;
}

// Coefficient of m_lam in p_mu: weighted count of ways to distribute the
// multiset of parts of mu over the rows of lam with exact row sums.
Int count_m_in_p(const Partition& lam, const Partition& mu) {
    // multiplicities of mu's part values
    std::vector<std::pair<int, int>> vals;  // (value, count)
    for (int p : mu.parts) {
        if (!vals.empty() && vals.back().first == p)
            ++vals.back().second;
        else
            vals.emplace_back(p, 1);
    }
    std::vector<int> remaining(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) remaining[i] = vals[i].second;

    auto binom = [](int n, int k) {
        Int r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };

    std::function<Int(int)> per_row = [&](int row) -> Int {
        if (row == lam.length()) {
            for (int r : remaining)
                if (r != 0) return 0;
            return 1;
        }
        int target = lam.parts[row];
        // enumerate submultisets of the remaining parts summing to `target`
        std::function<Int(std::size_t, int, Int)> pick =
            [&](std::size_t vi, int rem, Int weight) -> Int {
            if (rem == 0) {
                Int total = weight * per_row(row + 1);
                return total;
            }
            if (vi == vals.size()) return 0;
            Int total = 0;
            int v = vals[vi].first;
            int maxc = std::min(remaining[vi], rem / v);
            for (int c = 0; c <= maxc; ++c) {
                remaining[vi] -= c;
                total += pick(vi + 1, rem - c * v, weight * binom(remaining[vi] + c, c));
                remaining[vi] += c;
            }
            return total;
        };
        return pick(0, target, 1);
    };
    return per_row(0);
}

struct TransitionCache {
    std::mutex mutex;
    std::map<std::pair<char, int>, ExactMatrix> to_p;    // basis_to_p
    std::map<std::pair<char, int>, ExactMatrix> from_p;  // p_to_basis
};

TransitionCache& cache() {
    static TransitionCache c;
    return c;
}

ExactMatrix build_basis_to_p(Basis b, int n) {
    std::vector<Partition> parts = partitions_of(n);
    int k = static_cast<int>(parts.size());
    ExactMatrix m(k, k);
    switch (b) {
        case Basis::p:
            return ExactMatrix::identity(k);
        case Basis::s: {
            const CharacterTable& t = char_table(n);
            for (int col = 0; col < k; ++col)
                for (int row = 0; row < k; ++row)
                    m.at(row, col) = Rat(t.chi[col][row], t.z[row]);
            return m;
        }
        case Basis::h:
        case Basis::e: {
            bool alt = (b == Basis::e);
            for (int col = 0; col < k; ++col) {
                std::map<Partition, Rat> prod{{Partition(), Rat(1)}};
                for (int part : parts[col].parts)
                    prod = p_product(prod, hk_in_p(part, alt));
                for (const auto& [mu, c] : prod) m.at(part_index(parts, mu), col) = c;
            }
            return m;
        }
        case Basis::m: {
            // p_to_m is the counting matrix; invert it.
            ExactMatrix p2m(k, k);
            for (int col = 0; col < k; ++col)
                for (int row = 0; row < k; ++row)
                    p2m.at(row, col) = Rat(count_m_in_p(parts[row], parts[col]));
            return inverse(p2m);
        }
    }
    throw error("unreachable");
}

ExactMatrix build_p_to_basis(Basis b, int n) {
    std::vector<Partition> parts = partitions_of(n);
    int k = static_cast<int>(parts.size());
    switch (b) {
        case Basis::p:
            return ExactMatrix::identity(k);
        case Basis::s: {
            const CharacterTable& t = char_table(n);
            ExactMatrix m(k, k);
            for (int col = 0; col < k; ++col)
                for (int row = 0; row < k; ++row) m.at(row, col) = Rat(t.chi[row][col]);
            return m;
        }
        case Basis::m: {
            ExactMatrix m(k, k);
            for (int col = 0; col < k; ++col)
                for (int row = 0; row < k; ++row)
                    m.at(row, col) = Rat(count_m_in_p(parts[row], parts[col]));
            return m;
        }
        case Basis::h:
        case Basis::e:
            return inverse(build_basis_to_p(b, n));
    }
    throw error("unreachable");
}

const ExactMatrix& basis_to_p_matrix(Basis b, int n) {
    TransitionCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    auto key = std::make_pair(basis_char(b), n);
    auto it = c.to_p.find(key);
    if (it == c.to_p.end()) it = c.to_p.emplace(key, build_basis_to_p(b, n)).first;
    return it->second;
}

const ExactMatrix& p_to_basis_matrix(Basis b, int n) {
    TransitionCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    auto key = std::make_pair(basis_char(b), n);
    auto it = c.from_p.find(key);
    if (it == c.from_p.end()) it = c.from_p.emplace(key, build_p_to_basis(b, n)).first;
    return it->second;
}

// Apply the degree-preserving change of basis given by matrix_for(n).
SymFunc apply_transition(const SymFunc& f, Basis target,
                         const std::function<const ExactMatrix&(int)>& matrix_for) {
    SymFunc out(target);
    std::map<int, std::vector<std::pair<Partition, Rat>>> by_degree;
    for (const auto& [lam, c] : f.terms) by_degree[lam.size()].push_back({lam, c});
    for (const auto& [n, terms] : by_degree) {
        if (n == 0) {
            out.terms[Partition()] += terms[0].second;
            continue;
        }
        std::vector<Partition> parts = partitions_of(n);
        std::vector<Rat> vec(parts.size());
        for (const auto& [lam, c] : terms) vec[part_index(parts, lam)] = c;
        const ExactMatrix& m = matrix_for(n);
        for (int row = 0; row < m.rows; ++row) {
            Rat acc = 0;
            for (int col = 0; col < m.cols; ++col)
                if (vec[col] != 0) acc += m.at(row, col) * vec[col];
            if (acc != 0) out.terms[parts[row]] += acc;
        }
    }
    normalize(out);
    return out;
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
    if (f.degree() > degree_cap())
        throw cap_error("to_basis: degree exceeds cap");
    if (f.basis == target) return f;
    SymFunc in_p = (f.basis == Basis::p)
                       ? f
                       : apply_transition(f, Basis::p, [&](int n) -> const ExactMatrix& {
                             return basis_to_p_matrix(f.basis, n);
                         });
    if (target == Basis::p) return in_p;
    return apply_transition(in_p, target, [&](int n) -> const ExactMatrix& {
        return p_to_basis_matrix(target, n);
    });
}

SymFunc add(const SymFunc& f, const SymFunc& g) {
    SymFunc gg = to_basis(g, f.basis);
    SymFunc out = f;
    for (const auto& [lam, c] : gg.terms) out.terms[lam] += c;
    normalize(out);
    return out;
}

SymFunc sub(const SymFunc& f, const SymFunc& g) { return add(f, scale(-1, g)); }

SymFunc scale(const Rat& c, const SymFunc& f) {
    SymFunc out(f.basis);
    if (c == 0) return out;
    for (const auto& [lam, x] : f.terms) out.terms[lam] = c * x;
    return out;
}

SymFunc mul(const SymFunc& f, const SymFunc& g) {
    if (!f.is_zero() && !g.is_zero() && f.degree() + g.degree() > degree_cap())
        throw cap_error("mul: product degree exceeds cap");
    SymFunc fp = to_basis(f, Basis::p);
    SymFunc gp = to_basis(g, Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [la, ca] : fp.terms)
        for (const auto& [lb, cb] : gp.terms) out.terms[concat(la, lb)] += ca * cb;
    normalize(out);
    return to_basis(out, f.basis);
}

long long lr_coeff(const Partition& mu, const Partition& nu, const Partition& lam) {
    if (mu.size() + nu.size() != lam.size())
        throw domain_error("lr_coeff: |mu| + |nu| must equal |lambda|");
    SymFunc prod = mul(SymFunc::generator(Basis::s, mu), SymFunc::generator(Basis::s, nu));
    Rat c = prod.coeff(lam);
    if (!is_integer(c) || c < 0)
        throw error("lr_coeff: non-integral or negative structure constant");
    return static_cast<long long>(numerator(c));
}

Rat eval_adams(const SymFunc& f, const std::function<Rat(int)>& phi) {
    SymFunc fp = to_basis(f, Basis::p);
    Rat total = 0;
    for (const auto& [lam, c] : fp.terms) {
        Rat term = c;
        for (int part : lam.parts) term *= phi(part);
        total += term;
    }
    return total;
}

Rat eval_adams(const SymFunc& f, const std::map<int, Rat>& phi) {
    return eval_adams(f, [&phi](int n) -> Rat {
        auto it = phi.find(n);
        if (it == phi.end())
            throw domain_error("eval_adams: phi undefined at n = " + std::to_string(n));
        return it->second;
    });
}

Rat eval_principal(const SymFunc& f, int d) {
    SymFunc fs = to_basis(f, Basis::s);
    Rat total = 0;
    for (const auto& [lam, c] : fs.terms) {
        Rat hc = 1;
        for (const auto& [hook, content] : hooks_and_contents(lam)) {
            hc *= Rat(d + content, hook);
            if (hc == 0) break;
        }
        total += c * hc;
    }
    return total;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            Rat& slot = out[e];
            slot += ca * cb;
            if (slot == 0) out.erase(e);
        }
    return out;
}

Poly poly_scale(const Rat& c, const Poly& a) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [e, x] : a) out[e] = c * x;
    return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [e, x] : b) {
        Rat& slot = out[e];
        slot += x;
        if (slot == 0) out.erase(e);
    }
    return out;
}

Poly expand_polynomial(const SymFunc& f, int N) {
    if (N < 0) throw domain_error("expand_polynomial: N must be nonnegative");
    SymFunc fp = to_basis(f, Basis::p);
    auto power_sum = [N](int k) {
        Poly out;
        for (int i = 0; i < N; ++i) {
            Exponents e(N, 0);
            e[i] = k;
            out[e] = 1;
        }
        return out;
    };
    Poly total;
    Exponents zero(N, 0);
    for (const auto& [lam, c] : fp.terms) {
        Poly term{{zero, Rat(1)}};
        for (int part : lam.parts) term = poly_mul(term, power_sum(part));
        total = poly_add(total, poly_scale(c, term));
    }
    return total;
}

std::string to_string(const SymFunc& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (const auto& [lam, c] : f.terms) {
        Rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (lam.empty()) {
            out += rat_to_string(a);
        } else {
            if (a != 1) out += rat_to_string(a) + "*";
            out += basis_char(f.basis) + to_string(lam);
        }
    }
    return out;
}

}  // namespace symring
