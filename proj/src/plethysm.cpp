#include "symring/plethysm.hpp"

#include <functional>
#include <optional>

#include "symring/characters.hpp"
#include "symring/parallel.hpp"

namespace symring {

namespace {

// p_k -> p_{nk} on a p-basis element.
SymFunc adams_p(int n, const SymFunc& gp) {
    SymFunc out(Basis::p);
    for (const auto& [lam, c] : gp.terms) out.terms[stretch(lam, n)] += c;
    normalize(out);
    return out;
}

TensorElem diag_adams(int n, const TensorElem& gp) {
    TensorElem out;
    for (const auto& [key, c] : gp.terms)
        out.terms[{stretch(key.first, n), stretch(key.second, n)}] += c;
    normalize(out);
    return out;
}

}  // namespace

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    if (f.degree() * g.degree() > degree_cap())
        throw cap_error("plethysm: composite degree exceeds cap");
    SymFunc fp = to_basis(f, Basis::p);
    SymFunc gp = to_basis(g, Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [mu, c] : fp.terms) {
        SymFunc term = SymFunc::one(Basis::p);
        for (int part : mu.parts) term = mul(term, adams_p(part, gp));
        for (const auto& [lam, x] : term.terms) out.terms[lam] += c * x;
    }
    normalize(out);
    return to_basis(out, f.basis);
}

SymFunc adams(int n, const SymFunc& f) {
    if (n < 1) throw domain_error("adams: n must be positive");
    if (n * f.degree() > degree_cap()) throw cap_error("adams: degree exceeds cap");
    SymFunc out = adams_p(n, to_basis(f, Basis::p));
    return to_basis(out, f.basis);
}

TensorElem tensor_plethysm(const SymFunc& f, const TensorElem& g) {
    SymFunc fp = to_basis(f, Basis::p);
    TensorElem gp = tensor_to_basis(g, Basis::p, Basis::p);
    TensorElem out;
    for (const auto& [mu, c] : fp.terms) {
        TensorElem term;
        term.terms[{Partition(), Partition()}] = 1;
        for (int part : mu.parts) term = tensor_mul(term, diag_adams(part, gp));
        for (const auto& [key, x] : term.terms) out.terms[key] += c * x;
    }
    normalize(out);
    return out;
}

Poly plethysm_oracle(const SymFunc& f, const SymFunc& g, int N) {
    Poly gx = expand_polynomial(g, N);
    // list the monomials of g with multiplicity
    std::vector<Exponents> monomials;
    for (const auto& [e, c] : gx) {
        if (!is_integer(c) || c < 0)
            throw domain_error("plethysm_oracle: g is not monomial-positive over " +
                               std::to_string(N) + " variables");
        long long mult = static_cast<long long>(numerator(c));
        for (long long i = 0; i < mult; ++i) monomials.push_back(e);
    }
    SymFunc fp = to_basis(f, Basis::p);
    // q_k = sum of k-th powers of the monomials of g
    auto power_sum_of_monomials = [&](int k) {
        Poly out;
        for (const Exponents& e : monomials) {
            Exponents ek(e);
            for (int& x : ek) x *= k;
            out[ek] += 1;
        }
        return out;
    };
    Poly total;
    Exponents zero(N, 0);
    for (const auto& [mu, c] : fp.terms) {
        Poly term{{zero, Rat(1)}};
        for (int part : mu.parts) term = poly_mul(term, power_sum_of_monomials(part));
        total = poly_add(total, poly_scale(c, term));
    }
    return total;
}

VerifyReport verify_plethory(int max_degree, bool parallel) {
    int composite_cap = max_degree * max_degree;
    if (composite_cap > degree_cap())
        throw cap_error("verify_plethory: max_degree^2 must be <= cap");

    std::vector<SymFunc> gens;
    std::vector<int> deg;
    for (int n = 1; n <= max_degree; ++n)
        for (const Partition& lam : partitions_of(n)) {
            gens.push_back(SymFunc::generator(Basis::s, lam));
            deg.push_back(n);
        }
    std::size_t G = gens.size();

    enum LawId {
        kAssoc = 0,
        kUnit,
        kLeftAdd,
        kLeftMul,
        kLeftConst,
        kCoZero,
        kCoOne,
        kCoAdd,
        kCoMul,
        kLawCount
    };
    const char* names[kLawCount] = {
        "plethysm associativity",
        "two-sided unit s[1]",
        "left additivity (f+g) o h",
        "left multiplicativity (f*g) o h",
        "left constants 1 o h, 0 o h",
        "co_zero compatibility",
        "co_one compatibility",
        "coaddition compatibility",
        "comultiplication compatibility",
    };

    struct Task {
        int law;
        std::function<std::optional<std::string>()> run;
    };
    std::vector<Task> tasks;
    SymFunc unit = SymFunc::generator(Basis::s, Partition({1}));

    auto sf_mismatch = [](const SymFunc& lhs, const SymFunc& rhs,
                          const std::string& what) -> std::optional<std::string> {
        if (lhs == rhs) return std::nullopt;
        return what + ": lhs = " + to_string(to_basis(lhs, Basis::s)) +
               ", rhs = " + to_string(to_basis(rhs, Basis::s));
    };

    for (std::size_t i = 0; i < G; ++i) {
        const SymFunc& f = gens[i];
        std::string fi = to_string(f);

        tasks.push_back({kUnit, [&, i, fi]() -> std::optional<std::string> {
                             auto r = sf_mismatch(plethysm(unit, gens[i]), gens[i],
                                                  "s[1] o " + fi);
                             if (r) return r;
                             return sf_mismatch(plethysm(gens[i], unit), gens[i],
                                                fi + " o s[1]");
                         }});
        tasks.push_back({kLeftConst, [&, i, fi]() -> std::optional<std::string> {
                             auto r = sf_mismatch(plethysm(SymFunc::one(Basis::s), gens[i]),
                                                  SymFunc::one(Basis::s), "1 o " + fi);
                             if (r) return r;
                             return sf_mismatch(plethysm(SymFunc::zero(), gens[i]),
                                                SymFunc::zero(), "0 o " + fi);
                         }});
    }

    for (std::size_t i = 0; i < G; ++i)
        for (std::size_t j = 0; j < G; ++j) {
            if (deg[i] * deg[j] > composite_cap) continue;
            std::string label =
                "(f,g) = (" + to_string(gens[i]) + ", " + to_string(gens[j]) + ")";
            tasks.push_back({kCoZero, [&, i, j, label]() -> std::optional<std::string> {
                                 Rat og = co_zero(gens[j]);
                                 Rat lhs = co_zero(plethysm(gens[i], gens[j]));
                                 Rat rhs = eval_adams(gens[i], [&og](int) { return og; });
                                 if (lhs == rhs) return std::nullopt;
                                 return label + ": lhs = " + rat_to_string(lhs) +
                                        ", rhs = " + rat_to_string(rhs);
                             }});
            tasks.push_back({kCoOne, [&, i, j, label]() -> std::optional<std::string> {
                                 Rat eg = co_one(gens[j]);
                                 Rat lhs = co_one(plethysm(gens[i], gens[j]));
                                 Rat rhs = eval_adams(gens[i], [&eg](int) { return eg; });
                                 if (lhs == rhs) return std::nullopt;
                                 return label + ": lhs = " + rat_to_string(lhs) +
                                        ", rhs = " + rat_to_string(rhs);
                             }});
            tasks.push_back({kCoAdd, [&, i, j, label]() -> std::optional<std::string> {
                                 TensorElem lhs = coaddition(plethysm(gens[i], gens[j]));
                                 TensorElem rhs = tensor_plethysm(gens[i], coaddition(gens[j]));
                                 if (lhs == rhs) return std::nullopt;
                                 return label + ": lhs = " +
                                        to_string(tensor_to_basis(lhs, Basis::s, Basis::s)) +
                                        ", rhs = " +
                                        to_string(tensor_to_basis(rhs, Basis::s, Basis::s));
                             }});
            tasks.push_back({kCoMul, [&, i, j, label]() -> std::optional<std::string> {
                                 TensorElem lhs = comultiplication(plethysm(gens[i], gens[j]));
                                 TensorElem rhs =
                                     tensor_plethysm(gens[i], comultiplication(gens[j]));
                                 if (lhs == rhs) return std::nullopt;
                                 return label + ": lhs = " +
                                        to_string(tensor_to_basis(lhs, Basis::s, Basis::s)) +
                                        ", rhs = " +
                                        to_string(tensor_to_basis(rhs, Basis::s, Basis::s));
                             }});
        }

    for (std::size_t i = 0; i < G; ++i)
        for (std::size_t j = 0; j < G; ++j)
            for (std::size_t k = 0; k < G; ++k) {
                std::string label = "(f,g,h) = (" + to_string(gens[i]) + ", " +
                                    to_string(gens[j]) + ", " + to_string(gens[k]) + ")";
                if (deg[i] * deg[j] * deg[k] <= composite_cap)
                    tasks.push_back(
                        {kAssoc, [&, i, j, k, label]() -> std::optional<std::string> {
                             return sf_mismatch(
                                 plethysm(plethysm(gens[i], gens[j]), gens[k]),
                                 plethysm(gens[i], plethysm(gens[j], gens[k])), label);
                         }});
                if (std::max(deg[i], deg[j]) * deg[k] <= composite_cap)
                    tasks.push_back(
                        {kLeftAdd, [&, i, j, k, label]() -> std::optional<std::string> {
                             return sf_mismatch(
                                 plethysm(add(gens[i], gens[j]), gens[k]),
                                 add(plethysm(gens[i], gens[k]), plethysm(gens[j], gens[k])),
                                 label);
                         }});
                if ((deg[i] + deg[j]) * deg[k] <= composite_cap)
                    tasks.push_back(
                        {kLeftMul, [&, i, j, k, label]() -> std::optional<std::string> {
                             return sf_mismatch(
                                 plethysm(mul(gens[i], gens[j]), gens[k]),
                                 mul(plethysm(gens[i], gens[k]), plethysm(gens[j], gens[k])),
                                 label);
                         }});
            }

    // Prewarm character tables (s <-> p transitions) before the parallel loop.
    for (int n = 0; n <= composite_cap && n <= degree_cap(); ++n) char_table(n);

    std::vector<std::string> results(tasks.size());
    parallel_for(tasks.size(), parallel, [&](std::size_t t) {
        auto r = tasks[t].run();
        if (r) results[t] = *r;
    });

    VerifyReport report;
    for (int law = 0; law < kLawCount; ++law) {
        LawResult r;
        r.name = names[law];
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (tasks[t].law == law && !results[t].empty()) {
                r.pass = false;
                r.counterexample = results[t];
                break;
            }
        }
        report.laws.push_back(std::move(r));
    }
    return report;
}

}  // namespace symring
