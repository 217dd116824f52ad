#include "symring/birig.hpp"

#include <algorithm>
#include <functional>

#include "symring/characters.hpp"
#include "symring/parallel.hpp"

namespace symring {

Rat TensorElem::coeff(const Partition& a, const Partition& b) const {
    auto it = terms.find({a, b});
    return it == terms.end() ? Rat(0) : it->second;
}

bool TensorElem::operator==(const TensorElem& o) const {
    if (left == o.left && right == o.right) return terms == o.terms;
    return terms == tensor_to_basis(o, left, right).terms;
}

void normalize(TensorElem& t) {
    int cap = degree_cap();
    for (auto it = t.terms.begin(); it != t.terms.end();) {
        if (it->second == 0) {
            it = t.terms.erase(it);
            continue;
        }
        if (it->first.first.size() > cap || it->first.second.size() > cap)
            throw cap_error("tensor term exceeds degree cap");
        ++it;
    }
}

namespace {

// Expand one slot of a tensor term through a degree-preserving base change.
TensorElem change_slot(const TensorElem& t, bool left_slot, Basis target) {
    Basis from = left_slot ? t.left : t.right;
    TensorElem out;
    out.left = left_slot ? target : t.left;
    out.right = left_slot ? t.right : target;
    for (const auto& [key, c] : t.terms) {
        const Partition& moving = left_slot ? key.first : key.second;
        SymFunc single(from);
        single.terms[moving] = 1;
        SymFunc conv = to_basis(single, target);
        for (const auto& [lam, x] : conv.terms) {
            auto nk = key;
            (left_slot ? nk.first : nk.second) = lam;
            out.terms[nk] += c * x;
        }
    }
    normalize(out);
    return out;
}

}  // namespace

TensorElem tensor_to_basis(const TensorElem& t, Basis left, Basis right) {
    TensorElem out = t;
    if (out.left != left) out = change_slot(out, true, left);
    if (out.right != right) out = change_slot(out, false, right);
    return out;
}

TensorElem tensor_add(const TensorElem& a, const TensorElem& b) {
    TensorElem bb = tensor_to_basis(b, a.left, a.right);
    TensorElem out = a;
    for (const auto& [key, c] : bb.terms) out.terms[key] += c;
    normalize(out);
    return out;
}

TensorElem tensor_scale(const Rat& c, const TensorElem& a) {
    TensorElem out;
    out.left = a.left;
    out.right = a.right;
    if (c == 0) return out;
    for (const auto& [key, x] : a.terms) out.terms[key] = c * x;
    return out;
}

TensorElem tensor_mul(const TensorElem& a, const TensorElem& b) {
    TensorElem ap = tensor_to_basis(a, Basis::p, Basis::p);
    TensorElem bp = tensor_to_basis(b, Basis::p, Basis::p);
    TensorElem out;
    for (const auto& [ka, ca] : ap.terms)
        for (const auto& [kb, cb] : bp.terms)
            out.terms[{concat(ka.first, kb.first), concat(ka.second, kb.second)}] += ca * cb;
    normalize(out);
    return tensor_to_basis(out, a.left, a.right);
}

std::string to_string(const TensorElem& t) {
    if (t.terms.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : t.terms) {
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
        if (a != 1) out += rat_to_string(a) + "*";
        auto atom = [](Basis b, const Partition& lam) {
            if (lam.empty()) return std::string("1");
            return basis_char(b) + to_string(lam);
        };
        out += atom(t.left, key.first) + " # " + atom(t.right, key.second);
    }
    return out;
}

// ---- k-fold tensors in the p basis (verifier machinery) -------------------

namespace {

using PKey = std::vector<Partition>;
using PTensor = std::map<PKey, Rat>;

void pt_clean(PTensor& t) {
    for (auto it = t.begin(); it != t.end();)
        it = (it->second == 0) ? t.erase(it) : std::next(it);
}

PTensor pt_from(const SymFunc& f) {
    SymFunc fp = to_basis(f, Basis::p);
    PTensor t;
    for (const auto& [lam, c] : fp.terms) t[PKey{lam}] = c;
    return t;
}

// Apply coaddition to one slot: p_mu -> sum over part subsets S of
// p_{mu_S} (x) p_{mu_Sc}.
PTensor pt_coadd(const PTensor& t, std::size_t slot) {
    PTensor out;
    for (const auto& [key, c] : t) {
        const std::vector<int>& parts = key[slot].parts;
        int n = static_cast<int>(parts.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> a, b;
            for (int i = 0; i < n; ++i)
                (mask & (1u << i) ? a : b).push_back(parts[i]);
            PKey nk = key;
            nk[slot] = Partition(a);
            nk.insert(nk.begin() + slot + 1, Partition(b));
            out[nk] += c;
        }
    }
    pt_clean(out);
    return out;
}

PTensor pt_comul(const PTensor& t, std::size_t slot) {
    PTensor out;
    for (const auto& [key, c] : t) {
        PKey nk = key;
        nk.insert(nk.begin() + slot + 1, key[slot]);
        out[nk] += c;
    }
    return out;
}

PTensor pt_cozero(const PTensor& t, std::size_t slot) {
    PTensor out;
    for (const auto& [key, c] : t) {
        if (!key[slot].empty()) continue;
        PKey nk = key;
        nk.erase(nk.begin() + slot);
        out[nk] += c;
    }
    pt_clean(out);
    return out;
}

PTensor pt_coone(const PTensor& t, std::size_t slot) {
    PTensor out;
    for (const auto& [key, c] : t) {
        PKey nk = key;
        nk.erase(nk.begin() + slot);
        out[nk] += c;
    }
    pt_clean(out);
    return out;
}

PTensor pt_antipode(const PTensor& t, std::size_t slot) {
    PTensor out;
    for (const auto& [key, c] : t)
        out[key] = (key[slot].length() % 2 == 0) ? c : -c;
    return out;
}

PTensor pt_codiag(const PTensor& t, std::size_t slot) {
    PTensor out;
    for (const auto& [key, c] : t) {
        PKey nk = key;
        nk[slot] = concat(key[slot], key[slot + 1]);
        nk.erase(nk.begin() + slot + 1);
        out[nk] += c;
    }
    pt_clean(out);
    return out;
}

PTensor pt_swap(const PTensor& t, std::size_t i, std::size_t j) {
    PTensor out;
    for (const auto& [key, c] : t) {
        PKey nk = key;
        std::swap(nk[i], nk[j]);
        out[nk] += c;
    }
    pt_clean(out);
    return out;
}

PTensor pt_constant(const Rat& c, std::size_t arity) {
    PTensor out;
    if (c != 0) out[PKey(arity, Partition())] = c;
    return out;
}

std::string pt_render(const PTensor& t) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : t) {
        if (!first) out += " + ";
        first = false;
        out += rat_to_string(c);
        for (const auto& lam : key) out += "*p" + to_string(lam);
    }
    return out;
}

TensorElem pt_to_tensor2(const PTensor& t) {
    TensorElem out;
    for (const auto& [key, c] : t) out.terms[{key[0], key[1]}] = c;
    return out;
}

std::string render_side(const PTensor& t) {
    bool two = !t.empty() && t.begin()->first.size() == 2;
    if (two) return to_string(tensor_to_basis(pt_to_tensor2(t), Basis::s, Basis::s));
    return pt_render(t);
}

struct LawCheck {
    std::string name;
    std::function<std::pair<PTensor, PTensor>(const PTensor&)> sides;
};

}  // namespace

TensorElem coaddition(const SymFunc& f) {
    if (f.degree() > degree_cap()) throw cap_error("coaddition: degree exceeds cap");
    return pt_to_tensor2(pt_coadd(pt_from(f), 0));
}

TensorElem comultiplication(const SymFunc& f) {
    if (f.degree() > degree_cap()) throw cap_error("comultiplication: degree exceeds cap");
    return pt_to_tensor2(pt_comul(pt_from(f), 0));
}

Rat co_zero(const SymFunc& f) { return to_basis(f, Basis::p).coeff(Partition()); }

Rat co_one(const SymFunc& f) {
    Rat total = 0;
    for (const auto& [lam, c] : to_basis(f, Basis::p).terms) total += c;
    return total;
}

SymFunc antipode(const SymFunc& f) {
    SymFunc fp = to_basis(f, Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [lam, c] : fp.terms)
        out.terms[lam] = (lam.length() % 2 == 0) ? c : -c;
    return to_basis(out, f.basis);
}

bool VerifyReport::all_pass() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass; });
}

std::string VerifyReport::render() const {
    std::string out;
    for (const auto& l : laws) {
        out += (l.pass ? "PASS " : "FAIL ") + l.name;
        if (!l.pass) out += "\n  counterexample: " + l.counterexample;
        out += "\n";
    }
    return out;
}

VerifyReport verify_birig_axioms(int max_degree, bool parallel) {
    // Per-slot degrees never exceed max_degree: the co-operations split or
    // duplicate power-sum indices and the codiagonal only recombines slots
    // of one original term.
    if (max_degree > degree_cap())
        throw cap_error("verify_birig_axioms: max_degree must be <= cap");

    std::vector<LawCheck> checks = {
        {"coaddition coassociativity",
         [](const PTensor& t) {
             PTensor a = pt_coadd(t, 0);
             return std::make_pair(pt_coadd(a, 0), pt_coadd(a, 1));
         }},
        {"coaddition cocommutativity",
         [](const PTensor& t) {
             PTensor a = pt_coadd(t, 0);
             return std::make_pair(pt_swap(a, 0, 1), a);
         }},
        {"coaddition counit (co-zero)",
         [](const PTensor& t) {
             return std::make_pair(pt_cozero(pt_coadd(t, 0), 0), t);
         }},
        {"comultiplication coassociativity",
         [](const PTensor& t) {
             PTensor a = pt_comul(t, 0);
             return std::make_pair(pt_comul(a, 0), pt_comul(a, 1));
         }},
        {"comultiplication cocommutativity",
         [](const PTensor& t) {
             PTensor a = pt_comul(t, 0);
             return std::make_pair(pt_swap(a, 0, 1), a);
         }},
        {"comultiplication counit (co-one)",
         [](const PTensor& t) {
             return std::make_pair(pt_coone(pt_comul(t, 0), 0), t);
         }},
        {"co-distributivity",
         [](const PTensor& t) {
             PTensor lhs = pt_coadd(pt_comul(t, 0), 1);
             PTensor rhs = pt_coadd(t, 0);
             rhs = pt_comul(rhs, 0);   // (a, a, b)
             rhs = pt_comul(rhs, 2);   // (a, a, b, b)
             rhs = pt_swap(rhs, 1, 2); // (a, b, a, b)
             rhs = pt_codiag(rhs, 0);  // (a*b, a, b)
             return std::make_pair(lhs, rhs);
         }},
        {"co-absorption",
         [](const PTensor& t) {
             PTensor lhs = pt_cozero(pt_comul(t, 0), 0);
             Rat o = 0;
             for (const auto& [key, c] : t)
                 if (key[0].empty()) o += c;
             return std::make_pair(lhs, pt_constant(o, 1));
         }},
        {"co-negation pentagon",
         [](const PTensor& t) {
             PTensor lhs = pt_codiag(pt_antipode(pt_coadd(t, 0), 1), 0);
             Rat o = 0;
             for (const auto& [key, c] : t)
                 if (key[0].empty()) o += c;
             return std::make_pair(lhs, pt_constant(o, 1));
         }},
    };

    std::vector<Partition> gens;
    for (int n = 0; n <= max_degree; ++n)
        for (const Partition& lam : partitions_of(n)) gens.push_back(lam);

    // Prewarm character tables so the parallel loop only reads.
    for (int n = 0; n <= max_degree; ++n) char_table(n);

    // failures[g][law] = counterexample message, empty when the law holds
    std::vector<std::vector<std::string>> failures(
        gens.size(), std::vector<std::string>(checks.size()));
    parallel_for(gens.size(), parallel, [&](std::size_t g) {
        PTensor t = pt_from(SymFunc::generator(Basis::s, gens[g]));
        for (std::size_t l = 0; l < checks.size(); ++l) {
            auto [lhs, rhs] = checks[l].sides(t);
            if (lhs != rhs)
                failures[g][l] = "lambda = " + to_string(gens[g]) +
                                 ": lhs = " + render_side(lhs) +
                                 ", rhs = " + render_side(rhs);
        }
    });

    VerifyReport report;
    for (std::size_t l = 0; l < checks.size(); ++l) {
        LawResult r;
        r.name = checks[l].name;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (!failures[g][l].empty()) {
                r.pass = false;
                r.counterexample = failures[g][l];
                break;
            }
        }
        report.laws.push_back(std::move(r));
    }
    return report;
}

}  // namespace symring
