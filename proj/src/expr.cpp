#include "symring/expr.hpp"

#include <cctype>
#include <json.hpp>

namespace symring {

namespace {

struct Scanner {
    const std::string& src;
    std::size_t pos = 0;

    explicit Scanner(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c))
            throw parse_error(std::string("expected '") + c + "' (" + what + ")", pos);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer", pos);
        return Int(src.substr(start, pos - start));
    }

    // unsigned rational: integer ['/' integer]
    Rat coeff() {
        Int num = integer();
        if (accept('/')) {
            std::size_t den_pos = pos;
            Int den = integer();
            if (den == 0) throw parse_error("zero denominator", den_pos);
            return Rat(num, den);
        }
        return Rat(num);
    }

    Partition partition() {
        expect('[', "partition");
        std::vector<int> parts;
        if (!accept(']')) {
            do {
                std::size_t at = pos;
                Int part = integer();
                if (part < 1 || part > 1000) throw parse_error("invalid part", at);
                parts.push_back(static_cast<int>(part));
            } while (accept(','));
            expect(']', "partition");
        }
        std::size_t at = pos;
        try {
            return Partition(std::move(parts));
        } catch (const domain_error& e) {
            throw parse_error(e.what(), at);
        }
    }
};

}  // namespace

SymFunc parse_expression(const std::string& src) {
    Scanner sc(src);
    SymFunc total(Basis::p);
    bool seen_basis = false;
    Basis common = Basis::p;
    bool mixed = false;

    bool first = true;
    while (true) {
        if (sc.eof()) {
            if (first) throw parse_error("empty expression", sc.pos);
            break;
        }
        Rat sign = 1;
        if (sc.accept('-'))
            sign = -1;
        else if (sc.accept('+')) {
            // explicit plus
        } else if (!first) {
            throw parse_error("expected '+' or '-'", sc.pos);
        }
        first = false;

        if (sc.eof()) throw parse_error("expected term", sc.pos);
        char c = sc.peek();
        Rat coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = sc.coeff();
            have_coeff = true;
            if (!sc.accept('*')) {
                // bare constant term
                total = add(total, SymFunc::constant(sign * coeff, Basis::p));
                continue;
            }
            c = sc.peek();
        }
        std::size_t tag_pos = sc.pos;
        Basis b;
        try {
            b = basis_from_char(c);
        } catch (const domain_error&) {
            throw parse_error(have_coeff ? "expected basis tag after '*'"
                                         : "expected term",
                              tag_pos);
        }
        ++sc.pos;
        Partition lam = sc.partition();
        if (!seen_basis) {
            seen_basis = true;
            common = b;
        } else if (b != common) {
            mixed = true;
        }
        total = add(total, scale(sign * coeff, SymFunc::generator(b, lam)));
    }
    if (seen_basis && !mixed) return to_basis(total, common);
    return total;
}

Partition parse_partition(const std::string& src) {
    std::string s = src;
    if (s.empty() || s[0] != '[') s = "[" + s + "]";
    Scanner sc(s);
    Partition p = sc.partition();
    if (!sc.eof()) throw parse_error("trailing characters after partition", sc.pos);
    return p;
}

std::string symfunc_to_json(const SymFunc& f) {
    nlohmann::json out;
    out["basis"] = std::string(1, basis_char(f.basis));
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : f.terms)
        terms.push_back({{"partition", lam.parts}, {"coeff", rat_to_string(c)}});
    out["terms"] = terms;
    return out.dump();
}

SymFunc symfunc_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("symfunc JSON: ") + e.what());
    }
    std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1) throw domain_error("symfunc JSON: bad basis tag");
    SymFunc f(basis_from_char(b[0]));
    for (const auto& term : j.at("terms")) {
        Partition lam(term.at("partition").get<std::vector<int>>());
        f.terms[lam] += rat_from_string(term.at("coeff").get<std::string>());
    }
    normalize(f);
    return f;
}

std::string tensor_to_json(const TensorElem& t) {
    nlohmann::json out;
    out["left_basis"] = std::string(1, basis_char(t.left));
    out["right_basis"] = std::string(1, basis_char(t.right));
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : t.terms)
        terms.push_back({{"left", key.first.parts},
                         {"right", key.second.parts},
                         {"coeff", rat_to_string(c)}});
    out["terms"] = terms;
    return out.dump();
}

TensorElem tensor_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("tensor JSON: ") + e.what());
    }
    TensorElem t;
    t.left = basis_from_char(j.at("left_basis").get<std::string>().at(0));
    t.right = basis_from_char(j.at("right_basis").get<std::string>().at(0));
    for (const auto& term : j.at("terms")) {
        Partition a(term.at("left").get<std::vector<int>>());
        Partition b(term.at("right").get<std::vector<int>>());
        t.terms[{a, b}] += rat_from_string(term.at("coeff").get<std::string>());
    }
    normalize(t);
    return t;
}

std::string char_table_to_json(const CharacterTable& t) {
    nlohmann::json out;
    out["n"] = t.n;
    nlohmann::json classes = nlohmann::json::array();
    nlohmann::json z = nlohmann::json::array();
    for (std::size_t j = 0; j < t.classes.size(); ++j) {
        classes.push_back(t.classes[j].parts);
        z.push_back(std::to_string(t.z[j]));
    }
    out["classes"] = classes;
    out["z"] = z;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
        nlohmann::json values = nlohmann::json::array();
        for (long long v : t.chi[i]) values.push_back(std::to_string(v));
        rows.push_back({{"partition", t.classes[i].parts}, {"values", values}});
    }
    out["rows"] = rows;
    return out.dump();
}

std::string report_to_json(const VerifyReport& r) {
    nlohmann::json laws = nlohmann::json::array();
    for (const auto& l : r.laws) {
        nlohmann::json entry;
        entry["name"] = l.name;
        entry["pass"] = l.pass;
        if (!l.pass) entry["counterexample"] = l.counterexample;
        laws.push_back(entry);
    }
    nlohmann::json out;
    out["laws"] = laws;
    out["all_pass"] = r.all_pass();
    return out.dump();
}

}  // namespace symring
