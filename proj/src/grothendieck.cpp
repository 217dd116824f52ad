#include "symring/grothendieck.hpp"

#include <json.hpp>

#include "symring/characters.hpp"

namespace symring {

SymFunc embed(const PosElement& p) {
    SymFunc f(Basis::s);
    for (const auto& [lam, m] : p.terms) f.terms[lam] = m;
    normalize(f);
    return f;
}

std::optional<PosElement> is_schur_positive(const SymFunc& f) {
    SymFunc fs = to_basis(f, Basis::s);
    PosElement out;
    for (const auto& [lam, c] : fs.terms) {
        if (!is_integer(c) || c < 0) return std::nullopt;
        out.terms[lam] = static_cast<long long>(numerator(c));
    }
    return out;
}

std::pair<PosElement, PosElement> split_pos_neg(const SymFunc& f) {
    SymFunc fs = to_basis(f, Basis::s);
    PosElement plus, minus;
    for (const auto& [lam, c] : fs.terms) {
        if (!is_integer(c))
            throw domain_error("split_pos_neg: non-integer coefficient on s" +
                               to_string(lam));
        long long v = static_cast<long long>(numerator(c));
        if (v > 0)
            plus.terms[lam] = v;
        else
            minus.terms[lam] = -v;
    }
    return {plus, minus};
}

SymFunc conegation_sign_rule(const PosElement& rho) {
    SymFunc out(Basis::s);
    for (const auto& [lam, m] : rho.terms) {
        Partition twisted = tensor_with_sign(lam);
        Rat sign = (lam.size() % 2 == 0) ? 1 : -1;
        out.terms[twisted] += sign * m;
    }
    normalize(out);
    return out;
}

void validate(const TwoTermComplex& c) {
    for (const auto& [lam, piece] : c.pieces) {
        if (piece.m0 < 0 || piece.m1 < 0)
            throw domain_error("complex: negative multiplicity at " + to_string(lam));
        if (piece.d0.rows != piece.m1 || piece.d0.cols != piece.m0)
            throw domain_error("complex: D0 must be m1 x m0 at " + to_string(lam));
        if (piece.d1.rows != piece.m0 || piece.d1.cols != piece.m1)
            throw domain_error("complex: D1 must be m0 x m1 at " + to_string(lam));
        if (!mul(piece.d1, piece.d0).is_zero() || !mul(piece.d0, piece.d1).is_zero())
            throw domain_error("complex: graded condition D1 D0 = D0 D1 = 0 fails at " +
                               to_string(lam));
    }
}

std::pair<PosElement, PosElement> homology(const TwoTermComplex& c) {
    validate(c);
    PosElement h0, h1;
    for (const auto& [lam, piece] : c.pieces) {
        int r0 = rank(piece.d0);
        int r1 = rank(piece.d1);
        int a = piece.m0 - r0 - r1;
        int b = piece.m1 - r0 - r1;
        if (a < 0 || b < 0)
            throw domain_error("complex: negative homology multiplicity at " +
                               to_string(lam));
        if (a > 0) h0.terms[lam] = a;
        if (b > 0) h1.terms[lam] = b;
    }
    return {h0, h1};
}

SymFunc euler_char(const TwoTermComplex& c) {
    validate(c);
    SymFunc out(Basis::s);
    for (const auto& [lam, piece] : c.pieces)
        out.terms[lam] = piece.m0 - piece.m1;
    normalize(out);
    return out;
}

TwoTermComplex mapping_cone_Mx() {
    TwoTermComplex c;
    TwoTermComplex::Piece piece;
    piece.m0 = 1;
    piece.m1 = 1;
    piece.d0 = ExactMatrix(1, 1);
    piece.d0.at(0, 0) = 1;
    piece.d1 = ExactMatrix(1, 1);
    c.pieces[Partition({1})] = piece;
    return c;
}

TwoTermComplex random_two_term_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> size_dist(0, 3);
    std::uniform_int_distribution<int> entry_dist(-2, 2);
    std::uniform_int_distribution<int> npieces_dist(1, 3);

    std::vector<Partition> shapes;
    for (int n = 0; n <= 3; ++n)
        for (const Partition& lam : partitions_of(n)) shapes.push_back(lam);
    std::uniform_int_distribution<std::size_t> shape_dist(0, shapes.size() - 1);

    TwoTermComplex c;
    int npieces = npieces_dist(rng);
    for (int k = 0; k < npieces; ++k) {
        const Partition& lam = shapes[shape_dist(rng)];
        TwoTermComplex::Piece piece;
        piece.m0 = size_dist(rng);
        piece.m1 = size_dist(rng);
        piece.d0 = ExactMatrix(piece.m1, piece.m0);
        for (Rat& x : piece.d0.data) x = entry_dist(rng);
        // D1 = N * M * L with N a null-space basis of D0 and L a left
        // null-space basis, so D0 D1 = 0 and D1 D0 = 0 by construction.
        ExactMatrix nsp = nullspace(piece.d0);        // m0 x k
        ExactMatrix lns = left_nullspace(piece.d0);   // k' x m1
        ExactMatrix mid(nsp.cols, lns.rows);
        for (Rat& x : mid.data) x = entry_dist(rng);
        piece.d1 = mul(mul(nsp, mid), lns);           // m0 x m1
        c.pieces[lam] = piece;
    }
    validate(c);
    return c;
}

namespace {

nlohmann::json matrix_to_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ExactMatrix matrix_from_json(const nlohmann::json& j, int rows, int cols) {
    ExactMatrix m(rows, cols);
    if (static_cast<int>(j.size()) != rows)
        throw domain_error("complex JSON: matrix row count mismatch");
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw domain_error("complex JSON: matrix column count mismatch");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = rat_from_string(j[i][c].get<std::string>());
    }
    return m;
}

}  // namespace

std::string complex_to_json(const TwoTermComplex& c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [lam, piece] : c.pieces) {
        nlohmann::json entry;
        entry["partition"] = lam.parts;
        entry["m0"] = piece.m0;
        entry["m1"] = piece.m1;
        entry["D0"] = matrix_to_json(piece.d0);
        entry["D1"] = matrix_to_json(piece.d1);
        out.push_back(entry);
    }
    return out.dump();
}

TwoTermComplex complex_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("complex JSON: ") + e.what());
    }
    TwoTermComplex c;
    for (const auto& entry : j) {
        Partition lam(entry.at("partition").get<std::vector<int>>());
        TwoTermComplex::Piece piece;
        piece.m0 = entry.at("m0").get<int>();
        piece.m1 = entry.at("m1").get<int>();
        piece.d0 = matrix_from_json(entry.at("D0"), piece.m1, piece.m0);
        piece.d1 = matrix_from_json(entry.at("D1"), piece.m0, piece.m1);
        c.pieces[lam] = piece;
    }
    validate(c);
    return c;
}

}  // namespace symring
