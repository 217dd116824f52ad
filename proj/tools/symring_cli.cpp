// Command-line interface over the symmetric-function library.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "symring/birig.hpp"
#include "symring/characters.hpp"
#include "symring/expr.hpp"
#include "symring/grothendieck.hpp"
#include "symring/oracle.hpp"
#include "symring/plethysm.hpp"

using namespace symring;

namespace {

struct Options {
    std::string format = "text";
    std::string basis = "s";
};

void print_symfunc(const SymFunc& f, const Options& opt) {
    SymFunc out = to_basis(f, basis_from_char(opt.basis.at(0)));
    if (opt.format == "json")
        std::printf("%s\n", symfunc_to_json(out).c_str());
    else
        std::printf("%s\n", to_string(out).c_str());
}

void print_tensor(const TensorElem& t, const Options& opt) {
    Basis b = basis_from_char(opt.basis.at(0));
    TensorElem out = tensor_to_basis(t, b, b);
    if (opt.format == "json")
        std::printf("%s\n", tensor_to_json(out).c_str());
    else
        std::printf("%s\n", to_string(out).c_str());
}

void print_scalar(const Rat& v, const Options& opt) {
    if (opt.format == "json")
        std::printf("{\"value\":\"%s\"}\n", rat_to_string(v).c_str());
    else
        std::printf("%s\n", rat_to_string(v).c_str());
}

void print_char_table(const CharacterTable& t, const Options& opt) {
    if (opt.format == "json") {
        std::printf("%s\n", char_table_to_json(t).c_str());
        return;
    }
    std::size_t k = t.classes.size();
    std::printf("%-12s", "irrep\\class");
    for (std::size_t j = 0; j < k; ++j)
        std::printf(" %10s", to_string(t.classes[j]).c_str());
    std::printf("\n%-12s", "z");
    for (std::size_t j = 0; j < k; ++j) std::printf(" %10lld", t.z[j]);
    std::printf("\n");
    for (std::size_t i = 0; i < k; ++i) {
        std::printf("%-12s", to_string(t.classes[i]).c_str());
        for (std::size_t j = 0; j < k; ++j) std::printf(" %10lld", t.chi[i][j]);
        std::printf("\n");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric-function calculator: bases, characters, "
                 "co-operations, plethysm and Young-symmetrizer oracles"};
    app.require_subcommand(1);

    Options opt;
    int cap = 12;
    if (const char* env = std::getenv("SYMRING_CAP")) cap = std::atoi(env);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--basis", opt.basis, "output basis (m|e|h|p|s)")
        ->check(CLI::IsMember({"m", "e", "h", "p", "s"}))
        ->capture_default_str();
    app.add_option("--cap", cap, "global degree cap (env SYMRING_CAP)");

    std::string expr_a, expr_b, kind = "add", suite, shape_str, mu_str, nu_str, lam_str;
    int n_arg = 0, dim = 1, adams_n = 1, max_degree = -1;
    bool serial = false;

    auto* convert = app.add_subcommand("convert", "parse an expression and re-express it");
    convert->add_option("expr", expr_a)->required();

    auto* addc = app.add_subcommand("add", "sum of two expressions");
    addc->add_option("lhs", expr_a)->required();
    addc->add_option("rhs", expr_b)->required();

    auto* mulc = app.add_subcommand("mul", "product of two expressions");
    mulc->add_option("lhs", expr_a)->required();
    mulc->add_option("rhs", expr_b)->required();

    auto* plethc = app.add_subcommand("plethysm", "substitution product lhs o rhs");
    plethc->add_option("lhs", expr_a)->required();
    plethc->add_option("rhs", expr_b)->required();

    auto* adamsc = app.add_subcommand("adams", "Adams operation psi^n");
    adamsc->add_option("n", adams_n)->required()->check(CLI::PositiveNumber);
    adamsc->add_option("expr", expr_a)->required();

    auto* coprodc = app.add_subcommand("coprod", "coaddition or comultiplication");
    coprodc->add_option("--kind", kind, "add|mul")
        ->check(CLI::IsMember({"add", "mul"}))
        ->capture_default_str();
    coprodc->add_option("expr", expr_a)->required();

    auto* antipodec = app.add_subcommand("antipode", "co-negation (p_n -> -p_n)");
    antipodec->add_option("expr", expr_a)->required();

    auto* evalc = app.add_subcommand("eval", "principal specialization at d variables");
    evalc->add_option("--dim", dim, "number of variables")->required();
    evalc->add_option("expr", expr_a)->required();

    auto* charc = app.add_subcommand("char", "character table of S_n");
    charc->add_option("--n", n_arg)->required()->check(CLI::PositiveNumber);

    auto* lrc = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lrc->add_option("--mu", mu_str)->required();
    lrc->add_option("--nu", nu_str)->required();
    lrc->add_option("--lambda", lam_str)->required();

    auto* kronc = app.add_subcommand("kronecker", "Kronecker coefficient");
    kronc->add_option("--lambda", lam_str)->required();
    kronc->add_option("--mu", mu_str)->required();
    kronc->add_option("--nu", nu_str)->required();

    auto* schurdimc =
        app.add_subcommand("schur-dim", "Young-symmetrizer rank vs hook-content value");
    schurdimc->add_option("--shape", shape_str)->required();
    schurdimc->add_option("--dim", dim)->required();

    auto* verifyc = app.add_subcommand("verify", "run an axiom verification suite");
    verifyc->add_option("--suite", suite, "birig|plethory")
        ->required()
        ->check(CLI::IsMember({"birig", "plethory"}));
    verifyc->add_option("--max-degree", max_degree, "default: 8 birig, 6 plethory");
    verifyc->add_flag("--serial", serial, "disable internal parallelism");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        set_degree_cap(cap);

        if (*convert) {
            print_symfunc(parse_expression(expr_a), opt);
        } else if (*addc) {
            print_symfunc(add(parse_expression(expr_a), parse_expression(expr_b)), opt);
        } else if (*mulc) {
            print_symfunc(mul(parse_expression(expr_a), parse_expression(expr_b)), opt);
        } else if (*plethc) {
            print_symfunc(plethysm(parse_expression(expr_a), parse_expression(expr_b)),
                          opt);
        } else if (*adamsc) {
            print_symfunc(adams(adams_n, parse_expression(expr_a)), opt);
        } else if (*coprodc) {
            SymFunc f = parse_expression(expr_a);
            print_tensor(kind == "add" ? coaddition(f) : comultiplication(f), opt);
        } else if (*antipodec) {
            print_symfunc(antipode(parse_expression(expr_a)), opt);
        } else if (*evalc) {
            print_scalar(eval_principal(parse_expression(expr_a), dim), opt);
        } else if (*charc) {
            print_char_table(char_table(n_arg), opt);
        } else if (*lrc) {
            long long c = lr_coeff(parse_partition(mu_str), parse_partition(nu_str),
                                   parse_partition(lam_str));
            print_scalar(Rat(c), opt);
        } else if (*kronc) {
            long long c = kronecker_coeff(parse_partition(lam_str),
                                          parse_partition(mu_str),
                                          parse_partition(nu_str));
            print_scalar(Rat(c), opt);
        } else if (*schurdimc) {
            Partition shape = parse_partition(shape_str);
            int r = schur_image_dim(shape, dim);
            Rat hc = eval_principal(SymFunc::generator(Basis::s, shape), dim);
            if (opt.format == "json")
                std::printf("{\"rank\":%d,\"hook_content\":\"%s\"}\n", r,
                            rat_to_string(hc).c_str());
            else
                std::printf("rank %d   hook-content %s\n", r, rat_to_string(hc).c_str());
        } else if (*verifyc) {
            if (max_degree < 0) max_degree = (suite == "birig") ? 8 : 6;
            VerifyReport r = (suite == "birig")
                                 ? verify_birig_axioms(max_degree, !serial)
                                 : verify_plethory(max_degree, !serial);
            if (opt.format == "json")
                std::printf("%s\n", report_to_json(r).c_str());
            else
                std::printf("%s", r.render().c_str());
            if (!r.all_pass()) return 2;
        }
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
