#pragma once

#include <functional>
#include <map>
#include <string>

#include "symring/partition.hpp"

namespace symring {

enum class Basis : char { m = 'm', e = 'e', h = 'h', p = 'p', s = 's' };

Basis basis_from_char(char c);
char basis_char(Basis b);

// An element of the ring of symmetric functions: a sparse, basis-tagged map
// from partitions to exact rational coefficients. Zero coefficients are
// never stored; immutable by convention (all operations return new values).
struct SymFunc {
    Basis basis = Basis::s;
    std::map<Partition, Rat> terms;

    SymFunc() = default;
    explicit SymFunc(Basis b) : basis(b) {}

    int degree() const;  // max key size; 0 for the zero element
    bool is_zero() const { return terms.empty(); }
    Rat coeff(const Partition& lam) const;

    bool operator==(const SymFunc& o) const;

    static SymFunc zero(Basis b = Basis::s) { return SymFunc(b); }
    static SymFunc one(Basis b = Basis::s);
    static SymFunc constant(const Rat& c, Basis b = Basis::s);
    // Single basis element b_lam.
    static SymFunc generator(Basis b, const Partition& lam);
};

// Drop zero coefficients; enforce the degree cap.
void normalize(SymFunc& f);

SymFunc to_basis(const SymFunc& f, Basis target);

SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc sub(const SymFunc& f, const SymFunc& g);
SymFunc scale(const Rat& c, const SymFunc& f);
SymFunc mul(const SymFunc& f, const SymFunc& g);

// Coefficient of s_lam in s_mu * s_nu (Littlewood-Richardson coefficient).
long long lr_coeff(const Partition& mu, const Partition& nu, const Partition& lam);

// The ring homomorphism Lambda -> Q determined by p_n -> phi(n).
// phi must be defined for every part size appearing; missing values are a
// domain error (signalled by phi returning no value).
Rat eval_adams(const SymFunc& f, const std::function<Rat(int)>& phi);
Rat eval_adams(const SymFunc& f, const std::map<int, Rat>& phi);

// Principal specialization: f at d equal variables. For Schur terms this is
// the hook-content product prod (d + content) / hook.
Rat eval_principal(const SymFunc& f, int d);

// Multivariate polynomials in N commuting variables: exponent vector -> coeff.
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rat>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Rat& c, const Poly& a);
Poly poly_add(const Poly& a, const Poly& b);

// The monomial realization of f in N variables.
Poly expand_polynomial(const SymFunc& f, int N);

// Canonical rendering in the expression grammar, e.g. "s[2] + 2*s[1,1] - 3".
std::string to_string(const SymFunc& f);

}  // namespace symring
