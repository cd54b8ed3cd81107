#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sdt/dominoes.hpp"
#include "sdt/partitions.hpp"
#include "sdt/tableaux.hpp"

namespace sdt {

using Coeff = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

// Exact integer polynomial in a fixed number of variables. Terms are keyed
// by dense exponent vectors of length n_vars; zero coefficients are never
// stored, so equality is plain member comparison.
struct SparsePolynomial {
    int n_vars = 0;
    std::map<Exponents, Coeff> terms;

    bool operator==(const SparsePolynomial& o) const {
        return n_vars == o.n_vars && terms == o.terms;
    }
    bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }
    bool is_zero() const { return terms.empty(); }
};

SparsePolynomial poly_zero(int n_vars);
SparsePolynomial poly_const(int n_vars, const Coeff& c);
SparsePolynomial poly_monomial(Exponents e, const Coeff& c = 1);

// Drops the stored term when the sum reaches zero.
void add_term(SparsePolynomial& p, const Exponents& e, const Coeff& c);
Coeff coefficient(const SparsePolynomial& p, const Exponents& e);

SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);

// Value at x1 = ... = xn = 1: the coefficient sum, e.g. a tableau count.
Coeff at_ones(const SparsePolynomial& p);

// True iff p is fixed by every adjacent variable swap.
bool is_symmetric(const SparsePolynomial& p);

// Terms sorted by exponent vector, lexicographically largest first:
// "1 * x1^2 + 2 * x1 x2 + 1 * x2^2"; "0" when empty.
std::string format_polynomial(const SparsePolynomial& p);

// The monomial x^t of a tableau or paving evaluation.
Exponents exponents_from_eval(const Evaluation& e, int n_vars);

// Sum of the distinct monomials whose exponent multiset is theta.
SparsePolynomial monomial_sym(const Partition& theta, int n);

// Tableau generating functions over letters bounded by n. Each is the exact
// n-variable polynomial, not a truncation: a tableau using letters <= n is
// counted once, and no other monomials exist in n variables.
SparsePolynomial schur(const Partition& lambda, int n);
SparsePolynomial qschur(const StrictPartition& lambda, int n);
SparsePolynomial pschur(const StrictPartition& lambda, int n);

SparsePolynomial domino_gf(const Partition& shape, int n);
SparsePolynomial shdt_gf(const Partition& shape, int n, bool p_variant);

// Tableau counts at fixed evaluation theta; 0 whenever |theta| != |shape|/2.
long long kostka2(const Partition& shape, const Partition& theta);
long long kostka2_shifted(const Partition& shape, const Partition& theta, bool p_variant);

enum class IdentityKind { schur, qschur, pschur };
std::string to_string(IdentityKind kind);
IdentityKind parse_identity_kind(const std::string& text);

// lhs is the tableau generating function of the shape, rhs the product of
// the two quotient-shape polynomials; diff = lhs - rhs is empty exactly
// when the identity holds.
struct IdentityReport {
    Partition shape;
    IdentityKind kind = IdentityKind::schur;
    int n = 0;
    bool ok = false;
    SparsePolynomial lhs;
    SparsePolynomial rhs;
    SparsePolynomial diff;
};

IdentityReport verify_product_identity(const Partition& shape, int n, IdentityKind kind);

} // namespace sdt
