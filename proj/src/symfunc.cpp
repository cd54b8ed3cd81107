#include "sdt/symfunc.hpp"

#include <algorithm>

namespace sdt {

namespace {

void check_same_vars(const SparsePolynomial& a, const SparsePolynomial& b, const char* what) {
    require(a.n_vars == b.n_vars,
            std::string(what) + ": operands have " + std::to_string(a.n_vars) + " and " +
                std::to_string(b.n_vars) + " variables");
}

void check_vars(int n, const char* what) {
    require(n >= 1, std::string(what) + ": need at least one variable");
}

} // namespace

SparsePolynomial poly_zero(int n_vars) {
    check_vars(n_vars, "poly_zero");
    return SparsePolynomial{n_vars, {}};
}

SparsePolynomial poly_const(int n_vars, const Coeff& c) {
    SparsePolynomial p = poly_zero(n_vars);
    add_term(p, Exponents(n_vars, 0), c);
    return p;
}

SparsePolynomial poly_monomial(Exponents e, const Coeff& c) {
    SparsePolynomial p = poly_zero(static_cast<int>(e.size()));
    for (int x : e) require(x >= 0, "poly_monomial: negative exponent");
    add_term(p, e, c);
    return p;
}

void add_term(SparsePolynomial& p, const Exponents& e, const Coeff& c) {
    internal_check(e.size() == static_cast<size_t>(p.n_vars),
                   "add_term: exponent vector length does not match n_vars");
    if (c == 0) return;
    auto [it, inserted] = p.terms.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
}

Coeff coefficient(const SparsePolynomial& p, const Exponents& e) {
    auto it = p.terms.find(e);
    return it == p.terms.end() ? Coeff(0) : it->second;
}

SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_same_vars(a, b, "polynomial sum");
    SparsePolynomial out = a;
    for (const auto& [e, c] : b.terms) add_term(out, e, c);
    return out;
}

SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_same_vars(a, b, "polynomial difference");
    SparsePolynomial out = a;
    for (const auto& [e, c] : b.terms) add_term(out, e, -c);
    return out;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_same_vars(a, b, "polynomial product");
    SparsePolynomial out = poly_zero(a.n_vars);
    Exponents e(a.n_vars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (int i = 0; i < a.n_vars; ++i) e[i] = ea[i] + eb[i];
            add_term(out, e, ca * cb);
        }
    return out;
}

Coeff at_ones(const SparsePolynomial& p) {
    Coeff total = 0;
    for (const auto& [e, c] : p.terms) total += c;
    return total;
}

bool is_symmetric(const SparsePolynomial& p) {
    for (int i = 0; i + 1 < p.n_vars; ++i) {
        std::map<Exponents, Coeff> swapped;
        for (const auto& [e, c] : p.terms) {
            Exponents f = e;
            std::swap(f[i], f[i + 1]);
            swapped.emplace(std::move(f), c);
        }
        if (swapped != p.terms) return false;
    }
    return true;
}

std::string format_polynomial(const SparsePolynomial& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        Coeff mag = c < 0 ? Coeff(-c) : c;
        out += mag.str();
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            mono += ' ';
            mono += 'x' + std::to_string(i + 1);
            if (e[i] > 1) mono += '^' + std::to_string(e[i]);
        }
        if (!mono.empty()) out += " *" + mono;
    }
    return out;
}

Exponents exponents_from_eval(const Evaluation& e, int n_vars) {
    check_vars(n_vars, "exponents_from_eval");
    Evaluation stripped = eval_stripped(e);
    require(stripped.size() <= static_cast<size_t>(n_vars),
            "exponents_from_eval: evaluation uses more letters than variables");
    stripped.resize(n_vars, 0);
    return stripped;
}

SparsePolynomial monomial_sym(const Partition& theta, int n) {
    check_partition(theta, "monomial_sym");
    check_vars(n, "monomial_sym");
    require(theta.size() <= static_cast<size_t>(n),
            "monomial_sym: " + format_partition(theta) + " has more than " + std::to_string(n) +
                " parts");
    Exponents e(theta.begin(), theta.end());
    e.resize(n, 0);
    std::sort(e.begin(), e.end());
    SparsePolynomial p = poly_zero(n);
    do add_term(p, e, 1);
    while (std::next_permutation(e.begin(), e.end()));
    return p;
}

SparsePolynomial schur(const Partition& lambda, int n) {
    check_partition(lambda, "schur");
    check_vars(n, "schur");
    SparsePolynomial p = poly_zero(n);
    enumerate_young(lambda, n, [&](const YoungTableau& t) {
        add_term(p, exponents_from_eval(evaluation(to_collection(t)), n), 1);
    });
    return p;
}

namespace {

SparsePolynomial shifted_gf(const StrictPartition& lambda, int n, bool p_variant,
                            const char* what) {
    check_strict_partition(lambda, what);
    check_vars(n, what);
    SparsePolynomial p = poly_zero(n);
    enumerate_shifted(lambda, n, p_variant, [&](const ShiftedYoungTableau& t) {
        add_term(p, exponents_from_eval(evaluation(to_collection(t)), n), 1);
    });
    return p;
}

} // namespace

SparsePolynomial qschur(const StrictPartition& lambda, int n) {
    return shifted_gf(lambda, n, false, "qschur");
}

SparsePolynomial pschur(const StrictPartition& lambda, int n) {
    return shifted_gf(lambda, n, true, "pschur");
}

SparsePolynomial domino_gf(const Partition& shape, int n) {
    check_partition(shape, "domino_gf");
    check_vars(n, "domino_gf");
    require(is_pavable(shape),
            "domino_gf: " + format_partition(shape) + " has a non-empty 2-core");
    SparsePolynomial p = poly_zero(n);
    enumerate_domino_tableaux(shape, n, [&](const DominoTableau& t) {
        add_term(p, exponents_from_eval(evaluation(t), n), 1);
    });
    return p;
}

SparsePolynomial shdt_gf(const Partition& shape, int n, bool p_variant) {
    check_partition(shape, "shdt_gf");
    check_vars(n, "shdt_gf");
    require(shpp_shape_ok(shape),
            "shdt_gf: " + format_partition(shape) + " is not a shifted pavable partition");
    SparsePolynomial p = poly_zero(n);
    enumerate_shdt(shape, n, p_variant, [&](const ShiftedDominoTableau& t) {
        add_term(p, exponents_from_eval(evaluation(t), n), 1);
    });
    return p;
}

namespace {

long long count_by_evaluation(const Partition& shape, const Partition& theta, bool shifted,
                              bool p_variant, const char* what) {
    check_partition(shape, what);
    check_partition(theta, what);
    if (2 * weight(theta) != weight(shape)) return 0;
    if (shape.empty()) return 1;
    long long count = 0;
    auto tally = [&](const Paving& t) {
        if (eval_stripped(evaluation(t)) == theta) ++count;
    };
    int max_letter = static_cast<int>(theta.size());
    if (shifted)
        enumerate_shdt(shape, max_letter, p_variant, tally);
    else
        enumerate_domino_tableaux(shape, max_letter, tally);
    return count;
}

} // namespace

long long kostka2(const Partition& shape, const Partition& theta) {
    check_partition(shape, "kostka2");
    require(is_pavable(shape),
            "kostka2: " + format_partition(shape) + " has a non-empty 2-core");
    return count_by_evaluation(shape, theta, false, false, "kostka2");
}

long long kostka2_shifted(const Partition& shape, const Partition& theta, bool p_variant) {
    check_partition(shape, "kostka2_shifted");
    require(shpp_shape_ok(shape), "kostka2_shifted: " + format_partition(shape) +
                                      " is not a shifted pavable partition");
    return count_by_evaluation(shape, theta, true, p_variant, "kostka2_shifted");
}

std::string to_string(IdentityKind kind) {
    switch (kind) {
    case IdentityKind::schur: return "schur";
    case IdentityKind::qschur: return "qschur";
    case IdentityKind::pschur: return "pschur";
    }
    throw internal_error("to_string: unknown identity kind");
}

IdentityKind parse_identity_kind(const std::string& text) {
    if (text == "schur") return IdentityKind::schur;
    if (text == "qschur") return IdentityKind::qschur;
    if (text == "pschur") return IdentityKind::pschur;
    throw domain_error("parse_identity_kind: '" + text +
                       "' is not one of schur, qschur, pschur");
}

IdentityReport verify_product_identity(const Partition& shape, int n, IdentityKind kind) {
    check_partition(shape, "verify_product_identity");
    check_vars(n, "verify_product_identity");
    IdentityReport report;
    report.shape = shape;
    report.kind = kind;
    report.n = n;
    QuotientPair q = two_quotient(shape);
    if (kind == IdentityKind::schur) {
        report.lhs = domino_gf(shape, n);
        report.rhs = schur(q.mu, n) * schur(q.nu, n);
    } else {
        bool p_variant = kind == IdentityKind::pschur;
        report.lhs = shdt_gf(shape, n, p_variant);
        StrictPartition mu = unpad_shape(q.mu);
        StrictPartition nu = unpad_shape(q.nu);
        report.rhs = p_variant ? pschur(mu, n) * pschur(nu, n) : qschur(mu, n) * qschur(nu, n);
    }
    report.diff = report.lhs - report.rhs;
    report.ok = report.diff.is_zero();
    return report;
}

} // namespace sdt
