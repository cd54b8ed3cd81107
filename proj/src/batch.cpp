#include "sdt/batch.hpp"

#include <exception>

namespace sdt {

namespace {

// OpenMP regions must not leak exceptions; the first one is kept and
// rethrown after the join.
struct FirstError {
    std::exception_ptr ptr;

    template <typename F>
    void run(F&& f) {
        try {
            f();
        } catch (...) {
#pragma omp critical(sdt_batch_first_error)
            if (!ptr) ptr = std::current_exception();
        }
    }
    void rethrow() const {
        if (ptr) std::rethrow_exception(ptr);
    }
};

std::vector<Paving> list_pavings(const Partition& shape) {
    std::vector<Paving> out;
    enumerate_pavings(shape, [&](const Paving& p) { out.push_back(p); });
    return out;
}

SparsePolynomial merge_partials(int n, const std::vector<SparsePolynomial>& parts) {
    SparsePolynomial total = poly_zero(n);
    for (const SparsePolynomial& part : parts)
        if (!part.is_zero()) total = total + part;
    return total;
}

} // namespace

std::vector<Partition> admissible_shapes(IdentityKind kind, int max_weight) {
    require(max_weight >= 0, "admissible_shapes: negative weight bound");
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; w += 2)
        for (const Partition& shape : partitions_of(w)) {
            bool ok = kind == IdentityKind::schur ? is_pavable(shape) : shpp_shape_ok(shape);
            if (ok) out.push_back(shape);
        }
    return out;
}

std::vector<IdentityReport> verify_all(IdentityKind kind, int max_weight, int n, bool parallel) {
    std::vector<Partition> shapes = admissible_shapes(kind, max_weight);
    std::vector<IdentityReport> reports(shapes.size());
    FirstError err;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t i = 0; i < shapes.size(); ++i)
        err.run([&, i] { reports[i] = verify_product_identity(shapes[i], n, kind); });
    err.rethrow();
    return reports;
}

namespace {

SparsePolynomial gf_over_pavings(const Partition& shape, int n, LabelKind kind, bool shifted,
                                 bool parallel) {
    std::vector<Paving> pavings = list_pavings(shape);
    std::vector<SparsePolynomial> parts(pavings.size(), poly_zero(n));
    FirstError err;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (size_t i = 0; i < pavings.size(); ++i)
        err.run([&, i] {
            const Paving& p = pavings[i];
            if (shifted &&
                (!is_shpp_paving(p) || canonicalize_shdt(p).dominoes != p.dominoes))
                return;
            enumerate_labelings(p, n, kind, [&](const Paving& labeled) {
                add_term(parts[i], exponents_from_eval(evaluation(labeled), n), 1);
            });
        });
    err.rethrow();
    return merge_partials(n, parts);
}

} // namespace

SparsePolynomial domino_gf_batch(const Partition& shape, int n, bool parallel) {
    check_partition(shape, "domino_gf_batch");
    require(is_pavable(shape),
            "domino_gf_batch: " + format_partition(shape) + " has a non-empty 2-core");
    if (shape.empty()) return poly_const(n, 1);
    return gf_over_pavings(shape, n, LabelKind::domino, false, parallel);
}

SparsePolynomial shdt_gf_batch(const Partition& shape, int n, bool p_variant, bool parallel) {
    check_partition(shape, "shdt_gf_batch");
    require(shpp_shape_ok(shape), "shdt_gf_batch: " + format_partition(shape) +
                                      " is not a shifted pavable partition");
    if (shape.empty()) return poly_const(n, 1);
    return gf_over_pavings(shape, n, p_variant ? LabelKind::shdt_p : LabelKind::shdt_q, true,
                           parallel);
}

} // namespace sdt
