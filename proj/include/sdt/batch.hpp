#pragma once

#include <vector>

#include "sdt/symfunc.hpp"

namespace sdt {

// Shapes eligible for the identity kind, ascending weight, descending lex
// within a weight (the partitions_of stream order). Weight 0 contributes the
// empty shape, so the list is never empty for max_weight >= 0.
std::vector<Partition> admissible_shapes(IdentityKind kind, int max_weight);

// One verification job per admissible shape. `parallel` fans the jobs out
// with OpenMP; results come back in admissible_shapes order either way.
std::vector<IdentityReport> verify_all(IdentityKind kind, int max_weight, int n, bool parallel);

// OpenMP twins of domino_gf / shdt_gf: the pavings of the shape are listed
// up front, labeled concurrently, and the per-paving sums merged in listing
// order. Bit-identical to the serial functions, which stay as the reference.
SparsePolynomial domino_gf_batch(const Partition& shape, int n, bool parallel = true);
SparsePolynomial shdt_gf_batch(const Partition& shape, int n, bool p_variant,
                               bool parallel = true);

} // namespace sdt
