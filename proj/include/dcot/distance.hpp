#pragma once

#include "dcot/types.hpp"

namespace dcot {

/// Distance kernels come in two equivalent implementations: a plain
/// per-entry reference and a blocked one built on matrix products. They must
/// agree to 1e-12 elementwise.
enum class DistanceImpl { Reference, Blocked };

/// Divides every row by its Euclidean norm and sets the `normalized` flag.
/// Throws ZeroRow if a row norm falls below 1e-12.
EmbeddingMatrix l2_normalize_rows(const EmbeddingMatrix& x);

/// Rectangular cosine similarity: out(i, j) = <a_i, b_j> / (|a_i| |b_j|).
/// Rows of A index the output rows. Throws DimMismatch on unequal dims and
/// ZeroRow on a degenerate row.
Matrix cosine_similarity_matrix(const EmbeddingMatrix& a,
                                const EmbeddingMatrix& b,
                                DistanceImpl impl = DistanceImpl::Blocked);

/// Square cost matrix out(i, j) = 1 - cos(a_i, b_j), entries in [0, 2].
/// Requires a.rows == b.rows (the batch transport problems are square).
CostMatrix cosine_distance_matrix(const EmbeddingMatrix& a,
                                  const EmbeddingMatrix& b,
                                  DistanceImpl impl = DistanceImpl::Reference);

/// Square cost matrix out(i, j) = |a_i - b_j|_2.
CostMatrix euclidean_distance_matrix(const EmbeddingMatrix& a,
                                     const EmbeddingMatrix& b,
                                     DistanceImpl impl = DistanceImpl::Reference);

}  // namespace dcot
