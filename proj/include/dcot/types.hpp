#pragma once

#include <Eigen/Dense>

#include "dcot/errors.hpp"

namespace dcot {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using RefConstMat = Eigen::Ref<const Matrix>;
using RefConstVec = Eigen::Ref<const Vector>;

/// M x M matrix of non-negative, finite transport costs. Cosine-distance
/// construction bounds entries in [0, 2].
using CostMatrix = Matrix;

/// M embedded vectors of dimension d, one per row. `normalized` records that
/// every row has unit Euclidean norm (within 1e-9), which lets similarity
/// kernels skip the re-normalization.
struct EmbeddingMatrix {
  Matrix data;
  bool normalized = false;

  EmbeddingMatrix() = default;
  explicit EmbeddingMatrix(Matrix m, bool is_normalized = false)
      : data(std::move(m)), normalized(is_normalized) {}

  Index rows() const { return data.rows(); }
  Index dim() const { return data.cols(); }
};

inline bool all_finite(const RefConstMat& m) { return m.allFinite(); }

}  // namespace dcot
