#include "dcot/distance.hpp"

#include <cmath>

namespace dcot {

namespace {

constexpr double kZeroRowTol = 1e-12;
constexpr Index kBlock = 64;

void check_dims(const EmbeddingMatrix& a, const EmbeddingMatrix& b,
                bool require_square) {
  if (a.dim() != b.dim()) {
    throw DimMismatch("embedding dims differ: " + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()));
  }
  if (require_square && a.rows() != b.rows()) {
    throw DimMismatch("row counts differ: " + std::to_string(a.rows()) +
                      " vs " + std::to_string(b.rows()));
  }
}

Vector row_norms_checked(const Matrix& m) {
  Vector norms = m.rowwise().norm();
  for (Index i = 0; i < norms.size(); ++i) {
    if (norms[i] < kZeroRowTol) throw ZeroRow(i);
  }
  return norms;
}

// Rows divided by their norms, reusing the input when already flagged.
Matrix unit_rows(const EmbeddingMatrix& x) {
  if (x.normalized) return x.data;
  const Vector norms = row_norms_checked(x.data);
  return norms.cwiseInverse().asDiagonal() * x.data;
}

}  // namespace

EmbeddingMatrix l2_normalize_rows(const EmbeddingMatrix& x) {
  const Vector norms = row_norms_checked(x.data);
  EmbeddingMatrix out;
  out.data = norms.cwiseInverse().asDiagonal() * x.data;
  out.normalized = true;
  return out;
}

Matrix cosine_similarity_matrix(const EmbeddingMatrix& a,
                                const EmbeddingMatrix& b, DistanceImpl impl) {
  check_dims(a, b, /*require_square=*/false);
  const Index n = a.rows();
  const Index m = b.rows();
  if (impl == DistanceImpl::Blocked) {
    const Matrix an = unit_rows(a);
    const Matrix bn = unit_rows(b);
    Matrix out(n, m);
    for (Index i0 = 0; i0 < n; i0 += kBlock) {
      const Index ib = std::min(kBlock, n - i0);
      for (Index j0 = 0; j0 < m; j0 += kBlock) {
        const Index jb = std::min(kBlock, m - j0);
        out.block(i0, j0, ib, jb).noalias() =
            an.middleRows(i0, ib) * bn.middleRows(j0, jb).transpose();
      }
    }
    return out;
  }
  const Vector na = a.normalized ? Vector::Ones(n) : row_norms_checked(a.data);
  const Vector nb = b.normalized ? Vector::Ones(m) : row_norms_checked(b.data);
  Matrix out(n, m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      out(i, j) = a.data.row(i).dot(b.data.row(j)) / (na[i] * nb[j]);
    }
  }
  return out;
}

CostMatrix cosine_distance_matrix(const EmbeddingMatrix& a,
                                  const EmbeddingMatrix& b,
                                  DistanceImpl impl) {
  check_dims(a, b, /*require_square=*/true);
  return (1.0 - cosine_similarity_matrix(a, b, impl).array())
      .cwiseMax(0.0)
      .cwiseMin(2.0);
}

CostMatrix euclidean_distance_matrix(const EmbeddingMatrix& a,
                                     const EmbeddingMatrix& b,
                                     DistanceImpl impl) {
  check_dims(a, b, /*require_square=*/true);
  const Index n = a.rows();
  CostMatrix out(n, n);
  if (impl == DistanceImpl::Blocked) {
    // Row-tiled squared differences; the |a|^2 + |b|^2 - 2ab expansion is
    // avoided because it cancels catastrophically near zero.
    for (Index i0 = 0; i0 < n; i0 += kBlock) {
      const Index ib = std::min(kBlock, n - i0);
      for (Index i = i0; i < i0 + ib; ++i) {
        out.row(i) = (b.data.rowwise() - a.data.row(i))
                         .rowwise()
                         .norm()
                         .transpose();
      }
    }
    return out;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      double acc = 0.0;
      for (Index k = 0; k < a.dim(); ++k) {
        const double d = a.data(i, k) - b.data(j, k);
        acc += d * d;
      }
      out(i, j) = std::sqrt(acc);
    }
  }
  return out;
}

}  // namespace dcot
