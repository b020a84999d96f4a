// Copyright 2026 The colldist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colldist/embed.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <vector>

#include "colldist/errors.hpp"

namespace colldist {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

Matrix from_eigen(const Eigen::MatrixXd& m) {
  Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

// Orients a column so its first entry of noticeable magnitude is positive.
void fix_sign(Eigen::Ref<Eigen::VectorXd> column) {
  for (Eigen::Index i = 0; i < column.size(); ++i) {
    if (std::abs(column(i)) > 1e-12) {
      if (column(i) < 0.0) column = -column;
      return;
    }
  }
}

double embedding_stress(const Eigen::MatrixXd& coords, const DistanceMatrix& d) {
  const Eigen::Index n = coords.rows();
  double num = 0.0;
  double den = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double target = d(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      const double realized = (coords.row(i) - coords.row(j)).norm();
      num += (realized - target) * (realized - target);
      den += target * target;
    }
  }
  return den == 0.0 ? 0.0 : num / den;
}

}  // namespace

void validate_distance_matrix(const DistanceMatrix& d, double tol) {
  if (!d.square())
    throw InvalidInputError("distance matrix must be square");
  const std::size_t n = d.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(d(i, i)) || std::abs(d(i, i)) > tol)
      throw InvalidInputError("distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = d(i, j);
      const double b = d(j, i);
      if (!std::isfinite(a) || !std::isfinite(b))
        throw InvalidInputError("distance matrix entries must be finite");
      if (a < 0.0 || b < 0.0)
        throw InvalidInputError("distance matrix entries must be non-negative");
      if (std::abs(a - b) > tol)
        throw InvalidInputError("distance matrix must be symmetric");
    }
  }
}

Embedding classical_mds(const DistanceMatrix& d, std::size_t dim) {
  validate_distance_matrix(d);
  const std::size_t n = d.rows();
  if (n == 0) throw InvalidInputError("distance matrix must be non-empty");
  if (dim < 1 || dim > n)
    throw InvalidInputError("embedding dimension must lie between 1 and the point count");

  // Double centering of the squared distances turns them into Gram-matrix
  // form: B = -1/2 J (D.*D) J with J = I - (1/n) 1 1^T.
  const Eigen::Index en = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd squared(en, en);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      squared(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          d(i, j) * d(i, j);
  const Eigen::VectorXd row_means = squared.rowwise().mean();
  const double total_mean = squared.mean();
  Eigen::MatrixXd gram(en, en);
  for (Eigen::Index i = 0; i < en; ++i)
    for (Eigen::Index j = 0; j < en; ++j)
      gram(i, j) = -0.5 * (squared(i, j) - row_means(i) - row_means(j) + total_mean);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success)
    throw Error("eigendecomposition failed to converge");

  // Eigen reports eigenvalues ascending; flip to descending.
  Embedding out;
  out.eigenvalues.resize(n);
  Eigen::MatrixXd coords(en, static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < n; ++k)
    out.eigenvalues[k] = solver.eigenvalues()(static_cast<Eigen::Index>(n - 1 - k));
  for (std::size_t k = 0; k < dim; ++k) {
    Eigen::VectorXd column = solver.eigenvectors().col(static_cast<Eigen::Index>(n - 1 - k));
    fix_sign(column);
    const double scale = std::sqrt(std::max(out.eigenvalues[k], 0.0));
    coords.col(static_cast<Eigen::Index>(k)) = column * scale;
  }
  // Eigenvectors of the centered Gram matrix are centered up to rounding;
  // subtract the column means so the invariant holds exactly.  Pairwise
  // distances are unaffected.
  const Eigen::RowVectorXd column_means = coords.colwise().mean();
  coords.rowwise() -= column_means;

  out.coords = from_eigen(coords);
  out.stress = embedding_stress(coords, d);
  return out;
}

AlignmentResult procrustes_align(const Embedding& a, const Embedding& b) {
  if (a.points() != b.points() || a.dimension() != b.dimension())
    throw InvalidInputError("embeddings must share their shape to be aligned");

  const Eigen::MatrixXd ca_full = to_eigen(a.coords);
  const Eigen::MatrixXd cb_full = to_eigen(b.coords);
  const Eigen::RowVectorXd mean_a = ca_full.colwise().mean();
  const Eigen::RowVectorXd mean_b = cb_full.colwise().mean();
  const Eigen::MatrixXd ca = ca_full.rowwise() - mean_a;
  const Eigen::MatrixXd cb = cb_full.rowwise() - mean_b;

  // Orthogonal map maximizing trace(Q^T cb^T ca), i.e. Q = U V^T from the
  // SVD of cb^T ca.
  const Eigen::MatrixXd cross = cb.transpose() * ca;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd q = svd.matrixU() * svd.matrixV().transpose();

  Eigen::MatrixXd aligned = cb * q;
  AlignmentResult result;
  result.residual = (ca - aligned).norm();
  aligned.rowwise() += mean_a;

  result.aligned = b;
  result.aligned.coords = from_eigen(aligned);
  return result;
}

}  // namespace colldist
