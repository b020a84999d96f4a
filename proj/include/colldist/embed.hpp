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

#ifndef COLLDIST_EMBED_HPP
#define COLLDIST_EMBED_HPP

#include <cstddef>
#include <vector>

#include "colldist/matrix.hpp"

namespace colldist {

// A Euclidean embedding of n points in m dimensions.  Rows of coords are
// points; columns are centered.  The eigenvalue spectrum of the doubly
// centered squared-distance matrix is reported in full, descending: negative
// tail mass diagnoses how far the input was from Euclidean-realizable.
// Stress is the normalized squared residual between embedded and requested
// distances, 0 for a perfect fit.
struct Embedding {
  Matrix coords;
  std::vector<double> eigenvalues;
  double stress = 0.0;

  std::size_t points() const { return coords.rows(); }
  std::size_t dimension() const { return coords.cols(); }
};

// Checks symmetry (within tol), a zero diagonal (within tol), finiteness and
// non-negativity; throws InvalidInputError otherwise.
void validate_distance_matrix(const DistanceMatrix& d, double tol = 1e-9);

// Classical (spectral) multidimensional scaling: double-center the squared
// distances, eigendecompose, and keep the top `dim` eigenvectors scaled by
// the square roots of their (clamped to zero) eigenvalues.  Deterministic:
// each eigenvector is oriented so its first non-vanishing entry is positive.
Embedding classical_mds(const DistanceMatrix& d, std::size_t dim);

struct AlignmentResult {
  Embedding aligned;
  double residual = 0.0;
};

// Rigidly aligns embedding `b` onto `a`: centers both, applies the
// orthogonal map (rotation or reflection, never scaling) minimizing the
// Frobenius residual, then translates onto a's centroid.  Within-embedding
// pairwise distances are untouched.
AlignmentResult procrustes_align(const Embedding& a, const Embedding& b);

}  // namespace colldist

#endif  // COLLDIST_EMBED_HPP
