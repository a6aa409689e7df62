#pragma once

#include <vector>

#include "ptt/cubic.hpp"
#include "ptt/types.hpp"

namespace ptt {

struct JordanBlock {
  Complex eigenvalue;
  int size;  // 1, 2 or 3; block sizes sum to 3
};

/// Eigen/Jordan decomposition H = V h V^{-1} of a 3x3 complex matrix.
/// h is diagonal except for superdiagonal 1s inside declared Jordan blocks;
/// V columns hold, per block, the eigenvector followed by its chain vectors.
struct SpectralDecomposition {
  std::array<Complex, 3> eigenvalues{};  // in V column order, repeated per block
  std::vector<JordanBlock> blocks;
  std::vector<Vec3> eigenvectors;                // one per block
  std::vector<std::vector<Vec3>> generalized;    // chain tails, one list per block
  Mat3 similarity = Mat3::Identity();            // V
  Mat3 canonical = Mat3::Zero();                 // h
  Mat3 similarity_inv = Mat3::Identity();        // V^{-1}
  // Equal eigenvalues with a full eigenspace (Hermitian-style degeneracy);
  // reported as diagonal blocks, not an exceptional point.
  bool degenerate_diagonalizable = false;
};

/// Eigenvalues from the characteristic cubic plus Jordan structure.
///
/// Roots closer than max(tol, 8*cbrt(eps)*scale) are clustered as one block
/// candidate; the cbrt(eps) floor absorbs the eps^(1/3) root splitting that
/// rounding induces at a triple coalescence. Geometric multiplicity comes from
/// the singular values of (H - E*I). Eigenvectors are unit norm with the first
/// nonzero entry real positive.
SpectralDecomposition eig3(const Mat3& H, double tol = kDefaultTol);

/// Generalized vectors v1, v2, ... with (H - E*I) v_i = v_{i-1}, starting from
/// eigenvector v0. Each v_i is the minimal-norm solution (pseudoinverse), so
/// chains are reproducible. `length` counts the whole chain including v0.
/// Throws ChainBreakError when the system is inconsistent at tolerance.
std::vector<Vec3> jordan_chain(const Mat3& H, Complex eigenvalue, const Vec3& v0,
                               int length, double tol = kDefaultTol);

/// Time-evolution operator U(t) = V exp(-i h t) V^{-1}. The exponential of a
/// size-3 Jordan block with eigenvalue L is
/// e^{-iLt} [[1, -it, -t^2/2], [0, 1, -it], [0, 0, 1]].
Mat3 propagator(const SpectralDecomposition& decomp, double t);

/// Max-norm (largest entry magnitude); the norm used by reconstruction checks.
inline double max_norm(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace ptt
