#include "ptt/linalg.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "ptt/errors.hpp"

namespace ptt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kCbrtEps = std::cbrt(kEps);

// Rotate the phase so the first entry above threshold is real positive, then
// normalize to unit Euclidean norm.
Vec3 fix_phase(Vec3 v) {
  const double norm = v.norm();
  if (norm == 0.0) return v;
  v /= norm;
  const double thresh = 1e-10 * v.cwiseAbs().maxCoeff();
  for (int i = 0; i < 3; ++i) {
    const double a = std::abs(v[i]);
    if (a > thresh) {
      v *= std::conj(v[i]) / a;
      break;
    }
  }
  return v;
}

struct SvdData {
  Eigen::JacobiSVD<Mat3> svd;
  explicit SvdData(const Mat3& m)
      : svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV) {}

  // Minimal-norm least-squares solve, zeroing singular values below sv_tol.
  Vec3 pinv_solve(const Vec3& b, double sv_tol) const {
    Vec3 x = Vec3::Zero();
    for (int i = 0; i < 3; ++i) {
      const double s = svd.singularValues()[i];
      if (s > sv_tol)
        x += (svd.matrixU().col(i).dot(b) / s) * svd.matrixV().col(i);
    }
    return x;
  }
};

struct Cluster {
  Complex mean;
  int size;
  double radius;
};

std::vector<Cluster> cluster_roots(const std::array<Complex, 3>& roots,
                                   double gap_tol) {
  int parent[3] = {0, 1, 2};
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i];
    return i;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(roots[i] - roots[j]) <= gap_tol) parent[find(j)] = find(i);

  std::vector<Cluster> clusters;
  for (int rep = 0; rep < 3; ++rep) {
    if (find(rep) != rep) continue;
    Complex sum = 0.0;
    int n = 0;
    for (int i = 0; i < 3; ++i)
      if (find(i) == rep) {
        sum += roots[i];
        ++n;
      }
    const Complex mean = sum / static_cast<double>(n);
    double radius = 0.0;
    for (int i = 0; i < 3; ++i)
      if (find(i) == rep) radius = std::max(radius, std::abs(roots[i] - mean));
    clusters.push_back({mean, n, radius});
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.mean.real() != b.mean.real()) return a.mean.real() < b.mean.real();
    return a.mean.imag() < b.mean.imag();
  });
  return clusters;
}

}  // namespace

SpectralDecomposition eig3(const Mat3& H, double tol) {
  const Complex shift = H.trace() / 3.0;
  const Mat3 A = H - shift * Mat3::Identity();

  // Depressed characteristic cubic of the traceless part.
  const Complex pc = -(A * A).trace() / 2.0;
  const Complex qc = -A.determinant();
  std::array<Complex, 3> roots;
  const double im_scale = 1e-13;
  if (std::abs(pc.imag()) <= im_scale * std::max(1.0, std::abs(pc)) &&
      std::abs(qc.imag()) <= im_scale * std::max(1.0, std::abs(qc))) {
    roots = solve_depressed_cubic(pc.real(), qc.real());
  } else {
    roots = solve_depressed_cubic_complex(pc, qc);
  }
  for (auto& r : roots) r += shift;

  double root_scale = 1.0;
  for (const auto& r : roots) root_scale = std::max(root_scale, std::abs(r));
  const double gap_tol = std::max(tol, 8.0 * kCbrtEps * root_scale);

  SpectralDecomposition out;
  int col = 0;
  for (const Cluster& cl : cluster_roots(roots, gap_tol)) {
    const Mat3 N = H - cl.mean * Mat3::Identity();
    SvdData sd(N);
    const double smax = sd.svd.singularValues()[0];
    // Rank threshold: tol * sigma_max, widened by the cluster radius (the
    // cluster mean sits up to `radius` away from the true eigenvalue).
    const double sv_tol =
        std::max({tol * smax, 10.0 * cl.radius, 100.0 * kEps * smax});
    int null_dim = 0;
    for (int i = 0; i < 3; ++i)
      if (sd.svd.singularValues()[i] <= sv_tol) ++null_dim;
    null_dim = std::clamp(null_dim, 1, cl.size);
    const int geo = null_dim;

    if (cl.size == 1 || geo == cl.size) {
      // Diagonalizable: one size-1 block per eigenvector.
      if (cl.size > 1) out.degenerate_diagonalizable = true;
      for (int b = 0; b < cl.size; ++b) {
        const Vec3 v = fix_phase(sd.svd.matrixV().col(2 - b));
        out.blocks.push_back({cl.mean, 1});
        out.eigenvectors.push_back(v);
        out.generalized.emplace_back();
        out.similarity.col(col) = v;
        out.eigenvalues[col] = cl.mean;
        ++col;
      }
    } else if (cl.size == 2 || (cl.size == 3 && geo == 1)) {
      // A single Jordan block of the cluster size.
      const Vec3 v0 = fix_phase(sd.svd.matrixV().col(2));
      std::vector<Vec3> chain;
      Vec3 prev = v0;
      for (int step = 1; step < cl.size; ++step) {
        const Vec3 v = sd.pinv_solve(prev, sv_tol);
        chain.push_back(v);
        prev = v;
      }
      out.blocks.push_back({cl.mean, cl.size});
      out.eigenvectors.push_back(v0);
      out.generalized.push_back(chain);
      out.similarity.col(col) = v0;
      out.eigenvalues[col] = cl.mean;
      ++col;
      for (const Vec3& v : chain) {
        out.similarity.col(col) = v;
        out.eigenvalues[col] = cl.mean;
        ++col;
      }
    } else {
      // cl.size == 3, geo == 2: one size-2 block plus one size-1 block.
      // The chained eigenvector must lie in range(N); project the nullspace
      // basis onto the orthogonal complement of the left nullspace.
      const Vec3 n1 = sd.svd.matrixV().col(2);
      const Vec3 n2 = sd.svd.matrixV().col(1);
      const Vec3 l1 = sd.svd.matrixU().col(2);
      const Vec3 l2 = sd.svd.matrixU().col(1);
      Eigen::Matrix2cd G;
      G << l1.dot(n1), l1.dot(n2), l2.dot(n1), l2.dot(n2);
      Eigen::JacobiSVD<Eigen::Matrix2cd> gs(G, Eigen::ComputeFullV);
      const Eigen::Vector2cd ab = gs.matrixV().col(1);
      Vec3 u = fix_phase(ab[0] * n1 + ab[1] * n2);
      Vec3 w = n1 - u.dot(n1) * u;
      if (w.norm() < 1e-8) w = n2 - u.dot(n2) * u;
      w = fix_phase(w);
      const Vec3 v1 = sd.pinv_solve(u, sv_tol);
      out.blocks.push_back({cl.mean, 2});
      out.eigenvectors.push_back(u);
      out.generalized.push_back({v1});
      out.similarity.col(col) = u;
      out.eigenvalues[col] = cl.mean;
      out.similarity.col(col + 1) = v1;
      out.eigenvalues[col + 1] = cl.mean;
      out.blocks.push_back({cl.mean, 1});
      out.eigenvectors.push_back(w);
      out.generalized.emplace_back();
      out.similarity.col(col + 2) = w;
      out.eigenvalues[col + 2] = cl.mean;
      col += 3;
    }
  }

  out.canonical = Mat3::Zero();
  col = 0;
  for (const JordanBlock& b : out.blocks) {
    for (int i = 0; i < b.size; ++i) {
      out.canonical(col + i, col + i) = b.eigenvalue;
      if (i + 1 < b.size) out.canonical(col + i, col + i + 1) = 1.0;
    }
    col += b.size;
  }
  out.similarity_inv = out.similarity.inverse();
  return out;
}

std::vector<Vec3> jordan_chain(const Mat3& H, Complex eigenvalue, const Vec3& v0,
                               int length, double tol) {
  const Mat3 N = H - eigenvalue * Mat3::Identity();
  const double scale = std::max(1.0, max_norm(H));
  if ((N * v0).norm() > 1e-6 * scale * v0.norm())
    throw ChainBreakError("v0 is not an eigenvector at this tolerance");

  SvdData sd(N);
  const double smax = sd.svd.singularValues()[0];
  const double sv_tol = std::max(tol * smax, 100.0 * kEps * smax);

  std::vector<Vec3> chain;
  Vec3 prev = v0;
  for (int step = 1; step < length; ++step) {
    const Vec3 v = sd.pinv_solve(prev, sv_tol);
    if ((N * v - prev).norm() > 1e-6 * prev.norm())
      throw ChainBreakError("chain inconsistent at step " + std::to_string(step) +
                            ": block size overestimated");
    chain.push_back(v);
    prev = v;
  }
  return chain;
}

Mat3 propagator(const SpectralDecomposition& decomp, double t) {
  Mat3 e = Mat3::Zero();
  int col = 0;
  for (const JordanBlock& b : decomp.blocks) {
    const Complex phase = std::exp(Complex(0.0, -t) * b.eigenvalue);
    for (int i = 0; i < b.size; ++i) e(col + i, col + i) = phase;
    if (b.size >= 2) {
      e(col, col + 1) = phase * Complex(0.0, -t);
      if (b.size == 3) {
        e(col + 1, col + 2) = phase * Complex(0.0, -t);
        e(col, col + 2) = phase * (-t * t / 2.0);
      }
    }
    col += b.size;
  }
  return decomp.similarity * e * decomp.similarity_inv;
}

}  // namespace ptt
