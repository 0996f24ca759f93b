#include "ptsym/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace ptsym {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

// Jacobi plane rotation G acting on coordinates (p, q):
//   G = [[cs, sn], [-conj(ph) sn, conj(ph) cs]]
// chosen so that G^dagger [[a, c], [conj(c), b]] G is diagonal, c = |c| ph.
template <typename Scalar>
struct JacobiRotation {
  double cs = 1.0;
  double sn = 0.0;
  Scalar ph = Scalar(1.0);
};

template <typename Scalar>
JacobiRotation<Scalar> jacobi_rotation(double a, double b, Scalar c) {
  JacobiRotation<Scalar> rot;
  const double mag = std::abs(c);
  if (mag == 0.0) return rot;
  rot.ph = c / mag;
  const double theta = (b - a) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  rot.cs = 1.0 / std::sqrt(t * t + 1.0);
  rot.sn = t * rot.cs;
  return rot;
}

// m <- m * G on columns p, q.
template <typename Mat, typename Scalar>
void rotate_columns(Mat& m, int p, int q, const JacobiRotation<Scalar>& r) {
  const Scalar phc = Eigen::numext::conj(r.ph);
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    const Scalar x = m(k, p);
    const Scalar y = m(k, q);
    m(k, p) = x * r.cs - y * phc * r.sn;
    m(k, q) = x * r.sn + y * phc * r.cs;
  }
}

// m <- G^dagger * m on rows p, q.
template <typename Mat, typename Scalar>
void rotate_rows(Mat& m, int p, int q, const JacobiRotation<Scalar>& r) {
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    const Scalar x = m(p, k);
    const Scalar y = m(q, k);
    m(p, k) = x * r.cs - y * r.ph * r.sn;
    m(q, k) = x * r.sn + y * r.ph * r.cs;
  }
}

template <typename Scalar>
std::pair<RealVector, Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>
jacobi_eigen(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const int n = static_cast<int>(a.rows());
  a = (a + a.adjoint()).eval() * 0.5;
  Mat v = Mat::Identity(n, n);
  const double scale = a.norm();
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= kEps * scale * 0.1 || off == 0.0) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Scalar c = a(p, q);
        if (std::abs(c) <= kTiny) continue;
        const auto rot = jacobi_rotation<Scalar>(std::real(a(p, p)), std::real(a(q, q)), c);
        rotate_columns(a, p, q, rot);
        rotate_rows(a, p, q, rot);
        a(p, q) = Scalar(0.0);
        a(q, p) = Scalar(0.0);
        a(p, p) = Scalar(std::real(a(p, p)));
        a(q, q) = Scalar(std::real(a(q, q)));
        rotate_columns(v, p, q, rot);
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return std::real(a(i, i)) < std::real(a(j, j));
  });
  RealVector values(n);
  Mat vectors(n, n);
  for (int k = 0; k < n; ++k) {
    values(k) = std::real(a(order[k], order[k]));
    vectors.col(k) = v.col(order[k]);
  }
  return {values, vectors};
}

// Complex Givens rotation G = [[conj(c), conj(s)], [-s, c]] with
// G [x; y] = [r; 0].
struct Givens {
  Complex c{1.0, 0.0};
  Complex s{0.0, 0.0};
};

Givens make_givens(Complex x, Complex y) {
  const double r = std::hypot(std::abs(x), std::abs(y));
  if (r == 0.0) return {};
  return {x / r, y / r};
}

void reduce_to_hessenberg(Matrix& h, Matrix& z) {
  const Eigen::Index n = h.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index m = n - k - 1;
    Vector v = h.block(k + 1, k, m, 1);
    const double alpha = v.norm();
    if (alpha <= kTiny) continue;
    const Complex phase = std::abs(v(0)) == 0.0 ? Complex(1.0) : v(0) / std::abs(v(0));
    v(0) += phase * alpha;
    v.normalize();
    h.bottomRows(m) -= 2.0 * v * (v.adjoint() * h.bottomRows(m));
    h.rightCols(m) -= 2.0 * (h.rightCols(m) * v) * v.adjoint();
    z.rightCols(m) -= 2.0 * (z.rightCols(m) * v) * v.adjoint();
    h.block(k + 2, k, m - 1, 1).setZero();
  }
}

Complex wilkinson_shift(const Matrix& h, Eigen::Index hi) {
  const Complex a = h(hi - 1, hi - 1);
  const Complex b = h(hi - 1, hi);
  const Complex c = h(hi, hi - 1);
  const Complex d = h(hi, hi);
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex mid = 0.5 * (a + d);
  const Complex mu1 = mid + disc;
  const Complex mu2 = mid - disc;
  return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

// Eigenvector of the upper-triangular Schur factor for diagonal index k.
Vector triangular_eigenvector(const Matrix& t, Eigen::Index k) {
  Vector x = Vector::Zero(t.rows());
  x(k) = 1.0;
  const double smin = std::max(kEps * t.norm(), kTiny);
  const Complex lambda = t(k, k);
  for (Eigen::Index i = k - 1; i >= 0; --i) {
    Complex sum = 0.0;
    for (Eigen::Index j = i + 1; j <= k; ++j) sum += t(i, j) * x(j);
    Complex den = t(i, i) - lambda;
    if (std::abs(den) < smin) den = smin;
    x(i) = -sum / den;
    const double big = x.cwiseAbs().maxCoeff();
    if (big > 1e150) x /= big;
  }
  return x;
}

// Single-linkage grouping of eigenvalues within `radius`.
std::vector<std::vector<int>> link_clusters(const Vector& values, double radius) {
  const int n = static_cast<int>(values.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(values(i) - values(j)) <= radius) parent[find(i)] = find(j);
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

Complex mean_of(const Vector& values, const std::vector<int>& members) {
  Complex sum = 0.0;
  for (int i : members) sum += values(i);
  return sum / static_cast<double>(members.size());
}

}  // namespace

Tolerance::Tolerance(double abs_tol, double rel_tol) : abs_tol_(abs_tol), rel_tol_(rel_tol) {
  if (!std::isfinite(abs_tol) || !std::isfinite(rel_tol) || abs_tol < 0.0 || rel_tol < 0.0)
    throw InvalidArgument("tolerances must be finite and non-negative");
}

double Tolerance::threshold(double scale) const { return std::max(abs_tol_, rel_tol_ * scale); }

bool is_finite(const Matrix& a) { return a.allFinite(); }

void require_operator(const Matrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw InvalidArgument(std::string(what) + " must be a non-empty square matrix");
  if (a.rows() > kMaxDim)
    throw InvalidArgument(std::string(what) + " exceeds the supported dimension " +
                          std::to_string(kMaxDim));
  if (!a.allFinite()) throw InvalidArgument(std::string(what) + " has non-finite entries");
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument(std::string("dimension mismatch: ") + what);
}

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

bool is_hermitian(const Matrix& a, const Tolerance& tol) {
  return (a - a.adjoint()).norm() <= tol.threshold(a.norm());
}

bool is_unitary(const Matrix& a, const Tolerance& tol) {
  const auto n = a.rows();
  return (a.adjoint() * a - Matrix::Identity(n, n)).norm() <=
         tol.threshold(std::sqrt(static_cast<double>(n)));
}

bool is_symmetric(const Matrix& a, const Tolerance& tol) {
  return (a - a.transpose()).norm() <= tol.threshold(a.norm());
}

SchurForm schur(const Matrix& a) {
  require_operator(a, "matrix");
  const Eigen::Index n = a.rows();
  Matrix h = a;
  Matrix z = Matrix::Identity(n, n);
  reduce_to_hessenberg(h, z);

  const double norm = h.norm();
  const long budget = 100L * std::max<Eigen::Index>(n, 1);
  long total = 0;
  int since_deflation = 0;
  Eigen::Index hi = n - 1;
  std::vector<Givens> rotations;
  while (hi > 0) {
    Eigen::Index lo = hi;
    for (; lo > 0; --lo) {
      double s = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (s == 0.0) s = norm;
      if (std::abs(h(lo, lo - 1)) <= kEps * s || std::abs(h(lo, lo - 1)) <= kTiny) {
        h(lo, lo - 1) = 0.0;
        break;
      }
    }
    if (lo == hi) {
      --hi;
      since_deflation = 0;
      continue;
    }
    if (total >= budget)
      throw NumericalError("QR iteration did not converge within " + std::to_string(budget) +
                           " sweeps");
    ++total;
    ++since_deflation;

    Complex mu;
    if (since_deflation % 10 == 0) {
      // exceptional shift to break stagnation
      mu = h(hi, hi) + std::abs(std::real(h(hi, hi - 1)));
      if (hi >= 2) mu += std::abs(std::real(h(hi - 1, hi - 2)));
    } else {
      mu = wilkinson_shift(h, hi);
    }

    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) -= mu;
    rotations.clear();
    for (Eigen::Index k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      for (Eigen::Index j = k; j < n; ++j) {
        const Complex x = h(k, j);
        const Complex y = h(k + 1, j);
        h(k, j) = std::conj(g.c) * x + std::conj(g.s) * y;
        h(k + 1, j) = -g.s * x + g.c * y;
      }
      h(k + 1, k) = 0.0;
      rotations.push_back(g);
    }
    for (Eigen::Index k = lo; k < hi; ++k) {
      const Givens& g = rotations[static_cast<std::size_t>(k - lo)];
      for (Eigen::Index i = 0; i <= k + 1; ++i) {
        const Complex x = h(i, k);
        const Complex y = h(i, k + 1);
        h(i, k) = x * g.c + y * g.s;
        h(i, k + 1) = -x * std::conj(g.s) + y * std::conj(g.c);
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        const Complex x = z(i, k);
        const Complex y = z(i, k + 1);
        z(i, k) = x * g.c + y * g.s;
        z(i, k + 1) = -x * std::conj(g.s) + y * std::conj(g.c);
      }
    }
    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = j + 1; i < n; ++i) h(i, j) = 0.0;
  return {h, z};
}

HermitianEigen eigh(const Matrix& a) {
  require_operator(a, "Hermitian matrix");
  auto [values, vectors] = jacobi_eigen<Complex>(a);
  return {values, vectors};
}

SymmetricEigen eigh(const RealMatrix& a) {
  if (a.rows() == 0 || a.rows() != a.cols() || !a.allFinite())
    throw InvalidArgument("symmetric matrix must be square and finite");
  auto [values, vectors] = jacobi_eigen<double>(a);
  return {values, vectors};
}

SingularValues svd(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0 || !a.allFinite())
    throw InvalidArgument("svd input must be non-empty and finite");
  const int n = static_cast<int>(a.cols());
  Matrix w = a;
  Matrix v = Matrix::Identity(n, n);
  constexpr int kMaxSweeps = 80;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double alpha = w.col(p).squaredNorm();
        const double beta = w.col(q).squaredNorm();
        const Complex gamma = w.col(p).dot(w.col(q));
        if (std::abs(gamma) <= kEps * std::sqrt(alpha * beta) || std::abs(gamma) <= kTiny)
          continue;
        rotated = true;
        const auto rot = jacobi_rotation<Complex>(alpha, beta, gamma);
        rotate_columns(w, p, q, rot);
        rotate_columns(v, p, q, rot);
      }
    }
    if (!rotated) break;
  }
  RealVector sigma(n);
  for (int k = 0; k < n; ++k) sigma(k) = w.col(k).norm();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return sigma(i) > sigma(j); });
  SingularValues out{RealVector(n), Matrix(n, n)};
  for (int k = 0; k < n; ++k) {
    out.values(k) = sigma(order[k]);
    out.right.col(k) = v.col(order[k]);
  }
  return out;
}

int numerical_rank(const Matrix& a, const Tolerance& tol) {
  if (!a.allFinite()) throw InvalidArgument("numerical_rank: non-finite entries");
  if (a.size() == 0) return 0;
  const RealVector s = svd(a).values;
  const double cut = tol.threshold(s(0));
  return static_cast<int>((s.array() > cut).count());
}

Matrix null_space(const Matrix& a, const Tolerance& tol) {
  const SingularValues s = svd(a);
  const double cut = tol.threshold(s.values(0));
  const auto rank = (s.values.array() > cut).count();
  return s.right.rightCols(s.right.cols() - rank);
}

EigenDecomposition eig(const Matrix& a, const Tolerance& tol) {
  require_operator(a, "matrix");
  const int n = static_cast<int>(a.rows());
  const SchurForm sf = schur(a);
  const Vector values = sf.t.diagonal();
  const double scale = a.norm();
  const double radius = tol.threshold(scale);
  const Matrix id = Matrix::Identity(n, n);

  auto groups = link_clusters(values, radius);

  // Merge nearby clusters that the rank test says are one coalesced
  // eigenvalue: perturbation splits an n-fold defective eigenvalue by
  // O(eps^(1/n)), far more than `radius`.
  const double coalesce = std::sqrt(radius * std::max(scale, radius));
  for (bool merged = true; merged && groups.size() > 1;) {
    merged = false;
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        const double gap = std::abs(mean_of(values, groups[i]) - mean_of(values, groups[j]));
        if (gap <= coalesce && gap < best) {
          // only candidates whose merged centre is numerically an eigenvalue
          std::vector<int> joined = groups[i];
          joined.insert(joined.end(), groups[j].begin(), groups[j].end());
          if (numerical_rank(a - mean_of(values, joined) * id, tol) < n) {
            best = gap;
            bi = i;
            bj = j;
          }
        }
      }
    if (std::isfinite(best)) {
      groups[bi].insert(groups[bi].end(), groups[bj].begin(), groups[bj].end());
      groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(bj));
      merged = true;
    }
  }

  std::sort(groups.begin(), groups.end(), [&](const auto& x, const auto& y) {
    const Complex mx = mean_of(values, x);
    const Complex my = mean_of(values, y);
    if (mx.real() != my.real()) return mx.real() < my.real();
    return mx.imag() < my.imag();
  });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.right_vectors.resize(n, n);
  out.cluster_radius = radius;
  int col = 0;
  for (const auto& members : groups) {
    EigenCluster cluster;
    cluster.value = mean_of(values, members);
    cluster.algebraic = static_cast<int>(members.size());
    const int m = cluster.algebraic;
    if (m == 1) {
      const int k = members.front();
      Vector v = sf.z.leftCols(k + 1) * triangular_eigenvector(sf.t, k).head(k + 1);
      out.eigenvalues(col) = values(k);
      out.right_vectors.col(col) = v.normalized();
      cluster.geometric = 1;
      cluster.members.push_back(col++);
    } else {
      const Matrix shifted = a - cluster.value * id;
      const int rank = numerical_rank(shifted, tol);
      cluster.geometric = std::clamp(n - rank, 1, m);
      const SingularValues s = svd(shifted);
      // null vectors are the trailing right singular vectors
      const Matrix basis = s.right.rightCols(cluster.geometric);
      for (int i = 0; i < m; ++i) {
        out.eigenvalues(col) = values(members[static_cast<std::size_t>(i)]);
        out.right_vectors.col(col) = basis.col(i % cluster.geometric);
        cluster.members.push_back(col++);
      }
    }
    if (cluster.defective()) out.diagonalizable = false;
    out.clusters.push_back(std::move(cluster));
  }

  if (out.diagonalizable) {
    Eigen::FullPivLU<Matrix> lu(out.right_vectors);
    if (lu.isInvertible()) {
      out.left_vectors = lu.inverse().adjoint();
    } else {
      out.diagonalizable = false;
    }
  }
  return out;
}

PdRoots pd_roots(const Matrix& a, const Tolerance& tol) {
  require_operator(a, "positive-definite matrix");
  if (!is_hermitian(a, tol)) throw InvalidArgument("matrix is not Hermitian");
  const HermitianEigen he = eigh(a);
  if (he.values(0) <= tol.abs_tol())
    throw InvalidArgument("matrix is not positive definite (smallest eigenvalue " +
                          std::to_string(he.values(0)) + ")");
  const RealVector root = he.values.cwiseSqrt();
  Matrix s = he.vectors * root.cast<Complex>().asDiagonal() * he.vectors.adjoint();
  Matrix si = he.vectors * root.cwiseInverse().cast<Complex>().asDiagonal() * he.vectors.adjoint();
  return {0.5 * (s + s.adjoint()), 0.5 * (si + si.adjoint())};
}

Matrix sqrt_pd(const Matrix& a, const Tolerance& tol) { return pd_roots(a, tol).sqrt; }

Matrix takagi(const Matrix& u, const Tolerance& tol) {
  require_operator(u, "Takagi input");
  if (!is_unitary(u, tol)) throw InvalidArgument("Takagi input is not unitary");
  if (!is_symmetric(u, tol)) throw InvalidArgument("Takagi input is not symmetric");
  const int n = static_cast<int>(u.rows());
  const Matrix sym = 0.5 * (u + u.transpose());

  // Re U and Im U are commuting real symmetric matrices; diagonalize Re U,
  // then split its degenerate blocks with Im U.
  const RealMatrix re = sym.real();
  const RealMatrix im = sym.imag();
  auto [avals, o] = eigh(re);
  constexpr double kBlockGap = 1e-6;
  for (int start = 0; start < n;) {
    int stop = start + 1;
    while (stop < n && avals(stop) - avals(stop - 1) <= kBlockGap) ++stop;
    const int len = stop - start;
    if (len > 1) {
      const RealMatrix block = o.middleCols(start, len).transpose() * im * o.middleCols(start, len);
      const SymmetricEigen inner = eigh(RealMatrix(0.5 * (block + block.transpose())));
      o.middleCols(start, len) = (o.middleCols(start, len) * inner.vectors).eval();
    }
    start = stop;
  }

  const Matrix oc = o.cast<Complex>();
  const Matrix diag = oc.transpose() * sym * oc;
  Vector half_phase(n);
  for (int k = 0; k < n; ++k) half_phase(k) = std::polar(1.0, 0.5 * std::arg(diag(k, k)));
  Matrix v = oc * half_phase.asDiagonal();

  const double residual = (v * v.transpose() - u).norm();
  if (residual > 1e-6 * std::sqrt(static_cast<double>(n)))
    throw NumericalError("Takagi factorization failed (residual " + std::to_string(residual) + ")");
  return v;
}

Matrix inverse(const Matrix& a) {
  Eigen::FullPivLU<Matrix> lu(a);
  if (!lu.isInvertible()) throw NumericalError("matrix is singular");
  return lu.inverse();
}

double condition_number(const Matrix& a) {
  const RealVector s = svd(a).values;
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

}  // namespace ptsym
