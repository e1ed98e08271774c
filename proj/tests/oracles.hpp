#pragma once

// Dense reference evaluation for the sparse engine: the braid as a product of
// Kronecker-expanded crossing matrices, then closure by explicit partial trace.

#include <unsupported/Eigen/KroneckerProduct>

#include "lg/engine.hpp"
#include "lg/tensor.hpp"

namespace lg::testing {

inline long ipow(long base, int e) {
  long v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

/// I_{M^(j-1)} (x) X (x) I_{M^(n-j-1)}, j 1-based.
template <class Scalar>
DenseMatrix<Scalar> embed(const RTensor4<Scalar>& x, int j, int n) {
  const int m = x.dim();
  const long left = ipow(m, j - 1);
  const long right = ipow(m, n - j - 1);
  const DenseMatrix<Scalar> il = DenseMatrix<Scalar>::Identity(left, left);
  const DenseMatrix<Scalar> ir = DenseMatrix<Scalar>::Identity(right, right);
  const DenseMatrix<Scalar> lx = Eigen::kroneckerProduct(il, x.matrix()).eval();
  return Eigen::kroneckerProduct(lx, ir).eval();
}

/// Dense (upper, lower) matrix of a list of (tensor, position) accretions.
template <class Scalar>
DenseMatrix<Scalar> dense_braid(const std::vector<std::pair<RTensor4<Scalar>, int>>& steps, int n, int m) {
  const long size = ipow(m, n);
  DenseMatrix<Scalar> z = DenseMatrix<Scalar>::Identity(size, size);
  for (const auto& [x, j] : steps) z = (embed(x, j, n) * z).eval();
  return z;
}

template <class Scalar>
DenseMatrix<Scalar> to_dense(const SparseTangle<Scalar>& z) {
  const long size = ipow(z.dim(), z.strings());
  DenseMatrix<Scalar> d = DenseMatrix<Scalar>::Zero(size, size);
  for (const auto& [idx, value] : z.entries()) {
    d(static_cast<long>(idx) / size, static_cast<long>(idx) % size) = value;
  }
  return d;
}

/// T(y, x) = sum over a of Z(a y, a x) prod_j h[a_j].
template <class Scalar>
DenseMatrix<Scalar> dense_close(const DenseMatrix<Scalar>& z, const DiagTensor2<Scalar>& h, int n) {
  const int m = h.dim();
  const long outer = ipow(m, n - 1);
  DenseMatrix<Scalar> t = DenseMatrix<Scalar>::Zero(m, m);
  for (long a = 0; a < outer; ++a) {
    Scalar weight(1);
    long rest = a;
    for (int k = 0; k < n - 1; ++k) {
      weight = weight * h[static_cast<int>(rest % m)];
      rest /= m;
    }
    for (int y = 0; y < m; ++y)
      for (int x = 0; x < m; ++x) t(y, x) += weight * z(a * m + y, a * m + x);
  }
  return t;
}

}  // namespace lg::testing
