#pragma once

// Dense small tensors of a state model, templated on the coefficient scalar.

#include <cassert>
#include <type_traits>

#include <Eigen/Core>

namespace lg {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
bool is_zero(const Scalar& x)
  requires std::is_arithmetic_v<Scalar>
{
  return x == Scalar{0};
}

/// Rank-4 tensor [X]^(a b)_(c d) over a basis of dimension M.
///
/// Stored as an M^2 x M^2 matrix with row (a, b) -> M a + b and column
/// (c, d) -> M c + d, indices 0-based. Matrix product of two such tensors is
/// composition of crossings stacked on the same pair of strings.
template <class Scalar>
class RTensor4 {
 public:
  using Matrix = DenseMatrix<Scalar>;

  RTensor4() = default;
  explicit RTensor4(int dim) : dim_(dim), m_(Matrix::Zero(dim * dim, dim * dim)) {}
  RTensor4(int dim, Matrix m) : dim_(dim), m_(std::move(m)) {
    assert(m_.rows() == dim * dim && m_.cols() == dim * dim);
  }

  static RTensor4 identity(int dim) {
    return RTensor4(dim, Matrix::Identity(dim * dim, dim * dim));
  }

  int dim() const { return dim_; }

  Scalar& operator()(int a, int b, int c, int d) { return m_(pair(a, b), pair(c, d)); }
  const Scalar& operator()(int a, int b, int c, int d) const { return m_(pair(a, b), pair(c, d)); }

  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  int pair(int x, int y) const { return dim_ * x + y; }

  friend RTensor4 operator*(const RTensor4& x, const RTensor4& y) {
    assert(x.dim_ == y.dim_);
    return RTensor4(x.dim_, x.m_ * y.m_);
  }
  friend bool operator==(const RTensor4& x, const RTensor4& y) {
    return x.dim_ == y.dim_ && x.m_ == y.m_;
  }

 private:
  int dim_ = 0;
  Matrix m_;
};

/// Diagonal rank-2 tensor (caps, cups and handles of the state model).
template <class Scalar>
class DiagTensor2 {
 public:
  using Vector = DenseVector<Scalar>;

  DiagTensor2() = default;
  explicit DiagTensor2(Vector diag) : diag_(std::move(diag)) {}

  static DiagTensor2 identity(int dim) { return DiagTensor2(Vector::Constant(dim, Scalar(1))); }

  int dim() const { return static_cast<int>(diag_.size()); }
  const Scalar& operator[](int i) const { return diag_(i); }
  const Vector& diagonal() const { return diag_; }

  DenseMatrix<Scalar> matrix() const { return diag_.asDiagonal(); }

  Scalar trace() const {
    Scalar s(0);
    for (int i = 0; i < dim(); ++i) s += diag_(i);
    return s;
  }

  friend bool operator==(const DiagTensor2& x, const DiagTensor2& y) { return x.diag_ == y.diag_; }

 private:
  Vector diag_;
};

}  // namespace lg
