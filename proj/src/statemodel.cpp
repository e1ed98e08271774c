#include "lg/statemodel.hpp"

#include <cstdlib>

namespace lg {

namespace {

// c q^(q2/2) p^p
RingElem mono(Coeff c, int q2, int p) { return RingElem(LaurentQP::monomial(c, q2, p)); }

Diag diag4(RingElem a, RingElem b, RingElem c, RingElem d) {
  DenseVector<RingElem> v(4);
  v << a, b, c, d;
  return Diag(std::move(v));
}

}  // namespace

RMatrix lg_sigma() {
  const RingElem y = RingElem::y();
  const RingElem half = mono(1, 1, 0);    // q^(1/2)
  const RingElem pm = mono(1, 1, -1);     // p^-1 q^(1/2)
  const RingElem pp = mono(1, 1, 1);      // p q^(1/2)
  const RingElem low = mono(1, 2, -2) - RingElem(1);   // p^-2 q - 1
  const RingElem high = mono(1, 2, 2) - RingElem(1);   // p^2 q - 1

  // Nonzero entries of the 16x16 matrix, by (row, column) composite index.
  struct Entry {
    int row;
    int col;
    RingElem value;
  };
  const Entry entries[] = {
      {0, 0, mono(1, 2, -2)},
      {1, 4, pm},
      {2, 8, pm},
      {3, 12, RingElem(1)},
      {4, 1, pm},
      {4, 4, low},
      {5, 5, RingElem(-1)},
      {6, 9, mono(-1, 2, 0)},
      {6, 12, -(half * y)},
      {7, 13, pp},
      {8, 2, pm},
      {8, 8, low},
      {9, 6, mono(-1, 2, 0)},
      {9, 9, mono(1, 4, 0) - RingElem(1)},
      {9, 12, mono(1, 3, 0) * y},
      {10, 10, RingElem(-1)},
      {11, 14, pp},
      {12, 3, RingElem(1)},
      {12, 6, -(half * y)},
      {12, 9, mono(1, 3, 0) * y},
      {12, 12, mono(1, 2, 0) * y * y},
      {13, 7, pp},
      {13, 13, high},
      {14, 11, pp},
      {14, 14, high},
      {15, 15, mono(1, 2, 2)},
  };

  RMatrix r(kLinksGouldDim);
  for (const auto& e : entries) r.matrix()(e.row, e.col) = e.value;
  return r;
}

RMatrix twist_inverted(const RMatrix& sigma) {
  const int m = sigma.dim();
  RMatrix out(m);
  for (int a = 0; a < m; ++a) {
    for (int c = 0; c < m; ++c) {
      for (int b = 0; b < m; ++b) {
        for (int d = 0; d < m; ++d) {
          out(a, c, b, d) = invert_p(invert_q(sigma(c, a, d, b)));
        }
      }
    }
  }
  return out;
}

RMatrix lg_sigma_inverse() { return twist_inverted(lg_sigma()); }

CapsCups lg_caps_cups() {
  CapsCups cc;
  cc.cap_minus = Diag::identity(kLinksGouldDim);
  cc.cap_plus = diag4(mono(1, 2, -2), mono(-1, 2, -2), mono(-1, -2, -2), mono(1, -2, -2));
  cc.cup_plus = Diag::identity(kLinksGouldDim);
  cc.cup_minus = diag4(mono(1, -2, 2), mono(-1, -2, 2), mono(-1, 2, 2), mono(1, 2, 2));
  return cc;
}

Handles lg_handles() {
  const CapsCups cc = lg_caps_cups();
  const Handles listed{
      diag4(mono(1, 2, -2), mono(-1, 2, -2), mono(-1, -2, -2), mono(1, -2, -2)),
      diag4(mono(1, -2, 2), mono(-1, -2, 2), mono(-1, 2, 2), mono(1, 2, 2)),
  };
  const DenseMatrix<RingElem> plus = compose_handle(cc.cap_plus, cc.cup_plus);
  const DenseMatrix<RingElem> minus = compose_handle(cc.cap_minus, cc.cup_minus);
  if (plus != listed.plus.matrix()) {
    throw ModelInconsistency("left handle C+ does not match the composition of Omega+ and mho+");
  }
  if (minus != listed.minus.matrix()) {
    throw ModelInconsistency("left handle C- does not match the composition of Omega- and mho-");
  }
  return listed;
}

StateModel::StateModel(RMatrix sigma, RMatrix sigma_inv, Diag closing_handle)
    : sigma_(std::move(sigma)), sigma_inv_(std::move(sigma_inv)), handle_(std::move(closing_handle)) {
  if (sigma_.dim() != sigma_inv_.dim() || sigma_.dim() != handle_.dim()) {
    throw ModelInconsistency("state model tensors have mismatched dimensions");
  }
}

const StateModel& StateModel::links_gould() {
  static const StateModel model(lg_sigma(), lg_sigma_inverse(), lg_handles().plus);
  return model;
}

const RMatrix& StateModel::generator_power(int e) const {
  if (e == 0) throw std::invalid_argument("generator_power: exponent must be nonzero");
  if (e == 1) return sigma_;
  if (e == -1) return sigma_inv_;

  std::lock_guard lock(mutex_);
  if (auto it = powers_.find(e); it != powers_.end()) return *it->second;

  const RMatrix& base = e > 0 ? sigma_ : sigma_inv_;
  const int sign = e > 0 ? 1 : -1;
  // Build up from the largest cached power of the same sign.
  RMatrix acc = base;
  int have = 1;
  for (int k = std::abs(e) - 1; k >= 2; --k) {
    if (auto it = powers_.find(sign * k); it != powers_.end()) {
      acc = *it->second;
      have = k;
      break;
    }
  }
  while (have < std::abs(e)) {
    acc = acc * base;
    ++have;
    powers_.try_emplace(sign * have, std::make_unique<const RMatrix>(acc));
  }
  return *powers_.at(e);
}

}  // namespace lg
