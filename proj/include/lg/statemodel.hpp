#pragma once

// The Links-Gould state model: braid generator, its inverse, caps, cups and
// left handles over the 4-dimensional (0,0|alpha) representation of
// U_q[gl(2|1)], written in the variables q and p = q^(alpha + 1/2).

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "lg/ring.hpp"
#include "lg/tensor.hpp"

namespace lg {

using RMatrix = RTensor4<RingElem>;
using Diag = DiagTensor2<RingElem>;

inline constexpr int kLinksGouldDim = 4;

/// Raised when the model data fail one of their defining identities.
class ModelInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The positive crossing psi(sigma), entry (a, b, c, d) = [psi]^(a b)_(c d).
RMatrix lg_sigma();

/// psi(sigma^-1) by the twist [inv]^(a c)_(b d) = [psi]^(c a)_(d b) with
/// q -> q^-1. Since p = q^(alpha + 1/2), the same map sends p -> p^-1.
RMatrix lg_sigma_inverse();

/// Twist-and-invert map used by lg_sigma_inverse(), exposed for tests.
RMatrix twist_inverted(const RMatrix& sigma);

struct CapsCups {
  Diag cap_plus;   // Omega+
  Diag cap_minus;  // Omega-
  Diag cup_plus;   // mho+
  Diag cup_minus;  // mho-
};

CapsCups lg_caps_cups();

struct Handles {
  Diag plus;
  Diag minus;
};

/// (C+-)^a_b = (Omega+-)_(c a) (mho+-)^(c b), checked against the closed
/// forms C+ = p^-2 diag{q, -q, -q^-1, q^-1} and C- = p^2 diag{q^-1, -q^-1, -q, q}.
/// Throws ModelInconsistency if composition and closed form disagree.
Handles lg_handles();

/// Handle composition from arbitrary caps and cups.
template <class Scalar>
DenseMatrix<Scalar> compose_handle(const DiagTensor2<Scalar>& cap, const DiagTensor2<Scalar>& cup) {
  return cap.matrix().transpose() * cup.matrix();
}

/// Read-only bundle of the model tensors with memoized generator powers.
class StateModel {
 public:
  StateModel(RMatrix sigma, RMatrix sigma_inv, Diag closing_handle);

  /// The Links-Gould model, built once.
  static const StateModel& links_gould();

  int dim() const { return sigma_.dim(); }
  const RMatrix& sigma() const { return sigma_; }
  const RMatrix& sigma_inverse() const { return sigma_inv_; }
  const Diag& closing_handle() const { return handle_; }

  /// psi(sigma)^e for e != 0. Safe to call concurrently.
  const RMatrix& generator_power(int e) const;

 private:
  RMatrix sigma_;
  RMatrix sigma_inv_;
  Diag handle_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<const RMatrix>> powers_;
};

}  // namespace lg
