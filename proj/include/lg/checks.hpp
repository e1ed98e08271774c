#pragma once

// Self-checks: exact model identities, structural checks on evaluated values,
// and the randomized Markov-move suite.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "lg/braid.hpp"
#include "lg/engine.hpp"
#include "lg/invariant.hpp"
#include "lg/statemodel.hpp"

namespace lg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// (X (x) I)(I (x) X)(X (x) I) == (I (x) X)(X (x) I)(I (x) X) as M^3 x M^3 matrices.
template <class Scalar>
bool satisfies_yang_baxter(const RTensor4<Scalar>& x) {
  using Mat = DenseMatrix<Scalar>;
  const Mat id = Mat::Identity(x.dim(), x.dim());
  const Mat left = Eigen::kroneckerProduct(x.matrix(), id).eval();
  const Mat right = Eigen::kroneckerProduct(id, x.matrix()).eval();
  const Mat lhs = left * right * left;
  const Mat rhs = right * left * right;
  return lhs == rhs;
}

/// x * y == identity, composed as M^2 x M^2 matrices.
template <class Scalar>
bool is_inverse_pair(const RTensor4<Scalar>& x, const RTensor4<Scalar>& y) {
  const auto n = x.matrix().rows();
  const DenseMatrix<Scalar> id = DenseMatrix<Scalar>::Identity(n, n);
  return x.matrix() * y.matrix() == id && y.matrix() * x.matrix() == id;
}

/// Inverse, Yang-Baxter, handle composition and trace(C+) = 0.
std::vector<CheckResult> run_identity_checks();

/// A value together with every structural property violated while computing it.
struct CheckedValue {
  std::optional<InvariantPoly> poly;
  std::vector<std::string> violations;
};

/// Scalar tangle, Y-free, integer q-exponents, even p-exponents, P-symmetry,
/// parity rule.
CheckedValue evaluate_checked(const BraidWord& b, const EngineOptions& opts = {});

struct MarkovOptions {
  std::uint64_t seed = 1;
  int braids = 100;
  int max_strings = 4;
  int max_length = 8;
};

struct MarkovCase {
  std::string move;
  std::string before;  // rendered braid
  std::string after;
  int strings_before = 0;
  int strings_after = 0;
  bool passed = false;
  std::string detail;
};

struct MarkovReport {
  std::vector<MarkovCase> cases;
  int braids = 0;
  /// Structural violations seen on any evaluated value.
  std::vector<std::string> structural;

  int failures() const;
  int count(const std::string& move) const;
};

/// Random braid with 2..max_strings strings and 1..max_length letters.
BraidWord random_braid(std::mt19937_64& rng, int max_strings, int max_length);

/// For each random braid: conjugation, +/- stabilization, insertion of a
/// cancelling pair, both sides of the braid relation, and the mirror rule
/// LG(mirror b) = LG(b) with q -> 1/q.
MarkovReport run_markov_suite(const MarkovOptions& mopts, const EngineOptions& opts = {});

}  // namespace lg
