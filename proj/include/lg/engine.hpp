#pragma once

// State-sum evaluation of a closed braid by tensor accretion.
//
// Z is the rank-2n tensor of an (n, n) tangle. It starts as the identity,
// absorbs one (run of) generator(s) at a time, then all strings but the
// rightmost are closed with the left handle C+, leaving a (1, 1) tangle T.
// For an invariant state model T = lambda I and lambda is the invariant.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lg/tensor.hpp"

namespace lg {

class BraidWord;
class StateModel;
class RingElem;

/// The tangle would exceed the configured M^(2n) bound.
class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The closed (1, 1) tangle is not a multiple of the identity.
class NonScalarTangle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxSize = 1'048'576;

struct EngineOptions {
  /// Largest admissible M^(2n); the default is 4^10 (~1.0e6), five strings at M = 4.
  std::uint64_t max_size = kDefaultMaxSize;
  /// Receives progress lines (rank, entry count) when non-null.
  std::ostream* log = nullptr;
};

/// M^(2n), saturating at the largest uint64 value.
inline std::uint64_t tangle_capacity(int strings, int dim) {
  std::uint64_t v = 1;
  for (int i = 0; i < 2 * strings; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(dim)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    v *= static_cast<std::uint64_t>(dim);
  }
  return v;
}

inline void check_size_cap(int strings, int dim, const EngineOptions& opts) {
  const std::uint64_t cap = tangle_capacity(strings, dim);
  if (cap > opts.max_size) {
    std::ostringstream os;
    os << "refusing a " << strings << "-string tangle: M^(2n) = " << dim << "^" << 2 * strings << " = "
       << cap;
    if (cap >= 1'000'000) {
      os.precision(2);
      os << " (" << std::scientific << static_cast<double>(cap) << ")";
    }
    os << " exceeds the size cap " << opts.max_size;
    throw SizeCapExceeded(os.str());
  }
}

/// Sparse rank-2n tensor Z^(a_1..a_n)_(b_1..b_n).
///
/// The composite index is the 2n-digit base-M number a_1 .. a_n b_1 .. b_n
/// with a_1 most significant. Entries are kept sorted by index and no stored
/// entry is zero.
template <class Scalar>
class SparseTangle {
 public:
  using Index = std::uint64_t;
  using Entry = std::pair<Index, Scalar>;

  SparseTangle() = default;
  SparseTangle(int strings, int dim) : strings_(strings), dim_(dim) {
    weights_.resize(static_cast<std::size_t>(2 * strings));
    Index w = 1;
    for (int k = 2 * strings - 1; k >= 0; --k) {
      weights_[k] = w;
      w *= static_cast<Index>(dim);
    }
  }

  int strings() const { return strings_; }
  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::vector<Entry>& entries() const { return entries_; }

  /// Weight of upper digit k (0-based strand).
  Index upper_weight(int k) const { return weights_[k]; }
  /// Weight of lower digit k (0-based strand).
  Index lower_weight(int k) const { return weights_[strings_ + k]; }

  int upper_digit(Index idx, int k) const { return digit(idx, upper_weight(k)); }
  int lower_digit(Index idx, int k) const { return digit(idx, lower_weight(k)); }

  Index encode(const std::vector<int>& upper, const std::vector<int>& lower) const {
    Index idx = 0;
    for (int k = 0; k < strings_; ++k) {
      idx += static_cast<Index>(upper[k]) * upper_weight(k);
      idx += static_cast<Index>(lower[k]) * lower_weight(k);
    }
    return idx;
  }

  /// Entry at idx, or zero.
  Scalar at(Index idx) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                               [](const Entry& e, Index k) { return e.first < k; });
    return (it != entries_.end() && it->first == idx) ? it->second : Scalar(0);
  }

  /// Replaces the contents with the nonzero values of an accumulation map.
  template <class Map>
  void assign(Map&& accum) {
    entries_.clear();
    entries_.reserve(accum.size());
    for (auto& [k, v] : accum) {
      if (!is_zero(v)) entries_.emplace_back(k, std::move(v));
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
  }

 private:
  int digit(Index idx, Index weight) const {
    return static_cast<int>((idx / weight) % static_cast<Index>(dim_));
  }

  int strings_ = 0;
  int dim_ = 0;
  std::vector<Index> weights_;
  std::vector<Entry> entries_;
};

/// I_M tensored n times: M^n entries equal to 1.
template <class Scalar>
SparseTangle<Scalar> identity_tangle(int strings, int dim, const EngineOptions& opts = {}) {
  if (strings < 1) throw std::invalid_argument("identity_tangle: need at least one string");
  if (dim < 1) throw std::invalid_argument("identity_tangle: dimension must be positive");
  check_size_cap(strings, dim, opts);
  SparseTangle<Scalar> z(strings, dim);
  std::unordered_map<std::uint64_t, Scalar> accum;
  std::uint64_t count = 1;
  for (int k = 0; k < strings; ++k) count *= static_cast<std::uint64_t>(dim);
  accum.reserve(count);
  for (std::uint64_t state = 0; state < count; ++state) {
    // state enumerates (a_1..a_n); the entry sits at a_k = b_k.
    std::uint64_t idx = 0;
    std::uint64_t rest = state;
    for (int k = strings - 1; k >= 0; --k) {
      const std::uint64_t d = rest % static_cast<std::uint64_t>(dim);
      rest /= static_cast<std::uint64_t>(dim);
      idx += d * (z.upper_weight(k) + z.lower_weight(k));
    }
    accum.emplace(idx, Scalar(1));
  }
  z.assign(std::move(accum));
  return z;
}

/// (Z X)^(a..)_(b..) = Z^(.. c_j c_{j+1} ..)_(b..) X^(a_j a_{j+1})_(c_j c_{j+1}),
/// with j 1-based.
template <class Scalar>
SparseTangle<Scalar> accrete(const SparseTangle<Scalar>& z, const RTensor4<Scalar>& x, int j,
                             const EngineOptions& opts = {}) {
  const int n = z.strings();
  const int m = z.dim();
  if (j < 1 || j > n - 1) {
    throw std::out_of_range("accrete: position " + std::to_string(j) + " outside 1.." +
                            std::to_string(n - 1));
  }
  if (x.dim() != m) throw std::invalid_argument("accrete: tensor dimension mismatch");
  check_size_cap(n, m, opts);

  // Nonzero entries of X grouped by their lower (contracted) pair.
  struct Hit {
    int a0;
    int a1;
    const Scalar* value;
  };
  std::vector<std::vector<Hit>> by_lower(static_cast<std::size_t>(m * m));
  for (int a0 = 0; a0 < m; ++a0) {
    for (int a1 = 0; a1 < m; ++a1) {
      for (int c0 = 0; c0 < m; ++c0) {
        for (int c1 = 0; c1 < m; ++c1) {
          const Scalar& v = x(a0, a1, c0, c1);
          if (!is_zero(v)) by_lower[c0 * m + c1].push_back({a0, a1, &v});
        }
      }
    }
  }

  const auto w0 = z.upper_weight(j - 1);
  const auto w1 = z.upper_weight(j);
  std::unordered_map<std::uint64_t, Scalar> accum;
  accum.reserve(z.size() * 2);
  for (const auto& [idx, value] : z.entries()) {
    const int c0 = z.upper_digit(idx, j - 1);
    const int c1 = z.upper_digit(idx, j);
    const auto base = idx - static_cast<std::uint64_t>(c0) * w0 - static_cast<std::uint64_t>(c1) * w1;
    for (const Hit& h : by_lower[c0 * m + c1]) {
      const auto out = base + static_cast<std::uint64_t>(h.a0) * w0 + static_cast<std::uint64_t>(h.a1) * w1;
      Scalar term = (*h.value) * value;
      auto [it, inserted] = accum.try_emplace(out, std::move(term));
      if (!inserted) it->second += term;
    }
  }

  SparseTangle<Scalar> result(n, m);
  result.assign(std::move(accum));
  if (opts.log) {
    *opts.log << "accrete j=" << j << " rank=" << 2 * n << " entries=" << result.size() << "\n";
  }
  return result;
}

/// Closes the leftmost string of Z with the diagonal handle, lowering the rank by 2.
template <class Scalar>
SparseTangle<Scalar> close_leftmost(const SparseTangle<Scalar>& z, const DiagTensor2<Scalar>& handle) {
  const int n = z.strings();
  const int m = z.dim();
  if (n < 2) throw std::invalid_argument("close_leftmost: need at least two strings");
  if (handle.dim() != m) throw std::invalid_argument("close_leftmost: handle dimension mismatch");
  SparseTangle<Scalar> out(n - 1, m);
  std::unordered_map<std::uint64_t, Scalar> accum;
  accum.reserve(z.size() / static_cast<std::size_t>(m) + 1);
  for (const auto& [idx, value] : z.entries()) {
    const int a = z.upper_digit(idx, 0);
    if (a != z.lower_digit(idx, 0)) continue;  // C+ is diagonal
    if (is_zero(handle[a])) continue;
    std::uint64_t packed = 0;
    for (int k = 1; k < n; ++k) {
      packed += static_cast<std::uint64_t>(z.upper_digit(idx, k)) * out.upper_weight(k - 1);
      packed += static_cast<std::uint64_t>(z.lower_digit(idx, k)) * out.lower_weight(k - 1);
    }
    Scalar term = handle[a] * value;
    auto [it, inserted] = accum.try_emplace(packed, std::move(term));
    if (!inserted) it->second += term;
  }
  out.assign(std::move(accum));
  return out;
}

/// T^y_x = Z^(a_1 .. a_{n-1} y)_(b_1 .. b_{n-1} x) prod_j (C+)^(a_j)_(b_j),
/// closing one string at a time from the left.
template <class Scalar>
DenseMatrix<Scalar> close(const SparseTangle<Scalar>& z, const DiagTensor2<Scalar>& handle,
                          const EngineOptions& opts = {}) {
  SparseTangle<Scalar> cur = z;
  while (cur.strings() > 1) {
    cur = close_leftmost(cur, handle);
    if (opts.log) {
      *opts.log << "close rank=" << 2 * cur.strings() << " entries=" << cur.size() << "\n";
    }
  }
  const int m = cur.dim();
  DenseMatrix<Scalar> t = DenseMatrix<Scalar>::Zero(m, m);
  for (const auto& [idx, value] : cur.entries()) {
    t(cur.upper_digit(idx, 0), cur.lower_digit(idx, 0)) = value;
  }
  return t;
}

/// The common diagonal value of T = lambda I.
template <class Scalar>
Scalar extract_scalar(const DenseMatrix<Scalar>& t) {
  const Eigen::Index m = t.rows();
  if (m == 0 || t.cols() != m) throw NonScalarTangle("closed tangle must be a nonempty square matrix");
  for (Eigen::Index y = 0; y < m; ++y) {
    for (Eigen::Index x = 0; x < m; ++x) {
      const bool ok = (x == y) ? (t(y, x) == t(0, 0)) : is_zero(t(y, x));
      if (!ok) {
        std::ostringstream os;
        os << "closed (1,1) tangle is not scalar: T(" << y + 1 << "," << x + 1 << ") = " << t(y, x)
           << " but T(1,1) = " << t(0, 0);
        throw NonScalarTangle(os.str());
      }
    }
  }
  return t(0, 0);
}

/// Full evaluation: identity, accretion of each run, closure, scalar.
RingElem evaluate_raw(const BraidWord& b, const StateModel& model, const EngineOptions& opts = {});
RingElem evaluate_raw(const BraidWord& b, const EngineOptions& opts = {});

/// The closed (1, 1) tangle of b, before scalar extraction.
DenseMatrix<RingElem> evaluate_tangle(const BraidWord& b, const StateModel& model,
                                      const EngineOptions& opts = {});

}  // namespace lg
