#pragma once

// The invariant LG(q, P), P = p^2, and its compact P-symmetric encoding.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lg/engine.hpp"
#include "lg/ring.hpp"

namespace lg {

class BraidWord;

/// The raw ring value is not a Laurent polynomial in integer powers of q and P.
class InvariantStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The value is not symmetric under P -> P^-1.
class AsymmetryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QPExponent {
  int q = 0;
  int P = 0;
  friend auto operator<=>(const QPExponent&, const QPExponent&) = default;
};

/// Laurent polynomial in q and P with exact integer coefficients, no zero terms.
class InvariantPoly {
 public:
  InvariantPoly() = default;

  void add(int q, int P, Coeff c);
  Coeff coeff(int q, int P) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<QPExponent, Coeff>& terms() const { return terms_; }

  friend bool operator==(const InvariantPoly&, const InvariantPoly&) = default;

 private:
  std::map<QPExponent, Coeff> terms_;
};

/// q-polynomial as exponent -> coefficient.
using QPoly = std::map<int, Coeff>;

/// LG = qpolys[0] + sum_{k >= 1} (P^k + P^-k) qpolys[k]. Trailing zero
/// blocks are trimmed; interior zero blocks are kept. Zero is the empty list.
struct CompactForm {
  std::vector<QPoly> qpolys;
  friend bool operator==(const CompactForm&, const CompactForm&) = default;
};

/// Requires raw to be Y-free with even doubled q-exponents and even p-exponents.
InvariantPoly to_invariant(const RingElem& raw);

bool is_p_symmetric(const InvariantPoly& poly);

CompactForm to_compact(const InvariantPoly& poly);
InvariantPoly from_compact(const CompactForm& form);

bool is_palindromic_q(const InvariantPoly& poly);
InvariantPoly q_inverted(const InvariantPoly& poly);

struct ParityViolation {
  int q = 0;
  int P = 0;
  Coeff coeff = 0;
  friend bool operator==(const ParityViolation&, const ParityViolation&) = default;
};

/// Terms whose q- and P-exponents differ in parity.
std::vector<ParityViolation> parity_check(const InvariantPoly& poly);

/// Human form: blocks such as "1 + 2 q^{2}, - q^{1} - q^{3}, q^{2}".
std::string render_compact_text(const CompactForm& form);

/// Machine form of record: "0: [0:1, 2:2] 1: [1:-1, 3:-1] 2: [2:1]".
std::string render_machine(const CompactForm& form);
CompactForm parse_machine(std::string_view text);

/// Full expansion, e.g. "2*q^-2 + 7 - 3*q^-1*P^-1 ...", ascending by (P, q).
std::string render_laurent(const InvariantPoly& poly);

/// evaluate_raw followed by to_invariant.
InvariantPoly evaluate_lg(const BraidWord& b, const EngineOptions& opts = {});

}  // namespace lg
