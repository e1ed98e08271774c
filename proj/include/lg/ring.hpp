#pragma once

// Exact arithmetic in Z[q^(+-1/2), p^(+-1)][Y] / (Y^2 - (p^2 + p^-2 - q - q^-1)).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace lg {

using Coeff = std::int64_t;

/// Thrown when an integer coefficient leaves the 64-bit range.
class CoefficientOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Coeff checked_add(Coeff x, Coeff y);
Coeff checked_mul(Coeff x, Coeff y);

/// Exponents of q^(q2/2) p^p. The q-exponent is stored doubled.
struct Monomial {
  int q2 = 0;
  int p = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const { return {q2 + o.q2, p + o.p}; }
};

/// Laurent polynomial in q^(1/2) and p with exact integer coefficients.
///
/// Terms are kept sorted ascending by (q2, p) and no stored coefficient is
/// zero, so equality is structural and the zero polynomial is the empty list.
class LaurentQP {
 public:
  struct Term {
    Monomial mono;
    Coeff coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentQP() = default;
  LaurentQP(Coeff constant);  // NOLINT(google-explicit-constructor)

  static LaurentQP monomial(Coeff c, int q2, int p);
  /// Builds a canonical polynomial from arbitrary (unsorted, repeated, zero) terms.
  static LaurentQP from_terms(std::vector<Term> terms);
  /// Parses the canonical text form produced by to_string().
  static LaurentQP parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Coeff coeff(int q2, int p) const;

  LaurentQP& operator+=(const LaurentQP& o);
  LaurentQP& operator-=(const LaurentQP& o);
  LaurentQP& operator*=(const LaurentQP& o);
  LaurentQP operator-() const;

  friend LaurentQP operator+(LaurentQP x, const LaurentQP& y) { return x += y; }
  friend LaurentQP operator-(LaurentQP x, const LaurentQP& y) { return x -= y; }
  friend LaurentQP operator*(const LaurentQP& x, const LaurentQP& y);
  friend bool operator==(const LaurentQP&, const LaurentQP&) = default;

  /// Multiplies by the single monomial c q^(q2/2) p^p.
  LaurentQP scaled(Coeff c, Monomial shift) const;

  std::string to_string() const;

 private:
  explicit LaurentQP(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentQP& x);

/// q -> q^-1 on every term.
LaurentQP invert_q(const LaurentQP& x);
/// p -> p^-1 on every term.
LaurentQP invert_p(const LaurentQP& x);

/// D = Y^2 = p^2 + p^-2 - q - q^-1.
const LaurentQP& y_squared();

/// a + b Y, with Y^2 reduced on multiplication so that the Y-degree stays <= 1.
class RingElem {
 public:
  RingElem() = default;
  RingElem(Coeff c) : a_(c) {}               // NOLINT(google-explicit-constructor)
  RingElem(int c) : a_(Coeff{c}) {}          // NOLINT(google-explicit-constructor)
  RingElem(LaurentQP a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  RingElem(LaurentQP a, LaurentQP b) : a_(std::move(a)), b_(std::move(b)) {}

  static RingElem y() { return {LaurentQP{}, LaurentQP{1}}; }

  const LaurentQP& a() const { return a_; }
  const LaurentQP& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_y_free() const { return b_.is_zero(); }

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem operator-() const { return {-a_, -b_}; }

  friend RingElem operator+(RingElem x, const RingElem& y) { return x += y; }
  friend RingElem operator-(RingElem x, const RingElem& y) { return x -= y; }
  friend RingElem operator*(const RingElem& x, const RingElem& y);
  friend bool operator==(const RingElem&, const RingElem&) = default;

  std::string to_string() const;

 private:
  LaurentQP a_;
  LaurentQP b_;
};

std::ostream& operator<<(std::ostream& os, const RingElem& x);

inline bool is_zero(const RingElem& x) { return x.is_zero(); }
inline bool is_y_free(const RingElem& x) { return x.is_y_free(); }

/// q -> q^-1 in both parts; Y is fixed.
RingElem invert_q(const RingElem& x);
/// p -> p^-1 in both parts; Y is fixed.
RingElem invert_p(const RingElem& x);

}  // namespace lg

namespace Eigen {

template <>
struct NumTraits<lg::RingElem> : GenericNumTraits<lg::RingElem> {
  using Real = lg::RingElem;
  using NonInteger = lg::RingElem;
  using Literal = lg::RingElem;
  using Nested = lg::RingElem;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };

  static lg::RingElem epsilon() { return {}; }
  static lg::RingElem dummy_precision() { return {}; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
