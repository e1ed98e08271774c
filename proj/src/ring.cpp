#include "lg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace lg {

Coeff checked_add(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw CoefficientOverflow("integer coefficient overflow in addition");
  }
  return r;
}

Coeff checked_mul(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw CoefficientOverflow("integer coefficient overflow in multiplication");
  }
  return r;
}

// ---------------------------------------------------------------------------
// LaurentQP

LaurentQP::LaurentQP(Coeff constant) {
  if (constant != 0) terms_.push_back({{0, 0}, constant});
}

LaurentQP LaurentQP::monomial(Coeff c, int q2, int p) {
  if (c == 0) return {};
  return LaurentQP(std::vector<Term>{{{q2, p}, c}});
}

LaurentQP LaurentQP::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& l, const Term& r) { return l.mono < r.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = checked_add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return LaurentQP(std::move(out));
}

Coeff LaurentQP::coeff(int q2, int p) const {
  const Monomial m{q2, p};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.mono < k; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

namespace {

// Merges two canonical term lists, y scaled by sign (+1 or -1).
std::vector<LaurentQP::Term> merge(std::span<const LaurentQP::Term> x,
                                   std::span<const LaurentQP::Term> y, Coeff sign) {
  std::vector<LaurentQP::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].mono < y[j].mono)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].mono < x[i].mono) {
      out.push_back({y[j].mono, checked_mul(sign, y[j].coeff)});
      ++j;
    } else {
      Coeff c = checked_add(x[i].coeff, checked_mul(sign, y[j].coeff));
      if (c != 0) out.push_back({x[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentQP& LaurentQP::operator+=(const LaurentQP& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

LaurentQP& LaurentQP::operator-=(const LaurentQP& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentQP& LaurentQP::operator*=(const LaurentQP& o) { return *this = *this * o; }

LaurentQP LaurentQP::operator-() const {
  LaurentQP r = *this;
  for (auto& t : r.terms_) t.coeff = checked_mul(t.coeff, -1);
  return r;
}

LaurentQP LaurentQP::scaled(Coeff c, Monomial shift) const {
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(terms_.size());
  // A uniform shift preserves the lexicographic order.
  for (const auto& t : terms_) out.push_back({t.mono * shift, checked_mul(t.coeff, c)});
  return LaurentQP(std::move(out));
}

LaurentQP operator*(const LaurentQP& x, const LaurentQP& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.size() == 1) return x.scaled(y.terms_[0].coeff, y.terms_[0].mono);
  if (x.size() == 1) return y.scaled(x.terms_[0].coeff, x.terms_[0].mono);
  std::vector<LaurentQP::Term> out;
  out.reserve(x.size() * y.size());
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) {
      out.push_back({s.mono * t.mono, checked_mul(s.coeff, t.coeff)});
    }
  }
  return LaurentQP::from_terms(std::move(out));
}

namespace {

void write_term(std::ostream& os, Coeff c, Monomial m) {
  os << c;
  if (m.q2 != 0) {
    if (m.q2 % 2 != 0) {
      os << "*q^(" << m.q2 << "/2)";
    } else if (m.q2 == 2) {
      os << "*q";
    } else {
      os << "*q^" << m.q2 / 2;
    }
  }
  if (m.p != 0) {
    if (m.p == 1) {
      os << "*p";
    } else {
      os << "*p^" << m.p;
    }
  }
}

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, std::string_view what) {
  std::ostringstream os;
  os << "cannot parse polynomial '" << text << "' at offset " << pos << ": " << what;
  throw std::invalid_argument(os.str());
}

}  // namespace

std::string LaurentQP::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (first) {
      write_term(os, t.coeff, t.mono);
      first = false;
    } else if (t.coeff < 0) {
      os << " - ";
      write_term(os, -t.coeff, t.mono);
    } else {
      os << " + ";
      write_term(os, t.coeff, t.mono);
    }
  }
  return os.str();
}

LaurentQP LaurentQP::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) parse_error(text, 0, "empty input");
  if (s == "0") return {};

  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (start >= s.size()) parse_error(text, start, "unexpected end of input");
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    long long v = 0;
    const char* first = s.data() + start + (s[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, s.data() + i, v);
    if (ec != std::errc{} || ptr != s.data() + i) parse_error(text, start, "expected integer");
    return v;
  };

  std::vector<Term> terms;
  while (i < s.size()) {
    Coeff sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      parse_error(text, i, "expected '+' or '-'");
    }
    Coeff c = 1;
    bool have_factor = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = read_int(false);
      have_factor = true;
    }
    Monomial m;
    while (i < s.size() && (s[i] == '*' || s[i] == 'q' || s[i] == 'p')) {
      if (s[i] == '*') {
        if (!have_factor) parse_error(text, i, "dangling '*'");
        ++i;
      }
      if (i >= s.size() || (s[i] != 'q' && s[i] != 'p')) parse_error(text, i, "expected q or p");
      const char var = s[i++];
      int exp2 = 2;  // doubled exponent
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i < s.size() && s[i] == '(') {
          ++i;
          const long long num = read_int(true);
          if (i >= s.size() || s[i] != '/') parse_error(text, i, "expected '/'");
          ++i;
          const long long den = read_int(false);
          if (i >= s.size() || s[i] != ')') parse_error(text, i, "expected ')'");
          ++i;
          if (den == 2) {
            exp2 = static_cast<int>(num);
          } else if (den == 1) {
            exp2 = static_cast<int>(2 * num);
          } else {
            parse_error(text, i, "denominator must be 1 or 2");
          }
        } else {
          exp2 = static_cast<int>(2 * read_int(true));
        }
      }
      if (var == 'q') {
        m.q2 += exp2;
      } else {
        if (exp2 % 2 != 0) parse_error(text, i, "p-exponent must be an integer");
        m.p += exp2 / 2;
      }
      have_factor = true;
    }
    if (!have_factor) parse_error(text, i, "expected a term");
    terms.push_back({m, checked_mul(sign, c)});
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentQP& x) { return os << x.to_string(); }

LaurentQP invert_q(const LaurentQP& x) {
  std::vector<LaurentQP::Term> t(x.terms().begin(), x.terms().end());
  for (auto& term : t) term.mono.q2 = -term.mono.q2;
  return LaurentQP::from_terms(std::move(t));
}

LaurentQP invert_p(const LaurentQP& x) {
  std::vector<LaurentQP::Term> t(x.terms().begin(), x.terms().end());
  for (auto& term : t) term.mono.p = -term.mono.p;
  return LaurentQP::from_terms(std::move(t));
}

const LaurentQP& y_squared() {
  static const LaurentQP d = LaurentQP::from_terms({
      {{0, 2}, 1},
      {{0, -2}, 1},
      {{2, 0}, -1},
      {{-2, 0}, -1},
  });
  return d;
}

// ---------------------------------------------------------------------------
// RingElem

RingElem& RingElem::operator+=(const RingElem& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) { return *this = *this * o; }

RingElem operator*(const RingElem& x, const RingElem& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_y_free() && y.is_y_free()) return RingElem(x.a_ * y.a_);
  LaurentQP a = x.a_ * y.a_;
  if (!x.b_.is_zero() && !y.b_.is_zero()) a += (x.b_ * y.b_) * y_squared();
  LaurentQP b = x.a_ * y.b_;
  b += y.a_ * x.b_;
  return {std::move(a), std::move(b)};
}

std::string RingElem::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  if (a_.is_zero()) return "(" + b_.to_string() + ")*Y";
  return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*Y";
}

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << x.to_string(); }

RingElem invert_q(const RingElem& x) { return {invert_q(x.a()), invert_q(x.b())}; }
RingElem invert_p(const RingElem& x) { return {invert_p(x.a()), invert_p(x.b())}; }

}  // namespace lg
