#include "lg/invariant.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "lg/braid.hpp"

namespace lg {

void InvariantPoly::add(int q, int P, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q, P}, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Coeff InvariantPoly::coeff(int q, int P) const {
  auto it = terms_.find({q, P});
  return it == terms_.end() ? 0 : it->second;
}

InvariantPoly to_invariant(const RingElem& raw) {
  if (!raw.is_y_free()) {
    throw InvariantStructureError("raw value still depends on Y: " + raw.to_string());
  }
  InvariantPoly poly;
  for (const auto& t : raw.a().terms()) {
    if (t.mono.q2 % 2 != 0) {
      throw InvariantStructureError("raw value has a half-integer power of q: " + raw.to_string());
    }
    if (t.mono.p % 2 != 0) {
      throw InvariantStructureError("raw value has an odd power of p: " + raw.to_string());
    }
    poly.add(t.mono.q2 / 2, t.mono.p / 2, t.coeff);
  }
  if (!is_p_symmetric(poly)) {
    throw AsymmetryError("value is not symmetric under P -> 1/P: " + raw.to_string());
  }
  return poly;
}

bool is_p_symmetric(const InvariantPoly& poly) {
  for (const auto& [e, c] : poly.terms()) {
    if (poly.coeff(e.q, -e.P) != c) return false;
  }
  return true;
}

CompactForm to_compact(const InvariantPoly& poly) {
  if (!is_p_symmetric(poly)) throw AsymmetryError("compact form needs a P-symmetric polynomial");
  CompactForm form;
  for (const auto& [e, c] : poly.terms()) {
    if (e.P < 0) continue;
    if (form.qpolys.size() <= static_cast<std::size_t>(e.P)) form.qpolys.resize(e.P + 1);
    form.qpolys[e.P][e.q] = c;
  }
  return form;
}

InvariantPoly from_compact(const CompactForm& form) {
  InvariantPoly poly;
  for (std::size_t k = 0; k < form.qpolys.size(); ++k) {
    const int P = static_cast<int>(k);
    for (const auto& [q, c] : form.qpolys[k]) {
      poly.add(q, P, c);
      if (P != 0) poly.add(q, -P, c);
    }
  }
  return poly;
}

bool is_palindromic_q(const InvariantPoly& poly) { return poly == q_inverted(poly); }

InvariantPoly q_inverted(const InvariantPoly& poly) {
  InvariantPoly out;
  for (const auto& [e, c] : poly.terms()) out.add(-e.q, e.P, c);
  return out;
}

std::vector<ParityViolation> parity_check(const InvariantPoly& poly) {
  std::vector<ParityViolation> bad;
  for (const auto& [e, c] : poly.terms()) {
    if ((e.q - e.P) % 2 != 0) bad.push_back({e.q, e.P, c});
  }
  return bad;
}

std::string render_compact_text(const CompactForm& form) {
  if (form.qpolys.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < form.qpolys.size(); ++k) {
    if (k > 0) os << ", ";
    const QPoly& block = form.qpolys[k];
    if (block.empty()) {
      os << "0";
      continue;
    }
    bool first = true;
    for (const auto& [e, c] : block) {
      if (first) {
        if (c < 0) os << "- ";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const Coeff mag = c < 0 ? -c : c;
      if (e == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << ' ';
        os << "q^{" << e << '}';
      }
    }
  }
  return os.str();
}

std::string render_machine(const CompactForm& form) {
  if (form.qpolys.empty()) return "0: []";
  std::ostringstream os;
  for (std::size_t k = 0; k < form.qpolys.size(); ++k) {
    if (k > 0) os << ' ';
    os << k << ": [";
    bool first = true;
    for (const auto& [e, c] : form.qpolys[k]) {
      if (!first) os << ", ";
      first = false;
      os << e << ':' << c;
    }
    os << ']';
  }
  return os.str();
}

namespace {

class MachineParser {
 public:
  explicit MachineParser(std::string_view text) : text_(text) {}

  CompactForm parse() {
    CompactForm form;
    skip_ws();
    while (pos_ < text_.size()) {
      const long long k = integer();
      if (k != static_cast<long long>(form.qpolys.size())) {
        fail("expected block index " + std::to_string(form.qpolys.size()));
      }
      expect(':');
      expect('[');
      QPoly block;
      skip_ws();
      if (peek() != ']') {
        while (true) {
          const long long e = integer();
          expect(':');
          const long long c = integer();
          if (c == 0) fail("zero coefficient");
          if (!block.empty() && e <= block.rbegin()->first) fail("exponents must ascend");
          block.emplace(static_cast<int>(e), c);
          skip_ws();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect(']');
      form.qpolys.push_back(std::move(block));
      skip_ws();
    }
    if (form.qpolys.empty()) fail("no blocks");
    while (!form.qpolys.empty() && form.qpolys.back().empty()) form.qpolys.pop_back();
    return form;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      pos_ = start;
      fail("expected integer");
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("machine format: " + what + " at offset " + std::to_string(pos_) +
                                " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CompactForm parse_machine(std::string_view text) { return MachineParser(text).parse(); }

std::string render_laurent(const InvariantPoly& poly) {
  if (poly.is_zero()) return "0";
  // Order by (P, q) so the output reads block by block.
  std::map<std::pair<int, int>, Coeff> ordered;
  for (const auto& [e, c] : poly.terms()) ordered[{e.P, e.q}] = c;
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const auto [P, q] = e;
    if (first) {
      os << c;
    } else {
      os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
    }
    first = false;
    if (q != 0) os << "*q^" << q;
    if (P != 0) os << "*P^" << P;
  }
  return os.str();
}

InvariantPoly evaluate_lg(const BraidWord& b, const EngineOptions& opts) {
  return to_invariant(evaluate_raw(b, opts));
}

}  // namespace lg
