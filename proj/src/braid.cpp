#include "lg/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace lg {

namespace {

void push_merged(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().pos == l.pos && (out.back().exp > 0) == (l.exp > 0)) {
    out.back().exp += l.exp;
  } else {
    out.push_back(l);
  }
}

}  // namespace

BraidWord::BraidWord(int strings, std::vector<Letter> letters) : strings_(strings) {
  if (strings < 1) throw BraidRangeError("a braid needs at least one string");
  for (const auto& l : letters) {
    if (l.exp == 0) throw BraidRangeError("braid letters must have nonzero exponent");
    if (l.pos < 1 || l.pos > strings - 1) {
      std::ostringstream os;
      os << "generator position " << l.pos << " is out of range for " << strings << " strings";
      throw BraidRangeError(os.str());
    }
    push_merged(letters_, l);
  }
}

BraidWord BraidWord::from_generators(int strings, const std::vector<int>& generators) {
  std::vector<Letter> letters;
  letters.reserve(generators.size());
  for (int g : generators) {
    if (g == 0) throw BraidRangeError("generator 0 does not exist");
    letters.push_back({std::abs(g), g > 0 ? 1 : -1});
  }
  return BraidWord(strings, std::move(letters));
}

int BraidWord::length() const {
  int m = 0;
  for (const auto& l : letters_) m += std::abs(l.exp);
  return m;
}

std::vector<int> BraidWord::generators() const {
  std::vector<int> g;
  g.reserve(static_cast<std::size_t>(length()));
  for (const auto& l : letters_) {
    for (int k = 0; k < std::abs(l.exp); ++k) g.push_back(l.exp > 0 ? l.pos : -l.pos);
  }
  return g;
}

int infer_strings(const std::vector<Letter>& letters) {
  int n = 1;
  for (const auto& l : letters) n = std::max(n, std::abs(l.pos) + 1);
  return n;
}

BraidWord parse_braid(std::string_view text, std::optional<int> strings) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
  auto read_int = [&](const char* what) {
    const std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view digits = text.substr(start, i - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw BraidSyntaxError("expected " + std::string(what) + " at offset " + std::to_string(start), start);
    }
    return v;
  };

  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const int j = read_int("a generator");
    if (j == 0) throw BraidSyntaxError("generator 0 at offset " + std::to_string(start), start);
    int k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      k = read_int("an exponent");
    }
    if (i < text.size() && !is_sep(text[i])) {
      throw BraidSyntaxError("unexpected character '" + std::string(1, text[i]) + "' at offset " +
                                 std::to_string(i),
                             i);
    }
    if (k == 0) continue;
    const int sign = (j > 0) == (k > 0) ? 1 : -1;
    letters.push_back({std::abs(j), sign * std::abs(k)});
  }

  const int needed = infer_strings(letters);
  int n = needed;
  if (strings) {
    if (*strings < needed) {
      throw BraidRangeError("braid needs " + std::to_string(needed) + " strings but " +
                            std::to_string(*strings) + " were given");
    }
    n = *strings;
  }
  return BraidWord(n, std::move(letters));
}

std::string render(const BraidWord& b) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : b.letters()) {
    if (!first) os << ' ';
    first = false;
    os << (l.exp > 0 ? l.pos : -l.pos);
    if (std::abs(l.exp) != 1) os << '^' << std::abs(l.exp);
  }
  return os.str();
}

ClosureInfo closure_info(const BraidWord& b) {
  const int n = b.strings();
  // where[k] = current position of the strand that started at k.
  std::vector<int> where(static_cast<std::size_t>(n));
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) where[k] = at[k] = k;
  for (const auto& l : b.letters()) {
    if (std::abs(l.exp) % 2 == 0) continue;
    const int x = l.pos - 1;
    std::swap(at[x], at[x + 1]);
    where[at[x]] = x;
    where[at[x + 1]] = x + 1;
  }
  ClosureInfo info;
  info.permutation.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) info.permutation[k] = where[k] + 1;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int k = 0; k < n; ++k) {
    if (seen[k]) continue;
    ++info.components;
    for (int x = k; !seen[x]; x = where[x]) seen[x] = true;
  }
  return info;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (const auto& l : b.letters()) w += l.exp;
  return w;
}

BraidWord mirror(const BraidWord& b) {
  std::vector<Letter> letters = b.letters();
  for (auto& l : letters) l.exp = -l.exp;
  return BraidWord(b.strings(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<int> stack;
  for (int g : b.generators()) {
    if (!stack.empty() && stack.back() == -g) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return BraidWord::from_generators(b.strings(), stack);
}

BraidWord conjugate(const BraidWord& b, Letter g) {
  std::vector<Letter> letters;
  letters.push_back({g.pos, -g.exp});
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  letters.push_back(g);
  return free_reduce(BraidWord(b.strings(), std::move(letters)));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  std::vector<Letter> letters = b.letters();
  letters.push_back({b.strings(), sign >= 0 ? 1 : -1});
  return BraidWord(b.strings() + 1, std::move(letters));
}

BraidWord insert_cancelling_pair(const BraidWord& b, int at, int j, int sign) {
  std::vector<int> g = b.generators();
  const int s = sign >= 0 ? 1 : -1;
  at = std::clamp(at, 0, static_cast<int>(g.size()));
  g.insert(g.begin() + at, {s * j, -s * j});
  return BraidWord::from_generators(b.strings(), g);
}

BraidWord insert_braid_triple(const BraidWord& b, int at, int j, bool swapped) {
  std::vector<int> g = b.generators();
  at = std::clamp(at, 0, static_cast<int>(g.size()));
  const int x = swapped ? j + 1 : j;
  const int y = swapped ? j : j + 1;
  g.insert(g.begin() + at, {x, y, x});
  return BraidWord::from_generators(b.strings(), g);
}

}  // namespace lg
