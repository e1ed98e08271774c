#pragma once

// Braid words, their closures, and Markov-move utilities.
//
// Text grammar: word := token*, token := int | int '^' int, tokens separated
// by whitespace or commas. j > 0 is sigma_j, j < 0 is sigma_|j|^-1, and j^k
// is k copies of that letter (|k| copies of its inverse when k < 0).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lg {

struct Letter {
  int pos = 1;  // sigma_pos crosses strings pos and pos + 1
  int exp = 1;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

class BraidSyntaxError : public std::invalid_argument {
 public:
  BraidSyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class BraidRangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A braid on n strings in run-length form. Consecutive letters at the same
/// position with the same sign are merged; opposite signs are kept apart.
class BraidWord {
 public:
  BraidWord() = default;
  /// Validates positions against n and merges same-sign runs.
  BraidWord(int strings, std::vector<Letter> letters);

  /// Builds from a signed generator sequence (+j = sigma_j, -j = sigma_j^-1).
  static BraidWord from_generators(int strings, const std::vector<int>& generators);

  int strings() const { return strings_; }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Expanded length m (sum of |exp|).
  int length() const;
  /// Signed generator sequence with exponents expanded.
  std::vector<int> generators() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strings_ = 1;
  std::vector<Letter> letters_;
};

/// n = 1 + max position (1 for the empty word).
int infer_strings(const std::vector<Letter>& letters);

/// Parses the text grammar. With explicit strings, it is an error for the word
/// to need more.
BraidWord parse_braid(std::string_view text, std::optional<int> strings = std::nullopt);

/// Canonical text, e.g. "1^3 -2 1"; parse_braid(render(b), b.strings()) == b.
std::string render(const BraidWord& b);

struct ClosureInfo {
  std::vector<int> permutation;  // 1-based: strand k ends at position permutation[k-1]
  int components = 0;
};

ClosureInfo closure_info(const BraidWord& b);

int writhe(const BraidWord& b);

/// All exponents negated; the closure is the mirror image.
BraidWord mirror(const BraidWord& b);

/// Cancels adjacent sigma_j sigma_j^-1 until none remain.
BraidWord free_reduce(const BraidWord& b);

/// g^-1 b g, freely reduced.
BraidWord conjugate(const BraidWord& b, Letter g);

/// b sigma_n^(+-1) on n + 1 strings.
BraidWord stabilize(const BraidWord& b, int sign);

/// Inserts sigma_j^s sigma_j^-s before expanded letter `at` (no reduction).
BraidWord insert_cancelling_pair(const BraidWord& b, int at, int j, int sign);

/// Splices sigma_j sigma_{j+1} sigma_j (or its other side of the braid
/// relation when `swapped`) before expanded letter `at`.
BraidWord insert_braid_triple(const BraidWord& b, int at, int j, bool swapped);

}  // namespace lg
