// Exact arithmetic on freely and cyclically reduced words in free groups of
// finite rank.  Words are immutable values; every operation returns a fresh
// reduced word.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgb {

struct RankMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IllegalGenerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generator families: x letters of the base free group, y letters attached to
// the k marked cycles, and the auxiliary u/v letters of the extended group.
enum class Kind : std::uint8_t { X = 0, Y = 1, U = 2, V = 3 };

// Rank context.  x indices run 1..n, y/u/v indices 1..k; u and v letters are
// legal only when `extended` is set (total rank n+3k instead of n+k).
struct Rank {
  int n = 0;
  int k = 0;
  bool extended = false;

  int total() const { return n + k + (extended ? 2 * k : 0); }
  Rank extend() const { return Rank{n, k, true}; }
  bool operator==(const Rank&) const = default;
};

struct Gen {
  Kind kind = Kind::X;
  int index = 1;  // 1-based
  auto operator<=>(const Gen&) const = default;
};

inline Gen gen_x(int i) { return Gen{Kind::X, i}; }
inline Gen gen_y(int j) { return Gen{Kind::Y, j}; }
inline Gen gen_u(int j) { return Gen{Kind::U, j}; }
inline Gen gen_v(int j) { return Gen{Kind::V, j}; }

// Signed generator occurrence.
struct Letter {
  Gen gen;
  int sign = 1;  // +1 or -1

  Letter inv() const { return Letter{gen, -sign}; }
  bool operator==(const Letter&) const = default;
};

// Fixed total order on signed letters: x < y < u < v, then by index, then
// positive sign before negative.  Canonical rotations use this order.
inline std::strong_ordering letter_order(const Letter& a, const Letter& b) {
  if (auto c = a.gen <=> b.gen; c != 0) return c;
  return (a.sign > 0 ? 0 : 1) <=> (b.sign > 0 ? 0 : 1);
}
inline bool letter_less(const Letter& a, const Letter& b) {
  return letter_order(a, b) < 0;
}

bool legal_in(Gen g, const Rank& r);
void check_legal(const Letter& l, const Rank& r);  // throws IllegalGenerator

// Freely reduced word.  The empty letter sequence is the group identity.
struct Word {
  Rank rank;
  std::vector<Letter> letters;  // invariant: no adjacent mutually inverse pair

  explicit Word(Rank r = Rank{}) : rank(r) {}
  Word(Rank r, std::vector<Letter> reduced) : rank(r), letters(std::move(reduced)) {}

  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const Word&) const = default;
};

// Appends a letter with cancellation, keeping the buffer reduced.
inline void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back() == l.inv()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

// Free reduction of a raw letter sequence; checks rank legality.
Word reduce(const Rank& r, const std::vector<Letter>& raw);

Word word_identity(const Rank& r);
Word word_letter(const Rank& r, Letter l);
Word word_gen(const Rank& r, Gen g, int exponent = 1);

Word multiply(const Word& a, const Word& b);
Word invert(const Word& w);
Word power(const Word& w, int e);
Word conjugate(const Word& w, const Word& by);  // by^-1 * w * by
// Reinterprets a word of a base rank in the extended rank context.
Word extend(const Word& w);

// Cyclically reduced word with a canonical rotation for equality tests.
struct CyclicWord {
  Word representative;  // cyclically reduced, anchored as produced
  Word canonical;       // lexicographically least rotation of representative

  bool operator==(const CyclicWord& o) const { return canonical == o.canonical; }
};

CyclicWord make_cyclic(const Word& cyclically_reduced);

// Returns (core, conjugator) with w == conjugator^-1 * core * conjugator and
// core of minimal length in the conjugacy class of w.
std::pair<CyclicWord, Word> cyclic_reduce(const Word& w);

// A witness u with u^-1 * a * u == b, when a and b are conjugate.  The witness
// is re-verified by multiplication before being returned.
std::optional<Word> are_conjugate(const Word& a, const Word& b);

// Text grammar used by the CLI and JSON payloads: letters separated by
// U+00B7, inverses marked ^-1, identity rendered "1".  Example: x1·y2^-1·x1
std::string to_string(const Letter& l);
std::string to_string(const Word& w);
Word parse_word(const Rank& r, const std::string& text);

std::string gen_name(Gen g);

}  // namespace fgb
