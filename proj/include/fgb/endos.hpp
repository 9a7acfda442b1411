// Endomorphisms of free groups as dense generator-image tables: application,
// composition, Nielsen-reduction invertibility, and the elementary
// Whitehead-move vocabulary used by the presentations.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgb/words.hpp"

namespace fgb {

struct IllegalSymbol : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotInvertible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Generator slots are ordered x1..xn, y1..yk (, u1..uk, v1..vk).
int slot_of(const Rank& r, Gen g);
Gen gen_of_slot(const Rank& r, int slot);

struct Endomorphism {
  Rank rank;
  std::vector<Word> images;  // one freely reduced word per generator slot

  const Word& image(Gen g) const { return images[slot_of(rank, g)]; }
  bool operator==(const Endomorphism&) const = default;
};

Endomorphism identity_endo(const Rank& r);
bool is_identity(const Endomorphism& e);

// Homomorphic extension to arbitrary words.
Word apply(const Endomorphism& e, const Word& w);

// compose(f, g) applies f first and then g, so
// apply(compose(f, g), w) == apply(g, apply(f, w)).
Endomorphism compose(const Endomorphism& first, const Endomorphism& then);

// Elementary Nielsen move on a tuple: t_i <- t_j^eps * t_i (left) or
// t_i <- t_i * t_j^eps (right), i != j.
struct NielsenMove {
  bool right = false;
  int i = 0;
  int j = 0;
  int eps = 1;
};

struct NielsenResult {
  std::vector<Word> tuple;
  std::vector<NielsenMove> log;
};

// Greedy length descent: per step scans every elementary move, applies the
// best strict reduction, ties broken by least (kind, i, j, eps).  Total
// length never increases, so this terminates.
NielsenResult nielsen_reduce(std::vector<Word> tuple);

// Returns the inverse endomorphism when the generator images Nielsen-reduce
// to a signed permutation of the generators; nullopt otherwise.  The returned
// inverse is verified by composition in both orders.
std::optional<Endomorphism> is_automorphism(const Endomorphism& e);

// Elementary move symbols.  A non-conjugating move sends the moved generator
// z to z*t (eps=+1) or t^-1*z (eps=-1); a conjugating move sends z to
// t^-1*z*t.  All other generators are fixed.  A conjugating move whose target
// equals the moved y generator realizes as the identity map.
struct ShortMove {
  bool conjugating = false;
  Gen mover;
  int eps = 1;     // only meaningful when !conjugating
  Letter target;   // signed target letter

  ShortMove inverse() const { return ShortMove{conjugating, mover, eps, target.inv()}; }
};

Endomorphism realize(const ShortMove& m, const Rank& r);

// Whitehead automorphism of the first kind: a signed permutation, given by
// the image letter of each generator slot.
struct WhiteheadTypeI {
  std::vector<Letter> images;
};

// Whitehead automorphism of the second kind (A; a): letters of A other than
// a are right-multiplied by a (conjugated when both signs lie in A), a and
// everything outside A are fixed.  Requires a in A and a^-1 not in A.
struct WhiteheadTypeII {
  std::vector<Letter> set;  // the letter set A
  Letter a;
};

Endomorphism realize(const WhiteheadTypeI& w, const Rank& r);
Endomorphism realize(const WhiteheadTypeII& w, const Rank& r);

// Exponent-sum matrix; entry (r, c) is the exponent sum of generator r in the
// image of generator c.  Multiplicative: M(compose(f,g)) = M(g) * M(f).
std::vector<std::vector<long long>> abelianized_matrix(const Endomorphism& e);

std::string to_string(const Endomorphism& e);

// JSON-payload form: generator name -> image word in the text grammar.  The
// rank context is inferred from the key set, which must be complete.
std::map<std::string, std::string> endo_to_table(const Endomorphism& e);
Endomorphism endo_from_table(const std::map<std::string, std::string>& table);

}  // namespace fgb
