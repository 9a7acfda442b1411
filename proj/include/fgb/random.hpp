// Seeded random generators for property checks: words, elementary moves,
// automorphisms, and tuple-group elements.  Deterministic given the engine
// state; all CLI randomness flows through these.

#pragma once

#include <random>
#include <vector>

#include "fgb/boundary.hpp"
#include "fgb/endos.hpp"
#include "fgb/words.hpp"

namespace fgb {

using Rng = std::mt19937_64;

inline Letter random_letter(const Rank& r, Rng& rng) {
  std::uniform_int_distribution<int> slot(0, r.total() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  return Letter{gen_of_slot(r, slot(rng)), coin(rng) ? 1 : -1};
}

// Random freely reduced word of length len (shorter only at trivial rank).
inline Word random_word(const Rank& r, int len, Rng& rng) {
  std::vector<Letter> out;
  for (int t = 0; t < len && r.total() > 0; ++t) {
    for (int tries = 0; tries < 64; ++tries) {
      Letter l = random_letter(r, rng);
      if (!out.empty() && out.back() == l.inv()) continue;
      out.push_back(l);
      break;
    }
  }
  return Word(r, std::move(out));
}

inline ShortMove random_short_move(const Rank& r, Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    Letter mover = random_letter(r, rng);
    Letter target = random_letter(r, rng);
    if (mover.gen == target.gen) continue;
    bool conj = coin(rng) == 1 || mover.gen.kind == Kind::Y;
    return ShortMove{conj, mover.gen, coin(rng) ? 1 : -1, target};
  }
}

inline Endomorphism random_automorphism(const Rank& r, int moves, Rng& rng) {
  Endomorphism acc = identity_endo(r);
  for (int t = 0; t < moves; ++t) {
    acc = compose(acc, realize(random_short_move(r, rng), r));
  }
  return acc;
}

inline Endomorphism random_endomorphism(const Rank& r, int maxlen, Rng& rng) {
  Endomorphism e{r, {}};
  std::uniform_int_distribution<int> len(0, maxlen);
  for (int s = 0; s < r.total(); ++s) e.images.push_back(random_word(r, len(rng), rng));
  return e;
}

// Random tuple-group element: a product of generator tuples.
inline BoundaryElement random_boundary_element(int n, int k, int moves, Rng& rng) {
  Rank r{n, k, false};
  BoundaryElement acc = unit_element(n, k);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> xi(1, std::max(1, n));
  std::uniform_int_distribution<int> yi(1, std::max(1, k));
  for (int t = 0; t < moves; ++t) {
    BoundaryElement g = unit_element(n, k);
    int which = kind(rng);
    if (which == 0 && n > 0) {
      int i = xi(rng);
      Letter z = random_letter(r, rng);
      if (z.gen == gen_x(i)) continue;
      Word x = word_gen(r, gen_x(i));
      Word zz = word_letter(r, z);
      g.nu[i - 1] = coin(rng) ? multiply(x, zz) : multiply(invert(zz), x);
    } else if (which == 1 && k > 0) {
      int j = yi(rng);
      Letter z = random_letter(r, rng);
      g.w[j - 1] = word_letter(r, z);  // includes conjugation of y_j by itself
    } else if (k > 0) {
      int j = yi(rng);
      g.w[j - 1] = word_gen(r, gen_y(j), coin(rng) ? 1 : -1);
    } else {
      continue;
    }
    acc = multiply(acc, make_boundary_element(n, k, g.nu, g.w));
  }
  return acc;
}

inline std::vector<int> random_permutation(int k, Rng& rng) {
  std::vector<int> sigma(k);
  for (int i = 0; i < k; ++i) sigma[i] = i + 1;
  for (int i = k - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(sigma[i], sigma[pick(rng)]);
  }
  return sigma;
}

// Random element of the permutation-extended tuple group: a pure label
// permutation times a plain tuple, so the composite is an automorphism.
inline SigmaBoundaryElement random_sigma_element(int n, int k, int moves, Rng& rng) {
  SigmaBoundaryElement perm = make_sigma_element(random_permutation(k, rng), unit_element(n, k));
  SigmaBoundaryElement plain = sigma_unit(n, k);
  plain.element = random_boundary_element(n, k, moves, rng);
  return sigma_multiply(perm, plain);
}

}  // namespace fgb
