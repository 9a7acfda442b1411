#include "fgb/endos.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fgb {

int slot_of(const Rank& r, Gen g) {
  if (!legal_in(g, r)) {
    throw IllegalGenerator("generator " + gen_name(g) + " not legal in rank context");
  }
  switch (g.kind) {
    case Kind::X: return g.index - 1;
    case Kind::Y: return r.n + g.index - 1;
    case Kind::U: return r.n + r.k + g.index - 1;
    case Kind::V: return r.n + 2 * r.k + g.index - 1;
  }
  throw std::logic_error("unreachable");
}

Gen gen_of_slot(const Rank& r, int slot) {
  if (slot < 0 || slot >= r.total()) throw std::out_of_range("generator slot out of range");
  if (slot < r.n) return gen_x(slot + 1);
  slot -= r.n;
  if (slot < r.k) return gen_y(slot + 1);
  slot -= r.k;
  if (slot < r.k) return gen_u(slot + 1);
  return gen_v(slot - r.k + 1);
}

Endomorphism identity_endo(const Rank& r) {
  Endomorphism e{r, {}};
  e.images.reserve(r.total());
  for (int s = 0; s < r.total(); ++s) {
    e.images.push_back(word_letter(r, Letter{gen_of_slot(r, s), 1}));
  }
  return e;
}

bool is_identity(const Endomorphism& e) {
  for (int s = 0; s < e.rank.total(); ++s) {
    const Word& im = e.images[s];
    if (im.length() != 1 || !(im.letters[0] == Letter{gen_of_slot(e.rank, s), 1})) return false;
  }
  return true;
}

Word apply(const Endomorphism& e, const Word& w) {
  if (e.rank != w.rank) throw RankMismatch("apply: endomorphism and word rank differ");
  std::vector<Letter> out;
  for (const Letter& l : w.letters) {
    const Word& im = e.images[slot_of(e.rank, l.gen)];
    if (l.sign > 0) {
      for (const Letter& m : im.letters) push_reduced(out, m);
    } else {
      for (auto it = im.letters.rbegin(); it != im.letters.rend(); ++it) {
        push_reduced(out, it->inv());
      }
    }
  }
  return Word(e.rank, std::move(out));
}

Endomorphism compose(const Endomorphism& first, const Endomorphism& then) {
  if (first.rank != then.rank) throw RankMismatch("compose: rank contexts differ");
  Endomorphism out{first.rank, {}};
  out.images.reserve(first.images.size());
  for (const Word& im : first.images) out.images.push_back(apply(then, im));
  return out;
}

namespace {

long long total_length(const std::vector<Word>& tuple) {
  long long s = 0;
  for (const Word& w : tuple) s += w.length();
  return s;
}

bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

// Inversion-symmetric word key for the length-preserving descent phase:
// the two half-prefixes of w and w^-1 as an ordered pair, then the words
// themselves.  A sandwich configuration (a word cancelled away entirely by
// exact half overlaps on both sides) always admits a move decreasing this
// key on one of its neighbours, so descent cannot stall on a basis.
struct WordKey {
  std::vector<Letter> halves[2];
  std::vector<Letter> words[2];
};

WordKey word_key(const Word& w) {
  Word wi = invert(w);
  std::size_t h = w.letters.size() / 2;
  WordKey key;
  key.halves[0].assign(w.letters.begin(), w.letters.begin() + h);
  key.halves[1].assign(wi.letters.begin(), wi.letters.begin() + h);
  if (letters_less(key.halves[1], key.halves[0])) std::swap(key.halves[0], key.halves[1]);
  key.words[0] = w.letters;
  key.words[1] = wi.letters;
  if (letters_less(key.words[1], key.words[0])) std::swap(key.words[0], key.words[1]);
  return key;
}

bool key_less(const WordKey& a, const WordKey& b) {
  for (int t = 0; t < 2; ++t) {
    if (letters_less(a.halves[t], b.halves[t])) return true;
    if (letters_less(b.halves[t], a.halves[t])) return false;
  }
  for (int t = 0; t < 2; ++t) {
    if (letters_less(a.words[t], b.words[t])) return true;
    if (letters_less(b.words[t], a.words[t])) return false;
  }
  return false;
}

}  // namespace

NielsenResult nielsen_reduce(std::vector<Word> tuple) {
  NielsenResult res;
  const int m = static_cast<int>(tuple.size());
  for (;;) {
    int best_delta = 0;
    bool flat = false;  // best move is length-preserving but key-reducing
    NielsenMove best{};
    Word best_word;
    for (int kind = 0; kind < 2; ++kind) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          for (int es = 0; es < 2; ++es) {
            int eps = es == 0 ? 1 : -1;
            Word factor = eps == 1 ? tuple[j] : invert(tuple[j]);
            Word cand = kind == 0 ? multiply(factor, tuple[i]) : multiply(tuple[i], factor);
            int delta = tuple[i].length() - cand.length();
            if (delta > best_delta) {
              best_delta = delta;
              best = NielsenMove{kind == 1, i, j, eps};
              best_word = cand;
            } else if (best_delta == 0 && delta == 0 && !flat &&
                       key_less(word_key(cand), word_key(tuple[i]))) {
              flat = true;
              best = NielsenMove{kind == 1, i, j, eps};
              best_word = cand;
            }
          }
        }
      }
    }
    if (best_delta <= 0 && !flat) break;
    tuple[best.i] = best_word;
    res.log.push_back(best);
  }
  res.tuple = std::move(tuple);
  return res;
}

namespace {

// One elementary Nielsen move as an endomorphism: x_i <- x_j^eps x_i or
// x_i <- x_i x_j^eps in the given rank.
Endomorphism move_endo(const Rank& r, const NielsenMove& mv) {
  Endomorphism e = identity_endo(r);
  Gen gi = gen_of_slot(r, mv.i);
  Gen gj = gen_of_slot(r, mv.j);
  Word xi = word_letter(r, Letter{gi, 1});
  Word xj = word_letter(r, Letter{gj, mv.eps});
  e.images[mv.i] = mv.right ? multiply(xi, xj) : multiply(xj, xi);
  return e;
}

}  // namespace

std::optional<Endomorphism> is_automorphism(const Endomorphism& e) {
  const Rank& r = e.rank;
  const int m = r.total();
  NielsenResult red = nielsen_reduce(e.images);
  if (total_length(red.tuple) != m) return std::nullopt;
  std::vector<int> seen(m, 0);
  for (const Word& w : red.tuple) {
    if (w.length() != 1) return std::nullopt;
    seen[slot_of(r, w.letters[0].gen)] += 1;
  }
  for (int c : seen) {
    if (c != 1) return std::nullopt;
  }
  // The log certifies e = perm after the moves; unwind it to get the inverse.
  Endomorphism perm_inv{r, std::vector<Word>(m, Word(r))};
  for (int i = 0; i < m; ++i) {
    const Letter& l = red.tuple[i].letters[0];
    perm_inv.images[slot_of(r, l.gen)] = word_letter(r, Letter{gen_of_slot(r, i), l.sign});
  }
  Endomorphism inv = perm_inv;
  for (auto it = red.log.rbegin(); it != red.log.rend(); ++it) {
    inv = compose(inv, move_endo(r, *it));
  }
  if (!is_identity(compose(e, inv)) || !is_identity(compose(inv, e))) {
    throw std::logic_error("is_automorphism: inverse certificate failed");
  }
  return inv;
}

Endomorphism realize(const ShortMove& m, const Rank& r) {
  check_legal(m.target, r);
  check_legal(Letter{m.mover, 1}, r);
  if (m.mover == m.target.gen) {
    if (!m.conjugating || m.mover.kind != Kind::Y) {
      throw IllegalSymbol("move target equals the moved generator");
    }
    return identity_endo(r);  // conjugation of a y generator by itself
  }
  Endomorphism e = identity_endo(r);
  int slot = slot_of(r, m.mover);
  Word z = word_letter(r, Letter{m.mover, 1});
  Word t = word_letter(r, m.target);
  if (m.conjugating) {
    e.images[slot] = multiply(multiply(invert(t), z), t);
  } else if (m.eps == 1) {
    e.images[slot] = multiply(z, t);
  } else if (m.eps == -1) {
    e.images[slot] = multiply(invert(t), z);
  } else {
    throw IllegalSymbol("move sign must be +1 or -1");
  }
  return e;
}

Endomorphism realize(const WhiteheadTypeI& w, const Rank& r) {
  const int m = r.total();
  if (static_cast<int>(w.images.size()) != m) {
    throw IllegalSymbol("signed permutation must cover every generator slot");
  }
  std::vector<int> seen(m, 0);
  Endomorphism e{r, {}};
  for (const Letter& l : w.images) {
    check_legal(l, r);
    seen[slot_of(r, l.gen)] += 1;
    e.images.push_back(word_letter(r, l));
  }
  for (int c : seen) {
    if (c != 1) throw IllegalSymbol("image letters do not form a permutation");
  }
  return e;
}

Endomorphism realize(const WhiteheadTypeII& w, const Rank& r) {
  check_legal(w.a, r);
  auto contains = [&](const Letter& l) {
    return std::find(w.set.begin(), w.set.end(), l) != w.set.end();
  };
  if (!contains(w.a) || contains(w.a.inv())) {
    throw IllegalSymbol("(A;a) requires a in A and a^-1 not in A");
  }
  Endomorphism e = identity_endo(r);
  Word ta = word_letter(r, w.a);
  for (int s = 0; s < r.total(); ++s) {
    Gen g = gen_of_slot(r, s);
    if (g == w.a.gen) continue;  // a itself is fixed
    Letter pos{g, 1};
    bool has_pos = contains(pos);
    bool has_neg = contains(pos.inv());
    Word z = word_letter(r, pos);
    if (has_pos && has_neg) {
      e.images[s] = multiply(multiply(invert(ta), z), ta);
    } else if (has_pos) {
      e.images[s] = multiply(z, ta);
    } else if (has_neg) {
      e.images[s] = multiply(invert(ta), z);
    }
  }
  return e;
}

std::vector<std::vector<long long>> abelianized_matrix(const Endomorphism& e) {
  const int m = e.rank.total();
  std::vector<std::vector<long long>> mat(m, std::vector<long long>(m, 0));
  for (int c = 0; c < m; ++c) {
    for (const Letter& l : e.images[c].letters) {
      mat[slot_of(e.rank, l.gen)][c] += l.sign;
    }
  }
  return mat;
}

std::map<std::string, std::string> endo_to_table(const Endomorphism& e) {
  std::map<std::string, std::string> out;
  for (int s = 0; s < e.rank.total(); ++s) {
    out[gen_name(gen_of_slot(e.rank, s))] = to_string(e.images[s]);
  }
  return out;
}

Endomorphism endo_from_table(const std::map<std::string, std::string>& table) {
  int n = 0, k = 0;
  bool extended = false;
  for (const auto& [name, word] : table) {
    if (name.size() < 2) throw ParseError("bad generator name: " + name);
    int index = std::atoi(name.c_str() + 1);
    if (index < 1) throw ParseError("bad generator name: " + name);
    switch (name[0]) {
      case 'x': n = std::max(n, index); break;
      case 'y': k = std::max(k, index); break;
      case 'u':
      case 'v':
        k = std::max(k, index);
        extended = true;
        break;
      default: throw ParseError("bad generator name: " + name);
    }
  }
  Rank r{n, k, extended};
  if (static_cast<int>(table.size()) != r.total()) {
    throw ParseError("generator table must cover every generator exactly once");
  }
  Endomorphism e{r, std::vector<Word>(r.total(), Word(r))};
  for (const auto& [name, word] : table) {
    Letter l = Letter{Gen{}, 1};
    switch (name[0]) {
      case 'x': l.gen = gen_x(std::atoi(name.c_str() + 1)); break;
      case 'y': l.gen = gen_y(std::atoi(name.c_str() + 1)); break;
      case 'u': l.gen = gen_u(std::atoi(name.c_str() + 1)); break;
      case 'v': l.gen = gen_v(std::atoi(name.c_str() + 1)); break;
    }
    e.images[slot_of(r, l.gen)] = parse_word(r, word);
  }
  return e;
}

std::string to_string(const Endomorphism& e) {
  std::string out = "{";
  for (int s = 0; s < e.rank.total(); ++s) {
    if (s) out += ", ";
    out += gen_name(gen_of_slot(e.rank, s)) + " -> " + to_string(e.images[s]);
  }
  return out + "}";
}

}  // namespace fgb
