#include "fgb/words.hpp"

#include <algorithm>

namespace fgb {

bool legal_in(Gen g, const Rank& r) {
  if (g.index < 1) return false;
  switch (g.kind) {
    case Kind::X:
      return g.index <= r.n;
    case Kind::Y:
      return g.index <= r.k;
    case Kind::U:
    case Kind::V:
      return r.extended && g.index <= r.k;
  }
  return false;
}

void check_legal(const Letter& l, const Rank& r) {
  if (l.sign != 1 && l.sign != -1) {
    throw IllegalGenerator("letter sign must be +1 or -1");
  }
  if (!legal_in(l.gen, r)) {
    throw IllegalGenerator("letter " + to_string(l) + " is not legal at rank (n=" +
                           std::to_string(r.n) + ", k=" + std::to_string(r.k) +
                           (r.extended ? ", extended)" : ")"));
  }
}

Word reduce(const Rank& r, const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    check_legal(l, r);
    push_reduced(out, l);
  }
  return Word(r, std::move(out));
}

Word word_identity(const Rank& r) { return Word(r); }

Word word_letter(const Rank& r, Letter l) {
  check_legal(l, r);
  return Word(r, {l});
}

Word word_gen(const Rank& r, Gen g, int exponent) {
  check_legal(Letter{g, 1}, r);
  std::vector<Letter> ls;
  int sign = exponent >= 0 ? 1 : -1;
  for (int i = 0; i < std::abs(exponent); ++i) ls.push_back(Letter{g, sign});
  return Word(r, std::move(ls));
}

Word multiply(const Word& a, const Word& b) {
  if (a.rank != b.rank) throw RankMismatch("multiply: words in different rank contexts");
  std::vector<Letter> out = a.letters;
  out.reserve(a.letters.size() + b.letters.size());
  for (const Letter& l : b.letters) push_reduced(out, l);
  return Word(a.rank, std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.letters.rbegin(), w.letters.rend());
  for (Letter& l : out) l = l.inv();
  return Word(w.rank, std::move(out));
}

Word power(const Word& w, int e) {
  Word base = e >= 0 ? w : invert(w);
  Word acc(w.rank);
  for (int i = 0; i < std::abs(e); ++i) acc = multiply(acc, base);
  return acc;
}

Word conjugate(const Word& w, const Word& by) {
  return multiply(multiply(invert(by), w), by);
}

Word extend(const Word& w) {
  return Word(w.rank.extend(), w.letters);
}

namespace {

Word rotation(const Word& w, int r) {
  std::vector<Letter> out;
  int m = w.length();
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(w.letters[(i + r) % m]);
  return Word(w.rank, std::move(out));
}

bool word_lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                      b.letters.begin(), b.letters.end(), letter_less);
}

}  // namespace

CyclicWord make_cyclic(const Word& w) {
  if (!w.empty() && w.letters.front() == w.letters.back().inv()) {
    throw std::logic_error("make_cyclic: word is not cyclically reduced");
  }
  Word best = w;
  for (int r = 1; r < w.length(); ++r) {
    Word cand = rotation(w, r);
    if (word_lex_less(cand, best)) best = cand;
  }
  return CyclicWord{w, best};
}

std::pair<CyclicWord, Word> cyclic_reduce(const Word& w) {
  std::vector<Letter> rep = w.letters;
  std::vector<Letter> conj;
  while (rep.size() >= 2 && rep.front() == rep.back().inv()) {
    conj.insert(conj.begin(), rep.back());
    rep.pop_back();
    rep.erase(rep.begin());
  }
  return {make_cyclic(Word(w.rank, std::move(rep))), Word(w.rank, std::move(conj))};
}

std::optional<Word> are_conjugate(const Word& a, const Word& b) {
  if (a.rank != b.rank) throw RankMismatch("are_conjugate: words in different rank contexts");
  auto [ca, conj_a] = cyclic_reduce(a);
  auto [cb, conj_b] = cyclic_reduce(b);
  if (!(ca == cb)) return std::nullopt;
  const Word& core_a = ca.representative;
  const Word& core_b = cb.representative;
  int m = core_a.length();
  int offset = -1;
  for (int r = 0; r < std::max(1, m); ++r) {
    if (rotation(core_a, r) == core_b) {
      offset = r;
      break;
    }
  }
  if (offset < 0) return std::nullopt;  // equal canonical forms guarantee a rotation
  // a = conj_a^-1 core_a conj_a and rotating core_a by r conjugates by its
  // length-r prefix, so u = conj_a^-1 * prefix * conj_b.
  Word prefix(a.rank, std::vector<Letter>(core_a.letters.begin(), core_a.letters.begin() + offset));
  Word u = multiply(multiply(invert(conj_a), prefix), conj_b);
  if (!(conjugate(a, u) == b)) {
    throw std::logic_error("are_conjugate: witness failed verification");
  }
  return u;
}

std::string gen_name(Gen g) {
  static const char* names = "xyuv";
  return std::string(1, names[static_cast<int>(g.kind)]) + std::to_string(g.index);
}

std::string to_string(const Letter& l) {
  std::string s = gen_name(l.gen);
  if (l.sign < 0) s += "^-1";
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += "\xc2\xb7";
    out += to_string(w.letters[i]);
  }
  return out;
}

namespace {

Letter parse_letter(const std::string& tok) {
  if (tok.size() < 2) throw ParseError("bad letter token: " + tok);
  Kind kind;
  switch (tok[0]) {
    case 'x': kind = Kind::X; break;
    case 'y': kind = Kind::Y; break;
    case 'u': kind = Kind::U; break;
    case 'v': kind = Kind::V; break;
    default: throw ParseError("bad letter token: " + tok);
  }
  std::size_t pos = 1;
  int index = 0;
  while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') {
    index = index * 10 + (tok[pos] - '0');
    ++pos;
  }
  if (index == 0) throw ParseError("bad letter index: " + tok);
  int sign = 1;
  if (pos != tok.size()) {
    if (tok.substr(pos) != "^-1") throw ParseError("bad letter token: " + tok);
    sign = -1;
  }
  return Letter{Gen{kind, index}, sign};
}

}  // namespace

Word parse_word(const Rank& r, const std::string& text) {
  if (text == "1") return word_identity(r);
  if (text.empty()) throw ParseError("empty word text (identity is \"1\")");
  std::vector<Letter> raw;
  const std::string sep = "\xc2\xb7";
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    Letter l = parse_letter(tok);
    try {
      check_legal(l, r);
    } catch (const IllegalGenerator& e) {
      throw ParseError(e.what());
    }
    raw.push_back(l);
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return reduce(r, raw);
}

}  // namespace fgb
