#include "fgb/presentations.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgb {

std::string group_name(Group g) { return g == Group::conj ? "conj" : "bdy"; }

std::optional<Group> parse_group(const std::string& s) {
  if (s == "conj") return Group::conj;
  if (s == "bdy") return Group::bdy;
  return std::nullopt;
}

std::string schema_name(Schema s) {
  switch (s) {
    case Schema::Q1: return "Q1";
    case Schema::Q2: return "Q2";
    case Schema::Q3_1: return "Q3.1";
    case Schema::Q3_2: return "Q3.2";
    case Schema::Q4_1: return "Q4.1";
    case Schema::Q4_2: return "Q4.2";
    case Schema::Q5: return "Q5";
    case Schema::Q2p: return "Q2'";
    case Schema::Q5p: return "Q5'";
    case Schema::Z1: return "Z1";
    case Schema::Z2: return "Z2";
    case Schema::Z3: return "Z3";
  }
  return "?";
}

std::optional<Schema> parse_schema(const std::string& s) {
  static const std::vector<Schema> all = {
      Schema::Q1,  Schema::Q2,  Schema::Q3_1, Schema::Q3_2, Schema::Q4_1, Schema::Q4_2,
      Schema::Q5,  Schema::Q2p, Schema::Q5p,  Schema::Z1,   Schema::Z2,   Schema::Z3};
  for (Schema sc : all) {
    if (schema_name(sc) == s) return sc;
  }
  return std::nullopt;
}

GenSymbol sym_p(int i, int j) {
  GenSymbol s;
  s.type = GenSymbol::Type::P;
  s.i = std::min(i, j);
  s.j = std::max(i, j);
  return s;
}
GenSymbol sym_i(int i) {
  GenSymbol s;
  s.type = GenSymbol::Type::I;
  s.i = i;
  return s;
}
GenSymbol sym_xmove(int i, int eps, Gen z) {
  GenSymbol s;
  s.type = GenSymbol::Type::XMove;
  s.i = i;
  s.eps = eps;
  s.z = z;
  return s;
}
GenSymbol sym_ymove(int i, Gen z) {
  GenSymbol s;
  s.type = GenSymbol::Type::YMove;
  s.i = i;
  s.z = z;
  return s;
}
GenSymbol sym_yself(int i) {
  GenSymbol s;
  s.type = GenSymbol::Type::YSelf;
  s.i = i;
  s.z = gen_y(i);
  return s;
}

std::string to_string(const GenSymbol& s) {
  switch (s.type) {
    case GenSymbol::Type::P:
      return "P(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
    case GenSymbol::Type::I:
      return "I(" + std::to_string(s.i) + ")";
    case GenSymbol::Type::XMove:
      return "(x" + std::to_string(s.i) + (s.eps < 0 ? "^-1;" : ";") + gen_name(s.z) + ")";
    case GenSymbol::Type::YMove:
      return "(y" + std::to_string(s.i) + "^+-;" + gen_name(s.z) + ")";
    case GenSymbol::Type::YSelf:
      return "(y" + std::to_string(s.i) + "^+-;y" + std::to_string(s.i) + ")";
  }
  return "?";
}

std::string to_string(const SymbolWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ".";
    out += to_string(w[t].sym);
    if (w[t].pow < 0) out += "^-1";
  }
  return out;
}

bool symbol_wellformed(const GenSymbol& s, int n, int k, Group group) {
  switch (s.type) {
    case GenSymbol::Type::P:
      return 1 <= s.i && s.i < s.j && s.j <= n;
    case GenSymbol::Type::I:
      return 1 <= s.i && s.i <= n;
    case GenSymbol::Type::XMove:
      if (s.i < 1 || s.i > n || (s.eps != 1 && s.eps != -1)) return false;
      if (!legal_in(s.z, Rank{n, k, false}) || s.z.kind == Kind::U || s.z.kind == Kind::V) return false;
      return !(s.z == gen_x(s.i));
    case GenSymbol::Type::YMove:
      if (s.i < 1 || s.i > k) return false;
      if (!legal_in(s.z, Rank{n, k, false}) || s.z.kind == Kind::U || s.z.kind == Kind::V) return false;
      return !(s.z == gen_y(s.i));
    case GenSymbol::Type::YSelf:
      return group == Group::bdy && 1 <= s.i && s.i <= k;
  }
  return false;
}

Endomorphism realize_conj(const GenSymbol& s, int pow, int n, int k) {
  if (pow != 1 && pow != -1) throw IllegalSymbol("symbol power must be +1 or -1");
  Rank r{n, k, false};
  switch (s.type) {
    case GenSymbol::Type::P: {
      Endomorphism e = identity_endo(r);
      e.images[slot_of(r, gen_x(s.i))] = word_gen(r, gen_x(s.j));
      e.images[slot_of(r, gen_x(s.j))] = word_gen(r, gen_x(s.i));
      return e;
    }
    case GenSymbol::Type::I: {
      Endomorphism e = identity_endo(r);
      e.images[slot_of(r, gen_x(s.i))] = word_gen(r, gen_x(s.i), -1);
      return e;
    }
    case GenSymbol::Type::XMove:
      return realize(ShortMove{false, gen_x(s.i), s.eps, Letter{s.z, pow}}, r);
    case GenSymbol::Type::YMove:
      return realize(ShortMove{true, gen_y(s.i), 1, Letter{s.z, pow}}, r);
    case GenSymbol::Type::YSelf:
      return identity_endo(r);
  }
  throw IllegalSymbol("unknown symbol");
}

BoundaryElement realize_bdy(const GenSymbol& s, int pow, int n, int k) {
  if (pow != 1 && pow != -1) throw IllegalSymbol("symbol power must be +1 or -1");
  Rank r{n, k, false};
  BoundaryElement e = unit_element(n, k);
  switch (s.type) {
    case GenSymbol::Type::P:
      e.nu[s.i - 1] = word_gen(r, gen_x(s.j));
      e.nu[s.j - 1] = word_gen(r, gen_x(s.i));
      break;
    case GenSymbol::Type::I:
      e.nu[s.i - 1] = word_gen(r, gen_x(s.i), -1);
      break;
    case GenSymbol::Type::XMove: {
      Word x = word_gen(r, gen_x(s.i));
      Word t = word_gen(r, s.z, pow);
      e.nu[s.i - 1] = s.eps == 1 ? multiply(x, t) : multiply(invert(t), x);
      break;
    }
    case GenSymbol::Type::YMove:
      e.w[s.i - 1] = word_gen(r, s.z, pow);
      break;
    case GenSymbol::Type::YSelf:
      e.w[s.i - 1] = word_gen(r, gen_y(s.i), pow);
      break;
  }
  return make_boundary_element(n, k, e.nu, e.w);
}

Endomorphism evaluate_conj(const SymbolWord& w, int n, int k) {
  Endomorphism acc = identity_endo(Rank{n, k, false});
  for (const SignedSymbol& ss : w) acc = compose(acc, realize_conj(ss.sym, ss.pow, n, k));
  return acc;
}

BoundaryElement evaluate_bdy(const SymbolWord& w, int n, int k) {
  BoundaryElement acc = unit_element(n, k);
  for (const SignedSymbol& ss : w) acc = multiply(acc, realize_bdy(ss.sym, ss.pow, n, k));
  return acc;
}

// ---------------------------------------------------------------------------
// generator enumeration
// ---------------------------------------------------------------------------

namespace {

std::vector<Gen> positive_letters(int n, int k) {
  std::vector<Gen> out;
  for (int i = 1; i <= n; ++i) out.push_back(gen_x(i));
  for (int j = 1; j <= k; ++j) out.push_back(gen_y(j));
  return out;
}

// First slot of a move symbol: x_i^delta or y_i^(+-).
struct WSlot {
  bool x = true;
  int index = 1;
  int delta = 1;  // only for x slots

  Gen base() const { return x ? gen_x(index) : gen_y(index); }
  GenSymbol with_target(Gen z) const {
    return x ? sym_xmove(index, delta, z) : sym_ymove(index, z);
  }
  bool operator==(const WSlot&) const = default;
};

std::vector<WSlot> all_wslots(int n, int k) {
  std::vector<WSlot> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(WSlot{true, i, 1});
    out.push_back(WSlot{true, i, -1});
  }
  for (int i = 1; i <= k; ++i) out.push_back(WSlot{false, i, 1});
  return out;
}

std::string wslot_name(const WSlot& w) {
  if (w.x) return "x" + std::to_string(w.index) + (w.delta < 0 ? "^-1" : "");
  return "y" + std::to_string(w.index) + "^+-";
}

}  // namespace

std::vector<GenSymbol> enumerate_generators(int n, int k, Group group) {
  std::vector<GenSymbol> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(sym_p(i, j));
  }
  for (int i = 1; i <= n; ++i) out.push_back(sym_i(i));
  std::vector<Gen> letters = positive_letters(n, k);
  for (int i = 1; i <= n; ++i) {
    for (int es = 0; es < 2; ++es) {
      for (Gen z : letters) {
        if (z == gen_x(i)) continue;
        out.push_back(sym_xmove(i, es == 0 ? 1 : -1, z));
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (Gen z : letters) {
      if (z == gen_y(i)) continue;
      out.push_back(sym_ymove(i, z));
    }
  }
  if (group == Group::bdy) {
    for (int i = 1; i <= k; ++i) out.push_back(sym_yself(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whitehead-relation machinery (used for Q1 and for the rank-(n+k) suite)
// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint32_t;

// Letter sets over slots 0..slots-1 (x slots first, then y slots when
// enabled); letter id = 2*slot + (1 if negative).
struct WClass {
  int n = 0;
  int k = 0;
  bool with_y = false;

  int slots() const { return n + (with_y ? k : 0); }
  int letters() const { return 2 * slots(); }
  Mask full() const { return (Mask(1) << letters()) - 1; }
  Rank rank() const { return Rank{n, k, false}; }

  Letter letter(int lid) const {
    int s = lid / 2;
    Gen g = s < n ? gen_x(s + 1) : gen_y(s - n + 1);
    return Letter{g, lid % 2 == 0 ? 1 : -1};
  }
};

inline int lid_inv(int lid) { return lid ^ 1; }
inline Mask bit(int lid) { return Mask(1) << lid; }

// Letter-set shape (A; a): a in A, a^-1 not in A, and when y letters are in
// play each y slot other than a's enters A with both signs or not at all.
bool is_shape(const WClass& c, Mask set, int a) {
  if (!(set & bit(a)) || (set & bit(lid_inv(a)))) return false;
  if ((set & ~c.full()) != 0) return false;
  int abase = a / 2;
  for (int s = 0; s < c.slots(); ++s) {
    Mask sub = (set >> (2 * s)) & 3u;
    if (s == abase) {
      if (sub != (bit(a) >> (2 * s))) return false;  // only a itself
    } else if (s >= c.n) {
      if (sub != 0 && sub != 3u) return false;  // y slots come in pairs
    }
  }
  return true;
}

struct Shape {
  Mask set = 0;
  int a = 0;
};

std::vector<Shape> all_shapes(const WClass& c) {
  std::vector<Shape> out;
  for (int a = 0; a < c.letters(); ++a) {
    int abase = a / 2;
    std::vector<Mask> partial = {bit(a)};
    for (int s = 0; s < c.slots(); ++s) {
      if (s == abase) continue;
      std::vector<Mask> options;
      if (s < c.n) {
        options = {0, bit(2 * s), bit(2 * s + 1), bit(2 * s) | bit(2 * s + 1)};
      } else {
        options = {0, bit(2 * s) | bit(2 * s + 1)};
      }
      std::vector<Mask> next;
      next.reserve(partial.size() * options.size());
      for (Mask m : partial) {
        for (Mask o : options) next.push_back(m | o);
      }
      partial = std::move(next);
    }
    for (Mask m : partial) out.push_back(Shape{m, a});
  }
  return out;
}

struct TypeIOp {
  int kind = 0;  // 0 swap x_i,x_j; 1 invert x_i; 2 swap y_i,y_j; 3 invert y_i
  int i = 0;
  int j = 0;
};

int apply_op_lid(const WClass& c, const TypeIOp& op, int lid) {
  int s = lid / 2;
  int neg = lid % 2;
  auto xs = [&](int i) { return i - 1; };
  auto ys = [&](int i) { return c.n + i - 1; };
  switch (op.kind) {
    case 0:
      if (s == xs(op.i)) return 2 * xs(op.j) + neg;
      if (s == xs(op.j)) return 2 * xs(op.i) + neg;
      return lid;
    case 1:
      return s == xs(op.i) ? lid ^ 1 : lid;
    case 2:
      if (s == ys(op.i)) return 2 * ys(op.j) + neg;
      if (s == ys(op.j)) return 2 * ys(op.i) + neg;
      return lid;
    case 3:
      return s == ys(op.i) ? lid ^ 1 : lid;
  }
  return lid;
}

Mask apply_op_mask(const WClass& c, const TypeIOp& op, Mask m) {
  Mask out = 0;
  for (int lid = 0; lid < c.letters(); ++lid) {
    if (m & bit(lid)) out |= bit(apply_op_lid(c, op, lid));
  }
  return out;
}

std::string op_name(const TypeIOp& op) {
  switch (op.kind) {
    case 0: return "Px(" + std::to_string(op.i) + "," + std::to_string(op.j) + ")";
    case 1: return "Ix(" + std::to_string(op.i) + ")";
    case 2: return "Py(" + std::to_string(op.i) + "," + std::to_string(op.j) + ")";
    case 3: return "Iy(" + std::to_string(op.i) + ")";
  }
  return "?";
}

struct RToken {
  bool w2 = true;
  Mask set = 0;
  int a = 0;
  std::vector<TypeIOp> ops;  // when !w2
};

RToken tok_w2(Mask set, int a) { return RToken{true, set, a, {}}; }
RToken tok_ops(std::vector<TypeIOp> ops) { return RToken{false, 0, 0, std::move(ops)}; }

struct RRel {
  std::string tag;  // "R1".."R10"
  std::string params;
  std::vector<RToken> lhs, rhs;
};

std::string letter_str(const WClass& c, int lid) { return to_string(c.letter(lid)); }

std::string mask_str(const WClass& c, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int lid = 0; lid < c.letters(); ++lid) {
    if (!(m & bit(lid))) continue;
    if (!first) out += ",";
    out += letter_str(c, lid);
    first = false;
  }
  return out + "}";
}

std::string shape_str(const WClass& c, Mask set, int a) {
  return "(" + mask_str(c, set) + ";" + letter_str(c, a) + ")";
}

// Type I generators available in the class: x swaps/inversions, plus y
// swaps/inversions when y letters participate.
std::vector<TypeIOp> type1_generators(const WClass& c) {
  std::vector<TypeIOp> out;
  for (int i = 1; i <= c.n; ++i) {
    for (int j = i + 1; j <= c.n; ++j) out.push_back(TypeIOp{0, i, j});
  }
  for (int i = 1; i <= c.n; ++i) out.push_back(TypeIOp{1, i, 0});
  if (c.with_y) {
    for (int i = 1; i <= c.k; ++i) {
      for (int j = i + 1; j <= c.k; ++j) out.push_back(TypeIOp{2, i, j});
    }
    for (int i = 1; i <= c.k; ++i) out.push_back(TypeIOp{3, i, 0});
  }
  return out;
}

// Type I relation instances (a presentation of the signed-permutation
// groups acting on the x letters, and on the y letters when present).
void add_type1_relations(const WClass& c, std::vector<RRel>& out) {
  auto rel = [&](std::string params, std::vector<TypeIOp> l, std::vector<TypeIOp> r) {
    out.push_back(RRel{"R7", std::move(params), {tok_ops(std::move(l))}, {tok_ops(std::move(r))}});
  };
  auto family = [&](int count, int kswap, int kinv, const char* tagp, const char* tagi) {
    for (int i = 1; i <= count; ++i) {
      for (int j = i + 1; j <= count; ++j) {
        rel(std::string(tagp) + "(" + std::to_string(i) + "," + std::to_string(j) + ")^2",
            {TypeIOp{kswap, i, j}, TypeIOp{kswap, i, j}}, {});
      }
    }
    for (int i = 1; i <= count; ++i) {
      rel(std::string(tagi) + "(" + std::to_string(i) + ")^2",
          {TypeIOp{kinv, i, 0}, TypeIOp{kinv, i, 0}}, {});
    }
    for (int i = 1; i <= count; ++i) {
      for (int j = i + 1; j <= count; ++j) {
        rel(std::string("[") + tagi + std::to_string(i) + "," + tagi + std::to_string(j) + "]",
            {TypeIOp{kinv, i, 0}, TypeIOp{kinv, j, 0}}, {TypeIOp{kinv, j, 0}, TypeIOp{kinv, i, 0}});
      }
    }
    for (int i = 1; i <= count; ++i) {
      for (int j = 1; j <= count; ++j) {
        if (i == j) continue;
        // swap then invert the moved index
        rel(std::string(tagp) + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j)) +
                "." + tagi + std::to_string(i),
            {TypeIOp{kswap, std::min(i, j), std::max(i, j)}, TypeIOp{kinv, i, 0}},
            {TypeIOp{kinv, j, 0}, TypeIOp{kswap, std::min(i, j), std::max(i, j)}});
      }
    }
    for (int i = 1; i <= count; ++i) {
      for (int j = i + 1; j <= count; ++j) {
        for (int l = 1; l <= count; ++l) {
          if (l == i || l == j) continue;
          rel(std::string("[") + tagp + std::to_string(i) + std::to_string(j) + "," + tagi +
                  std::to_string(l) + "]",
              {TypeIOp{kswap, i, j}, TypeIOp{kinv, l, 0}},
              {TypeIOp{kinv, l, 0}, TypeIOp{kswap, i, j}});
        }
      }
    }
    // braid-type: swap(i,j) swap(j,l) swap(i,j) = swap(i,l)
    for (int i = 1; i <= count; ++i) {
      for (int j = 1; j <= count; ++j) {
        for (int l = 1; l <= count; ++l) {
          if (i == j || j == l || i == l || i > l) continue;
          rel(std::string(tagp) + "-braid(" + std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(l) + ")",
              {TypeIOp{kswap, std::min(i, j), std::max(i, j)},
               TypeIOp{kswap, std::min(j, l), std::max(j, l)},
               TypeIOp{kswap, std::min(i, j), std::max(i, j)}},
              {TypeIOp{kswap, i, l}});
        }
      }
    }
    for (int i = 1; i <= count; ++i) {
      for (int j = i + 1; j <= count; ++j) {
        for (int l = i + 1; l <= count; ++l) {
          for (int m = l + 1; m <= count; ++m) {
            if (l == j || m == j || std::make_pair(i, j) >= std::make_pair(l, m)) continue;
            rel(std::string("[") + tagp + std::to_string(i) + std::to_string(j) + "," + tagp +
                    std::to_string(l) + std::to_string(m) + "]",
                {TypeIOp{kswap, i, j}, TypeIOp{kswap, l, m}},
                {TypeIOp{kswap, l, m}, TypeIOp{kswap, i, j}});
          }
        }
      }
    }
  };
  family(c.n, 0, 1, "Px", "Ix");
  if (c.with_y) {
    family(c.k, 2, 3, "Py", "Iy");
    // the two families commute
    std::vector<TypeIOp> xgens, ygens;
    for (const TypeIOp& op : type1_generators(c)) {
      (op.kind <= 1 ? xgens : ygens).push_back(op);
    }
    for (const TypeIOp& a : xgens) {
      for (const TypeIOp& b : ygens) {
        rel("[" + op_name(a) + "," + op_name(b) + "]", {a, b}, {b, a});
      }
    }
  }
}

std::vector<RRel> whitehead_relations(const WClass& c) {
  std::vector<RRel> out;
  std::vector<Shape> shapes = all_shapes(c);
  const Mask L = c.full();

  auto shape_ok = [&](Mask set, int a) { return is_shape(c, set, a); };
  auto inv_shape = [&](const Shape& s) {  // (A-a+a^-1; a^-1)
    return Shape{(s.set & ~bit(s.a)) | bit(lid_inv(s.a)), lid_inv(s.a)};
  };

  // R1: (A;a)(A-a+a^-1;a^-1) = 1
  for (const Shape& s : shapes) {
    Shape t = inv_shape(s);
    out.push_back(RRel{"R1", shape_str(c, s.set, s.a),
                       {tok_w2(s.set, s.a), tok_w2(t.set, t.a)},
                       {}});
  }
  // R2: (A;a)(B;a) = (A∪B;a) when A∩B = {a}; unordered pairs
  for (std::size_t p = 0; p < shapes.size(); ++p) {
    for (std::size_t q = p; q < shapes.size(); ++q) {
      const Shape& A = shapes[p];
      const Shape& B = shapes[q];
      if (A.a != B.a || (A.set & B.set) != bit(A.a)) continue;
      if (!shape_ok(A.set | B.set, A.a)) continue;
      out.push_back(RRel{"R2", shape_str(c, A.set, A.a) + shape_str(c, B.set, B.a),
                         {tok_w2(A.set, A.a), tok_w2(B.set, B.a)},
                         {tok_w2(A.set | B.set, A.a)}});
    }
  }
  // R3: commutation when A∩B = ∅, a^-1 ∉ B, b^-1 ∉ A; unordered pairs
  for (std::size_t p = 0; p < shapes.size(); ++p) {
    for (std::size_t q = p + 1; q < shapes.size(); ++q) {
      const Shape& A = shapes[p];
      const Shape& B = shapes[q];
      if ((A.set & B.set) != 0) continue;
      if (B.set & bit(lid_inv(A.a))) continue;
      if (A.set & bit(lid_inv(B.a))) continue;
      out.push_back(RRel{"R3", shape_str(c, A.set, A.a) + shape_str(c, B.set, B.a),
                         {tok_w2(A.set, A.a), tok_w2(B.set, B.a)},
                         {tok_w2(B.set, B.a), tok_w2(A.set, A.a)}});
    }
  }
  // R4: (B;b)^-1 (A;a)(B;b) = (A+B-b;a) when A∩B = ∅, a^-1 ∉ B, b^-1 ∈ A
  for (const Shape& A : shapes) {
    for (const Shape& B : shapes) {
      if ((A.set & B.set) != 0) continue;
      if (B.set & bit(lid_inv(A.a))) continue;
      if (!(A.set & bit(lid_inv(B.a)))) continue;
      Mask merged = (A.set | B.set) & ~bit(B.a);
      if (!shape_ok(merged, A.a)) continue;
      Shape Binv = inv_shape(B);
      out.push_back(RRel{"R4", shape_str(c, A.set, A.a) + shape_str(c, B.set, B.a),
                         {tok_w2(Binv.set, Binv.a), tok_w2(A.set, A.a), tok_w2(B.set, B.a)},
                         {tok_w2(merged, A.a)}});
    }
  }
  // R5: (A;a)(A-a+a^-1;b) = sigma_{a->b^-1, b->a} (A-b+b^-1;a)
  //     when b ∈ A, b^-1 ∉ A, a != b.  Shape closure forces a, b among the
  //     x letters, where sigma is a swap followed by an inversion.
  for (const Shape& A : shapes) {
    for (int b = 0; b < c.letters(); ++b) {
      if (b == A.a || !(A.set & bit(b)) || (A.set & bit(lid_inv(b)))) continue;
      Mask m1 = (A.set & ~bit(A.a)) | bit(lid_inv(A.a));
      Mask m2 = (A.set & ~bit(b)) | bit(lid_inv(b));
      if (!shape_ok(m1, b) || !shape_ok(m2, A.a)) continue;
      if (A.a / 2 >= c.n || b / 2 >= c.n) continue;
      int i = A.a / 2 + 1, j = b / 2 + 1;
      int alpha = A.a % 2 == 0 ? 1 : -1, beta = b % 2 == 0 ? 1 : -1;
      std::vector<TypeIOp> sigma = {TypeIOp{0, std::min(i, j), std::max(i, j)},
                                    TypeIOp{1, alpha * beta > 0 ? j : i, 0}};
      out.push_back(RRel{"R5",
                         shape_str(c, A.set, A.a) + ",b=" + letter_str(c, b),
                         {tok_w2(A.set, A.a), tok_w2(m1, b)},
                         {tok_ops(std::move(sigma)), tok_w2(m2, A.a)}});
    }
  }
  // R6: T^-1 (A;a) T = (AT; aT) for Type I generators T (involutions)
  for (const Shape& A : shapes) {
    for (const TypeIOp& T : type1_generators(c)) {
      Mask mt = apply_op_mask(c, T, A.set);
      int at = apply_op_lid(c, T, A.a);
      out.push_back(RRel{"R6", shape_str(c, A.set, A.a) + "," + op_name(T),
                         {tok_ops({T}), tok_w2(A.set, A.a), tok_ops({T})},
                         {tok_w2(mt, at)}});
    }
  }
  // R7: Type I relations
  add_type1_relations(c, out);
  // R8: (A;a) = (L-a^-1;a)(L-A;a^-1), both factor orders
  for (const Shape& A : shapes) {
    Mask big = L & ~bit(lid_inv(A.a));
    Mask comp = L & ~A.set;
    if (!shape_ok(big, A.a) || !shape_ok(comp, lid_inv(A.a))) continue;
    out.push_back(RRel{"R8", shape_str(c, A.set, A.a) + ",lr",
                       {tok_w2(A.set, A.a)},
                       {tok_w2(big, A.a), tok_w2(comp, lid_inv(A.a))}});
    out.push_back(RRel{"R8", shape_str(c, A.set, A.a) + ",rl",
                       {tok_w2(A.set, A.a)},
                       {tok_w2(comp, lid_inv(A.a)), tok_w2(big, A.a)}});
  }
  // R9: (L-b;b^-1)(A;a)(L-b^-1;b) = (A;a) when b, b^-1 ∉ A
  for (const Shape& A : shapes) {
    for (int b = 0; b < c.letters(); ++b) {
      if ((A.set & bit(b)) || (A.set & bit(lid_inv(b)))) continue;
      Mask lb = L & ~bit(b);
      Mask lbi = L & ~bit(lid_inv(b));
      if (!shape_ok(lb, lid_inv(b)) || !shape_ok(lbi, b)) continue;
      out.push_back(RRel{"R9", shape_str(c, A.set, A.a) + ",b=" + letter_str(c, b),
                         {tok_w2(lb, lid_inv(b)), tok_w2(A.set, A.a), tok_w2(lbi, b)},
                         {tok_w2(A.set, A.a)}});
    }
  }
  // R10: (L-b;b^-1)(A;a)(L-b^-1;b) = (L-A;a^-1) when b != a, b ∈ A, b^-1 ∉ A
  for (const Shape& A : shapes) {
    for (int b = 0; b < c.letters(); ++b) {
      if (b == A.a || !(A.set & bit(b)) || (A.set & bit(lid_inv(b)))) continue;
      Mask lb = L & ~bit(b);
      Mask lbi = L & ~bit(lid_inv(b));
      Mask comp = L & ~A.set;
      if (!shape_ok(lb, lid_inv(b)) || !shape_ok(lbi, b) || !shape_ok(comp, lid_inv(A.a))) continue;
      out.push_back(RRel{"R10", shape_str(c, A.set, A.a) + ",b=" + letter_str(c, b),
                         {tok_w2(lb, lid_inv(b)), tok_w2(A.set, A.a), tok_w2(lbi, b)},
                         {tok_w2(comp, lid_inv(A.a))}});
    }
  }
  return out;
}

// Factorization of an x-letter Whitehead automorphism into elementary move
// symbols; defined only for classes without y letters.
SymbolWord w2_symbol_word(const WClass& c, Mask set, int a) {
  SymbolWord out;
  int ja = a / 2 + 1;
  int pa = a % 2 == 0 ? 1 : -1;
  Gen target = gen_x(ja);
  for (int s = 0; s < c.slots(); ++s) {
    if (s == a / 2) continue;
    bool pos = set & bit(2 * s);
    bool neg = set & bit(2 * s + 1);
    if (neg) out.push_back(SignedSymbol{sym_xmove(s + 1, -1, target), pa});
    if (pos) out.push_back(SignedSymbol{sym_xmove(s + 1, 1, target), pa});
  }
  return out;
}

SymbolWord ops_symbol_word(const std::vector<TypeIOp>& ops) {
  SymbolWord out;
  for (const TypeIOp& op : ops) {
    if (op.kind == 0) {
      out.push_back(SignedSymbol{sym_p(op.i, op.j), 1});
    } else if (op.kind == 1) {
      out.push_back(SignedSymbol{sym_i(op.i), 1});
    } else {
      throw std::logic_error("y-letter Type I op has no symbol form");
    }
  }
  return out;
}

SymbolWord token_symbol_word(const WClass& c, const RToken& t) {
  return t.w2 ? w2_symbol_word(c, t.set, t.a) : ops_symbol_word(t.ops);
}

Endomorphism op_endo(const Rank& r, const TypeIOp& op) {
  Endomorphism e = identity_endo(r);
  auto g = [&](int kind, int idx) { return kind <= 1 ? gen_x(idx) : gen_y(idx); };
  if (op.kind == 0 || op.kind == 2) {
    e.images[slot_of(r, g(op.kind, op.i))] = word_gen(r, g(op.kind, op.j));
    e.images[slot_of(r, g(op.kind, op.j))] = word_gen(r, g(op.kind, op.i));
  } else {
    e.images[slot_of(r, g(op.kind, op.i))] = word_gen(r, g(op.kind, op.i), -1);
  }
  return e;
}

Endomorphism token_endo(const WClass& c, const RToken& t) {
  Rank r = c.rank();
  if (t.w2) {
    WhiteheadTypeII w;
    w.a = c.letter(t.a);
    for (int lid = 0; lid < c.letters(); ++lid) {
      if (t.set & bit(lid)) w.set.push_back(c.letter(lid));
    }
    return realize(w, r);
  }
  Endomorphism acc = identity_endo(r);
  for (const TypeIOp& op : t.ops) acc = compose(acc, op_endo(r, op));
  return acc;
}

Endomorphism token_word_endo(const WClass& c, const std::vector<RToken>& ts) {
  Endomorphism acc = identity_endo(c.rank());
  for (const RToken& t : ts) acc = compose(acc, token_endo(c, t));
  return acc;
}

// ---------------------------------------------------------------------------
// relation enumeration
// ---------------------------------------------------------------------------

SignedSymbol slot_sym(const WSlot& w, Gen z, int pow) {
  return SignedSymbol{w.with_target(z), pow};
}

// letter-level side condition: the base letter of z avoids both first slots
bool z_clears(const Gen& z, const WSlot& w1, const WSlot& w2) {
  return !(z == w1.base()) && !(z == w2.base());
}

void add_q1(int n, int k, std::vector<RelationInstance>& out) {
  WClass c{n, k, false};
  for (const RRel& r : whitehead_relations(c)) {
    RelationInstance inst;
    inst.schema = Schema::Q1;
    inst.params = r.tag + "[" + r.params + "]";
    for (const RToken& t : r.lhs) {
      SymbolWord w = token_symbol_word(c, t);
      inst.lhs.insert(inst.lhs.end(), w.begin(), w.end());
    }
    for (const RToken& t : r.rhs) {
      SymbolWord w = token_symbol_word(c, t);
      inst.rhs.insert(inst.rhs.end(), w.begin(), w.end());
    }
    out.push_back(std::move(inst));
  }
}

void add_q2(int n, int k, std::vector<RelationInstance>& out) {
  auto slots = all_wslots(n, k);
  auto letters = positive_letters(n, k);
  for (const WSlot& w1 : slots) {
    for (Gen z1 : letters) {
      for (const WSlot& w2 : slots) {
        for (Gen z2 : letters) {
          if (w1 == w2) continue;
          if (!z_clears(z1, w1, w2) || !z_clears(z2, w1, w2)) continue;
          GenSymbol s1 = w1.with_target(z1);
          GenSymbol s2 = w2.with_target(z2);
          if (!(s1 < s2)) continue;  // unordered pair
          RelationInstance inst;
          inst.schema = Schema::Q2;
          inst.params = "(" + wslot_name(w1) + ";" + gen_name(z1) + "),(" + wslot_name(w2) +
                        ";" + gen_name(z2) + ")";
          inst.lhs = {SignedSymbol{s1, 1}, SignedSymbol{s2, 1}};
          inst.rhs = {SignedSymbol{s2, 1}, SignedSymbol{s1, 1}};
          out.push_back(std::move(inst));
        }
      }
    }
  }
}

void add_q3(int n, int k, std::vector<RelationInstance>& out) {
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int l = 1; l <= n; ++l) {
        if (l == j) continue;
        RelationInstance inst;
        inst.schema = Schema::Q3_1;
        inst.params = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                      ",l=" + std::to_string(l);
        inst.lhs = {SignedSymbol{sym_ymove(i, gen_x(j)), 1}, SignedSymbol{sym_p(j, l), 1}};
        inst.rhs = {SignedSymbol{sym_p(j, l), 1}, SignedSymbol{sym_ymove(i, gen_x(l)), 1}};
        out.push_back(std::move(inst));
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= n; ++j) {
      RelationInstance inst;
      inst.schema = Schema::Q3_2;
      inst.params = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
      inst.lhs = {SignedSymbol{sym_ymove(i, gen_x(j)), 1}, SignedSymbol{sym_i(j), 1}};
      inst.rhs = {SignedSymbol{sym_i(j), 1}, SignedSymbol{sym_ymove(i, gen_x(j)), -1}};
      out.push_back(std::move(inst));
    }
  }
}

void add_q4(int n, int k, std::vector<RelationInstance>& out) {
  auto slots = all_wslots(n, k);
  auto letters = positive_letters(n, k);
  // Q4.1: (w;x_j^eta)(x_j^eta;z)(w;x_j^-eta) = (w;z)(x_j^eta;z)
  for (const WSlot& w : slots) {
    for (int j = 1; j <= n; ++j) {
      if (w.base() == gen_x(j)) continue;
      for (int es = 0; es < 2; ++es) {
        int eta = es == 0 ? 1 : -1;
        for (Gen z : letters) {
          if (z == gen_x(j) || z == w.base()) continue;
          RelationInstance inst;
          inst.schema = Schema::Q4_1;
          inst.params = "w=" + wslot_name(w) + ",j=" + std::to_string(j) +
                        ",eta=" + std::to_string(eta) + ",z=" + gen_name(z);
          inst.lhs = {slot_sym(w, gen_x(j), eta),
                      SignedSymbol{sym_xmove(j, eta, z), 1},
                      slot_sym(w, gen_x(j), -eta)};
          inst.rhs = {slot_sym(w, z, 1), SignedSymbol{sym_xmove(j, eta, z), 1}};
          out.push_back(std::move(inst));
        }
      }
    }
  }
  // Q4.2: (y_i^pm;z^eps)(w;y_i)(y_i^pm;z^-eps) = (w;z^-eps)(w;y_i)(w;z^eps)
  for (int i = 1; i <= k; ++i) {
    for (Gen z : letters) {
      if (z == gen_y(i)) continue;
      for (int es = 0; es < 2; ++es) {
        int eps = es == 0 ? 1 : -1;
        for (const WSlot& w : slots) {
          if (w.base() == gen_y(i) || w.base() == z) continue;
          RelationInstance inst;
          inst.schema = Schema::Q4_2;
          inst.params = "i=" + std::to_string(i) + ",z=" + gen_name(z) +
                        ",eps=" + std::to_string(eps) + ",w=" + wslot_name(w);
          inst.lhs = {SignedSymbol{sym_ymove(i, z), eps},
                      slot_sym(w, gen_y(i), 1),
                      SignedSymbol{sym_ymove(i, z), -eps}};
          inst.rhs = {slot_sym(w, z, -eps), slot_sym(w, gen_y(i), 1), slot_sym(w, z, eps)};
          out.push_back(std::move(inst));
        }
      }
    }
  }
}

void add_q5(int n, int k, std::vector<RelationInstance>& out, bool central_variant) {
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int es = 0; es < 2; ++es) {
        int eta = es == 0 ? 1 : -1;
        RelationInstance inst;
        inst.params = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                      ",eta=" + std::to_string(eta);
        if (!central_variant) {
          inst.schema = Schema::Q5;
          inst.lhs = {SignedSymbol{sym_ymove(i, gen_x(j)), eta},
                      SignedSymbol{sym_xmove(j, -eta, gen_y(i)), 1}};
          inst.rhs = {SignedSymbol{sym_xmove(j, eta, gen_y(i)), -1},
                      SignedSymbol{sym_ymove(i, gen_x(j)), eta}};
        } else {
          inst.schema = Schema::Q5p;
          inst.lhs = {SignedSymbol{sym_ymove(i, gen_x(j)), eta},
                      SignedSymbol{sym_xmove(j, -eta, gen_y(i)), 1},
                      SignedSymbol{sym_ymove(i, gen_x(j)), -eta},
                      SignedSymbol{sym_xmove(j, eta, gen_y(i)), 1}};
          inst.rhs = {SignedSymbol{sym_yself(i), -1}};
        }
        out.push_back(std::move(inst));
      }
    }
  }
}

void add_q2p(int n, int k, std::vector<RelationInstance>& out) {
  for (int i = 1; i <= k; ++i) {
    for (const GenSymbol& a : enumerate_generators(n, k, Group::bdy)) {
      if (a == sym_yself(i)) continue;
      RelationInstance inst;
      inst.schema = Schema::Q2p;
      inst.params = "i=" + std::to_string(i) + ",a=" + to_string(a);
      inst.lhs = {SignedSymbol{sym_yself(i), 1}, SignedSymbol{a, 1}};
      inst.rhs = {SignedSymbol{a, 1}, SignedSymbol{sym_yself(i), 1}};
      out.push_back(std::move(inst));
    }
  }
}

void add_z(int k, std::vector<RelationInstance>& out) {
  auto ym = [&](int i, int j) { return SignedSymbol{sym_ymove(i, gen_y(j)), 1}; };
  for (int j = 1; j <= k; ++j) {
    for (int i = 1; i <= k; ++i) {
      for (int l = i + 1; l <= k; ++l) {
        if (i == j || l == j) continue;
        RelationInstance inst;
        inst.schema = Schema::Z1;
        inst.params = "i=" + std::to_string(i) + ",l=" + std::to_string(l) +
                      ",j=" + std::to_string(j);
        inst.lhs = {ym(i, j), ym(l, j)};
        inst.rhs = {ym(l, j), ym(i, j)};
        out.push_back(std::move(inst));
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      for (int l = 1; l <= k; ++l) {
        for (int m = 1; m <= k; ++m) {
          if (i == j || l == m) continue;
          std::set<int> distinct = {i, j, l, m};
          if (distinct.size() != 4) continue;
          if (std::make_pair(i, j) >= std::make_pair(l, m)) continue;
          RelationInstance inst;
          inst.schema = Schema::Z2;
          inst.params = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                        ",l=" + std::to_string(l) + ",m=" + std::to_string(m);
          inst.lhs = {ym(i, j), ym(l, m)};
          inst.rhs = {ym(l, m), ym(i, j)};
          out.push_back(std::move(inst));
        }
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      for (int l = 1; l <= k; ++l) {
        std::set<int> distinct = {i, j, l};
        if (distinct.size() != 3) continue;
        RelationInstance inst;
        inst.schema = Schema::Z3;
        inst.params = "i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                      ",l=" + std::to_string(l);
        inst.lhs = {ym(i, j), ym(l, j), ym(i, l)};
        inst.rhs = {ym(i, l), ym(i, j), ym(l, j)};
        out.push_back(std::move(inst));
      }
    }
  }
}

}  // namespace

std::vector<RelationInstance> enumerate_relations(int n, int k, Group group) {
  std::vector<RelationInstance> out;
  if (n == 0) {
    // the basis-conjugating presentation
    add_z(k, out);
  } else {
    add_q1(n, k, out);
    add_q2(n, k, out);
    add_q3(n, k, out);
    add_q4(n, k, out);
    if (group == Group::conj) add_q5(n, k, out, false);
  }
  if (group == Group::bdy) {
    add_q2p(n, k, out);
    if (n > 0) add_q5(n, k, out, true);
  }
  return out;
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

struct Realizer {
  int n, k;
  Group group;
  std::map<std::pair<GenSymbol, int>, Endomorphism> conj;
  std::map<std::pair<GenSymbol, int>, BoundaryElement> bdy;

  Realizer(int n_, int k_, Group g, const std::vector<RelationInstance>& instances)
      : n(n_), k(k_), group(g) {
    std::set<std::pair<GenSymbol, int>> keys;
    for (const RelationInstance& r : instances) {
      for (const SignedSymbol& s : r.lhs) keys.insert({s.sym, s.pow});
      for (const SignedSymbol& s : r.rhs) keys.insert({s.sym, s.pow});
    }
    for (const auto& key : keys) {
      if (group == Group::conj) {
        conj.emplace(key, realize_conj(key.first, key.second, n, k));
      } else {
        bdy.emplace(key, realize_bdy(key.first, key.second, n, k));
      }
    }
  }

  Endomorphism eval_conj(const SymbolWord& w) const {
    Endomorphism acc = identity_endo(Rank{n, k, false});
    for (const SignedSymbol& s : w) acc = compose(acc, conj.at({s.sym, s.pow}));
    return acc;
  }
  BoundaryElement eval_bdy(const SymbolWord& w) const {
    BoundaryElement acc = unit_element(n, k);
    for (const SignedSymbol& s : w) acc = multiply(acc, bdy.at({s.sym, s.pow}));
    return acc;
  }

  // empty string on success, witness description on failure
  std::string check(const RelationInstance& r) const {
    Rank rank{n, k, false};
    if (group == Group::conj) {
      Endomorphism l = eval_conj(r.lhs);
      Endomorphism rr = eval_conj(r.rhs);
      if (l == rr) return {};
      for (int s = 0; s < rank.total(); ++s) {
        if (!(l.images[s] == rr.images[s])) {
          return gen_name(gen_of_slot(rank, s)) + " -> " + to_string(l.images[s]) +
                 " vs " + to_string(rr.images[s]);
        }
      }
      throw std::logic_error("endomorphisms differ without a differing image");
    }
    BoundaryElement l = eval_bdy(r.lhs);
    BoundaryElement rr = eval_bdy(r.rhs);
    if (l == rr) return {};
    for (int i = 0; i < n; ++i) {
      if (!(l.nu[i] == rr.nu[i])) {
        return "nu" + std::to_string(i + 1) + ": " + to_string(l.nu[i]) + " vs " +
               to_string(rr.nu[i]);
      }
    }
    for (int j = 0; j < k; ++j) {
      if (!(l.w[j] == rr.w[j])) {
        return "w" + std::to_string(j + 1) + ": " + to_string(l.w[j]) + " vs " +
               to_string(rr.w[j]);
      }
    }
    throw std::logic_error("tuples differ without a differing slot");
  }
};

std::vector<RelationInstance> filtered_instances(int n, int k, Group group,
                                                 const std::vector<Schema>& only) {
  std::vector<RelationInstance> all = enumerate_relations(n, k, group);
  if (only.empty()) return all;
  std::vector<RelationInstance> out;
  for (RelationInstance& r : all) {
    if (std::find(only.begin(), only.end(), r.schema) != only.end()) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

VerifyReport run_verification(int n, int k, Group group, const std::vector<Schema>& only,
                              bool parallel) {
  std::vector<RelationInstance> instances = filtered_instances(n, k, group, only);
  Realizer realizer(n, k, group, instances);
  const int count = static_cast<int>(instances.size());
  std::vector<std::string> witnesses(count);

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (int t = 0; t < count; ++t) {
      witnesses[t] = realizer.check(instances[t]);
    }
  } else {
    for (int t = 0; t < count; ++t) {
      witnesses[t] = realizer.check(instances[t]);
    }
  }

  VerifyReport rep;
  rep.n = n;
  rep.k = k;
  rep.group = group;
  std::map<Schema, SchemaSummary> summaries;
  for (int t = 0; t < count; ++t) {
    SchemaSummary& s = summaries[instances[t].schema];
    s.schema = instances[t].schema;
    s.instances += 1;
    if (!witnesses[t].empty()) {
      s.failed += 1;
      rep.failures.push_back(RelationFailure{instances[t].schema, instances[t].params,
                                             witnesses[t]});
    }
  }
  for (auto& [schema, summary] : summaries) rep.schemas.push_back(summary);
  return rep;
}

}  // namespace

bool verify_relation(const RelationInstance& r, int n, int k, Group group,
                     std::string* witness) {
  Realizer realizer(n, k, group, {r});
  std::string w = realizer.check(r);
  if (witness) *witness = w;
  return w.empty();
}

long long VerifyReport::total_instances() const {
  long long t = 0;
  for (const SchemaSummary& s : schemas) t += s.instances;
  return t;
}

long long VerifyReport::total_failed() const {
  long long t = 0;
  for (const SchemaSummary& s : schemas) t += s.failed;
  return t;
}

VerifyReport verify_relations_serial(int n, int k, Group group, const std::vector<Schema>& only) {
  return run_verification(n, k, group, only, false);
}

VerifyReport verify_relations_parallel(int n, int k, Group group, const std::vector<Schema>& only) {
  return run_verification(n, k, group, only, true);
}

VerifyReport verify_relations(int n, int k, Group group, const std::vector<Schema>& only,
                              bool parallel) {
  return run_verification(n, k, group, only, parallel);
}

long long McCoolReport::total_instances() const {
  long long t = 0;
  for (const auto& [tag, c] : counts) t += c;
  return t;
}

McCoolReport verify_mccool_R(int n, int k, bool parallel) {
  WClass c{n, k, true};
  std::vector<RRel> rels = whitehead_relations(c);
  const int count = static_cast<int>(rels.size());
  std::vector<std::string> witnesses(count);

  auto check_one = [&](int t) {
    Endomorphism l = token_word_endo(c, rels[t].lhs);
    Endomorphism r = token_word_endo(c, rels[t].rhs);
    if (l == r) return std::string{};
    Rank rank = c.rank();
    for (int s = 0; s < rank.total(); ++s) {
      if (!(l.images[s] == r.images[s])) {
        return gen_name(gen_of_slot(rank, s)) + " -> " + to_string(l.images[s]) + " vs " +
               to_string(r.images[s]);
      }
    }
    return std::string("differ");
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int t = 0; t < count; ++t) witnesses[t] = check_one(t);
  } else {
    for (int t = 0; t < count; ++t) witnesses[t] = check_one(t);
  }

  McCoolReport rep;
  rep.n = n;
  rep.k = k;
  std::map<std::string, long long> tally;
  for (int t = 0; t < count; ++t) {
    tally[rels[t].tag] += 1;
    if (!witnesses[t].empty()) {
      rep.failures.emplace_back(rels[t].tag + "[" + rels[t].params + "]", witnesses[t]);
    }
  }
  for (auto& [tag, cnt] : tally) rep.counts.emplace_back(tag, cnt);
  return rep;
}

// ---------------------------------------------------------------------------
// abelianization and H1
// ---------------------------------------------------------------------------

std::vector<std::vector<long long>> abelianized_relation_matrix(int n, int k, Group group) {
  std::vector<GenSymbol> gens = enumerate_generators(n, k, group);
  std::map<GenSymbol, int> col;
  for (std::size_t t = 0; t < gens.size(); ++t) col[gens[t]] = static_cast<int>(t);
  std::vector<RelationInstance> rels = enumerate_relations(n, k, group);
  std::vector<std::vector<long long>> m(rels.size(), std::vector<long long>(gens.size(), 0));
  for (std::size_t t = 0; t < rels.size(); ++t) {
    for (const SignedSymbol& s : rels[t].lhs) m[t][col.at(s.sym)] += s.pow;
    for (const SignedSymbol& s : rels[t].rhs) m[t][col.at(s.sym)] -= s.pow;
  }
  return m;
}

AbelianGroupShape h1(int n, int k, Group group) {
  std::vector<std::vector<long long>> m = abelianized_relation_matrix(n, k, group);
  const int cols = static_cast<int>(enumerate_generators(n, k, group).size());
  std::set<std::vector<long long>> distinct;
  const std::vector<long long> zero(cols, 0);
  for (std::vector<long long>& row : m) {
    if (row != zero) distinct.insert(std::move(row));
  }
  IntMatrix reduced;
  for (const auto& row : distinct) {
    reduced.push_back(std::vector<BigInt>(row.begin(), row.end()));
  }
  return cokernel_shape(reduced, cols);
}

void check_presentation_budget(int n, int k, int budget) {
  if (n + k > budget) {
    throw BudgetExceeded("presentation enumeration at n+k=" + std::to_string(n + k) +
                         " exceeds the configured budget " + std::to_string(budget));
  }
}

}  // namespace fgb
