#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fgb/words.hpp"
#include "helpers.hpp"

using namespace fgb;
using fgb::testing::Rng;
using fgb::testing::random_word;

namespace {
const Rank r21{2, 1, false};

Word w(const std::string& text, const Rank& r = r21) { return parse_word(r, text); }
}  // namespace

TEST_CASE("free reduction") {
  Rank r{1, 1, false};
  Letter x1{gen_x(1), 1};
  CHECK(reduce(r, {x1, x1.inv()}).empty());

  Rank r2{2, 0, false};
  Letter x2{gen_x(2), 1};
  Word v = reduce(r2, {x1, x2, x2.inv(), x1});
  CHECK(v == parse_word(r2, "x1\xc2\xb7x1"));

  CHECK_THROWS_AS(reduce(r, {Letter{gen_x(2), 1}}), IllegalGenerator);
  CHECK_THROWS_AS(reduce(r, {Letter{gen_u(1), 1}}), IllegalGenerator);
  CHECK_NOTHROW(reduce(r.extend(), {Letter{gen_u(1), 1}}));
}

TEST_CASE("reduce of w * w^-1 is the identity, and reduce is idempotent") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    Word v = random_word(r21, t % 13, rng);
    std::vector<Letter> raw = v.letters;
    Word vi = invert(v);
    raw.insert(raw.end(), vi.letters.begin(), vi.letters.end());
    CHECK(reduce(r21, raw).empty());
    CHECK(reduce(r21, v.letters) == v);
  }
}

TEST_CASE("multiplication laws") {
  Word a = w("x1\xc2\xb7x2");
  Word b = w("x2^-1\xc2\xb7y1");
  CHECK(multiply(a, b) == w("x1\xc2\xb7y1"));
  CHECK(multiply(word_identity(r21), a) == a);
  CHECK(multiply(a, invert(a)).empty());
  CHECK_THROWS_AS(multiply(a, word_identity(Rank{1, 1, false})), RankMismatch);

  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    Word u = random_word(r21, t % 9, rng);
    Word v = random_word(r21, (t + 3) % 9, rng);
    Word z = random_word(r21, (t + 6) % 9, rng);
    CHECK(multiply(multiply(u, v), z) == multiply(u, multiply(v, z)));
  }
}

TEST_CASE("inversion") {
  CHECK(invert(word_identity(r21)).empty());
  CHECK(invert(w("x1\xc2\xb7y1^-1")) == w("y1\xc2\xb7x1^-1"));
  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    Word v = random_word(r21, t % 12, rng);
    CHECK(invert(invert(v)) == v);
    CHECK(multiply(v, invert(v)).empty());
    CHECK(multiply(invert(v), v).empty());
  }
}

TEST_CASE("cyclic reduction") {
  auto [c1, u1] = cyclic_reduce(w("x1^-1\xc2\xb7y1\xc2\xb7x1"));
  CHECK(c1.representative == w("y1"));
  CHECK(u1 == w("x1"));

  auto [c2, u2] = cyclic_reduce(w("y1"));
  CHECK(c2.representative == w("y1"));
  CHECK(u2.empty());

  auto [c3, u3] = cyclic_reduce(w("x2\xc2\xb7x1^-1\xc2\xb7y1\xc2\xb7x1\xc2\xb7x2^-1"));
  CHECK(c3.representative == w("y1"));
  CHECK(u3 == w("x1\xc2\xb7x2^-1"));

  auto [c0, u0] = cyclic_reduce(word_identity(r21));
  CHECK(c0.representative.empty());
  CHECK(u0.empty());

  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    Word v = random_word(r21, t % 14, rng);
    auto [core, conj] = cyclic_reduce(v);
    CHECK(multiply(multiply(invert(conj), core.representative), conj) == v);
    // minimal length in the conjugacy class: no shorter conjugate among peels
    CHECK(core.representative.length() <= v.length());
  }
}

TEST_CASE("canonical rotation order is the fixed letter order") {
  // x < y, positive before negative, regardless of the input rotation
  Word a = w("y1\xc2\xb7x1");
  Word b = w("x1\xc2\xb7y1");
  CHECK(make_cyclic(a) == make_cyclic(b));
  CHECK(make_cyclic(a).canonical == b);
}

TEST_CASE("conjugacy") {
  auto u = are_conjugate(w("y1"), w("x1^-1\xc2\xb7y1\xc2\xb7x1"));
  REQUIRE(u.has_value());
  CHECK(*u == w("x1"));
  CHECK(!are_conjugate(w("x1"), w("x2")).has_value());
  CHECK(!are_conjugate(w("x1"), w("x1^-1")).has_value());

  Rng rng(2026);
  for (int t = 0; t < 100; ++t) {
    Word v = random_word(r21, 1 + t % 8, rng);
    Word c = random_word(r21, t % 6, rng);
    Word conj = conjugate(v, c);
    auto witness = are_conjugate(v, conj);
    REQUIRE(witness.has_value());
    CHECK(conjugate(v, *witness) == conj);
    // reflexivity and symmetry
    CHECK(are_conjugate(v, v).has_value());
    CHECK(are_conjugate(conj, v).has_value());
  }
}

TEST_CASE("text grammar round trip") {
  CHECK(to_string(word_identity(r21)) == "1");
  CHECK(parse_word(r21, "1").empty());
  CHECK(to_string(w("x1\xc2\xb7y1^-1\xc2\xb7x1")) == "x1\xc2\xb7y1^-1\xc2\xb7x1");
  CHECK_THROWS_AS(parse_word(r21, "z1"), ParseError);
  CHECK_THROWS_AS(parse_word(r21, "x9"), ParseError);
  CHECK_THROWS_AS(parse_word(r21, ""), ParseError);
  CHECK_THROWS_AS(parse_word(r21, "x1^2"), ParseError);

  Rng rng(31);
  Rank ext{1, 2, true};
  for (int t = 0; t < 100; ++t) {
    Word v = random_word(ext, t % 10, rng);
    CHECK(parse_word(ext, to_string(v)) == v);
  }
}
